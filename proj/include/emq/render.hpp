#pragma once

// Table renderers: fixed-width text grid, csv, json and svg following the
// usual chart conventions (filled dot Z, open circle Z/2, diamond Z^2,
// square Z/4; red a-lines, blue dashed u-lines).

#include "emq/green.hpp"
#include "emq/oracle.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace emq {

enum class OutputFormat { grid, csv, json, svg };

inline std::optional<OutputFormat> parse_format(const std::string& s) {
    if (s == "grid") return OutputFormat::grid;
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    if (s == "svg") return OutputFormat::svg;
    return std::nullopt;
}

inline std::string factors_token(const FgAbGroup& g) {
    if (g.is_trivial()) return ".";
    std::string s;
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        if (i) s += "+";
        s += g.factors[i] == 0 ? "Z" : g.factors[i].str();
    }
    return s;
}

inline std::string factors_csv(const FgAbGroup& g) {
    std::string s;
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        if (i) s += ";";
        s += g.factors[i].str();
    }
    return s;
}

struct ActionEdge {
    Actor actor;
    Degree from, to;
    MapClass classification;
    bool nonzero;
};

inline std::string actor_name(Actor a) {
    switch (a) {
        case Actor::a: return "a";
        case Actor::u: return "u";
        default: return "omega";
    }
}

inline std::vector<ActionEdge> action_edges(const MackeyFunctor& m, const Window& w,
                                            const std::vector<Actor>& actors,
                                            const GreenFunctor* green = nullptr) {
    std::vector<ActionEdge> edges;
    for (const Degree& d : w.degrees())
        for (Actor act : actors) {
            if (act == Actor::omega) {
                if (d.x == 0 && d.y == 0 && !green) continue;
                ActionMap am = omega_action(m, d, green);
                edges.push_back({act, d, d, am.classification, !am.map.is_zero_map()});
            } else if (act == Actor::a) {
                ActionMap am = a_action(m, d);
                edges.push_back(
                    {act, d, am.target.degree, am.classification, !am.map.is_zero_map()});
            } else {
                ActionMap am = u_action(m, d);
                edges.push_back(
                    {act, d, am.target.degree, am.classification, !am.map.is_zero_map()});
            }
        }
    return edges;
}

inline void render_grid(std::ostream& os, const Table& t) {
    std::size_t width = 1;
    for (const auto& c : t.cells)
        width = std::max(width, factors_token(c.group()).size());
    for (int y = t.window.y1; y >= t.window.y0; --y) {
        os << (y >= 0 ? " " : "") << y << "σ\t";
        for (int x = t.window.x0; x <= t.window.x1; ++x) {
            std::string tok = factors_token(t.at({x, y}).group());
            os << tok << std::string(width + 1 - tok.size(), ' ');
        }
        os << "\n";
    }
    os << "  x\t";
    for (int x = t.window.x0; x <= t.window.x1; ++x) {
        std::string tok = std::to_string(x);
        os << tok << std::string(width + 1 > tok.size() ? width + 1 - tok.size() : 1, ' ');
    }
    os << "\n";
}

inline void render_csv(std::ostream& os, const Table& t,
                       const std::vector<ActionEdge>& edges = {}) {
    os << "x,y,invariant_factors,case_tag\n";
    for (const Degree& d : t.window.degrees()) {
        const GradedPiece& c = t.at(d);
        os << d.x << "," << d.y << "," << factors_csv(c.group()) << ","
           << to_string(c.tag) << "\n";
    }
    if (!edges.empty()) {
        os << "actor,x,y,to_x,to_y,classification,nonzero\n";
        for (const auto& e : edges)
            os << actor_name(e.actor) << "," << e.from.x << "," << e.from.y << ","
               << e.to.x << "," << e.to.y << "," << to_string(e.classification) << ","
               << (e.nonzero ? 1 : 0) << "\n";
    }
}

inline nlohmann::json table_json(const std::string& source, const Table& t,
                                 const std::vector<ActionEdge>& edges = {}) {
    nlohmann::json j;
    j["mackey"] = source;
    j["window"] = {{"x0", t.window.x0}, {"x1", t.window.x1}, {"y0", t.window.y0},
                   {"y1", t.window.y1}};
    nlohmann::json cells = nlohmann::json::array();
    for (const Degree& d : t.window.degrees()) {
        const GradedPiece& c = t.at(d);
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : c.group().factors) fs.push_back(static_cast<long long>(f));
        cells.push_back({{"x", d.x},
                         {"y", d.y},
                         {"invariant_factors", fs},
                         {"case_tag", to_string(c.tag)}});
    }
    j["cells"] = cells;
    if (!edges.empty()) {
        nlohmann::json acts = nlohmann::json::array();
        for (const auto& e : edges)
            acts.push_back({{"actor", actor_name(e.actor)},
                            {"from", {e.from.x, e.from.y}},
                            {"to", {e.to.x, e.to.y}},
                            {"classification", to_string(e.classification)},
                            {"nonzero", e.nonzero}});
        j["actions"] = acts;
    }
    return j;
}

inline void render_svg(std::ostream& os, const Table& t, const MackeyFunctor& m) {
    const int cell = 26, margin = 48;
    const Window& w = t.window;
    auto px = [&](int x) { return margin + (x - w.x0) * cell; };
    auto py = [&](int y) { return margin + (w.y1 - y) * cell; };
    int width = 2 * margin + (w.x1 - w.x0) * cell;
    int height = 2 * margin + (w.y1 - w.y0) * cell + 40;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    os << "<line x1=\"" << px(w.x0) - 10 << "\" y1=\"" << py(0) << "\" x2=\""
       << px(w.x1) + 10 << "\" y2=\"" << py(0)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(w.y0) + 10 << "\" x2=\"" << px(0)
       << "\" y2=\"" << py(w.y1) - 10 << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // action lines under the markers: red = a, blue dashed = u
    for (const Degree& d : w.degrees()) {
        ActionMap am = a_action(m, d);
        if (!am.map.is_zero_map() && w.contains(am.target.degree))
            os << "<line x1=\"" << px(d.x) << "\" y1=\"" << py(d.y) << "\" x2=\""
               << px(d.x) << "\" y2=\"" << py(d.y - 1) << "\" stroke=\"red\"/>\n";
        ActionMap um = u_action(m, d);
        if (!um.map.is_zero_map() && w.contains(um.target.degree))
            os << "<line x1=\"" << px(d.x) << "\" y1=\"" << py(d.y) << "\" x2=\""
               << px(d.x + 2) << "\" y2=\"" << py(d.y - 2)
               << "\" stroke=\"blue\" stroke-dasharray=\"4 3\"/>\n";
    }
    for (const Degree& d : w.degrees()) {
        const FgAbGroup& g = t.at(d).group();
        if (g.is_trivial()) continue;
        int cx = px(d.x), cy = py(d.y);
        const IntVec& fs = g.factors;
        if (fs == IntVec{Int(0)}) {
            os << "<circle cx=\"" << cx << "\" cy=\"" << cy
               << "\" r=\"4\" fill=\"black\"/>\n";
        } else if (fs == IntVec{Int(2)}) {
            os << "<circle cx=\"" << cx << "\" cy=\"" << cy
               << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
        } else if (fs == IntVec{Int(0), Int(0)}) {
            os << "<path d=\"M" << cx << " " << cy - 6 << " L" << cx + 6 << " " << cy
               << " L" << cx << " " << cy + 6 << " L" << cx - 6 << " " << cy
               << " Z\" fill=\"black\"/>\n";
        } else if (fs == IntVec{Int(4)}) {
            os << "<rect x=\"" << cx - 4 << "\" y=\"" << cy - 4
               << "\" width=\"8\" height=\"8\" fill=\"black\"/>\n";
        } else {
            os << "<text x=\"" << cx << "\" y=\"" << cy + 4
               << "\" font-size=\"9\" text-anchor=\"middle\">" << factors_token(g)
               << "</text>\n";
        }
    }
    int ly = height - 16;
    os << "<g font-size=\"11\">";
    os << "<circle cx=\"" << margin << "\" cy=\"" << ly << "\" r=\"4\" fill=\"black\"/>"
       << "<text x=\"" << margin + 8 << "\" y=\"" << ly + 4 << "\">Z</text>";
    os << "<circle cx=\"" << margin + 50 << "\" cy=\"" << ly
       << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>" << "<text x=\"" << margin + 58
       << "\" y=\"" << ly + 4 << "\">Z/2</text>";
    os << "<path d=\"M" << margin + 110 << " " << ly - 6 << " L" << margin + 116 << " "
       << ly << " L" << margin + 110 << " " << ly + 6 << " L" << margin + 104 << " "
       << ly << " Z\" fill=\"black\"/>" << "<text x=\"" << margin + 122 << "\" y=\""
       << ly + 4 << "\">Z+Z</text>";
    os << "<rect x=\"" << margin + 176 << "\" y=\"" << ly - 4
       << "\" width=\"8\" height=\"8\" fill=\"black\"/>" << "<text x=\"" << margin + 190
       << "\" y=\"" << ly + 4 << "\">Z/4</text>";
    os << "</g>\n</svg>\n";
}

// ---------------------------------------------------------------------------
// Ring presentation rendering.

inline std::string monomial_string(const RingPresentation& p,
                                   const std::vector<int>& expo) {
    std::string s;
    for (std::size_t k = 0; k < expo.size(); ++k) {
        if (expo[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += p.generators[k].name;
        if (expo[k] > 1) s += "^" + std::to_string(expo[k]);
    }
    return s.empty() ? "1" : s;
}

inline void render_presentation_text(std::ostream& os, const RingPresentation& p) {
    os << "generators:\n";
    for (const auto& g : p.generators) {
        os << "  " << g.name << "  degree " << g.degree.to_string() << "  coords (";
        for (std::size_t i = 0; i < g.coords.size(); ++i)
            os << (i ? "," : "") << g.coords[i].str();
        os << ")\n";
    }
    os << "relations (certified on window x " << p.window.x0 << ".." << p.window.x1
       << ", y " << p.window.y0 << ".." << p.window.y1 << "):\n";
    for (const auto& r : p.relations) {
        os << "  ";
        for (std::size_t i = 0; i < r.terms.size(); ++i) {
            const auto& [c, mono] = r.terms[i];
            Int coef = c;
            if (i) {
                os << (coef < 0 ? " - " : " + ");
                if (coef < 0) coef = -coef;
            }
            if (coef != 1) os << coef.str() << "*";
            os << monomial_string(p, mono);
        }
        os << " = 0   [degree " << r.degree.to_string() << "]\n";
    }
    if (!p.undetermined.empty()) {
        os << "undetermined by the comparison map:\n";
        for (const auto& u : p.undetermined) os << "  " << u << "\n";
    }
}

inline nlohmann::json presentation_json(const RingPresentation& p) {
    nlohmann::json j;
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : p.generators) {
        nlohmann::json coords = nlohmann::json::array();
        for (const auto& c : g.coords) coords.push_back(static_cast<long long>(c));
        gens.push_back({{"name", g.name},
                        {"degree", {g.degree.x, g.degree.y}},
                        {"coords", coords}});
    }
    j["generators"] = gens;
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& r : p.relations) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [c, mono] : r.terms)
            terms.push_back({{"coef", static_cast<long long>(c)},
                             {"monomial", monomial_string(p, mono)}});
        rels.push_back({{"degree", {r.degree.x, r.degree.y}}, {"terms", terms}});
    }
    j["relations"] = rels;
    j["undetermined"] = p.undetermined;
    return j;
}

}  // namespace emq
