#pragma once

// Command line front end. Exit codes: 0 success, 2 parse/validation failure,
// 3 bad window, 4 ring structure requested on a non-Green input.

#include "emq/render.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace emq::cli {

inline std::optional<Window> parse_window(const std::string& s) {
    // x0:x1,y0:y1
    Window w;
    char c1, c2, c3;
    std::istringstream in(s);
    if (!(in >> w.x0 >> c1 >> w.x1 >> c2 >> w.y0 >> c3 >> w.y1)) return std::nullopt;
    if (c1 != ':' || c2 != ',' || c3 != ':') return std::nullopt;
    if (!in.eof()) {
        std::string rest;
        in >> rest;
        if (!rest.empty()) return std::nullopt;
    }
    if (w.x0 > w.x1 || w.y0 > w.y1) return std::nullopt;
    return w;
}

struct Source {
    MackeyFunctor m;
    std::optional<GreenFunctor> green;
    std::string label;
};

inline bool looks_like_path(const std::string& s) {
    return s.find('/') != std::string::npos || s.find(".mky") != std::string::npos;
}

inline Source resolve_source(const std::string& spec) {
    Source src;
    src.label = spec;
    if (looks_like_path(spec)) {
        LoadedMackey lm = load_mky(spec);
        src.m = lm.m;
        src.green = lm.green;
        return src;
    }
    src.green = green_catalog(spec);
    src.m = src.green ? src.green->m : catalog(spec);  // throws on unknown name
    return src;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"RO(Q)-graded coefficients of equivariant Eilenberg-MacLane spectra"};
    app.require_subcommand(1);

    std::string mackey_spec, window_spec = "-10:10,-10:10", format_spec = "grid";
    std::string actions_spec;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--mackey", mackey_spec, "catalog name or .mky path")
            ->required();
        cmd->add_option("--window", window_spec, "x0:x1,y0:y1");
        if (with_format)
            cmd->add_option("--format", format_spec, "grid|csv|json|svg");
    };

    CLI::App* compute = app.add_subcommand("compute", "table of coefficient groups");
    add_common(compute, true);
    compute->add_option("--actions", actions_spec,
                        "comma list from a,u,omega to annotate");

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check closed forms against the cellular oracle");
    verify->add_option("--mackey", mackey_spec, "name, path or random:N:seed")
        ->required();
    verify->add_option("--window", window_spec, "x0:x1,y0:y1");

    CLI::App* ring = app.add_subcommand("ring", "ring presentation of a Green functor");
    add_common(ring, true);

    CLI::App* validate_cmd = app.add_subcommand("validate", "axiom report for a .mky file");
    std::string path;
    validate_cmd->add_option("path", path, ".mky file")->required();

    std::vector<const char*> argv;
    std::string prog = "emq";
    argv.push_back(prog.c_str());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "argument error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (validate_cmd->parsed()) {
            std::ifstream in(path);
            if (!in) {
                err << "cannot open " << path << "\n";
                return 2;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            LoadedMackey lm;
            try {
                lm = parse_mky(ss.str());
            } catch (const parse_error& e) {
                err << e.what() << "\n";
                return 2;
            }
            ValidationReport rep = lm.green ? emq::validate(*lm.green)
                                            : emq::validate(lm.m);
            if (rep.ok()) {
                out << "valid"
                    << (lm.green ? " (Green functor)" : " (Mackey functor)") << "\n";
                return 0;
            }
            out << rep.to_string();
            return 2;
        }

        auto wopt = parse_window(window_spec);
        if (!wopt) {
            err << "bad window: " << window_spec << "\n";
            return 3;
        }
        Window w = *wopt;

        if (verify->parsed()) {
            std::vector<Source> sources;
            if (mackey_spec.rfind("random:", 0) == 0) {
                std::string rest = mackey_spec.substr(7);
                auto colon = rest.find(':');
                if (colon == std::string::npos) {
                    err << "random source must be random:N:seed\n";
                    return 2;
                }
                unsigned long n = std::stoul(rest.substr(0, colon));
                unsigned long long seed = std::stoull(rest.substr(colon + 1));
                for (unsigned long i = 0; i < n; ++i) {
                    Source s;
                    s.m = random_mackey(seed + i);
                    s.label = "random seed " + std::to_string(seed + i);
                    sources.push_back(std::move(s));
                }
            } else {
                sources.push_back(resolve_source(mackey_spec));
            }
            bool ok = true;
            for (const auto& s : sources) {
                CrossCheckReport rep = cross_check(s.m, w);
                if (rep.ok()) {
                    out << s.label << ": ok (" << rep.degrees_checked << " degrees)\n";
                } else {
                    ok = false;
                    out << s.label << ": MISMATCH\n" << rep.to_string();
                }
            }
            return ok ? 0 : 1;
        }

        Source src = resolve_source(mackey_spec);

        if (ring->parsed()) {
            if (!src.green) {
                err << "ring structure requested but '" << mackey_spec
                    << "' carries no Green data\n";
                return 4;
            }
            RingPresentation pres = ring_presentation(*src.green, w);
            if (format_spec == "json")
                out << presentation_json(pres).dump(2) << "\n";
            else
                render_presentation_text(out, pres);
            return 0;
        }

        // compute
        auto fmt = parse_format(format_spec);
        if (!fmt) {
            err << "unknown format: " << format_spec << "\n";
            return 2;
        }
        Table t = table(src.m, w);
        std::vector<Actor> actors;
        if (!actions_spec.empty()) {
            std::stringstream ss(actions_spec);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item == "a") actors.push_back(Actor::a);
                else if (item == "u") actors.push_back(Actor::u);
                else if (item == "omega") actors.push_back(Actor::omega);
                else {
                    err << "unknown action: " << item << "\n";
                    return 2;
                }
            }
        }
        std::vector<ActionEdge> edges =
            actors.empty() ? std::vector<ActionEdge>{}
                           : action_edges(src.m, w, actors,
                                          src.green ? &*src.green : nullptr);
        switch (*fmt) {
            case OutputFormat::grid: render_grid(out, t); break;
            case OutputFormat::csv: render_csv(out, t, edges); break;
            case OutputFormat::json:
                out << table_json(src.label, t, edges).dump(2) << "\n";
                break;
            case OutputFormat::svg: render_svg(out, t, src.m); break;
        }
        return 0;
    } catch (const parse_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const unsupported_operation& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace emq::cli
