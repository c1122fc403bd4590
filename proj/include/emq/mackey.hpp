#pragma once

// Mackey and Green functors for the group of order two: data model, axiom
// validation, built-in catalog, direct sums, seeded random instances and the
// .mky text format.

#include "emq/zq.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

namespace emq {

struct unsupported_operation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------

struct MackeyFunctor {
    FgAbGroup fixed;       // M(Q/Q)
    FgAbGroup v;           // M(Q/e) as a plain group
    Mat gamma;             // involution on v (checked by validate, not here)
    Mat res_m;             // fixed -> v
    Mat tr_m;              // v -> fixed
    std::string name;

    MackeyFunctor() = default;
    MackeyFunctor(FgAbGroup fixed_, FgAbGroup v_, Mat gamma_, Mat res_, Mat tr_,
                  std::string name_ = "")
        : fixed(std::move(fixed_)), v(std::move(v_)), name(std::move(name_)) {
        gamma = Hom(v, v, std::move(gamma_)).matrix();
        res_m = Hom(fixed, v, std::move(res_)).matrix();
        tr_m = Hom(v, fixed, std::move(tr_)).matrix();
    }

    Hom res() const { return Hom(fixed, v, res_m, false); }
    Hom tr() const { return Hom(v, fixed, tr_m, false); }
    Hom gamma_hom() const { return Hom(v, v, gamma, false); }
    ZQModule underlying() const { return ZQModule(v, gamma); }
};

struct Bilinear {
    // structure constants over the pinned generators: mul(e_i, e_j) = c[i][j]
    std::vector<std::vector<IntVec>> c;

    static Bilinear zero(std::size_t n) {
        Bilinear b;
        b.c.assign(n, std::vector<IntVec>(n, IntVec(n)));
        return b;
    }
    IntVec apply(const FgAbGroup& g, const IntVec& x, const IntVec& y) const {
        IntVec r(g.rank());
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j) {
                if (y[j] == 0) continue;
                for (std::size_t k = 0; k < r.size(); ++k)
                    r[k] += x[i] * y[j] * c[i][j][k];
            }
        }
        return g.reduce(r);
    }
};

struct GreenFunctor {
    MackeyFunctor m;
    Bilinear mul_fixed;
    Bilinear mul_v;
    IntVec unit_fixed;
    IntVec unit_v;

    IntVec fmul(const IntVec& a, const IntVec& b) const {
        return mul_fixed.apply(m.fixed, a, b);
    }
    IntVec vmul(const IntVec& a, const IntVec& b) const {
        return mul_v.apply(m.v, a, b);
    }
};

// ---------------------------------------------------------------------------
// Axiom validation, report style.

struct Violation {
    std::string axiom;
    std::string witness;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const {
        std::string s;
        for (const auto& v : violations) s += v.axiom + " [witness: " + v.witness + "]\n";
        return s;
    }
};

namespace detail {
inline std::string vec_str(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}
// first generator where two parallel homs differ
inline void check_equal(ValidationReport& rep, const Hom& a, const Hom& b,
                        const std::string& axiom, const std::string& what) {
    Hom d = a - b;
    for (std::size_t j = 0; j < d.domain().rank(); ++j) {
        IntVec e(d.domain().rank());
        e[j] = 1;
        IntVec val = d.apply(e);
        bool zero = true;
        for (const auto& x : val) zero &= (x == 0);
        if (!zero) {
            rep.violations.push_back(
                {axiom, what + " generator " + std::to_string(j) +
                            ", discrepancy " + vec_str(val)});
            return;
        }
    }
}
}  // namespace detail

inline ValidationReport validate(const MackeyFunctor& m) {
    ValidationReport rep;
    Hom g = m.gamma_hom(), r = m.res(), t = m.tr();
    detail::check_equal(rep, g.compose(g), Hom::identity(m.v), "gamma^2 = id", "V");
    detail::check_equal(rep, g.compose(r), r, "gamma∘res = res", "M(Q/Q)");
    detail::check_equal(rep, t.compose(g), t, "tr∘gamma = tr", "V");
    detail::check_equal(rep, r.compose(t), Hom::identity(m.v) + g, "res∘tr = 1+gamma",
                        "V");
    // im(res) ⊆ V^Q, equivalently (1-gamma)∘res = 0
    detail::check_equal(rep, (Hom::identity(m.v) - g).compose(r),
                        Hom::zero(m.fixed, m.v), "im(res) ⊆ fixed points", "M(Q/Q)");
    return rep;
}

inline ValidationReport validate(const GreenFunctor& gf) {
    ValidationReport rep = validate(gf.m);
    const auto& m = gf.m;
    auto bil_ok = [&](const Bilinear& b, const FgAbGroup& g, const std::string& lvl) {
        if (b.c.size() != g.rank()) {
            rep.violations.push_back({"product shape", lvl});
            return false;
        }
        for (std::size_t i = 0; i < g.rank(); ++i)
            for (std::size_t j = 0; j < g.rank(); ++j) {
                // order(e_i) * (e_i * e_j) must vanish
                IntVec scaled(g.rank());
                for (std::size_t k = 0; k < g.rank(); ++k)
                    scaled[k] = g.factors[i] * b.c[i][j][k];
                if (g.factors[i] != 0) {
                    IntVec red = g.reduce(scaled);
                    for (const auto& x : red)
                        if (x != 0) {
                            rep.violations.push_back(
                                {"product bilinear over relations",
                                 lvl + " pair (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")"});
                            return false;
                        }
                }
            }
        return true;
    };
    if (!bil_ok(gf.mul_fixed, m.fixed, "M(Q/Q)") || !bil_ok(gf.mul_v, m.v, "V"))
        return rep;

    auto gens = [](const FgAbGroup& g) {
        std::vector<IntVec> e;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            IntVec x(g.rank());
            x[i] = 1;
            e.push_back(x);
        }
        return e;
    };
    auto expect = [&](const IntVec& a, const IntVec& b, const FgAbGroup& g,
                      const std::string& axiom, const std::string& wit) {
        if (g.reduce(a) != g.reduce(b))
            rep.violations.push_back({axiom, wit + ": " + detail::vec_str(g.reduce(a)) +
                                                 " vs " + detail::vec_str(g.reduce(b))});
    };

    for (const auto& [lvlname, g, bil, unit] :
         {std::tuple{std::string("M(Q/Q)"), m.fixed, gf.mul_fixed, gf.unit_fixed},
          std::tuple{std::string("V"), m.v, gf.mul_v, gf.unit_v}}) {
        auto es = gens(g);
        for (std::size_t i = 0; i < es.size(); ++i) {
            expect(bil.apply(g, unit, es[i]), es[i], g, "unit law", lvlname);
            for (std::size_t j = 0; j < es.size(); ++j) {
                expect(bil.apply(g, es[i], es[j]), bil.apply(g, es[j], es[i]), g,
                       "product commutative", lvlname);
                for (std::size_t k = 0; k < es.size(); ++k)
                    expect(bil.apply(g, bil.apply(g, es[i], es[j]), es[k]),
                           bil.apply(g, es[i], bil.apply(g, es[j], es[k])), g,
                           "product associative", lvlname);
            }
        }
    }

    Hom r = m.res(), t = m.tr(), g = m.gamma_hom();
    expect(r.apply(gf.unit_fixed), m.v.reduce(gf.unit_v), m.v,
           "res preserves unit", "unit");
    expect(g.apply(gf.unit_v), m.v.reduce(gf.unit_v), m.v, "gamma preserves unit",
           "unit");
    auto ef = gens(m.fixed);
    auto ev = gens(m.v);
    for (std::size_t i = 0; i < ef.size(); ++i)
        for (std::size_t j = 0; j < ef.size(); ++j)
            expect(r.apply(gf.fmul(ef[i], ef[j])),
                   gf.vmul(r.apply(ef[i]), r.apply(ef[j])), m.v, "res is a ring map",
                   "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (std::size_t i = 0; i < ev.size(); ++i)
        for (std::size_t j = 0; j < ev.size(); ++j)
            expect(g.apply(gf.vmul(ev[i], ev[j])),
                   gf.vmul(g.apply(ev[i]), g.apply(ev[j])), m.v,
                   "gamma is a ring map",
                   "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    // Frobenius reciprocity tr(x·res(a)) = tr(x)·a
    for (std::size_t i = 0; i < ev.size(); ++i)
        for (std::size_t j = 0; j < ef.size(); ++j)
            expect(t.apply(gf.vmul(ev[i], r.apply(ef[j]))),
                   gf.fmul(t.apply(ev[i]), ef[j]), m.fixed, "Frobenius reciprocity",
                   "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return rep;
}

// ---------------------------------------------------------------------------
// Constructions.

inline MackeyFunctor fixed_point_functor(const ZQModule& v, std::string name = "") {
    KernelResult fx = kernel(v.one_minus_gamma());
    // tr = norm corestricted to the fixed points
    Hom n = v.one_plus_gamma();
    Hom tr = solve_through(fx.inclusion, n);
    return MackeyFunctor(fx.group, v.group, v.gamma, fx.inclusion.matrix(),
                         tr.matrix(), std::move(name));
}

inline MackeyFunctor orbit_functor(const ZQModule& v, std::string name = "") {
    CokernelResult co = cokernel(v.one_minus_gamma());
    Hom sec = section_of(co.projection);
    Hom res = v.one_plus_gamma().compose(sec);  // well-defined: N(1-γ) = 0
    return MackeyFunctor(co.group, v.group, v.gamma, res.matrix(),
                         co.projection.matrix(), std::move(name));
}

inline MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b) {
    GroupSum f = direct_sum_groups(a.fixed, b.fixed);
    GroupSum u = direct_sum_groups(a.v, b.v);
    Hom gamma = u.incl_a.compose(a.gamma_hom()).compose(u.proj_a) +
                u.incl_b.compose(b.gamma_hom()).compose(u.proj_b);
    Hom res = u.incl_a.compose(a.res()).compose(f.proj_a) +
              u.incl_b.compose(b.res()).compose(f.proj_b);
    Hom tr = f.incl_a.compose(a.tr()).compose(u.proj_a) +
             f.incl_b.compose(b.tr()).compose(u.proj_b);
    std::string nm = a.name.empty() || b.name.empty() ? "" : a.name + "+" + b.name;
    return MackeyFunctor(f.group, u.group, gamma.matrix(), res.matrix(), tr.matrix(),
                         nm);
}

// ---------------------------------------------------------------------------
// Catalog.

inline GreenFunctor green_burnside() {
    // A(Q) on the ordered basis {1, ω}, ω² = 2ω, res(ω) = 2, tr(1) = ω.
    GreenFunctor g;
    g.m = MackeyFunctor(FgAbGroup::free(2), FgAbGroup::free(1), Mat::identity(1),
                        Mat::from_rows({{1, 2}}), Mat::from_rows({{0}, {1}}),
                        "burnside");
    g.mul_fixed = Bilinear::zero(2);
    g.mul_fixed.c[0][0] = {1, 0};
    g.mul_fixed.c[0][1] = {0, 1};
    g.mul_fixed.c[1][0] = {0, 1};
    g.mul_fixed.c[1][1] = {0, 2};
    g.mul_v = Bilinear::zero(1);
    g.mul_v.c[0][0] = {1};
    g.unit_fixed = {1, 0};
    g.unit_v = {1};
    return g;
}

inline GreenFunctor green_constant_z() {
    GreenFunctor g;
    g.m = MackeyFunctor(FgAbGroup::free(1), FgAbGroup::free(1), Mat::identity(1),
                        Mat::from_rows({{1}}), Mat::from_rows({{2}}), "constant-z");
    g.mul_fixed = Bilinear::zero(1);
    g.mul_fixed.c[0][0] = {1};
    g.mul_v = g.mul_fixed;
    g.unit_fixed = {1};
    g.unit_v = {1};
    return g;
}

inline GreenFunctor green_constant_f2() {
    GreenFunctor g;
    g.m = MackeyFunctor(FgAbGroup::cyclic(2), FgAbGroup::cyclic(2), Mat::identity(1),
                        Mat::from_rows({{1}}), Mat::from_rows({{0}}), "constant-f2");
    g.mul_fixed = Bilinear::zero(1);
    g.mul_fixed.c[0][0] = {1};
    g.mul_v = g.mul_fixed;
    g.unit_fixed = {1};
    g.unit_v = {1};
    return g;
}

inline GreenFunctor green_norm_f2() {
    GreenFunctor g;
    g.m = MackeyFunctor(FgAbGroup::cyclic(4), FgAbGroup::cyclic(2), Mat::identity(1),
                        Mat::from_rows({{1}}), Mat::from_rows({{2}}), "norm-f2");
    g.mul_fixed = Bilinear::zero(1);
    g.mul_fixed.c[0][0] = {1};
    g.mul_v = g.mul_fixed;
    g.unit_fixed = {1};
    g.unit_v = {1};
    return g;
}

inline MackeyFunctor mackey_twisted_z() {
    return MackeyFunctor(FgAbGroup::trivial(), FgAbGroup::free(1),
                         Mat::scalar(1, -1), Mat(1, 0), Mat(0, 1), "twisted-z");
}

inline MackeyFunctor mackey_zero() {
    return MackeyFunctor(FgAbGroup::trivial(), FgAbGroup::trivial(), Mat(0, 0),
                         Mat(0, 0), Mat(0, 0), "zero");
}

inline std::vector<std::string> catalog_names() {
    return {"burnside", "constant-z", "constant-f2", "norm-f2", "twisted-z", "zero"};
}

inline std::optional<GreenFunctor> green_catalog(const std::string& name) {
    if (name == "burnside") return green_burnside();
    if (name == "constant-z") return green_constant_z();
    if (name == "constant-f2") return green_constant_f2();
    if (name == "norm-f2") return green_norm_f2();
    return std::nullopt;
}

inline MackeyFunctor catalog(const std::string& name) {
    if (auto g = green_catalog(name)) return g->m;
    if (name == "twisted-z") return mackey_twisted_z();
    if (name == "zero") return mackey_zero();
    throw parse_error("unknown catalog name: " + name);
}

// ---------------------------------------------------------------------------
// Seeded random instances: direct sums of known-valid building blocks.

namespace detail {
struct Rng {  // splitmix64, deterministic across platforms
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

inline ZQModule random_module(Rng& rng, std::uint64_t bound) {
    static const int orders[] = {2, 3, 4, 5, 8, 9, 12, 16};
    auto pick_group = [&]() -> FgAbGroup {
        std::uint64_t k = rng.below(5);
        if (k == 0) return FgAbGroup::free(1);
        Int d = orders[rng.below(sizeof(orders) / sizeof(orders[0]))];
        if (bound > 1 && d > Int(bound)) d = Int(bound);
        return FgAbGroup::cyclic(d);
    };
    std::size_t blocks = 1 + rng.below(2);
    std::optional<ZQModule> out;
    for (std::size_t i = 0; i < blocks; ++i) {
        ZQModule piece = [&] {
            switch (rng.below(3)) {
                case 0: return ZQModule::trivial(pick_group());
                case 1: return ZQModule::sign(pick_group());
                default: return ZQModule::swap_double(pick_group());
            }
        }();
        out = out ? direct_sum_modules(*out, piece) : piece;
    }
    return *out;
}
}  // namespace detail

inline MackeyFunctor random_mackey(std::uint64_t seed, std::uint64_t size_bound = 8) {
    if (size_bound == 0) return mackey_zero();  // only trivial summands fit
    detail::Rng rng(seed ^ 0xabcdef1234567890ull);
    std::size_t blocks = 1 + rng.below(3);
    std::optional<MackeyFunctor> out;
    for (std::size_t i = 0; i < blocks; ++i) {
        MackeyFunctor piece = [&]() -> MackeyFunctor {
            switch (rng.below(6)) {
                case 0: return fixed_point_functor(detail::random_module(rng, size_bound));
                case 1: return orbit_functor(detail::random_module(rng, size_bound));
                case 2:
                    return fixed_point_functor(twist(detail::random_module(rng, size_bound)));
                case 3:
                    return orbit_functor(twist(detail::random_module(rng, size_bound)));
                default: {
                    auto names = catalog_names();
                    return catalog(names[rng.below(names.size() - 1)]);  // skip "zero"
                }
            }
        }();
        out = out ? direct_sum(*out, piece) : piece;
    }
    MackeyFunctor m = *out;
    m.name = "random:" + std::to_string(seed);
    return m;
}

// ---------------------------------------------------------------------------
// .mky file format (JSON text).

namespace detail {
inline IntVec json_vec(const nlohmann::json& j) {
    IntVec v;
    for (const auto& x : j) v.push_back(Int(x.get<long long>()));
    return v;
}
inline Mat json_mat(const nlohmann::json& j, std::size_t rows, std::size_t cols,
                    const std::string& field) {
    if (!j.is_array() || j.size() != rows)
        throw parse_error("field '" + field + "': expected " + std::to_string(rows) +
                          " rows");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw parse_error("field '" + field + "': row " + std::to_string(i) +
                              " should have " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = Int(j[i][k].get<long long>());
    }
    return m;
}
inline nlohmann::json mat_json(const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(static_cast<long long>(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}
inline FgAbGroup json_group(const nlohmann::json& j, const std::string& field) {
    if (!j.contains("invariant_factors"))
        throw parse_error("field '" + field + "': missing invariant_factors");
    IntVec fs = json_vec(j["invariant_factors"]);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i] < 0 || fs[i] == 1)
            throw parse_error("field '" + field + "': invariant factor must be 0 or >= 2");
        if (i + 1 < fs.size()) {
            if (fs[i] == 0 && fs[i + 1] != 0)
                throw parse_error("field '" + field + "': free factors must come last");
            if (fs[i] != 0 && fs[i + 1] != 0 && fs[i + 1] % fs[i] != 0)
                throw parse_error("field '" + field + "': factors must form a divisibility chain");
        }
    }
    return FgAbGroup::of(fs);
}
}  // namespace detail

struct LoadedMackey {
    MackeyFunctor m;
    std::optional<GreenFunctor> green;
};

inline LoadedMackey parse_mky(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid .mky: ") + e.what());
    }
    for (const char* f : {"fixed_level", "underlying", "gamma", "res", "tr"})
        if (!j.contains(f)) throw parse_error(std::string("missing field '") + f + "'");
    FgAbGroup fixed = detail::json_group(j["fixed_level"], "fixed_level");
    FgAbGroup v = detail::json_group(j["underlying"], "underlying");
    LoadedMackey out;
    try {
        out.m = MackeyFunctor(fixed, v,
                              detail::json_mat(j["gamma"], v.rank(), v.rank(), "gamma"),
                              detail::json_mat(j["res"], v.rank(), fixed.rank(), "res"),
                              detail::json_mat(j["tr"], fixed.rank(), v.rank(), "tr"),
                              j.value("name", ""));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("invalid .mky matrices: ") + e.what());
    }
    if (j.contains("product_fixed") || j.contains("product_underlying")) {
        for (const char* f : {"product_fixed", "product_underlying", "unit_fixed",
                              "unit_underlying"})
            if (!j.contains(f))
                throw parse_error(std::string("green data incomplete: missing '") + f + "'");
        GreenFunctor g;
        g.m = out.m;
        auto tensor = [&](const nlohmann::json& t, const FgAbGroup& grp,
                          const std::string& field) {
            Bilinear b = Bilinear::zero(grp.rank());
            if (!t.is_array() || t.size() != grp.rank())
                throw parse_error("field '" + field + "': bad tensor shape");
            for (std::size_t i = 0; i < grp.rank(); ++i)
                for (std::size_t k = 0; k < grp.rank(); ++k) {
                    b.c[i][k] = detail::json_vec(t[i][k]);
                    if (b.c[i][k].size() != grp.rank())
                        throw parse_error("field '" + field + "': bad tensor entry");
                }
            return b;
        };
        g.mul_fixed = tensor(j["product_fixed"], out.m.fixed, "product_fixed");
        g.mul_v = tensor(j["product_underlying"], out.m.v, "product_underlying");
        g.unit_fixed = detail::json_vec(j["unit_fixed"]);
        g.unit_v = detail::json_vec(j["unit_underlying"]);
        if (g.unit_fixed.size() != out.m.fixed.rank() || g.unit_v.size() != out.m.v.rank())
            throw parse_error("green unit has wrong length");
        out.green = g;
    }
    return out;
}

inline nlohmann::json to_mky_json(const MackeyFunctor& m,
                                  const GreenFunctor* green = nullptr) {
    nlohmann::json j;
    if (!m.name.empty()) j["name"] = m.name;
    auto factors = [](const FgAbGroup& g) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& f : g.factors) a.push_back(static_cast<long long>(f));
        return a;
    };
    j["fixed_level"] = {{"invariant_factors", factors(m.fixed)}};
    j["underlying"] = {{"invariant_factors", factors(m.v)}};
    j["gamma"] = detail::mat_json(m.gamma);
    j["res"] = detail::mat_json(m.res_m);
    j["tr"] = detail::mat_json(m.tr_m);
    if (green) {
        auto tensor = [](const Bilinear& b) {
            nlohmann::json t = nlohmann::json::array();
            for (const auto& row : b.c) {
                nlohmann::json r = nlohmann::json::array();
                for (const auto& e : row) {
                    nlohmann::json v = nlohmann::json::array();
                    for (const auto& x : e) v.push_back(static_cast<long long>(x));
                    r.push_back(v);
                }
                t.push_back(r);
            }
            return t;
        };
        j["product_fixed"] = tensor(green->mul_fixed);
        j["product_underlying"] = tensor(green->mul_v);
        nlohmann::json uf = nlohmann::json::array(), uv = nlohmann::json::array();
        for (const auto& x : green->unit_fixed) uf.push_back(static_cast<long long>(x));
        for (const auto& x : green->unit_v) uv.push_back(static_cast<long long>(x));
        j["unit_fixed"] = uf;
        j["unit_underlying"] = uv;
    }
    return j;
}

// Load from a file path; runs validate and refuses invalid data.
inline LoadedMackey load_mky(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    LoadedMackey lm = parse_mky(ss.str());
    ValidationReport rep = lm.green ? validate(*lm.green) : validate(lm.m);
    if (!rep.ok())
        throw parse_error("invalid Mackey functor in " + path + ":\n" + rep.to_string());
    return lm;
}

}  // namespace emq
