#pragma once

// The RO(Q)-graded coefficient groups of an equivariant Eilenberg-MacLane
// spectrum, computed degree by degree from the underlying Mackey functor,
// together with the action maps by a (degree -σ), u (degree 2-2σ) and ω.

#include "emq/tate_corners.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

namespace emq {

enum class CaseTag {
    origin,
    ker_res,
    coker_tr,
    ker_tr,
    ker_tr_coinv,
    coker_res,
    fixed_mod_res,
    hfp_cone,
    ho_cone,
    zero
};

inline std::string to_string(CaseTag t) {
    switch (t) {
        case CaseTag::origin: return "origin";
        case CaseTag::ker_res: return "ker_res";
        case CaseTag::coker_tr: return "coker_tr";
        case CaseTag::ker_tr: return "ker_tr";
        case CaseTag::ker_tr_coinv: return "ker_tr_coinv";
        case CaseTag::coker_res: return "coker_res";
        case CaseTag::fixed_mod_res: return "fixed_mod_res";
        case CaseTag::hfp_cone: return "hfp_cone";
        case CaseTag::ho_cone: return "ho_cone";
        case CaseTag::zero: return "zero";
    }
    return "?";
}

// The case boundaries depend on the degree alone.
inline CaseTag case_tag_for(Degree d) {
    if (d.x == 0) {
        if (d.y == 0) return CaseTag::origin;
        return d.y > 0 ? CaseTag::ker_res : CaseTag::coker_tr;
    }
    if (d.x == 1) {
        if (d.y == -1) return CaseTag::ker_tr;
        return d.y < -1 ? CaseTag::ker_tr_coinv : CaseTag::zero;
    }
    if (d.x == -1) {
        if (d.y == 1) return CaseTag::coker_res;
        return d.y > 1 ? CaseTag::fixed_mod_res : CaseTag::zero;
    }
    if (d.x >= 2) return d.y <= -d.x ? CaseTag::hfp_cone : CaseTag::zero;
    return d.y >= -d.x ? CaseTag::ho_cone : CaseTag::zero;
}

enum class AmbientKind { fixed_level, underlying };

struct GradedPiece {
    Degree degree;
    CaseTag tag = CaseTag::zero;
    AmbientKind ambient = AmbientKind::underlying;
    SubQuotient sq;

    const FgAbGroup& group() const { return sq.group; }
    bool is_zero() const { return sq.group.is_trivial(); }
};

inline GradedPiece coefficient(const MackeyFunctor& m, Degree d) {
    GradedPiece gp;
    gp.degree = d;
    gp.tag = case_tag_for(d);
    switch (gp.tag) {
        case CaseTag::origin:
            gp.ambient = AmbientKind::fixed_level;
            gp.sq = SubQuotient::whole(m.fixed);
            break;
        case CaseTag::ker_res:
            gp.ambient = AmbientKind::fixed_level;
            gp.sq = sub_of_kernel(m.res());
            break;
        case CaseTag::coker_tr:
            gp.ambient = AmbientKind::fixed_level;
            gp.sq = quotient_of(m.fixed, {m.tr_m});
            break;
        case CaseTag::ker_tr:
            gp.sq = sub_of_kernel(m.tr());
            break;
        case CaseTag::ker_tr_coinv:
            // ker(tr)/(1-γ)V, the kernel of the induced map on coinvariants
            gp.sq = subquotient(m.tr(), m.underlying().one_minus_gamma());
            break;
        case CaseTag::coker_res:
            gp.sq = quotient_of(m.v, {m.res_m});
            break;
        case CaseTag::fixed_mod_res:
            // V^Q / im(res), formed inside the fixed points via epsilon0
            gp.sq = subquotient(m.underlying().one_minus_gamma(), m.res());
            break;
        case CaseTag::hfp_cone:
            gp.sq = hfp_sub(m, d);
            break;
        case CaseTag::ho_cone:
            gp.sq = orbit_sub(m, d);
            break;
        case CaseTag::zero:
            gp.ambient = d.x == 0 ? AmbientKind::fixed_level : AmbientKind::underlying;
            gp.sq = SubQuotient::zero_in(d.x == 0 ? m.fixed : m.v);
            break;
    }
    return gp;
}

// The Q/e level: V (with γ twisted by the parity of y) on the antidiagonal,
// zero elsewhere.
inline std::optional<ZQModule> underlying_coefficient(const MackeyFunctor& m,
                                                      Degree d) {
    if (d.x + d.y != 0) return std::nullopt;
    return sphere_module(m, d.y);
}

// ---------------------------------------------------------------------------
// Action maps.

enum class Actor { a, u, omega };

struct ActionMap {
    Actor actor;
    GradedPiece source, target;
    Hom map;
    MapClass classification;
};

namespace detail {
// Ambient-level map inducing the action between two pieces; zero maps are
// produced directly when a side vanishes.
inline Hom induce_or_zero(const Hom& amb, const GradedPiece& s, const GradedPiece& t) {
    if (s.is_zero() || t.is_zero()) return Hom::zero(s.group(), t.group());
    return induced(amb, s.sq, t.sq);
}
}  // namespace detail

// a: (x, y) -> (x, y-1). Induced by the identity of the ambient level in
// every column. Monomorphism exactly when the target sits on the
// antidiagonal (x + y = 1), epimorphism exactly when the source does
// (x + y = 0), isomorphism otherwise.
inline ActionMap a_action(const MackeyFunctor& m, Degree d) {
    GradedPiece s = coefficient(m, d);
    GradedPiece t = coefficient(m, {d.x, d.y - 1});
    Hom amb = s.ambient == AmbientKind::fixed_level ? Hom::identity(m.fixed)
                                                    : Hom::identity(m.v);
    Hom map = detail::induce_or_zero(amb, s, t);
    MapClass cls = (d.x + d.y == 1)   ? MapClass::mono
                   : (d.x + d.y == 0) ? MapClass::epi
                                      : MapClass::iso;
    return {Actor::a, std::move(s), std::move(t), std::move(map), cls};
}

// u: (x, y) -> (x+2, y-2). The eight boundary cases and the interior
// isomorphisms; on the columns x = 0 and x = -2 the honest induced maps
// (by res and tr) are used beyond the two named cases.
inline ActionMap u_action(const MackeyFunctor& m, Degree d) {
    GradedPiece s = coefficient(m, d);
    GradedPiece t = coefficient(m, {d.x + 2, d.y - 2});
    ZQModule v = m.underlying();
    Hom map = [&]() -> Hom {
        if (s.is_zero() || t.is_zero()) return Hom::zero(s.group(), t.group());
        if (d.x >= 2 || d.x <= -4)  // interior: same presentation on both sides
            return detail::induce_or_zero(Hom::identity(m.v), s, t);
        if (d.x == -2 && d.y == 2)  // V_Q -> M(Q/Q), induced by the transfer
            return detail::induce_or_zero(m.tr(), s, t);
        if (d.x == 0 && d.y == 0)  // M(Q/Q) -> V^Q, the restriction
            return detail::induce_or_zero(m.res(), s, t);
        if (d.x == -1 && d.y == 1)  // coker(res) -> ker(tr), multiplication by 1-γ
            return detail::induce_or_zero(v.one_minus_gamma(), s, t);
        if (d.x == 1 && d.y == -1)  // ker(tr) -> norm torsion, inclusion
            return detail::induce_or_zero(Hom::identity(m.v), s, t);
        if (d.x == -3 && d.y == 3)  // V/NV -> coker(res), projection
            return detail::induce_or_zero(Hom::identity(m.v), s, t);
        if (d.x == 1 && d.y <= -2)  // ker(tr)_Q -> torsion/(1-γ)V, induced inclusion
            return detail::induce_or_zero(Hom::identity(m.v), s, t);
        if (d.x == -3 && d.y >= 4)  // V^Q/NV -> V^Q/im(res), projection
            return detail::induce_or_zero(Hom::identity(m.v), s, t);
        if (d.x == 0 && d.y < 0)  // coker(tr) -> V^Q/NV, induced by res
            return detail::induce_or_zero(m.res(), s, t);
        if (d.x == -2 && d.y > 2)  // torsion/(1-γ)V -> ker(res), induced by tr
            return detail::induce_or_zero(m.tr(), s, t);
        return Hom::zero(s.group(), t.group());
    }();
    MapClass cls = classify(map);
    return {Actor::u, std::move(s), std::move(t), std::move(map), cls};
}

// ω: degree 0. Multiplication by 2 away from the fixed column, zero on the
// y-axis off the origin; at the origin the product with tr(1) requires a
// Green structure.
inline ActionMap omega_action(const MackeyFunctor& m, Degree d,
                              const GreenFunctor* green = nullptr) {
    GradedPiece s = coefficient(m, d);
    GradedPiece t = s;
    Hom map = [&]() -> Hom {
        if (d.x != 0) return Hom::scalar(s.group(), 2);
        if (d.y != 0) return Hom::zero(s.group(), t.group());
        if (!green)
            throw unsupported_operation(
                "omega action at the origin needs a Green functor");
        IntVec tr1 = m.tr().apply(green->unit_v);
        Mat mm(m.fixed.rank(), m.fixed.rank());
        for (std::size_t j = 0; j < m.fixed.rank(); ++j) {
            IntVec e(m.fixed.rank());
            e[j] = 1;
            mm.set_column(j, green->fmul(tr1, e));
        }
        return Hom(m.fixed, m.fixed, std::move(mm));
    }();
    MapClass cls = classify(map);
    return {Actor::omega, std::move(s), std::move(t), std::move(map), cls};
}

inline ActionMap omega_action(const GreenFunctor& g, Degree d) {
    return omega_action(g.m, d, &g);
}

// ---------------------------------------------------------------------------
// Tables.

struct Window {
    int x0 = -10, x1 = 10, y0 = -10, y1 = 10;
    std::size_t width() const { return static_cast<std::size_t>(x1 - x0 + 1); }
    std::size_t height() const { return static_cast<std::size_t>(y1 - y0 + 1); }
    bool contains(Degree d) const {
        return d.x >= x0 && d.x <= x1 && d.y >= y0 && d.y <= y1;
    }
    std::vector<Degree> degrees() const {  // (x, y) lexicographic
        std::vector<Degree> out;
        for (int x = x0; x <= x1; ++x)
            for (int y = y0; y <= y1; ++y) out.push_back({x, y});
        return out;
    }
};

inline unsigned thread_budget() {
    if (const char* env = std::getenv("EMQ_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Evaluate f over 0..n-1 on a small worker pool; results are written by
// index so the output does not depend on scheduling.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    unsigned workers = std::min<std::size_t>(thread_budget(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                f(i);
            }
        });
    for (auto& th : pool) th.join();
}

struct Table {
    Window window;
    std::vector<GradedPiece> cells;  // (x, y) lexicographic

    const GradedPiece& at(Degree d) const {
        std::size_t ix = static_cast<std::size_t>(d.x - window.x0);
        std::size_t iy = static_cast<std::size_t>(d.y - window.y0);
        return cells[ix * window.height() + iy];
    }
};

inline Table table(const MackeyFunctor& m, const Window& w) {
    Table t;
    t.window = w;
    auto degs = w.degrees();
    t.cells.resize(degs.size());
    parallel_for(degs.size(), [&](std::size_t i) { t.cells[i] = coefficient(m, degs[i]); });
    return t;
}

}  // namespace emq
