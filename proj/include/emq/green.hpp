#pragma once

// Multiplicative structure for Green functors: cup products on the homotopy
// fixed point ring, graded products of coefficient classes on the supported
// region, strict-commutativity verification and ring presentations.
//
// Supported degrees for product(): the closed lower cone {x >= 0, y <= 0},
// the upper antidiagonal points (-e, e), and anything reachable because one
// factor is an integer multiple of a monomial a^i u^j ω^k · 1 (those products
// delegate to the action maps).

#include "emq/coefficients.hpp"

#include <map>

namespace emq {

struct GradedElement {
    Degree degree;
    IntVec coords;  // in the pinned basis of the coefficient piece

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Cup product on group cohomology from the 2-periodic resolution. The
// diagonal approximation is the standard comparison map, under which a class
// of degree p multiplies as  α ⌣ β = α · γ^p(β).

struct CupPairing {
    SubQuotient left, right, out;
    Mat gamma_right;  // γ acting on the right module (sign-adjusted for twists)
    long p = 0;
    const GreenFunctor* green = nullptr;

    IntVec apply(const IntVec& x, const IntVec& y) const {
        IntVec rx = left.rep(x);
        IntVec ry = right.rep(y);
        if (p % 2 != 0) ry = gamma_right.apply(ry);
        return out.coords_of(green->vmul(rx, ry));
    }
};

// Pairing H^p(Q; W1) ⊗ H^q(Q; W2) -> H^{p+q}(Q; W1⊗W2), where Wi is V for
// even twist parity and the sign twist of V for odd parity.
inline CupPairing hfp_cup_product(const GreenFunctor& g, long p, long q,
                                  bool twist_left_odd, bool twist_right_odd) {
    if (p < 0 || q < 0) throw std::invalid_argument("cup degrees must be >= 0");
    ZQModule v = g.m.underlying();
    ZQModule w1 = twist_left_odd ? twist(v) : v;
    ZQModule w2 = twist_right_odd ? twist(v) : v;
    ZQModule w12 = (twist_left_odd != twist_right_odd) ? twist(v) : v;
    CupPairing c;
    c.left = cohomology_piece(w1, p);
    c.right = cohomology_piece(w2, q);
    c.out = cohomology_piece(w12, p + q);
    c.gamma_right = w2.gamma;
    c.p = p;
    c.green = &g;
    return c;
}

// ---------------------------------------------------------------------------

namespace green_detail {

inline bool lower_cone(Degree d) { return d.x >= 0 && d.y <= 0; }
inline bool upper_antidiagonal(Degree d) { return d.x <= -1 && d.y == -d.x; }
inline bool supported_degree(Degree d) { return lower_cone(d) || upper_antidiagonal(d); }

inline GradedElement zero_at(const MackeyFunctor& m, Degree d) {
    return {d, IntVec(coefficient(m, d).group().rank())};
}

// Representative in V of the comparison-map image of a class at a degree on
// or below the antidiagonal (the homotopy fixed point side).
inline IntVec cochain_rep(const GreenFunctor& g, const GradedPiece& gp,
                          const IntVec& coords) {
    const MackeyFunctor& m = g.m;
    Degree d = gp.degree;
    if (d.x + d.y > 0) throw std::logic_error("cochain_rep above the antidiagonal");
    if (d.x >= 1) return gp.sq.rep(coords);  // already presented inside V
    if (d.x == 0) {
        IntVec lift = gp.sq.incl.apply(gp.sq.sect.apply(coords));  // in fixed level
        return m.res().apply(lift);
    }
    // upper antidiagonal point: image under the norm of the twisted module
    IntVec v = gp.sq.rep(coords);
    Hom n = (((d.y % 2) + 2) % 2 == 0) ? m.underlying().one_plus_gamma()
                                       : m.underlying().one_minus_gamma();
    return n.apply(v);
}

// γ^p acting through the sphere module of parity y.
inline IntVec twisted_gamma(const MackeyFunctor& m, int y, const IntVec& v) {
    IntVec out = m.gamma_hom().apply(v);
    if (((y % 2) + 2) % 2 != 0)
        for (auto& c : out) c = -c;
    return m.v.reduce(out);
}

}  // namespace green_detail

// Pinned distinguished elements.
inline GradedElement unit_element(const GreenFunctor& g) {
    return {{0, 0}, g.unit_fixed};
}
inline GradedElement omega_element(const GreenFunctor& g) {
    return {{0, 0}, g.m.fixed.reduce(g.m.tr().apply(g.unit_v))};
}
inline GradedElement apply_action(const GreenFunctor& g, Actor act,
                                  const GradedElement& e) {
    switch (act) {
        case Actor::a: {
            ActionMap am = a_action(g.m, e.degree);
            return {am.target.degree, am.map.apply(e.coords)};
        }
        case Actor::u: {
            ActionMap um = u_action(g.m, e.degree);
            return {um.target.degree, um.map.apply(e.coords)};
        }
        default: {
            ActionMap om = omega_action(g.m, e.degree, &g);
            return {om.target.degree, om.map.apply(e.coords)};
        }
    }
}
inline GradedElement a_element(const GreenFunctor& g) {
    return apply_action(g, Actor::a, unit_element(g));
}
inline GradedElement u_element(const GreenFunctor& g) {
    return apply_action(g, Actor::u, unit_element(g));
}

namespace green_detail {

// Value of a^i u^j ω^k · 1.
inline GradedElement monomial_value(const GreenFunctor& g, int i, int j, int k) {
    GradedElement e = unit_element(g);
    for (int t = 0; t < k; ++t) e = apply_action(g, Actor::omega, e);
    for (int t = 0; t < j; ++t) e = apply_action(g, Actor::u, e);
    for (int t = 0; t < i; ++t) e = apply_action(g, Actor::a, e);
    return e;
}

// Solve c · m = target inside a canonical group; smallest nonnegative c.
inline std::optional<Int> scalar_multiple(const FgAbGroup& grp, const IntVec& m,
                                          const IntVec& target) {
    // one congruence per coordinate: c*m_i ≡ t_i (mod f_i)
    Int mod = 0, base = 0;  // solution set c ≡ base (mod mod); mod 0 = all ints so far
    bool pinned = false;
    auto merge = [&](const Int& b2, const Int& m2) -> bool {
        // intersect c ≡ base (mod mod) with c ≡ b2 (mod m2); m2 == 0 pins c = b2
        using boost::multiprecision::gcd;
        if (!pinned && mod == 0) {
            base = b2;
            mod = m2;
            pinned = (m2 == 0);
            return true;
        }
        if (pinned) {
            if (m2 == 0) return base == b2;
            return (base - b2) % m2 == 0;
        }
        if (m2 == 0) {
            if ((b2 - base) % mod != 0) return false;
            base = b2;
            pinned = true;
            return true;
        }
        Int gg = gcd(mod, m2);
        if ((b2 - base) % gg != 0) return false;
        // CRT by brute stepping (moduli here are tiny)
        Int c = base;
        Int lcm = mod / gg * m2;
        while ((c - b2) % m2 != 0) c += mod;
        base = ((c % lcm) + lcm) % lcm;
        mod = lcm;
        return true;
    };
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Int& f = grp.factors[i];
        if (f == 0) {
            if (m[i] == 0) {
                if (target[i] != 0) return std::nullopt;
            } else {
                if (target[i] % m[i] != 0) return std::nullopt;
                if (!merge(target[i] / m[i], 0)) return std::nullopt;
            }
        } else {
            using boost::multiprecision::gcd;
            Int gg = gcd(m[i], f);
            if (target[i] % gg != 0) return std::nullopt;
            if (gg == f) continue;  // m_i ≡ 0, any c works
            // c ≡ (t/g) * inverse(m/g) (mod f/g)
            Int mm = m[i] / gg, tt = target[i] / gg, ff = f / gg;
            Int inv = 0;  // inverse of mm mod ff by brute force (ff tiny)
            Int mmr = ((mm % ff) + ff) % ff;
            for (Int c = 0; c < ff; ++c)
                if ((c * mmr) % ff == 1) {
                    inv = c;
                    break;
                }
            if (!merge((tt % ff * inv) % ff, ff)) return std::nullopt;
        }
    }
    if (!pinned && mod == 0) return Int(0);  // m had no constraints; target must be 0
    return base;
}

// Try to read an element as c · a^i u^j ω^k · 1.
struct MonomialFactor {
    Int scale;
    int i, j, k;
};

inline std::optional<MonomialFactor> as_monomial_multiple(const GreenFunctor& g,
                                                          const GradedElement& e) {
    Degree d = e.degree;
    if (d.x < 0 || d.x % 2 != 0 || d.y > -d.x) return std::nullopt;
    int j = d.x / 2, i = -d.y - d.x;
    FgAbGroup grp = coefficient(g.m, d).group();
    for (int k = 0; k <= 1; ++k) {
        GradedElement m = monomial_value(g, i, j, k);
        if (auto c = scalar_multiple(grp, m.coords, e.coords))
            return MonomialFactor{*c, i, j, k};
    }
    return std::nullopt;
}

}  // namespace green_detail

// Graded product of two coefficient classes. Degree pairs outside the
// supported region are refused with unsupported_operation.
inline GradedElement product(const GreenFunctor& g, const GradedElement& alpha,
                             const GradedElement& beta);

namespace green_detail {

inline GradedElement monomial_route(const GreenFunctor& g, const MonomialFactor& mf,
                                    const GradedElement& other) {
    GradedElement e = other;
    for (int t = 0; t < mf.k; ++t) e = apply_action(g, Actor::omega, e);
    for (int t = 0; t < mf.j; ++t) e = apply_action(g, Actor::u, e);
    for (int t = 0; t < mf.i; ++t) e = apply_action(g, Actor::a, e);
    for (auto& c : e.coords) c *= mf.scale;
    e.coords = coefficient(g.m, e.degree).group().reduce(e.coords);
    return e;
}

// Cup route for targets with x >= 1: multiply the comparison-map images and
// pull back, which is injective there.
inline GradedElement cup_route(const GreenFunctor& g, const GradedPiece& pa,
                               const IntVec& ca, const GradedPiece& pb,
                               const IntVec& cb) {
    const MackeyFunctor& m = g.m;
    Degree dt = pa.degree + pb.degree;
    long p1 = -(static_cast<long>(pa.degree.x) + pa.degree.y);
    IntVec r1 = cochain_rep(g, pa, ca);
    IntVec r2 = cochain_rep(g, pb, cb);
    if (p1 % 2 != 0) r2 = twisted_gamma(m, pb.degree.y, r2);
    IntVec w = g.vmul(r1, r2);
    SubQuotient hfp = hfp_sub(m, dt);
    IntVec wh = hfp.coords_of(w);
    if (dt.x >= 2) return {dt, wh};  // the piece is the fixed point piece itself
    // x == 1: solve through the injective comparison map
    GradedPiece t = coefficient(m, dt);
    if (t.is_zero()) return zero_at(m, dt);
    Hom eps = induced(Hom::identity(m.v), t.sq, hfp);
    if (!kernel(eps).group.is_trivial())
        throw unsupported_operation("product undetermined by the comparison map at " +
                                    dt.to_string());
    auto sol = solve_mod(eps.matrix(), hfp.group.relations(), wh);
    if (!sol)
        throw std::logic_error("cup value not in the image of the comparison map");
    return {dt, t.group().reduce(*sol)};
}

}  // namespace green_detail

inline GradedElement product(const GreenFunctor& g, const GradedElement& alpha,
                             const GradedElement& beta) {
    using namespace green_detail;
    const MackeyFunctor& m = g.m;
    Degree dt = alpha.degree + beta.degree;
    GradedPiece pa = coefficient(m, alpha.degree);
    GradedPiece pb = coefficient(m, beta.degree);
    if (alpha.coords.size() != pa.group().rank() ||
        beta.coords.size() != pb.group().rank())
        throw std::invalid_argument("graded element has wrong coordinate length");
    IntVec ca = pa.group().reduce(alpha.coords), cb = pb.group().reduce(beta.coords);
    GradedElement an{alpha.degree, ca}, bn{beta.degree, cb};

    if (an.is_zero() || bn.is_zero()) return zero_at(m, dt);

    if (auto mf = as_monomial_multiple(g, an)) return monomial_route(g, *mf, bn);
    if (auto mf = as_monomial_multiple(g, bn)) return monomial_route(g, *mf, an);

    if (!supported_degree(alpha.degree) || !supported_degree(beta.degree))
        throw unsupported_operation("product unsupported for degrees " +
                                    alpha.degree.to_string() + " x " +
                                    beta.degree.to_string());
    if (coefficient(m, dt).is_zero()) return zero_at(m, dt);

    bool chain_a = upper_antidiagonal(alpha.degree);
    bool chain_b = upper_antidiagonal(beta.degree);

    if (!chain_a && !chain_b) {
        // both in the lower cone
        if (alpha.degree.x == 0 && beta.degree.x == 0) {
            // products along the fixed column: lift, multiply, project
            IntVec la = pa.sq.incl.apply(pa.sq.sect.apply(ca));
            IntVec lb = pb.sq.incl.apply(pb.sq.sect.apply(cb));
            GradedPiece t = coefficient(m, dt);
            return {dt, t.sq.coords_of(g.fmul(la, lb))};
        }
        return cup_route(g, pa, ca, pb, cb);
    }

    if (chain_a && chain_b) {
        // both transfer-presented: α·tr(w) = tr(res(α)·w) with res the norm
        IntVec va = pa.sq.rep(ca), vb = pb.sq.rep(cb);
        Hom n = (((alpha.degree.y % 2) + 2) % 2 == 0)
                    ? m.underlying().one_plus_gamma()
                    : m.underlying().one_minus_gamma();
        IntVec w = g.vmul(n.apply(va), vb);
        GradedPiece t = coefficient(m, dt);
        return {dt, t.sq.coords_of(w)};
    }

    // exactly one chain factor; normalize it to be beta
    const GradedPiece& pl = chain_a ? pb : pa;
    const IntVec& cl = chain_a ? cb : ca;
    const GradedPiece& pc = chain_a ? pa : pb;
    const IntVec& cc = chain_a ? ca : cb;

    if (pl.degree.x == 0 && pl.degree.y < 0) return zero_at(m, dt);  // lands below
    if (pl.degree.x == 0) {
        // origin times a transfer class: res(m)·w in the orbit presentation
        IntVec lift = pl.sq.incl.apply(pl.sq.sect.apply(cl));
        IntVec w = g.vmul(m.res().apply(lift), pc.sq.rep(cc));
        GradedPiece t = coefficient(m, dt);
        return {dt, t.sq.coords_of(w)};
    }
    // lower factor with x >= 1
    if (dt.x >= 1) return cup_route(g, pa, ca, pb, cb);
    if (pl.degree.x + pl.degree.y < 0) return zero_at(m, dt);  // zero transfer image
    // both on the antidiagonal, product lands at x <= 0 via the transfer
    IntVec w = g.vmul(cochain_rep(g, pl, cl), pc.sq.rep(cc));
    GradedPiece t = coefficient(m, dt);
    if (dt.x == 0) {  // target is the origin: apply the transfer
        return {dt, t.sq.coords_of(m.tr().apply(w))};
    }
    return {dt, t.sq.coords_of(w)};  // orbit piece on the antidiagonal: project
}

// ---------------------------------------------------------------------------
// Strict commutativity.

struct CommutativityReport {
    struct Failure {
        Degree d1, d2;
        std::string detail;
    };
    std::vector<Failure> failures;
    std::size_t pairs_checked = 0;
    bool ok() const { return failures.empty(); }
};

inline CommutativityReport commutativity_check(const GreenFunctor& g, const Window& w) {
    CommutativityReport rep;
    auto degs = w.degrees();
    for (const Degree& d1 : degs)
        for (const Degree& d2 : degs) {
            if (!green_detail::supported_degree(d1) ||
                !green_detail::supported_degree(d2))
                continue;
            GradedPiece p1 = coefficient(g.m, d1);
            GradedPiece p2 = coefficient(g.m, d2);
            if (p1.is_zero() || p2.is_zero()) continue;
            if (coefficient(g.m, d1 + d2).is_zero()) continue;
            bool counted = false;
            for (std::size_t i = 0; i < p1.group().rank(); ++i)
                for (std::size_t j = 0; j < p2.group().rank(); ++j) {
                    GradedElement a{d1, IntVec(p1.group().rank())};
                    GradedElement b{d2, IntVec(p2.group().rank())};
                    a.coords[i] = 1;
                    b.coords[j] = 1;
                    try {
                        GradedElement ab = product(g, a, b);
                        GradedElement ba = product(g, b, a);
                        counted = true;
                        if (ab.coords != ba.coords)
                            rep.failures.push_back(
                                {d1, d2,
                                 "generators " + std::to_string(i) + "," +
                                     std::to_string(j)});
                    } catch (const unsupported_operation&) {
                    }
                }
            if (counted) ++rep.pairs_checked;
        }
    return rep;
}

// ---------------------------------------------------------------------------
// Ring presentations.

struct RingGenerator {
    std::string name;
    Degree degree;
    IntVec coords;
};

struct RingRelation {
    Degree degree;
    // sum of coef * monomial = 0; a monomial is exponents over the generators
    std::vector<std::pair<Int, std::vector<int>>> terms;
};

struct RingPresentation {
    std::vector<RingGenerator> generators;
    std::vector<RingRelation> relations;
    Window window;
    std::vector<std::string> undetermined;  // products the comparison map missed
};

namespace green_detail {

// sign-normalized first basis vector of a piece
inline std::optional<GradedElement> piece_generator(const MackeyFunctor& m, Degree d) {
    GradedPiece p = coefficient(m, d);
    if (p.is_zero()) return std::nullopt;
    IntVec e(p.group().rank());
    e[0] = 1;
    return GradedElement{d, e};
}

}  // namespace green_detail

inline RingPresentation ring_presentation(const GreenFunctor& g, const Window& w) {
    using namespace green_detail;
    RingPresentation pres;
    pres.window = w;
    // generator set: a, u, ω-image, one generator per nonzero piece at the
    // four antidiagonal-adjacent odd degrees
    std::vector<std::pair<std::string, GradedElement>> gens;
    gens.push_back({"a", a_element(g)});
    gens.push_back({"u", u_element(g)});
    gens.push_back({"w", omega_element(g)});
    const std::vector<std::pair<std::string, Degree>> odd_spots = {
        {"l", {1, -1}}, {"l3", {3, -3}}, {"q", {-1, 1}}, {"q3", {-3, 3}}};
    for (const auto& [nm, d] : odd_spots)
        if (auto e = piece_generator(g.m, d)) gens.push_back({nm, *e});
    for (const auto& [nm, e] : gens)
        pres.generators.push_back({nm, e.degree, e.coords});

    // enumerate monomial exponent vectors with degree inside the window;
    // exponents are capped by the window span and at most two of the four
    // odd-degree generators may appear in one monomial
    std::size_t n = gens.size();
    std::vector<std::vector<int>> monomials;
    std::vector<int> expo(n, 0);
    int span = std::max({std::abs(w.x0), std::abs(w.x1), std::abs(w.y0),
                         std::abs(w.y1), 1});
    std::function<void(std::size_t, Degree)> rec = [&](std::size_t k, Degree d) {
        if (k == n) {
            if (w.contains(d)) monomials.push_back(expo);
            return;
        }
        Degree gd = gens[k].second.degree;
        bool is_origin = gd == Degree{0, 0};
        int cap = is_origin ? 2 : 2 * span / std::max(1, std::abs(gd.x) + std::abs(gd.y)) + 1;
        for (int e = 0; e <= cap; ++e) {
            expo[k] = e;
            if (e > 0 && !is_origin && gd.x != 0 && gd.y != 0) {
                int odd_used = 0;
                for (std::size_t t = 0; t <= k; ++t)
                    if (expo[t] > 0 && gens[t].second.degree.x != 0 &&
                        gens[t].second.degree.y != 0 &&
                        !(gens[t].second.degree == Degree{0, -1}) &&
                        std::abs(gens[t].second.degree.x) % 2 == 1)
                        ++odd_used;
                if (odd_used > 2) break;
            }
            Degree nd = d;
            for (int r = 0; r < e; ++r) nd = nd + gd;
            if (std::abs(nd.x) > 3 * span || std::abs(nd.y) > 3 * span) break;
            rec(k + 1, nd);
        }
        expo[k] = 0;
    };
    rec(0, {0, 0});

    // evaluate monomials, grouped by degree: the odd antidiagonal generators
    // multiply first (upper then lower), the action monomial in ω, u, a last
    std::map<std::pair<int, int>, std::vector<std::pair<std::vector<int>, IntVec>>>
        by_degree;
    for (const auto& mono : monomials) {
        Degree d{0, 0};
        for (std::size_t k = 0; k < n; ++k)
            for (int r = 0; r < mono[k]; ++r) d = d + gens[k].second.degree;
        try {
            GradedElement acc = unit_element(g);
            for (int phase = 0; phase < 2; ++phase)
                for (std::size_t k = 3; k < n; ++k) {  // odd-degree generators
                    bool upper = upper_antidiagonal(gens[k].second.degree);
                    if ((phase == 0) != upper) continue;
                    for (int r = 0; r < mono[k]; ++r)
                        acc = product(g, acc, gens[k].second);
                }
            for (int r = 0; r < mono[2]; ++r) acc = apply_action(g, Actor::omega, acc);
            for (int r = 0; r < mono[1]; ++r) acc = apply_action(g, Actor::u, acc);
            for (int r = 0; r < mono[0]; ++r) acc = apply_action(g, Actor::a, acc);
            by_degree[{d.x, d.y}].push_back({mono, acc.coords});
        } catch (const unsupported_operation& e) {
            pres.undetermined.push_back(e.what());
        }
    }

    // relations: kernel lattice of the evaluation matrix per degree, in
    // Hermite form so the output basis is canonical
    for (const auto& [key, evals] : by_degree) {
        Degree d{key.first, key.second};
        FgAbGroup grp = coefficient(g.m, d).group();
        Mat ev(grp.rank(), evals.size());
        for (std::size_t j = 0; j < evals.size(); ++j) ev.set_column(j, evals[j].second);
        Mat raw = nullspace(Mat::hcat(ev, grp.relations()));
        Mat xpart(evals.size(), raw.cols());
        for (std::size_t i = 0; i < evals.size(); ++i)
            for (std::size_t j = 0; j < raw.cols(); ++j) xpart(i, j) = raw(i, j);
        Mat null = column_hnf(xpart);
        bool live_degree = !grp.is_trivial();
        for (std::size_t c = 0; c < null.cols(); ++c) {
            RingRelation rel;
            rel.degree = d;
            int max_weight = 0;
            for (std::size_t j = 0; j < evals.size(); ++j)
                if (null(j, c) != 0) {
                    rel.terms.push_back({null(j, c), evals[j].first});
                    int weight = 0;
                    for (int e : evals[j].first) weight += e;
                    max_weight = std::max(max_weight, weight);
                }
            if (rel.terms.empty()) continue;
            // keep structural relations; drop the flood of monomials that die
            // only because the whole degree vanishes, except the pairwise ones
            if (live_degree || max_weight <= 2) pres.relations.push_back(std::move(rel));
        }
    }
    // subsume single-term relations that are monomial multiples of another
    auto weight = [](const RingRelation& r) {
        int t = 0;
        for (const auto& [c, mono] : r.terms)
            for (int e : mono) t += e;
        return t;
    };
    std::stable_sort(pres.relations.begin(), pres.relations.end(),
                     [&](const RingRelation& a, const RingRelation& b) {
                         return weight(a) < weight(b);
                     });
    std::vector<RingRelation> kept;
    for (const auto& r : pres.relations) {
        bool redundant = false;
        if (r.terms.size() == 1) {
            const auto& [c, mono] = r.terms[0];
            for (const auto& k : kept) {
                if (k.terms.size() != 1) continue;
                const auto& [kc, kmono] = k.terms[0];
                bool divides = c % kc == 0;
                for (std::size_t t = 0; t < mono.size(); ++t)
                    divides &= kmono[t] <= mono[t];
                if (divides) {
                    redundant = true;
                    break;
                }
            }
        }
        if (!redundant) kept.push_back(r);
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [](const RingRelation& a, const RingRelation& b) {
                         if (a.degree.x != b.degree.x) return a.degree.x < b.degree.x;
                         return a.degree.y < b.degree.y;
                     });
    pres.relations = std::move(kept);
    return pres;
}

}  // namespace emq
