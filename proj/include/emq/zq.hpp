#pragma once

// Z[Q]-module invariants for Q of order two: fixed points, coinvariants,
// norm torsion, Tate cohomology and group (co)homology computed from the
// 2-periodic resolution with alternating boundaries 1-γ, 1+γ.

#include "emq/abgroup.hpp"

namespace emq {

struct ZQModule {
    FgAbGroup group;
    Mat gamma;  // involution in canonical coordinates

    ZQModule() = default;
    ZQModule(FgAbGroup g, Mat gm) : group(std::move(g)) {
        Hom h(group, group, std::move(gm));  // validates well-definedness
        if (!h.compose(h).equals(Hom::identity(group)))
            throw std::invalid_argument("ZQModule: gamma is not an involution");
        gamma = h.matrix();  // store reduced entries
    }

    Hom gamma_hom() const { return Hom(group, group, gamma); }
    Hom one_minus_gamma() const { return Hom::identity(group) - gamma_hom(); }
    Hom one_plus_gamma() const { return Hom::identity(group) + gamma_hom(); }

    static ZQModule trivial(FgAbGroup g) {
        Mat id = Mat::identity(g.rank());
        return ZQModule(std::move(g), std::move(id));
    }
    static ZQModule sign(FgAbGroup g) {
        Mat m = Mat::scalar(g.rank(), -1);
        return ZQModule(std::move(g), std::move(m));
    }
    // regular representation Z[Q]^n style swap on pairs of blocks of g
    static ZQModule swap_double(const FgAbGroup& g) {
        // interleave so invariant factors stay sorted: (d1,d1,d2,d2,...)
        FgAbGroup sum;
        for (const auto& f : g.factors) {
            sum.factors.push_back(f);
            sum.factors.push_back(f);
        }
        std::size_t n = g.rank();
        Mat m(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            m(2 * i, 2 * i + 1) = 1;
            m(2 * i + 1, 2 * i) = 1;
        }
        return ZQModule(std::move(sum), std::move(m));
    }
};

// Same underlying group, γ replaced by -γ.
inline ZQModule twist(const ZQModule& v) {
    return ZQModule(v.group, (-v.gamma));
}

inline ZQModule direct_sum_modules(const ZQModule& a, const ZQModule& b) {
    GroupSum s = direct_sum_groups(a.group, b.group);
    Hom g = s.incl_a.compose(a.gamma_hom()).compose(s.proj_a) +
            s.incl_b.compose(b.gamma_hom()).compose(s.proj_b);
    return ZQModule(s.group, g.matrix());
}

inline FgAbGroup fixed_points(const ZQModule& v) {
    return kernel(v.one_minus_gamma()).group;
}
inline FgAbGroup coinvariants(const ZQModule& v) {
    return cokernel(v.one_minus_gamma()).group;
}
inline FgAbGroup norm_torsion(const ZQModule& v) {
    return kernel(v.one_plus_gamma()).group;
}

// Pinned subquotient presentations, used wherever the graded pieces need
// coherent bases. Cochain boundaries: d^0 = 1-γ, then alternating 1+γ, 1-γ.
inline SubQuotient cohomology_piece(const ZQModule& v, long p) {
    if (p < 0) throw std::invalid_argument("group cohomology degree must be >= 0");
    if (p == 0) return sub_of_kernel(v.one_minus_gamma());
    Hom out = (p % 2 == 1) ? v.one_plus_gamma() : v.one_minus_gamma();
    Hom in = (p % 2 == 1) ? v.one_minus_gamma() : v.one_plus_gamma();
    return subquotient(out, in);
}

// Chain boundaries: d_1 = 1-γ, then alternating 1+γ, 1-γ.
inline SubQuotient homology_piece(const ZQModule& v, long p) {
    if (p < 0) throw std::invalid_argument("group homology degree must be >= 0");
    if (p == 0) return quotient_of(v.group, {v.one_minus_gamma().matrix()});
    Hom out = (p % 2 == 1) ? v.one_minus_gamma() : v.one_plus_gamma();
    Hom in = (p % 2 == 1) ? v.one_plus_gamma() : v.one_minus_gamma();
    return subquotient(out, in);
}

inline FgAbGroup group_cohomology(const ZQModule& v, long p) {
    return cohomology_piece(v, p).group;
}
inline FgAbGroup group_homology(const ZQModule& v, long p) {
    return homology_piece(v, p).group;
}

// Tate cohomology: 2-periodic, even = V^Q/NV, odd = norm torsion / (1-γ)V.
inline SubQuotient tate_piece(const ZQModule& v, long n) {
    bool even = ((n % 2) + 2) % 2 == 0;
    if (even) return subquotient(v.one_minus_gamma(), v.one_plus_gamma());
    return subquotient(v.one_plus_gamma(), v.one_minus_gamma());
}

inline FgAbGroup tate_cohomology(const ZQModule& v, long n) {
    return tate_piece(v, n).group;
}

}  // namespace emq
