#pragma once

// Closed-form coefficients of the four Tate-square corners: homotopy fixed
// points, homotopy orbits, Tate and geometric fixed points, plus the
// comparison maps f0 and epsilon0.

#include "emq/mackey.hpp"

namespace emq {

struct Degree {
    int x = 0;  // trivial-representation multiplicity
    int y = 0;  // sign-representation multiplicity

    Degree() = default;
    Degree(int x_, int y_) : x(x_), y(y_) {}
    Degree operator+(Degree o) const { return {x + o.x, y + o.y}; }
    bool operator==(const Degree& o) const = default;
    bool on_antidiagonal() const { return y == -x; }
    std::string to_string() const {
        return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    }
};

enum class Corner { hfp, orbits, tate, geometric };

struct CornerPiece {
    Corner corner;
    Degree degree;
    FgAbGroup group;
    std::string formula_tag;
    SubQuotient sq;  // pinned presentation inside its ambient
};

// Coefficient module carried by the twisted sphere: V for even y, the
// sign twist for odd y.
inline ZQModule sphere_module(const MackeyFunctor& m, int y) {
    ZQModule v = m.underlying();
    return (((y % 2) + 2) % 2 == 0) ? v : twist(v);
}

// Homotopy fixed points at x+yσ: H^p(Q; W_y) with p = -(x+y).
inline SubQuotient hfp_sub(const MackeyFunctor& m, Degree d) {
    long p = -(static_cast<long>(d.x) + d.y);
    if (p < 0) return SubQuotient::zero_in(m.v);
    return cohomology_piece(sphere_module(m, d.y), p);
}

// Homotopy orbits at x+yσ: H_p(Q; W_y) with p = x+y.
inline SubQuotient orbit_sub(const MackeyFunctor& m, Degree d) {
    long p = static_cast<long>(d.x) + d.y;
    if (p < 0) return SubQuotient::zero_in(m.v);
    return homology_piece(sphere_module(m, d.y), p);
}

inline CornerPiece homotopy_fixed(const MackeyFunctor& m, Degree d) {
    SubQuotient s = hfp_sub(m, d);
    long p = -(static_cast<long>(d.x) + d.y);
    std::string tag = p < 0 ? "0" : "H^" + std::to_string(p) +
                                        (d.y % 2 ? "(Q;V~)" : "(Q;V)");
    return {Corner::hfp, d, s.group, tag, s};
}

inline CornerPiece homotopy_orbits(const MackeyFunctor& m, Degree d) {
    SubQuotient s = orbit_sub(m, d);
    long p = static_cast<long>(d.x) + d.y;
    std::string tag = p < 0 ? "0" : "H_" + std::to_string(p) +
                                        (d.y % 2 ? "(Q;V~)" : "(Q;V)");
    return {Corner::orbits, d, s.group, tag, s};
}

// Tate coefficients: 2-periodic in x, independent of y.
inline CornerPiece tate(const MackeyFunctor& m, Degree d) {
    SubQuotient s = tate_piece(m.underlying(), -d.x);
    bool even = ((d.x % 2) + 2) % 2 == 0;
    return {Corner::tate, d, s.group, even ? "V^Q/NV" : "NV-torsion/(1-γ)V", s};
}

// Geometric fixed points: coker(tr) at x=0, ker(tr)/(1-γ)V at x=1, the Tate
// group for x >= 2, zero for x < 0; independent of y throughout.
inline CornerPiece geometric(const MackeyFunctor& m, Degree d) {
    if (d.x < 0) {
        SubQuotient z = SubQuotient::zero_in(m.v);
        return {Corner::geometric, d, z.group, "0", z};
    }
    if (d.x == 0) {
        SubQuotient s = quotient_of(m.fixed, {m.tr_m});
        return {Corner::geometric, d, s.group, "coker(tr)", s};
    }
    if (d.x == 1) {
        ZQModule v = m.underlying();
        SubQuotient s = subquotient(m.tr(), v.one_minus_gamma());
        return {Corner::geometric, d, s.group, "ker(tr)_Q", s};
    }
    CornerPiece t = tate(m, d);
    t.corner = Corner::geometric;
    return t;
}

// epsilon0: M(Q/Q) -> V^Q, the restriction with corestricted codomain.
inline Hom epsilon0(const MackeyFunctor& m) {
    KernelResult fx = kernel(m.underlying().one_minus_gamma());
    return solve_through(fx.inclusion, m.res());
}

// f0: V_Q -> M(Q/Q), induced by the transfer (well-defined since tr∘γ = tr).
inline Hom f0(const MackeyFunctor& m) {
    CokernelResult co = cokernel(m.underlying().one_minus_gamma());
    Hom sec = section_of(co.projection);
    return Hom(co.group, m.fixed, m.tr_m * sec.matrix());
}

}  // namespace emq
