#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace emq;
using namespace emq::testing;

namespace {
GreenFunctor green_constant_mod(long d) {
    // constant Green functor on Z/d (res = 1, tr = 2)
    GreenFunctor g;
    g.m = MackeyFunctor(FgAbGroup::cyclic(d), FgAbGroup::cyclic(d), Mat::identity(1),
                        Mat::from_rows({{1}}), Mat::from_rows({{2}}),
                        "constant-z/" + std::to_string(d));
    g.mul_fixed = Bilinear::zero(1);
    g.mul_fixed.c[0][0] = {Int(1)};
    g.mul_v = g.mul_fixed;
    g.unit_fixed = {Int(1)};
    g.unit_v = {Int(1)};
    return g;
}
}  // namespace

// The cup convention is pinned by this fixture before anything else uses it.
TEST_CASE("cup products reproduce the polynomial ring of constant-f2") {
    GreenFunctor f2 = green_constant_f2();
    for (long p = 0; p <= 4; ++p)
        for (long q = 0; q <= 4; ++q) {
            CupPairing cup = hfp_cup_product(f2, p, q, false, false);
            REQUIRE(cup.left.group.factors == IntVec{Int(2)});
            REQUIRE(cup.out.group.factors == IntVec{Int(2)});
            // generator times generator is the generator, in every bidegree
            REQUIRE(cup.apply({Int(1)}, {Int(1)}) == IntVec{Int(1)});
        }
    // twisted entries multiply the same way in characteristic two
    CupPairing todd = hfp_cup_product(f2, 1, 2, true, true);
    REQUIRE(todd.apply({Int(1)}, {Int(1)}) == IntVec{Int(1)});
}

TEST_CASE("degree zero cup is plain multiplication") {
    GreenFunctor z = green_constant_z();
    CupPairing cup = hfp_cup_product(z, 0, 0, false, false);
    REQUIRE(cup.apply({Int(3)}, {Int(5)}) == IntVec{Int(15)});
}

TEST_CASE("odd order wipes out the positive cup range") {
    GreenFunctor z3 = green_constant_mod(3);
    REQUIRE(validate(z3).ok());
    for (long p = 1; p <= 4; ++p)
        REQUIRE(hfp_cup_product(z3, p, 1, false, false).out.group.is_trivial());
}

TEST_CASE("named product relations") {
    SECTION("constant-f2: the antidiagonal generator squares to u") {
        GreenFunctor f2 = green_constant_f2();
        GradedElement lam{{1, -1}, {Int(1)}};
        GradedElement sq = product(f2, lam, lam);
        REQUIRE(sq.degree == Degree{2, -2});
        REQUIRE(sq.coords == u_element(f2).coords);
    }
    SECTION("burnside: a·τ = ω - 2") {
        GreenFunctor b = green_burnside();
        GradedElement tau{{0, 1}, {Int(1)}};
        GradedElement at = product(b, a_element(b), tau);
        if (at.coords != IntVec{Int(-2), Int(1)}) {
            // the other sign of the pinned kernel generator
            tau.coords = {Int(-1)};
            at = product(b, a_element(b), tau);
        }
        REQUIRE(at.coords == IntVec{Int(-2), Int(1)});
    }
    SECTION("constant-z: u·θ = 2") {
        GreenFunctor z = green_constant_z();
        GradedElement theta{{-2, 2}, {Int(1)}};
        GradedElement ut = product(z, u_element(z), theta);
        REQUIRE(ut.degree == Degree{0, 0});
        REQUIRE(ut.coords == IntVec{Int(2)});
    }
}

TEST_CASE("unit laws on every supported degree") {
    for (const char* name : {"burnside", "constant-f2", "norm-f2", "constant-z"}) {
        GreenFunctor g = *green_catalog(name);
        GradedElement one = unit_element(g);
        for (int x = -5; x <= 5; ++x)
            for (int y = -5; y <= 5; ++y) {
                GradedPiece p = coefficient(g.m, {x, y});
                if (p.is_zero()) continue;
                for (std::size_t i = 0; i < p.group().rank(); ++i) {
                    GradedElement e{{x, y}, IntVec(p.group().rank())};
                    e.coords[i] = 1;
                    try {
                        REQUIRE(product(g, one, e).coords == e.coords);
                        REQUIRE(product(g, e, one).coords == e.coords);
                    } catch (const unsupported_operation&) {
                    }
                }
            }
    }
}

TEST_CASE("omega element acts like the omega action") {
    for (const char* name : {"burnside", "norm-f2", "constant-z"}) {
        GreenFunctor g = *green_catalog(name);
        GradedElement w = omega_element(g);
        for (int x = -4; x <= 4; ++x)
            for (int y = -4; y <= 4; ++y) {
                GradedPiece p = coefficient(g.m, {x, y});
                if (p.is_zero()) continue;
                ActionMap om = omega_action(g, {x, y});
                for (std::size_t i = 0; i < p.group().rank(); ++i) {
                    GradedElement e{{x, y}, IntVec(p.group().rank())};
                    e.coords[i] = 1;
                    try {
                        REQUIRE(product(g, w, e).coords == om.map.apply(e.coords));
                    } catch (const unsupported_operation&) {
                    }
                }
            }
    }
}

TEST_CASE("products are associative on monomial triples") {
    for (const char* name : {"burnside", "constant-f2", "norm-f2"}) {
        GreenFunctor g = *green_catalog(name);
        std::vector<GradedElement> pool = {unit_element(g), a_element(g), u_element(g),
                                           omega_element(g)};
        for (Degree d : {Degree{1, -1}, Degree{-1, 1}, Degree{3, -3}, Degree{-3, 3}}) {
            GradedPiece p = coefficient(g.m, d);
            if (!p.is_zero()) {
                GradedElement e{d, IntVec(p.group().rank())};
                e.coords[0] = 1;
                pool.push_back(e);
            }
        }
        std::size_t checked = 0;
        for (const auto& x : pool)
            for (const auto& y : pool)
                for (const auto& z : pool) {
                    try {
                        GradedElement l = product(g, product(g, x, y), z);
                        GradedElement r = product(g, x, product(g, y, z));
                        REQUIRE(l.coords == r.coords);
                        ++checked;
                    } catch (const unsupported_operation&) {
                    }
                }
        REQUIRE(checked > 20);
    }
}

TEST_CASE("the comparison map is a ring map where both sides live") {
    GreenFunctor b = green_burnside();
    // ε(αβ) = ε(α) ⌣ ε(β) for classes on the antidiagonal
    GradedElement q{{-1, 1}, IntVec(coefficient(b.m, {-1, 1}).group().rank())};
    // coker(res) is trivial for burnside, so use norm-f2 where it is not... it
    // is trivial there as well; exercise the law on constant-f2 instead.
    GreenFunctor f2 = green_constant_f2();
    GradedElement lam{{1, -1}, {Int(1)}};
    GradedElement l2 = product(f2, lam, lam);
    // both sides inside H^0(Q;V) at (2,-2)
    CupPairing cup = hfp_cup_product(f2, 0, 0, true, true);
    IntVec lhs = coefficient(f2.m, {2, -2}).sq.coords_of(
        cup.green->vmul(cup.left.rep({Int(1)}), cup.right.rep({Int(1)})));
    REQUIRE(l2.coords == lhs);
    (void)q;
}

TEST_CASE("strict commutativity on the Green catalog") {
    for (const char* name : {"burnside", "constant-f2", "norm-f2", "constant-z"}) {
        GreenFunctor g = *green_catalog(name);
        CommutativityReport rep = commutativity_check(g, {-4, 4, -4, 4});
        INFO(name);
        REQUIRE(rep.ok());
        REQUIRE(rep.pairs_checked > 0);
    }
}

TEST_CASE("unsupported degree pairs are refused, not guessed") {
    GreenFunctor b = green_burnside();
    GradedElement tau{{0, 1}, {Int(1)}};  // not a monomial multiple
    REQUIRE_THROWS_AS(product(b, tau, tau), unsupported_operation);
}

TEST_CASE("ring presentations carry the expected relations") {
    SECTION("constant-f2: l^2 = u appears") {
        RingPresentation p = ring_presentation(green_constant_f2(), {-4, 4, -4, 4});
        REQUIRE(p.undetermined.empty());
        std::size_t li = 0, ui = 0;
        for (std::size_t k = 0; k < p.generators.size(); ++k) {
            if (p.generators[k].name == "l") li = k;
            if (p.generators[k].name == "u") ui = k;
        }
        bool found = false;
        for (const auto& r : p.relations) {
            if (!(r.degree == Degree{2, -2}) || r.terms.size() != 2) continue;
            bool has_l2 = false, has_u = false;
            for (const auto& [c, mono] : r.terms) {
                if (mono[li] == 2 && int_abs(c) == 1) has_l2 = true;
                if (mono[ui] == 1 && mono[li] == 0 && int_abs(c) == 1) has_u = true;
            }
            if (has_l2 && has_u) found = true;
        }
        REQUIRE(found);
    }
    SECTION("burnside: aw = 0 and 2au = 0 appear") {
        RingPresentation p = ring_presentation(green_burnside(), {-4, 4, -4, 4});
        REQUIRE(p.undetermined.empty());
        std::size_t ai = 0, ui = 0, wi = 0;
        for (std::size_t k = 0; k < p.generators.size(); ++k) {
            if (p.generators[k].name == "a") ai = k;
            if (p.generators[k].name == "u") ui = k;
            if (p.generators[k].name == "w") wi = k;
        }
        bool found_aw = false, found_2au = false;
        for (const auto& r : p.relations) {
            if (r.terms.size() != 1) continue;
            const auto& [c, mono] = r.terms[0];
            if (mono[ai] == 1 && mono[wi] == 1 && mono[ui] == 0 && int_abs(c) == 1)
                found_aw = true;
            if (mono[ai] == 1 && mono[ui] == 1 && mono[wi] == 0 && int_abs(c) == 2)
                found_2au = true;
        }
        REQUIRE(found_aw);
        REQUIRE(found_2au);
    }
}
