#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace emq;
using namespace emq::testing;

namespace {
// induced functor on Z[Q]: fixed level Z, fold transfer, diagonal restriction
MackeyFunctor induced_z() {
    return MackeyFunctor(FgAbGroup::free(1), FgAbGroup::of({Int(0), Int(0)}),
                         Mat::from_rows({{0, 1}, {1, 0}}), Mat::from_rows({{1}, {1}}),
                         Mat::from_rows({{1, 1}}), "induced-z");
}
}  // namespace

TEST_CASE("homotopy fixed points of the constant integers") {
    MackeyFunctor z = catalog("constant-z");
    REQUIRE(homotopy_fixed(z, {0, 0}).group.factors == IntVec{Int(0)});
    REQUIRE(homotopy_fixed(z, {2, -3}).group.factors == IntVec{Int(2)});
    for (const auto& name : catalog_names())
        REQUIRE(homotopy_fixed(catalog(name), {5, 0}).group.is_trivial());
}

TEST_CASE("homotopy orbits of the constant integers") {
    MackeyFunctor z = catalog("constant-z");
    REQUIRE(homotopy_orbits(z, {0, 0}).group.factors == IntVec{Int(0)});
    REQUIRE(homotopy_orbits(z, {-1, 1}).group.factors == IntVec{Int(2)});
    for (const auto& name : catalog_names())
        REQUIRE(homotopy_orbits(catalog(name), {0, -1}).group.is_trivial());
}

TEST_CASE("Tate corner values") {
    MackeyFunctor z = catalog("constant-z");
    for (int x : {-4, -2, 0, 2, 4})
        for (int y : {-3, 0, 5})
            REQUIRE(tate(z, {x, y}).group.factors == IntVec{Int(2)});
    for (int x : {-3, -1, 1, 3})
        REQUIRE(tate(z, {x, 0}).group.is_trivial());
    MackeyFunctor ind = induced_z();
    REQUIRE(validate(ind).ok());
    for (int x = -4; x <= 4; ++x)
        for (int y = -3; y <= 3; ++y)
            REQUIRE(tate(ind, {x, y}).group.is_trivial());
}

TEST_CASE("geometric fixed point values") {
    MackeyFunctor b = catalog("burnside");
    REQUIRE(geometric(b, {0, 0}).group.factors == IntVec{Int(0)});
    REQUIRE(geometric(b, {1, 0}).group.is_trivial());
    REQUIRE(geometric(catalog("constant-f2"), {3, 5}).group.factors == IntVec{Int(2)});
    SECTION("x >= 2 agrees with the Tate corner") {
        for (const auto& name : catalog_names()) {
            MackeyFunctor m = catalog(name);
            for (int x = 2; x <= 6; ++x)
                REQUIRE(are_isomorphic(geometric(m, {x, 1}).group,
                                       tate(m, {x, 1}).group));
        }
    }
    SECTION("negative fixed degrees vanish") {
        for (int x = -5; x < 0; ++x)
            REQUIRE(geometric(b, {x, 2}).group.is_trivial());
    }
}

TEST_CASE("the comparison maps epsilon0 and f0") {
    SECTION("burnside: f0 sends the generator to ω") {
        Hom f = f0(catalog("burnside"));
        REQUIRE(f.domain().factors == IntVec{Int(0)});
        REQUIRE(f.apply({Int(1)}) == IntVec{Int(0), Int(1)});
    }
    SECTION("constant-z: f0 is doubling, epsilon0 the identity") {
        MackeyFunctor z = catalog("constant-z");
        REQUIRE(f0(z).matrix()(0, 0) == 2);
        REQUIRE(epsilon0(z).matrix()(0, 0) == 1);
    }
    SECTION("twisted-z: both maps vanish with their levels") {
        MackeyFunctor t = catalog("twisted-z");
        REQUIRE(f0(t).codomain().is_trivial());
        REQUIRE(epsilon0(t).domain().is_trivial());
        REQUIRE(epsilon0(t).codomain().is_trivial());  // no fixed points in Z~
    }
}

TEST_CASE("Tate and geometric corners do not depend on the twisted degree") {
    for (const auto& name : {"burnside", "twisted-z", "norm-f2"}) {
        MackeyFunctor m = catalog(name);
        for (int x = -3; x <= 4; ++x) {
            FgAbGroup t0 = tate(m, {x, -5}).group;
            FgAbGroup g0 = geometric(m, {x, -5}).group;
            for (int y = -4; y <= 5; ++y) {
                REQUIRE(are_isomorphic(tate(m, {x, y}).group, t0));
                REQUIRE(are_isomorphic(geometric(m, {x, y}).group, g0));
            }
        }
    }
}

TEST_CASE("homotopy fixed points and orbits are (2-2σ)-periodic") {
    std::vector<MackeyFunctor> ms;
    for (const auto& n : catalog_names()) ms.push_back(catalog(n));
    for (std::uint64_t s = 0; s < 8; ++s) ms.push_back(random_mackey(s));
    for (const auto& m : ms)
        for (int x = -4; x <= 4; ++x)
            for (int y = -4; y <= 4; ++y) {
                Degree d{x, y}, d2{x + 2, y - 2};
                REQUIRE(are_isomorphic(homotopy_fixed(m, d).group,
                                       homotopy_fixed(m, d2).group));
                REQUIRE(are_isomorphic(homotopy_orbits(m, d).group,
                                       homotopy_orbits(m, d2).group));
            }
}

TEST_CASE("free underlying modules collapse all corners to one line") {
    MackeyFunctor ind = induced_z();
    for (int x = -5; x <= 5; ++x)
        for (int y = -5; y <= 5; ++y) {
            Degree d{x, y};
            REQUIRE(tate(ind, d).group.is_trivial());
            REQUIRE(geometric(ind, d).group.is_trivial());
            bool on_line = (x + y == 0);
            REQUIRE(homotopy_fixed(ind, d).group.is_trivial() == !on_line);
            REQUIRE(homotopy_orbits(ind, d).group.is_trivial() == !on_line);
        }
}
