#pragma once

// Shared helpers for the test suites: the expected coefficient patterns of
// the five named functors (frozen from the source theorems and charts), a
// deterministic RNG and a window comparison helper.

#include "emq/render.hpp"

#include <functional>
#include <random>

namespace emq::testing {

using Pattern = std::function<IntVec(int, int)>;

inline IntVec Zg() { return {Int(0)}; }
inline IntVec Z2() { return {Int(2)}; }
inline IntVec Z4() { return {Int(4)}; }
inline IntVec AQ() { return {Int(0), Int(0)}; }
inline IntVec none() { return {}; }

inline IntVec expected_constant_z(int x, int y) {
    if (y == -x && x % 2 == 0) return Zg();
    if (x % 2 == 0 && x >= 0 && y < -x) return Z2();
    if (x % 2 != 0 && x <= -3 && y >= -x) return Z2();
    return none();
}

inline IntVec expected_burnside(int x, int y) {
    if (x == 0 && y == 0) return AQ();
    if (x == 0) return Zg();
    if (x % 2 == 0 && y == -x) return Zg();
    if (x % 2 == 0 && x >= 2 && y < -x) return Z2();
    if (x % 2 != 0 && x <= -3 && y >= -x) return Z2();
    return none();
}

inline IntVec expected_constant_f2(int x, int y) {
    if (x >= 0 && y <= -x) return Z2();
    if (x <= -2 && y >= -x) return Z2();
    return none();
}

inline IntVec expected_norm_f2(int x, int y) {
    if (x == 0 && y == 0) return Z4();
    if (x == 0) return Z2();
    if (x >= 2 && y <= -x) return Z2();
    if (x <= -2 && y >= -x) return Z2();
    return none();
}

inline IntVec expected_twisted_z(int x, int y) {
    if (x % 2 != 0 && y == -x) return Zg();
    if (x == 1 && y <= -2) return Z2();
    if (x % 2 != 0 && x >= 3 && y < -x) return Z2();
    if (x % 2 == 0 && x <= -2 && y >= -x) return Z2();
    return none();
}

inline Pattern expected_pattern(const std::string& name) {
    if (name == "constant-z") return expected_constant_z;
    if (name == "burnside") return expected_burnside;
    if (name == "constant-f2") return expected_constant_f2;
    if (name == "norm-f2") return expected_norm_f2;
    if (name == "twisted-z") return expected_twisted_z;
    return [](int, int) { return none(); };  // zero functor
}

// Degrees where the fixture table disagrees with the pattern (empty = match).
inline std::vector<Degree> pattern_mismatches(const MackeyFunctor& m, const Pattern& p,
                                              const Window& w) {
    std::vector<Degree> bad;
    Table t = table(m, w);
    for (const Degree& d : w.degrees())
        if (t.at(d).group().factors != p(d.x, d.y)) bad.push_back(d);
    return bad;
}

struct TestRng {
    std::mt19937_64 eng;
    explicit TestRng(std::uint64_t seed) : eng(seed) {}
    long below(long n) { return static_cast<long>(eng() % static_cast<std::uint64_t>(n)); }
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }
};

inline Mat random_matrix(TestRng& rng, std::size_t rows, std::size_t cols, long lo,
                         long hi) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.range(lo, hi);
    return m;
}

// Random unimodular matrix as a product of elementary operations.
inline Mat random_unimodular(TestRng& rng, std::size_t n, int ops = 12) {
    Mat u = Mat::identity(n);
    for (int k = 0; k < ops && n > 1; ++k) {
        std::size_t i = rng.below(n), j = rng.below(n);
        if (i == j) continue;
        switch (rng.below(3)) {
            case 0: u.add_row(i, j, Int(rng.range(-2, 2))); break;
            case 1: u.swap_rows(i, j); break;
            default: u.negate_row(i); break;
        }
    }
    return u;
}

// A small zoo of Z[Q]-modules for property tests.
inline std::vector<ZQModule> module_zoo() {
    std::vector<ZQModule> zoo;
    for (long d : {0L, 2L, 3L, 4L, 5L, 6L, 8L, 9L, 16L}) {
        FgAbGroup g = d == 0 ? FgAbGroup::free(1) : FgAbGroup::cyclic(d);
        zoo.push_back(ZQModule::trivial(g));
        zoo.push_back(ZQModule::sign(g));
        zoo.push_back(ZQModule::swap_double(g));
    }
    zoo.push_back(direct_sum_modules(ZQModule::trivial(FgAbGroup::free(1)),
                                     ZQModule::sign(FgAbGroup::cyclic(4))));
    zoo.push_back(direct_sum_modules(ZQModule::swap_double(FgAbGroup::cyclic(4)),
                                     ZQModule::sign(FgAbGroup::free(1))));
    return zoo;
}

}  // namespace emq::testing
