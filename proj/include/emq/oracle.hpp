#pragma once

// Independent brute-force recomputation of every coefficient group from the
// cellular chain complex of a representation sphere. Deliberately shares
// nothing with tate_corners.hpp / coefficients.hpp beyond the abelian-group
// substrate, so agreement between the two paths is meaningful.

#include "emq/coefficients.hpp"

#include <mutex>

namespace emq {

struct SphereComplex {
    int twist = 0;          // k >= 1
    bool cochain = true;    // cochain for y > 0, chain for y < 0
    std::vector<FgAbGroup> terms;  // C^0..C^k resp. C_0..C_k
    std::vector<Hom> diffs;        // cochain: d^i: C^i -> C^{i+1}; chain: d_i: C_i -> C_{i-1}

    // consecutive composites must vanish
    bool is_complex() const {
        for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
            const Hom& first = cochain ? diffs[i] : diffs[i + 1];
            const Hom& second = cochain ? diffs[i + 1] : diffs[i];
            if (!second.compose(first).is_zero_map()) return false;
        }
        return true;
    }
};

// Cellular complex of S^{yσ}: one fixed cell, then a free cell in each of
// the next |y| dimensions. Cochain differentials are res, 1-γ, 1+γ, ...;
// chain differentials are tr, 1-γ, 1+γ, ...
inline SphereComplex sphere_complex(const MackeyFunctor& m, int y) {
    if (y == 0)
        throw std::invalid_argument("sphere_complex: y = 0 is the defining column");
    SphereComplex c;
    c.twist = y > 0 ? y : -y;
    c.cochain = y > 0;
    Hom id = Hom::identity(m.v);
    Hom gamma = m.gamma_hom();
    c.terms.push_back(m.fixed);
    for (int i = 1; i <= c.twist; ++i) c.terms.push_back(m.v);
    if (c.cochain) {
        c.diffs.push_back(m.res());
        for (int i = 1; i < c.twist; ++i)
            c.diffs.push_back(i % 2 == 1 ? id - gamma : id + gamma);
    } else {
        c.diffs.push_back(m.tr());
        for (int i = 2; i <= c.twist; ++i)
            c.diffs.push_back(i % 2 == 0 ? id - gamma : id + gamma);
    }
    return c;
}

namespace oracle_detail {
// Pinned homology piece of a sphere complex at position j (0..k), with the
// ambient term so truncation maps can be induced.
inline SubQuotient complex_piece(const SphereComplex& c, int j) {
    int k = c.twist;
    if (j < 0 || j > k) return SubQuotient::zero_in(FgAbGroup::trivial());
    if (c.cochain) {
        // H^j = ker(d^j)/im(d^{j-1}), with d^k leaving the complex = 0
        if (j == 0) return sub_of_kernel(c.diffs[0]);
        if (j == k) return quotient_of(c.terms[k], {c.diffs[k - 1].matrix()});
        return subquotient(c.diffs[j], c.diffs[j - 1]);
    }
    // H_j = ker(d_j)/im(d_{j+1}), with d_0 = 0
    if (j == 0) return quotient_of(c.terms[0], {c.diffs[0].matrix()});
    if (j == k) return sub_of_kernel(c.diffs[k - 1]);
    return subquotient(c.diffs[j - 1], c.diffs[j]);
}
}  // namespace oracle_detail

inline SubQuotient oracle_piece(const MackeyFunctor& m, Degree d) {
    if (d.y == 0) {
        if (d.x == 0) return SubQuotient::whole(m.fixed);
        return SubQuotient::zero_in(m.fixed);
    }
    SphereComplex c = sphere_complex(m, d.y);
    int j = d.y > 0 ? -d.x : d.x;
    if (j < 0 || j > c.twist)
        return SubQuotient::zero_in(j == 0 ? m.fixed : m.v);
    return oracle_detail::complex_piece(c, j);
}

inline FgAbGroup oracle_coefficient(const MackeyFunctor& m, Degree d) {
    return oracle_piece(m, d).group;
}

// Induced map on homology of the skeletal truncation; reproduces the action
// of a independently of the closed forms.
struct OracleAction {
    FgAbGroup source, target;
    Hom map;
    MapClass classification;
};

inline OracleAction a_action_oracle(const MackeyFunctor& m, Degree d) {
    Degree t{d.x, d.y - 1};
    SubQuotient S = oracle_piece(m, d);
    SubQuotient T = oracle_piece(m, t);
    auto zero = [&]() {
        Hom z = Hom::zero(S.group, T.group);
        return OracleAction{S.group, T.group, z, classify(z)};
    };
    if (S.group.is_trivial() || T.group.is_trivial()) return zero();
    Hom amb = [&]() -> Hom {
        if (d.y >= 2 || d.y <= -1) {
            // both computed from sphere complexes sharing the term at this spot
            return Hom::identity(S.ambient);
        }
        if (d.y == 1) return Hom::identity(m.fixed);  // ker(res) -> M(Q/Q)
        return Hom::identity(m.fixed);                // M(Q/Q) -> coker(tr)
    }();
    Hom map = induced(amb, S, T);
    return {S.group, T.group, map, classify(map)};
}

// ---------------------------------------------------------------------------
// Cross-check of the closed forms against the oracle.

struct Mismatch {
    Degree degree;
    std::string oracle_value;
    std::string closed_form_value;
    std::string what;  // "group" or "a-action"
};

struct CrossCheckReport {
    std::vector<Mismatch> mismatches;
    std::size_t degrees_checked = 0;
    bool ok() const { return mismatches.empty(); }
    std::string to_string() const {
        std::string s;
        for (const auto& mm : mismatches)
            s += mm.what + " mismatch at " + mm.degree.to_string() + ": oracle " +
                 mm.oracle_value + " vs closed form " + mm.closed_form_value + "\n";
        return s;
    }
};

inline CrossCheckReport cross_check(const MackeyFunctor& m, const Window& w,
                                    bool check_a_action = true) {
    CrossCheckReport rep;
    auto degs = w.degrees();
    rep.degrees_checked = degs.size();
    std::mutex mu;
    parallel_for(degs.size(), [&](std::size_t i) {
        Degree d = degs[i];
        FgAbGroup oracle = oracle_coefficient(m, d);
        FgAbGroup closed = coefficient(m, d).group();
        std::vector<Mismatch> local;
        if (!are_isomorphic(oracle, closed))
            local.push_back({d, oracle.to_string(), closed.to_string(), "group"});
        if (check_a_action) {
            OracleAction oa = a_action_oracle(m, d);
            ActionMap am = a_action(m, d);
            // compare presentation-independent data: kernel and cokernel types
            FgAbGroup ok = kernel(oa.map).group, ck = kernel(am.map).group;
            FgAbGroup oc = cokernel(oa.map).group, cc = cokernel(am.map).group;
            if (!are_isomorphic(ok, ck) || !are_isomorphic(oc, cc))
                local.push_back({d,
                                 "ker " + ok.to_string() + ", coker " + oc.to_string(),
                                 "ker " + ck.to_string() + ", coker " + cc.to_string(),
                                 "a-action"});
        }
        if (!local.empty()) {
            std::lock_guard<std::mutex> lk(mu);
            for (auto& x : local) rep.mismatches.push_back(std::move(x));
        }
    });
    // deterministic report order
    std::sort(rep.mismatches.begin(), rep.mismatches.end(),
              [](const Mismatch& a, const Mismatch& b) {
                  if (a.degree.x != b.degree.x) return a.degree.x < b.degree.x;
                  if (a.degree.y != b.degree.y) return a.degree.y < b.degree.y;
                  return a.what < b.what;
              });
    return rep;
}

}  // namespace emq
