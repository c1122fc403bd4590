#pragma once

// Exact arithmetic for finitely generated abelian groups: integer matrices,
// Smith normal form, groups presented by relation matrices, homomorphisms,
// kernels/cokernels and subquotients with pinned generator bases.
//
// Conventions (used across the whole library):
//   - maps act on column vectors, composition g∘f has matrix G*F;
//   - a group presentation is Z^n modulo the column span of a relation matrix;
//   - every FgAbGroup is kept in canonical form: invariant factors
//     d1 | d2 | ... | dk, no factor equal to 1, factor 0 meaning Z.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace emq {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

// ---------------------------------------------------------------------------
// Dense integer matrix, row-major.

class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat from_rows(std::vector<IntVec> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows[0].size() : 0;
        Mat m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat scalar(std::size_t n, const Int& c) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
        return m;
    }
    static Mat from_column(const IntVec& v) {
        Mat m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != 0) return false;
        return true;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("mat mul shape");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    if (o(k, j) != 0) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("mat add shape");
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("mat sub shape");
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }
    Mat operator-() const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
        return r;
    }
    Mat scaled(const Int& c) const {
        Mat r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = c * data_[i];
        return r;
    }

    IntVec apply(const IntVec& x) const {
        if (x.size() != cols_) throw std::invalid_argument("mat apply shape");
        IntVec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && x[j] != 0) r[i] += (*this)(i, j) * x[j];
        return r;
    }

    IntVec column(std::size_t j) const {
        IntVec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_column(std::size_t j, const IntVec& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    // [A | B] side by side.
    static Mat hcat(const Mat& a, const Mat& b) {
        if (a.rows() != b.rows()) throw std::invalid_argument("hcat shape");
        Mat r(a.rows(), a.cols() + b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
        }
        return r;
    }

    Mat take_columns(std::size_t first, std::size_t count) const {
        Mat r(rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row a += c * row b
    void add_row(std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += c * (*this)(b, j);
    }
    // col a += c * col b
    void add_col(std::size_t a, std::size_t b, const Int& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += c * (*this)(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
    }
    void negate_col(std::size_t a) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
    }

    Int determinant() const {  // Bareiss, exact
        if (rows_ != cols_) throw std::invalid_argument("det of non-square");
        std::size_t n = rows_;
        if (n == 0) return 1;
        Mat a = *this;
        Int sign = 1, prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a(p, k) == 0) ++p;
                if (p == n) return 0;
                a.swap_rows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            prev = a(k, k);
        }
        return sign * a(n - 1, n - 1);
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    IntVec data_;
};

// ---------------------------------------------------------------------------
// Smith normal form: U*A*W = D with U, W unimodular, D diagonal with
// nonnegative entries each dividing the next. Pivots pick the minimal
// absolute value to limit coefficient growth.

struct Snf {
    Mat U, Uinv, D, W;
};

inline Snf smith_normal_form(const Mat& A) {
    const std::size_t m = A.rows(), n = A.cols();
    Snf s{Mat::identity(m), Mat::identity(m), A, Mat::identity(n)};
    Mat& D = s.D;

    auto row_op = [&](std::size_t a, std::size_t b, const Int& c) {
        D.add_row(a, b, c);
        s.U.add_row(a, b, c);
        s.Uinv.add_col(b, a, -c);
    };
    auto col_op = [&](std::size_t a, std::size_t b, const Int& c) {
        D.add_col(a, b, c);
        s.W.add_col(a, b, c);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        D.swap_rows(a, b);
        s.U.swap_rows(a, b);
        s.Uinv.swap_cols(a, b);
    };
    auto col_swap = [&](std::size_t a, std::size_t b) {
        D.swap_cols(a, b);
        s.W.swap_cols(a, b);
    };

    const std::size_t t_max = std::min(m, n);
    for (std::size_t t = 0; t < t_max; ++t) {
        for (;;) {
            // minimal |entry| pivot in the remaining block
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D(i, j) != 0 && (best == 0 || int_abs(D(i, j)) < best)) {
                        best = int_abs(D(i, j));
                        pi = i;
                        pj = j;
                    }
            if (best == 0) goto block_done;
            if (pi != t) row_swap(t, pi);
            if (pj != t) col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
                if (D(i, t) != 0) {
                    row_op(i, t, -(D(i, t) / D(t, t)));
                    if (D(i, t) != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (D(t, j) != 0) {
                    col_op(j, t, -(D(t, j) / D(t, t)));
                    if (D(t, j) != 0) clean = false;
                }
            if (!clean) continue;

            // force divisibility D(t,t) | D(i,j) for the rest of the block
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n && divides_all; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        row_op(t, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
    }
block_done:
    for (std::size_t t = 0; t < t_max; ++t)
        if (D(t, t) < 0) {
            D.negate_row(t);
            s.U.negate_row(t);
            s.Uinv.negate_col(t);
        }
    return s;
}

// Solve A x = b exactly over Z; nullopt when no integral solution exists.
inline std::optional<IntVec> solve(const Mat& A, const IntVec& b) {
    Snf s = smith_normal_form(A);
    IntVec ub = s.U.apply(b);
    IntVec y(A.cols());
    const std::size_t t_max = std::min(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (i < t_max && s.D(i, i) != 0) {
            if (ub[i] % s.D(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / s.D(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.W.apply(y);
}

// Basis of { x : A x = 0 } as matrix columns.
inline Mat nullspace(const Mat& A) {
    Snf s = smith_normal_form(A);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < A.cols(); ++j)
        if (j >= A.rows() || s.D(j, j) == 0) free_cols.push_back(j);
    Mat r(A.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k)
        for (std::size_t i = 0; i < A.cols(); ++i) r(i, k) = s.W(i, free_cols[k]);
    return r;
}

// Solve A x = b modulo the column span of R (i.e. A x + R y = b).
inline std::optional<IntVec> solve_mod(const Mat& A, const Mat& R, const IntVec& b) {
    auto z = solve(Mat::hcat(A, R), b);
    if (!z) return std::nullopt;
    return IntVec(z->begin(), z->begin() + A.cols());
}

// Column Hermite form: an echelon basis of the column lattice, zero columns
// dropped, pivots positive, entries to the right of a pivot reduced mod it.
inline Mat column_hnf(Mat a) {
    std::size_t row = 0, col = 0;
    while (row < a.rows() && col < a.cols()) {
        for (;;) {
            std::size_t best = col;
            Int bv = 0;
            for (std::size_t j = col; j < a.cols(); ++j)
                if (a(row, j) != 0 && (bv == 0 || int_abs(a(row, j)) < bv)) {
                    bv = int_abs(a(row, j));
                    best = j;
                }
            if (bv == 0) break;
            if (best != col) a.swap_cols(col, best);
            bool clean = true;
            for (std::size_t j = col + 1; j < a.cols(); ++j)
                if (a(row, j) != 0) {
                    a.add_col(j, col, -(a(row, j) / a(row, col)));
                    if (a(row, j) != 0) clean = false;
                }
            if (clean) break;
        }
        if (a(row, col) != 0) {
            if (a(row, col) < 0) a.negate_col(col);
            for (std::size_t j = 0; j < col; ++j) {
                Int q = a(row, j) / a(row, col);
                if (a(row, j) - q * a(row, col) < 0) q -= 1;
                if (q != 0) a.add_col(j, col, -q);
            }
            ++col;
        }
        ++row;
    }
    Mat out(a.rows(), col);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < col; ++j) out(i, j) = a(i, j);
    return out;
}

// ---------------------------------------------------------------------------
// Finitely generated abelian group in canonical form.

struct FgAbGroup {
    IntVec factors;  // d1 | d2 | ... | dk, no unit factors, 0 = Z

    std::size_t rank() const { return factors.size(); }
    bool is_trivial() const { return factors.empty(); }
    std::size_t free_rank() const {
        return std::count(factors.begin(), factors.end(), Int(0));
    }
    bool is_finite() const { return free_rank() == 0; }
    Int order() const {  // 0 for infinite
        Int o = 1;
        for (const auto& f : factors) {
            if (f == 0) return 0;
            o *= f;
        }
        return o;
    }
    Mat relations() const {
        Mat r(rank(), rank());
        for (std::size_t i = 0; i < rank(); ++i) r(i, i) = factors[i];
        return r;
    }
    // Reduce a coordinate vector to the canonical representative.
    IntVec reduce(IntVec x) const {
        if (x.size() != rank()) throw std::invalid_argument("coord size");
        for (std::size_t i = 0; i < rank(); ++i)
            if (factors[i] != 0) {
                x[i] %= factors[i];
                if (x[i] < 0) x[i] += factors[i];
            }
        return x;
    }
    bool operator==(const FgAbGroup& o) const { return factors == o.factors; }

    static FgAbGroup trivial() { return {}; }
    static FgAbGroup free(std::size_t n) { return {IntVec(n, Int(0))}; }
    static FgAbGroup cyclic(const Int& d) {
        if (d == 1) return trivial();
        return {IntVec{d}};
    }
    static FgAbGroup of(IntVec fs) { return {std::move(fs)}; }

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += " + ";
            s += factors[i] == 0 ? "Z" : "Z/" + factors[i].str();
        }
        return s;
    }
};

// Complete invariant: canonical factor lists coincide.
inline bool are_isomorphic(const FgAbGroup& a, const FgAbGroup& b) { return a == b; }

// Canonicalization of a presentation Z^n / colspan(rels), with the
// transition maps between raw and canonical coordinates.
struct Canonicalized {
    FgAbGroup group;
    Mat to_can;    // group.rank x n
    Mat from_can;  // n x group.rank
};

inline Canonicalized canonicalize_presentation(std::size_t n_gens, const Mat& rels) {
    if (rels.rows() != n_gens) throw std::invalid_argument("presentation shape");
    Snf s = smith_normal_form(rels);
    // coordinates c = U x; relation i is D(i,i)*c_i = 0 (0 past the diagonal)
    IntVec fs;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n_gens; ++i) {
        Int d = (i < std::min(rels.rows(), rels.cols())) ? s.D(i, i) : Int(0);
        if (d == 1) continue;
        keep.push_back(i);
        fs.push_back(d);
    }
    // reorder: finite factors ascending (SNF already ascending), zeros last
    std::vector<std::size_t> order(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) order[i] = i;
    std::stable_partition(order.begin(), order.end(),
                          [&](std::size_t i) { return fs[i] != 0; });
    Canonicalized c;
    c.to_can = Mat(keep.size(), n_gens);
    c.from_can = Mat(n_gens, keep.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        std::size_t i = keep[order[r]];
        c.group.factors.push_back(fs[order[r]]);
        for (std::size_t j = 0; j < n_gens; ++j) {
            c.to_can(r, j) = s.U(i, j);
            c.from_can(j, r) = s.Uinv(j, i);
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Homomorphisms between canonical groups.

class Hom {
  public:
    Hom() = default;
    Hom(FgAbGroup dom, FgAbGroup cod, Mat matrix, bool check = true)
        : dom_(std::move(dom)), cod_(std::move(cod)), a_(std::move(matrix)) {
        if (a_.rows() != cod_.rank() || a_.cols() != dom_.rank())
            throw std::invalid_argument("hom matrix shape");
        reduce_entries();
        if (check && !well_defined())
            throw std::invalid_argument("ill-defined homomorphism: matrix does not "
                                        "respect the domain relations");
    }

    static Hom identity(const FgAbGroup& g) {
        return Hom(g, g, Mat::identity(g.rank()), false);
    }
    static Hom zero(const FgAbGroup& dom, const FgAbGroup& cod) {
        return Hom(dom, cod, Mat(cod.rank(), dom.rank()), false);
    }
    static Hom scalar(const FgAbGroup& g, const Int& c) {
        return Hom(g, g, Mat::scalar(g.rank(), c), false);
    }

    const FgAbGroup& domain() const { return dom_; }
    const FgAbGroup& codomain() const { return cod_; }
    const Mat& matrix() const { return a_; }

    bool well_defined() const {
        // each domain relation d_j * e_j must map into the codomain relations
        for (std::size_t j = 0; j < dom_.rank(); ++j) {
            const Int& d = dom_.factors[j];
            if (d == 0) continue;
            for (std::size_t i = 0; i < cod_.rank(); ++i) {
                const Int& f = cod_.factors[i];
                Int v = d * a_(i, j);
                if (f == 0 ? v != 0 : v % f != 0) return false;
            }
        }
        return true;
    }

    IntVec apply(const IntVec& x) const { return cod_.reduce(a_.apply(x)); }

    Hom compose(const Hom& f) const {  // (*this) ∘ f
        if (!(f.cod_ == dom_)) throw std::invalid_argument("compose mismatch");
        return Hom(f.dom_, cod_, a_ * f.a_, false);
    }
    Hom operator+(const Hom& o) const {
        require_parallel(o);
        return Hom(dom_, cod_, a_ + o.a_, false);
    }
    Hom operator-(const Hom& o) const {
        require_parallel(o);
        return Hom(dom_, cod_, a_ - o.a_, false);
    }
    Hom scaled(const Int& c) const { return Hom(dom_, cod_, a_.scaled(c), false); }

    bool is_zero_map() const {
        for (std::size_t j = 0; j < dom_.rank(); ++j)
            for (std::size_t i = 0; i < cod_.rank(); ++i) {
                const Int& f = cod_.factors[i];
                if (f == 0 ? a_(i, j) != 0 : a_(i, j) % f != 0) return false;
            }
        return true;
    }
    bool equals(const Hom& o) const {
        if (!(dom_ == o.dom_) || !(cod_ == o.cod_)) return false;
        return (*this - o).is_zero_map();
    }

  private:
    void require_parallel(const Hom& o) const {
        if (!(dom_ == o.dom_) || !(cod_ == o.cod_))
            throw std::invalid_argument("hom arithmetic mismatch");
    }
    void reduce_entries() {
        for (std::size_t i = 0; i < cod_.rank(); ++i) {
            const Int& f = cod_.factors[i];
            if (f == 0) continue;
            for (std::size_t j = 0; j < dom_.rank(); ++j) {
                a_(i, j) %= f;
                if (a_(i, j) < 0) a_(i, j) += f;
            }
        }
    }

    FgAbGroup dom_, cod_;
    Mat a_;
};

struct KernelResult {
    FgAbGroup group;
    Hom inclusion;  // group -> domain of f
};
struct CokernelResult {
    FgAbGroup group;
    Hom projection;  // codomain of f -> group
};

// Kernel of f: G -> H as a canonical group plus its inclusion.
inline KernelResult kernel(const Hom& f) {
    const FgAbGroup& G = f.domain();
    const FgAbGroup& H = f.codomain();
    // lattice L = { x in Z^|G| : f(x) lies in the relation span of H }
    Mat big = nullspace(Mat::hcat(f.matrix(), H.relations()));
    Mat span(G.rank(), big.cols());
    for (std::size_t i = 0; i < G.rank(); ++i)
        for (std::size_t j = 0; j < big.cols(); ++j) span(i, j) = big(i, j);
    // K = L / relations(G); present in terms of the spanning columns. The
    // spanning columns may be dependent, so their null relations count too.
    Mat rel_in_span(span.cols(), G.rank());
    for (std::size_t j = 0; j < G.rank(); ++j) {
        IntVec col(G.rank());
        col[j] = G.factors[j];
        auto z = solve(span, col);
        if (!z) throw std::logic_error("kernel: relations not in lattice");
        for (std::size_t i = 0; i < span.cols(); ++i) rel_in_span(i, j) = (*z)[i];
    }
    Canonicalized c = canonicalize_presentation(
        span.cols(), Mat::hcat(rel_in_span, nullspace(span)));
    KernelResult r;
    r.group = c.group;
    r.inclusion = Hom(c.group, G, span * c.from_can, false);
    return r;
}

// Cokernel of f: G -> H.
inline CokernelResult cokernel(const Hom& f) {
    const FgAbGroup& H = f.codomain();
    Canonicalized c =
        canonicalize_presentation(H.rank(), Mat::hcat(f.matrix(), H.relations()));
    return {c.group, Hom(H, c.group, c.to_can, false)};
}

// Factor f through an injective g: given g: S -> B injective and f: A -> B with
// image inside g(S), return h: A -> S with g∘h = f.
inline Hom solve_through(const Hom& g, const Hom& f) {
    if (!(g.codomain() == f.codomain())) throw std::invalid_argument("solve_through");
    Mat h(g.domain().rank(), f.domain().rank());
    for (std::size_t j = 0; j < f.domain().rank(); ++j) {
        auto s = solve_mod(g.matrix(), f.codomain().relations(), f.matrix().column(j));
        if (!s) throw std::invalid_argument("solve_through: image not contained");
        h.set_column(j, *s);
    }
    return Hom(f.domain(), g.domain(), std::move(h));
}

// Homology at position i of a chain complex given by differentials
// d[0]: C_1 -> C_0, d[1]: C_2 -> C_1, ... Terms are implied by the maps.
// Positions run 0..d.size(); a nonzero composite is rejected with its index.
inline FgAbGroup homology_at(const std::vector<Hom>& d, std::size_t i) {
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
        if (!(d[k].domain() == d[k + 1].codomain()))
            throw std::invalid_argument("homology_at: maps not composable at " +
                                        std::to_string(k));
        if (!d[k].compose(d[k + 1]).is_zero_map())
            throw std::invalid_argument("homology_at: nonzero composite at index " +
                                        std::to_string(k));
    }
    if (i > d.size()) throw std::invalid_argument("homology_at: bad position");
    // boundary cases: C_0 has no outgoing map, C_n no incoming
    if (i == 0) {
        const FgAbGroup& c0 = d.empty() ? FgAbGroup::trivial() : d[0].codomain();
        if (d.empty()) return c0;
        return cokernel(d[0]).group;
    }
    KernelResult k = kernel(d[i - 1]);
    if (i == d.size()) return k.group;
    // ker(d_{i-1}) / im(d_i)
    Hom into_k = solve_through(k.inclusion, d[i]);
    return cokernel(into_k).group;
}

// ---------------------------------------------------------------------------
// Subquotient of an ambient group, with pinned coordinates: a lattice K
// inside the ambient together with a quotient piece of K. Every graded value
// in the calculator is stored this way so induced maps have canonical bases.

struct SubQuotient {
    FgAbGroup ambient;
    FgAbGroup lattice;  // K
    FgAbGroup group;    // K / (extra relations)
    Hom incl;           // K -> ambient (injective on the group level)
    Hom proj;           // K -> group (surjective)
    Hom sect;           // group -> K, proj∘sect = id

    bool is_zero() const { return group.is_trivial(); }

    // piece coords -> ambient coords
    IntVec rep(const IntVec& x) const { return incl.apply(sect.apply(x)); }
    // ambient coords -> piece coords (element must lie in the lattice)
    IntVec coords_of(const IntVec& v) const {
        auto s = solve_mod(incl.matrix(), ambient.relations(), v);
        if (!s) throw std::invalid_argument("coords_of: element outside lattice");
        return proj.apply(lattice.reduce(*s));
    }

    static SubQuotient whole(const FgAbGroup& g) {
        SubQuotient s;
        s.ambient = s.lattice = s.group = g;
        s.incl = s.proj = s.sect = Hom::identity(g);
        return s;
    }
    static SubQuotient zero_in(const FgAbGroup& g) {
        SubQuotient s;
        s.ambient = g;
        s.lattice = s.group = FgAbGroup::trivial();
        s.incl = Hom::zero(s.lattice, g);
        s.proj = Hom::identity(s.group);
        s.sect = Hom::identity(s.group);
        return s;
    }
};

// Section of a surjection q (choice of preimages for each generator).
inline Hom section_of(const Hom& q) {
    Mat s(q.domain().rank(), q.codomain().rank());
    for (std::size_t j = 0; j < q.codomain().rank(); ++j) {
        IntVec e(q.codomain().rank());
        e[j] = 1;
        auto x = solve_mod(q.matrix(), q.codomain().relations(), e);
        if (!x) throw std::logic_error("section_of: map not surjective");
        s.set_column(j, *x);
    }
    return Hom(q.codomain(), q.domain(), std::move(s), false);
}

// K = ker(f), no further quotient.
inline SubQuotient sub_of_kernel(const Hom& f) {
    KernelResult k = kernel(f);
    SubQuotient s;
    s.ambient = f.domain();
    s.lattice = s.group = k.group;
    s.incl = k.inclusion;
    s.proj = Hom::identity(k.group);
    s.sect = Hom::identity(k.group);
    return s;
}

// ambient / (columns of extra + images of homs), whole-lattice quotient.
inline SubQuotient quotient_of(const FgAbGroup& g, const std::vector<Mat>& images) {
    Mat rels = g.relations();
    for (const auto& m : images) rels = Mat::hcat(rels, m);
    Canonicalized c = canonicalize_presentation(g.rank(), rels);
    SubQuotient s;
    s.ambient = s.lattice = g;
    s.group = c.group;
    s.incl = Hom::identity(g);
    s.proj = Hom(g, c.group, c.to_can, false);
    s.sect = Hom(c.group, g, c.from_can, false);
    return s;
}

// ker(f) / (image of g), where im(g) must land inside ker(f).
inline SubQuotient subquotient(const Hom& f, const Hom& g) {
    KernelResult k = kernel(f);
    Hom g_in_k = solve_through(k.inclusion, g);
    Canonicalized c = canonicalize_presentation(
        k.group.rank(), Mat::hcat(k.group.relations(), g_in_k.matrix()));
    SubQuotient s;
    s.ambient = f.domain();
    s.lattice = k.group;
    s.group = c.group;
    s.incl = k.inclusion;
    s.proj = Hom(k.group, c.group, c.to_can, false);
    s.sect = Hom(c.group, k.group, c.from_can, false);
    return s;
}

// Map S.group -> T.group induced by an ambient map f. The image of the
// S-lattice must land in the T-lattice and the result must be well-defined;
// both are checked and violations throw.
inline Hom induced(const Hom& f, const SubQuotient& S, const SubQuotient& T) {
    if (!(f.domain() == S.ambient) || !(f.codomain() == T.ambient))
        throw std::invalid_argument("induced: ambient mismatch");
    Mat m(T.group.rank(), S.group.rank());
    for (std::size_t j = 0; j < S.group.rank(); ++j) {
        IntVec e(S.group.rank());
        e[j] = 1;
        m.set_column(j, T.coords_of(f.apply(S.rep(e))));
    }
    return Hom(S.group, T.group, std::move(m));  // checked
}

// Classification of a map by exactness of its two ends.
enum class MapClass { mono, epi, iso, other };

inline bool is_injective(const Hom& f) { return kernel(f).group.is_trivial(); }
inline bool is_surjective(const Hom& f) { return cokernel(f).group.is_trivial(); }

inline MapClass classify(const Hom& f) {
    bool m = is_injective(f), e = is_surjective(f);
    if (m && e) return MapClass::iso;
    if (m) return MapClass::mono;
    if (e) return MapClass::epi;
    return MapClass::other;
}

inline std::string to_string(MapClass c) {
    switch (c) {
        case MapClass::mono: return "mono";
        case MapClass::epi: return "epi";
        case MapClass::iso: return "iso";
        default: return "other";
    }
}

// Direct sum in canonical form with the four structure maps.
struct GroupSum {
    FgAbGroup group;
    Hom incl_a, incl_b;  // A -> A⊕B, B -> A⊕B
    Hom proj_a, proj_b;  // A⊕B -> A, A⊕B -> B
};

inline GroupSum direct_sum_groups(const FgAbGroup& a, const FgAbGroup& b) {
    std::size_t n = a.rank() + b.rank();
    Mat rels(n, n);
    for (std::size_t i = 0; i < a.rank(); ++i) rels(i, i) = a.factors[i];
    for (std::size_t i = 0; i < b.rank(); ++i)
        rels(a.rank() + i, a.rank() + i) = b.factors[i];
    Canonicalized c = canonicalize_presentation(n, rels);
    GroupSum s;
    s.group = c.group;
    Mat ia(n, a.rank()), ib(n, b.rank()), pa(a.rank(), n), pb(b.rank(), n);
    for (std::size_t i = 0; i < a.rank(); ++i) {
        ia(i, i) = 1;
        pa(i, i) = 1;
    }
    for (std::size_t i = 0; i < b.rank(); ++i) {
        ib(a.rank() + i, i) = 1;
        pb(i, a.rank() + i) = 1;
    }
    s.incl_a = Hom(a, c.group, c.to_can * ia, false);
    s.incl_b = Hom(b, c.group, c.to_can * ib, false);
    s.proj_a = Hom(c.group, a, pa * c.from_can, false);
    s.proj_b = Hom(c.group, b, pb * c.from_can, false);
    return s;
}

// Enumerate all elements of a finite group (test helper lives here so both
// suites can use it; throws on infinite input).
inline std::vector<IntVec> all_elements(const FgAbGroup& g) {
    if (!g.is_finite()) throw std::invalid_argument("all_elements: infinite group");
    std::vector<IntVec> out{IntVec(g.rank())};
    for (std::size_t i = 0; i < g.rank(); ++i) {
        std::vector<IntVec> next;
        for (Int v = 0; v < g.factors[i]; ++v)
            for (auto e : out) {
                e[i] = v;
                next.push_back(e);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace emq
