// Integer lattices carrying a symmetric trilinear (cubic) form and a linear form.
//
// A cubic form is stored by its trilinear values F(e_i, e_j, e_k) on sorted index
// triples i <= j <= k; cup products of integral classes produce exactly these
// numbers, so no denominators ever appear. The diagonal polynomial F(w, w, w) is
// obtained by evaluation.
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spin6/integer.hpp"

namespace spin6 {

namespace detail {

// Shared storage for vectors and covectors. The tag keeps the two from mixing.
template <typename Tag>
class IntTuple {
  public:
    IntTuple() = default;
    explicit IntTuple(std::size_t n) : values_(n) {}
    explicit IntTuple(std::vector<Integer> values) : values_(std::move(values)) {}
    IntTuple(std::initializer_list<Integer> values) : values_(values) {}

    static IntTuple unit(std::size_t n, std::size_t i) {
        IntTuple t(n);
        t.values_.at(i) = 1;
        return t;
    }

    std::size_t size() const noexcept { return values_.size(); }
    const Integer& operator[](std::size_t i) const { return values_[i]; }
    Integer& operator[](std::size_t i) { return values_[i]; }
    const std::vector<Integer>& values() const noexcept { return values_; }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    bool is_zero() const {
        return std::all_of(values_.begin(), values_.end(), [](const Integer& v) { return v == 0; });
    }

    Integer content() const { return spin6::content(values_); }
    bool is_primitive() const { return content() == 1; }

    bool all_even() const {
        return std::all_of(values_.begin(), values_.end(), [](const Integer& v) { return is_even(v); });
    }

    /// Flips the sign so that the first nonzero coordinate is positive.
    IntTuple sign_normalized() const {
        for (const auto& v : values_) {
            if (v > 0) return *this;
            if (v < 0) return -*this;
        }
        return *this;
    }

    /// Divides by the content; zero stays zero.
    IntTuple primitive_part() const {
        Integer g = content();
        if (g == 0) return *this;
        IntTuple out(*this);
        for (auto& v : out.values_) v /= g;
        return out;
    }

    IntTuple operator-() const {
        IntTuple out(*this);
        for (auto& v : out.values_) v = -v;
        return out;
    }

    IntTuple& operator+=(const IntTuple& o) {
        require_same_size(o);
        for (std::size_t i = 0; i < size(); ++i) values_[i] += o.values_[i];
        return *this;
    }
    IntTuple& operator-=(const IntTuple& o) {
        require_same_size(o);
        for (std::size_t i = 0; i < size(); ++i) values_[i] -= o.values_[i];
        return *this;
    }
    IntTuple& operator*=(const Integer& s) {
        for (auto& v : values_) v *= s;
        return *this;
    }

    friend IntTuple operator+(IntTuple a, const IntTuple& b) { return a += b; }
    friend IntTuple operator-(IntTuple a, const IntTuple& b) { return a -= b; }
    friend IntTuple operator*(const Integer& s, IntTuple a) { return a *= s; }
    friend IntTuple operator*(IntTuple a, const Integer& s) { return a *= s; }

    friend bool operator==(const IntTuple&, const IntTuple&) = default;
    friend bool operator<(const IntTuple& a, const IntTuple& b) { return a.values_ < b.values_; }

    /// Extends by one trailing coordinate.
    IntTuple appended(Integer last) const {
        IntTuple out(*this);
        out.values_.push_back(std::move(last));
        return out;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < size(); ++i) {
            if (i) s += ",";
            s += values_[i].str();
        }
        return s + ")";
    }

  private:
    void require_same_size(const IntTuple& o) const {
        if (o.size() != size()) throw InvalidArgument("dimension mismatch: " + std::to_string(size()) + " vs " + std::to_string(o.size()));
    }

    std::vector<Integer> values_;
};

struct VectorTag {};
struct CovectorTag {};

}  // namespace detail

/// Element of H^2 in a chosen basis.
using IntVector = detail::IntTuple<detail::VectorTag>;
/// Integer linear form on the lattice, e.g. cup product with p1.
using LinearForm = detail::IntTuple<detail::CovectorTag>;

inline void require_rank(std::size_t expected, std::size_t actual, const char* what) {
    if (expected != actual)
        throw InvalidArgument(std::string("dimension mismatch for ") + what + ": expected " + std::to_string(expected) + ", got " +
                              std::to_string(actual));
}

inline Integer eval_linear(const LinearForm& p, const IntVector& w) {
    require_rank(p.size(), w.size(), "linear form argument");
    Integer acc = 0;
    for (std::size_t i = 0; i < p.size(); ++i) acc += p[i] * w[i];
    return acc;
}

/// Covector with the same coefficients as a vector (dual basis identification).
inline LinearForm as_covector(const IntVector& v) { return LinearForm(v.values()); }
inline IntVector as_vector(const LinearForm& p) { return IntVector(p.values()); }

// ---------------------------------------------------------------------------

using IndexTriple = std::array<std::size_t, 3>;

inline IndexTriple sorted_triple(std::size_t i, std::size_t j, std::size_t k) {
    IndexTriple t{i, j, k};
    std::sort(t.begin(), t.end());
    return t;
}

/// Number of distinct orderings of a sorted triple: 1, 3 or 6.
inline int triple_multiplicity(const IndexTriple& t) {
    if (t[0] == t[2]) return 1;
    if (t[0] == t[1] || t[1] == t[2]) return 3;
    return 6;
}

/// Symmetric trilinear form on Z^n. Only nonzero values on sorted triples are stored.
class CubicForm {
  public:
    CubicForm() = default;
    explicit CubicForm(std::size_t rank) : rank_(rank) {}
    CubicForm(std::size_t rank, std::initializer_list<std::pair<IndexTriple, Integer>> entries) : rank_(rank) {
        for (const auto& [t, v] : entries) set(t[0], t[1], t[2], v);
    }

    std::size_t rank() const noexcept { return rank_; }

    Integer at(std::size_t i, std::size_t j, std::size_t k) const {
        check_index(i, j, k);
        auto it = entries_.find(sorted_triple(i, j, k));
        return it == entries_.end() ? Integer(0) : it->second;
    }

    void set(std::size_t i, std::size_t j, std::size_t k, const Integer& v) {
        check_index(i, j, k);
        auto key = sorted_triple(i, j, k);
        if (v == 0)
            entries_.erase(key);
        else
            entries_[key] = v;
    }

    const std::map<IndexTriple, Integer>& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }

    CubicForm operator-() const {
        CubicForm out(*this);
        for (auto& [t, v] : out.entries_) v = -v;
        return out;
    }

    friend bool operator==(const CubicForm&, const CubicForm&) = default;

  private:
    void check_index(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= rank_ || j >= rank_ || k >= rank_) throw InvalidArgument("cubic form index out of range");
    }

    std::size_t rank_ = 0;
    std::map<IndexTriple, Integer> entries_;
};

/// F(x, y, z) expanded over all orderings of each stored triple.
inline Integer eval_cubic(const CubicForm& F, const IntVector& x, const IntVector& y, const IntVector& z) {
    require_rank(F.rank(), x.size(), "cubic form argument");
    require_rank(F.rank(), y.size(), "cubic form argument");
    require_rank(F.rank(), z.size(), "cubic form argument");
    Integer acc = 0;
    for (const auto& [key, v] : F.entries()) {
        IndexTriple t = key;  // sorted, so next_permutation visits each distinct ordering once
        Integer part = 0;
        do {
            part += x[t[0]] * y[t[1]] * z[t[2]];
        } while (std::next_permutation(t.begin(), t.end()));
        acc += v * part;
    }
    return acc;
}

inline Integer eval_cubic_diag(const CubicForm& F, const IntVector& w) {
    require_rank(F.rank(), w.size(), "cubic form argument");
    Integer acc = 0;
    for (const auto& [t, v] : F.entries()) acc += v * triple_multiplicity(t) * w[t[0]] * w[t[1]] * w[t[2]];
    return acc;
}

/// The linear form y -> F(x, z, y).
inline LinearForm contract2(const CubicForm& F, const IntVector& x, const IntVector& z) {
    LinearForm out(F.rank());
    for (std::size_t k = 0; k < F.rank(); ++k) out[k] = eval_cubic(F, x, z, IntVector::unit(F.rank(), k));
    return out;
}

// ---------------------------------------------------------------------------

/// Dense integer matrix, row-major.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Matrix whose columns are the given vectors.
    static IntMatrix from_columns(std::span<const IntVector> cols) {
        if (cols.empty()) return {};
        IntMatrix m(cols.front().size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            require_rank(m.rows_, cols[j].size(), "matrix column");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector column(std::size_t j) const {
        IntVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    IntVector apply(const IntVector& x) const {
        require_rank(cols_, x.size(), "matrix argument");
        IntVector y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    IntMatrix operator-() const {
        IntMatrix m(*this);
        for (auto& v : m.data_) v = -v;
        return m;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    /// Column-major flattening; used to order candidate matrices.
    std::vector<Integer> column_major() const {
        std::vector<Integer> out;
        out.reserve(data_.size());
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) s += ",";
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += ",";
                s += (*this)(i, j).str();
            }
            s += "]";
        }
        return s + "]";
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Square integer matrix with determinant +1 or -1.
class UnimodularMap {
  public:
    explicit UnimodularMap(IntMatrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw InvalidArgument("unimodular map must be square");
        Integer d = determinant(m_);
        if (d != 1 && d != -1) throw InvalidArgument("matrix is not unimodular (det = " + d.str() + ")");
    }

    static UnimodularMap identity(std::size_t n) { return UnimodularMap(IntMatrix::identity(n)); }

    std::size_t rank() const noexcept { return m_.rows(); }
    const IntMatrix& matrix() const noexcept { return m_; }
    IntVector apply(const IntVector& x) const { return m_.apply(x); }
    Integer det() const { return determinant(m_); }

    /// Exact inverse by Gauss-Jordan elimination with unimodular row operations.
    UnimodularMap inverse() const {
        const std::size_t n = rank();
        IntMatrix a = m_, inv = IntMatrix::identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            // Euclid on the column below the diagonal until a single +-1 pivot remains.
            while (true) {
                std::optional<std::size_t> piv;
                for (std::size_t i = col; i < n; ++i)
                    if (a(i, col) != 0 && (!piv || abs_value(a(i, col)) < abs_value(a(*piv, col)))) piv = i;
                if (!piv) throw InvalidArgument("singular matrix");
                swap_rows(a, inv, col, *piv);
                bool done = true;
                for (std::size_t i = col + 1; i < n; ++i) {
                    if (a(i, col) == 0) continue;
                    Integer q = a(i, col) / a(col, col);
                    add_row(a, inv, i, col, -q);
                    if (a(i, col) != 0) done = false;
                }
                if (done) break;
            }
            if (a(col, col) == -1) {
                for (std::size_t j = 0; j < n; ++j) {
                    a(col, j) = -a(col, j);
                    inv(col, j) = -inv(col, j);
                }
            }
        }
        for (std::size_t col = n; col-- > 0;)
            for (std::size_t i = 0; i < col; ++i)
                if (a(i, col) != 0) add_row(a, inv, i, col, -a(i, col));
        return UnimodularMap(std::move(inv));
    }

    friend UnimodularMap operator*(const UnimodularMap& a, const UnimodularMap& b) { return UnimodularMap(a.m_ * b.m_); }
    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

  private:
    static void swap_rows(IntMatrix& a, IntMatrix& b, std::size_t r, std::size_t s) {
        if (r == s) return;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::swap(a(r, j), a(s, j));
            std::swap(b(r, j), b(s, j));
        }
    }
    static void add_row(IntMatrix& a, IntMatrix& b, std::size_t dst, std::size_t src, const Integer& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            a(dst, j) += q * a(src, j);
            b(dst, j) += q * b(src, j);
        }
    }

    IntMatrix m_;
};

/// F'(x, y, z) = F(Mx, My, Mz).
inline CubicForm pullback(const CubicForm& F, const IntMatrix& M) {
    if (M.rows() != F.rank()) throw InvalidArgument("pullback: matrix rows must equal the form rank");
    const std::size_t n = M.cols();
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(M.column(j));
    CubicForm out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) out.set(i, j, k, eval_cubic(F, cols[i], cols[j], cols[k]));
    return out;
}

/// p'(x) = p(Mx).
inline LinearForm pullback(const LinearForm& p, const IntMatrix& M) {
    if (M.rows() != p.size()) throw InvalidArgument("pullback: matrix rows must equal the form rank");
    LinearForm out(M.cols());
    for (std::size_t j = 0; j < M.cols(); ++j) out[j] = eval_linear(p, M.column(j));
    return out;
}

/// Pulls back (F, p) along M: F'(x,y,z) = F(Mx,My,Mz), p'(x) = p(Mx).
inline std::pair<CubicForm, LinearForm> change_basis(const CubicForm& F, const LinearForm& p, const UnimodularMap& M) {
    require_rank(F.rank(), p.size(), "linear form");
    require_rank(F.rank(), M.rank(), "basis change");
    return {pullback(F, M.matrix()), pullback(p, M.matrix())};
}

// ---------------------------------------------------------------------------

/// Z-basis of the kernel of a nonzero covector, together with the unimodular
/// completion used to express kernel elements in that basis.
struct KernelBasis {
    std::vector<IntVector> basis;  // rank - 1 vectors
    std::size_t pivot = 0;         // column of the completion not in the kernel
    IntMatrix completion_inverse;  // U^{-1}, where the columns of U are basis + pivot column

    /// Coordinates of a kernel element in `basis`.
    IntVector coordinates(const IntVector& x) const {
        IntVector z = completion_inverse.apply(x);
        if (z[pivot] != 0) throw InvalidArgument("vector is not in the kernel");
        IntVector out(z.size() - 1);
        for (std::size_t i = 0, o = 0; i < z.size(); ++i)
            if (i != pivot) out[o++] = z[i];
        return out;
    }
};

/// Reduces phi to a single nonzero entry by unimodular column operations (Euclid).
/// A covector with a +-1 entry is cleared in a single pass around that entry, so
/// phi = e_j^* yields the standard basis without e_j.
inline KernelBasis kernel_basis(const LinearForm& phi) {
    const std::size_t n = phi.size();
    if (phi.is_zero()) throw InvalidArgument("kernel_basis: zero covector");
    std::vector<Integer> w(phi.begin(), phi.end());
    IntMatrix U = IntMatrix::identity(n), Uinv = IntMatrix::identity(n);
    std::size_t p = 0;
    while (true) {
        std::optional<std::size_t> piv;
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] != 0 && (!piv || abs_value(w[i]) < abs_value(w[*piv]))) piv = i;
        p = *piv;
        bool single = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == p || w[j] == 0) continue;
            Integer q = w[j] / w[p];
            w[j] -= q * w[p];
            for (std::size_t i = 0; i < n; ++i) U(i, j) -= q * U(i, p);
            for (std::size_t c = 0; c < n; ++c) Uinv(p, c) += q * Uinv(j, c);
            if (w[j] != 0) single = false;
        }
        if (single) break;
    }
    KernelBasis kb;
    kb.pivot = p;
    for (std::size_t j = 0; j < n; ++j)
        if (j != p) kb.basis.push_back(U.column(j));
    kb.completion_inverse = std::move(Uinv);
    return kb;
}

/// True iff F(u, v, w) = 0 for all u, v, w in the given span.
inline bool vanishes_on_span(const CubicForm& F, std::span<const IntVector> span) {
    for (std::size_t a = 0; a < span.size(); ++a)
        for (std::size_t b = a; b < span.size(); ++b)
            for (std::size_t c = b; c < span.size(); ++c)
                if (eval_cubic(F, span[a], span[b], span[c]) != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

/// Raised when a rank-2 form is identically zero, so every line lies in its vanishing locus.
class IdenticallyZeroForm : public InvalidArgument {
  public:
    IdenticallyZeroForm() : InvalidArgument("cubic form is identically zero: every line vanishes") {}
};

/// Lines through the origin on which a rank-2 cubic vanishes identically.
/// Output is primitive, sign-normalized: (1,0) first when present, then ascending slope a/b.
inline std::vector<IntVector> find_vanishing_lines(const CubicForm& F) {
    if (F.rank() != 2) throw InvalidArgument("find_vanishing_lines requires rank 2, got " + std::to_string(F.rank()));
    if (F.is_zero()) throw IdenticallyZeroForm();
    // F(a, b) = c3 a^3 + 3 c2 a^2 b + 3 c1 a b^2 + c0 b^3
    const Integer c3 = F.at(0, 0, 0), c2 = F.at(0, 0, 1), c1 = F.at(0, 1, 1), c0 = F.at(1, 1, 1);
    std::vector<IntVector> lines;
    if (c3 == 0) lines.push_back(IntVector{1, 0});
    for (const auto& t : rational_roots({c0, 3 * c1, 3 * c2, c3})) {
        IntVector v{boost::multiprecision::numerator(t), boost::multiprecision::denominator(t)};
        lines.push_back(v.sign_normalized());
    }
    return lines;
}

struct HyperplaneSearch {
    std::vector<LinearForm> hyperplanes;  // primitive, sign-normalized, lexicographic
    Integer bound;                        // coefficient bound used by the enumeration
    bool exact = false;                   // true when the list is complete regardless of the bound
};

inline constexpr int kDefaultHyperplaneBound = 100;

namespace detail {

// Arithmetic modulo the Mersenne prime 2^61 - 1 for a cheap necessary condition.
inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mod61(std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(kMersenne61);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(kMersenne61) : r);
}

inline std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kMersenne61);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    return s >= kMersenne61 ? s - kMersenne61 : s;
}

inline std::uint64_t addmod61(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= kMersenne61 ? s - kMersenne61 : s;
}

class ModularCubic {
  public:
    explicit ModularCubic(const CubicForm& F) : n_(F.rank()), t_(n_ * n_ * n_, 0) {
        const Integer p = kMersenne61;
        for (const auto& [key, v] : F.entries()) {
            IndexTriple t = key;
            std::uint64_t r = static_cast<std::uint64_t>(floor_mod(v, p));
            do {
                t_[(t[0] * n_ + t[1]) * n_ + t[2]] = r;
            } while (std::next_permutation(t.begin(), t.end()));
        }
    }

    std::uint64_t eval(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y,
                       const std::vector<std::uint64_t>& z) const {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!x[i]) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (!y[j]) continue;
                const std::uint64_t xy = mulmod61(x[i], y[j]);
                for (std::size_t k = 0; k < n_; ++k) {
                    const std::uint64_t c = t_[(i * n_ + j) * n_ + k];
                    if (c && z[k]) acc = addmod61(acc, mulmod61(mulmod61(xy, z[k]), c));
                }
            }
        }
        return acc;
    }

  private:
    std::size_t n_;
    std::vector<std::uint64_t> t_;
};

// Q-spanning set of ker(phi): phi_p e_j - phi_j e_p for j != p, p the first nonzero index.
inline std::vector<IntVector> rational_kernel_span(const LinearForm& phi) {
    std::size_t p = 0;
    while (phi[p] == 0) ++p;
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < phi.size(); ++j) {
        if (j == p) continue;
        IntVector u(phi.size());
        u[j] = phi[p];
        u[p] = -phi[j];
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace detail

/// True iff F vanishes identically on the hyperplane ker(phi).
inline bool vanishes_on_hyperplane(const CubicForm& F, const LinearForm& phi) {
    require_rank(F.rank(), phi.size(), "hyperplane covector");
    if (phi.is_zero()) throw InvalidArgument("zero covector does not define a hyperplane");
    auto span = detail::rational_kernel_span(phi);
    return vanishes_on_span(F, span);
}

/// Primitive covectors phi (|coefficients| <= bound, first nonzero positive) with F = 0 on ker(phi).
/// Rank 2 is answered exactly through the vanishing lines; higher ranks enumerate
/// covectors, screen them modulo a prime and confirm survivors exactly.
inline HyperplaneSearch find_vanishing_hyperplanes(const CubicForm& F, const Integer& bound = kDefaultHyperplaneBound) {
    const std::size_t n = F.rank();
    if (n < 2) throw InvalidArgument("find_vanishing_hyperplanes requires rank >= 2");
    if (bound < 1) throw InvalidArgument("hyperplane bound must be positive");
    HyperplaneSearch out;
    out.bound = bound;

    if (n == 2 && !F.is_zero()) {
        for (const auto& v : find_vanishing_lines(F)) out.hyperplanes.push_back(LinearForm{v[1], -v[0]}.sign_normalized());
        std::sort(out.hyperplanes.begin(), out.hyperplanes.end());
        out.exact = true;
        return out;
    }

    if (bound > 1'000'000) throw InvalidArgument("hyperplane bound too large for enumeration");
    const std::int64_t b = static_cast<std::int64_t>(bound);
    detail::ModularCubic mod(F);
    std::vector<std::int64_t> phi(n, -b);
    std::vector<std::uint64_t> ua, ub, uc;
    while (true) {
        // sign normalization: first nonzero coordinate positive
        std::size_t first = 0;
        while (first < n && phi[first] == 0) ++first;
        if (first < n && phi[first] > 0) {
            std::int64_t g = 0;
            for (auto c : phi) g = std::gcd(g, c);
            if (g == 1) {
                // kernel span phi_p e_j - phi_j e_p
                std::vector<std::vector<std::uint64_t>> span;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == first) continue;
                    std::vector<std::uint64_t> u(n, 0);
                    u[j] = detail::mod61(phi[first]);
                    u[first] = detail::mod61(-phi[j]);
                    span.push_back(std::move(u));
                }
                bool maybe = true;
                for (std::size_t a = 0; a < span.size() && maybe; ++a)
                    for (std::size_t c2 = a; c2 < span.size() && maybe; ++c2)
                        for (std::size_t c3 = c2; c3 < span.size() && maybe; ++c3)
                            if (mod.eval(span[a], span[c2], span[c3]) != 0) maybe = false;
                if (maybe) {
                    LinearForm cand(n);
                    for (std::size_t i = 0; i < n; ++i) cand[i] = phi[i];
                    if (vanishes_on_hyperplane(F, cand)) out.hyperplanes.push_back(std::move(cand));
                }
            }
        }
        // odometer increment, last coordinate fastest => lexicographic order
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (phi[pos] < b) {
                ++phi[pos];
                break;
            }
            phi[pos] = -b;
            if (pos == 0) return out;
        }
    }
}

}  // namespace spin6
