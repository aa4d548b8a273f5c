#pragma once

// Exact linear algebra over Q(i)(q).  Elimination is fraction-free: rows are
// cleared of denominators, Bareiss steps run over the Laurent ring, and field
// division happens only when the reduced echelon form is read off.

#include "scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qkahler {

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    static SparseMatrix identity(std::size_t n) {
        SparseMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m.set(k, k, Scalar(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::map<std::size_t, Scalar>& row(std::size_t r) const { return data_.at(r); }

    std::size_t nonzeros() const {
        std::size_t total = 0;
        for (const auto& r : data_) total += r.size();
        return total;
    }
    bool is_zero() const { return nonzeros() == 0; }

    Scalar get(std::size_t r, std::size_t c) const {
        const auto& row_map = data_.at(r);
        auto it = row_map.find(c);
        return it == row_map.end() ? Scalar{} : it->second;
    }
    void set(std::size_t r, std::size_t c, const Scalar& v) {
        if (c >= cols_) throw std::out_of_range("SparseMatrix::set column");
        auto& row_map = data_.at(r);
        if (v.is_zero()) row_map.erase(c);
        else row_map[c] = v;
    }
    void add(std::size_t r, std::size_t c, const Scalar& v) {
        if (v.is_zero()) return;
        set(r, c, get(r, c) + v);
    }

    SparseMatrix transpose() const {
        SparseMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
        return t;
    }
    SparseMatrix conjugate() const {
        SparseMatrix t(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) t.data_[r][c] = v.conj();
        return t;
    }
    SparseMatrix conjugate_transpose() const { return transpose().conjugate(); }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("SparseMatrix: shape mismatch in product");
        SparseMatrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            std::map<std::size_t, Scalar> acc;
            for (const auto& [k, av] : a.data_[r])
                for (const auto& [c, bv] : b.data_[k]) acc[c] += av * bv;
            for (auto& [c, v] : acc)
                if (!v.is_zero()) out.data_[r].emplace(c, std::move(v));
        }
        return out;
    }
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
        a.check_shape(b);
        SparseMatrix out = a;
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (const auto& [c, v] : b.data_[r]) out.add(r, c, v);
        return out;
    }
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + Scalar(-1) * b; }
    friend SparseMatrix operator*(const Scalar& s, const SparseMatrix& a) {
        SparseMatrix out(a.rows_, a.cols_);
        if (s.is_zero()) return out;
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (const auto& [c, v] : a.data_[r]) out.data_[r].emplace(c, s * v);
        return out;
    }
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("SparseMatrix::apply: length mismatch");
        std::vector<Scalar> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
        return y;
    }

    // Horizontal concatenation [a | b].
    friend SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("hconcat: row mismatch");
        SparseMatrix out(a.rows_, a.cols_ + b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            out.data_[r] = a.data_[r];
            for (const auto& [c, v] : b.data_[r]) out.data_[r].emplace(a.cols_ + c, v);
        }
        return out;
    }

    SparseMatrix columns(std::size_t first, std::size_t count) const {
        SparseMatrix out(rows_, count);
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r])
                if (c >= first && c < first + count) out.data_[r].emplace(c - first, v);
        return out;
    }

private:
    void check_shape(const SparseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("SparseMatrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::map<std::size_t, Scalar>> data_;
};

class SingularMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct EchelonForm {
    SparseMatrix rref;                  // reduced row echelon form, pivots = 1
    std::vector<std::size_t> pivots;    // pivot column of each nonzero row
    Scalar determinant;                 // only meaningful for square input
    std::size_t rank() const { return pivots.size(); }
};

namespace detail {

inline std::size_t poly_complexity(const LaurentPoly& p) {
    return p.is_zero() ? 0 : p.size() + static_cast<std::size_t>(p.high() - p.low());
}


// Bareiss over the Laurent ring after clearing row denominators: column order,
// pivot row of lowest complexity.
struct BareissForm {
    std::vector<std::vector<LaurentPoly>> a;
    std::vector<std::size_t> pivots;
    LaurentPoly last_pivot{1};
    Scalar row_scale{1};
    bool odd_swaps = false;
};

inline BareissForm bareiss_forward(const SparseMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<LaurentPoly>> a(rows, std::vector<LaurentPoly>(cols));
    Scalar row_scale(1);  // product of the factors used to clear denominators

    for (std::size_t r = 0; r < rows; ++r) {
        LaurentPoly lcm(1);
        for (const auto& [c, v] : m.row(r)) {
            if (v.is_polynomial()) continue;
            LaurentPoly g = gcd(lcm, v.den());
            lcm = lcm * *exact_quotient(v.den(), g);
        }
        for (const auto& [c, v] : m.row(r)) {
            a[r][c] = v.is_polynomial() ? v.num() * lcm : v.num() * *exact_quotient(lcm, v.den());
        }
        row_scale *= Scalar(lcm);
    }

    LaurentPoly prev(1);
    std::vector<std::size_t> pivots;
    bool odd_swaps = false;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            if (best == rows || detail::poly_complexity(a[i][c]) < detail::poly_complexity(a[best][c])) best = i;
        }
        if (best == rows) continue;
        if (best != r) {
            std::swap(a[best], a[r]);
            odd_swaps = !odd_swaps;
        }
        const LaurentPoly& piv = a[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                LaurentPoly t = piv * a[i][j] - a[i][c] * a[r][j];
                if (t.is_zero()) {
                    a[i][j] = LaurentPoly{};
                    continue;
                }
                auto q = exact_quotient(t, prev);
                if (!q) throw std::logic_error("Bareiss step: inexact division");
                a[i][j] = std::move(*q);
            }
            a[i][c] = LaurentPoly{};
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots), std::move(prev), std::move(row_scale), odd_swaps};
}

inline Scalar determinant_of(const BareissForm& b, std::size_t n) {
    if (b.pivots.size() < n) return Scalar{};
    Scalar det = Scalar(b.last_pivot) / b.row_scale;
    return b.odd_swaps ? -det : det;
}

}  // namespace detail

// Fraction-free forward elimination, then back substitution in the field.
inline EchelonForm reduced_echelon(const SparseMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    detail::BareissForm b = detail::bareiss_forward(m);
    const auto& a = b.a;
    const auto& pivots = b.pivots;

    EchelonForm out;
    out.pivots = pivots;
    if (rows == cols) out.determinant = detail::determinant_of(b, rows);

    // Back substitution in the field.
    std::vector<std::vector<Scalar>> f(pivots.size(), std::vector<Scalar>(cols));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Scalar inv = Scalar(a[i][pivots[i]]).inverse();
        for (std::size_t j = pivots[i]; j < cols; ++j)
            if (!a[i][j].is_zero()) f[i][j] = Scalar(a[i][j]) * inv;
    }
    for (std::size_t i = pivots.size(); i-- > 0;) {
        for (std::size_t above = 0; above < i; ++above) {
            Scalar factor = f[above][pivots[i]];
            if (factor.is_zero()) continue;
            for (std::size_t j = pivots[i]; j < cols; ++j)
                if (!f[i][j].is_zero()) f[above][j] -= factor * f[i][j];
        }
    }
    out.rref = SparseMatrix(rows, cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out.rref.set(i, j, f[i][j]);
    return out;
}

inline std::size_t rank(const SparseMatrix& m) { return detail::bareiss_forward(m).pivots.size(); }

inline Scalar determinant(const SparseMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    if (m.rows() == 0) return Scalar(1);
    return detail::determinant_of(detail::bareiss_forward(m), m.rows());
}

// Kernel basis read from the reduced echelon form: one vector per free
// column, with a 1 in that column.
inline std::vector<std::vector<Scalar>> kernel(const SparseMatrix& m) {
    EchelonForm e = reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols());
        v[free] = Scalar(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref.get(i, free);
        out.push_back(std::move(v));
    }
    return out;
}

inline SparseMatrix inverse(const SparseMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    EchelonForm e = reduced_echelon(hconcat(m, SparseMatrix::identity(n)));
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
        throw SingularMatrix("inverse: singular " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
    return e.rref.columns(n, n);
}

// ---------------------------------------------------------------- LDL^T

struct LdlResult {
    std::vector<mpq_class> pivots;  // in elimination order
    bool positive_definite = false;
};

// Hermitian LDL^T over Q(i) with symmetric pivoting (largest remaining
// diagonal first).  Stops at the first non-positive pivot.
inline LdlResult ldl_hermitian(std::vector<std::vector<GaussianRational>> a) {
    const std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (a[r].size() != n) throw std::invalid_argument("ldl_hermitian: matrix not square");
        for (std::size_t c = 0; c < n; ++c) {
            if (!(a[r][c] == a[c][r].conj())) throw std::invalid_argument("ldl_hermitian: matrix not Hermitian");
        }
    }
    LdlResult out;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            if (p == n || a[k][k].real() > a[p][p].real()) p = k;
        }
        mpq_class d = a[p][p].real();
        out.pivots.push_back(d);
        if (sgn(d) <= 0) return out;
        done[p] = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][p].is_zero()) continue;
            GaussianRational li = a[i][p] / GaussianRational(d);
            for (std::size_t j = 0; j < n; ++j) {
                if (done[j] || a[p][j].is_zero()) continue;
                a[i][j] -= li * a[p][j];
            }
        }
    }
    out.positive_definite = true;
    return out;
}

}  // namespace qkahler
