#pragma once

// Builders and independent oracles shared by the unit tests and the
// acceptance runner.  The oracles use plain textbook algorithms so that they
// do not share code paths with the library routines they check.

#include <qkahler/fiber.hpp>
#include <qkahler/linalg.hpp>
#include <qkahler/su2.hpp>

#include <random>
#include <string>
#include <vector>

namespace qk_test {

using namespace qkahler;

inline Monomial mono(const std::vector<int>& I, const std::vector<int>& J) {
    return Monomial{Monomial::mask_of(I), Monomial::mask_of(J)};
}

inline FiberForm form(int n, const std::vector<int>& I, const std::vector<int>& J, const Scalar& c = Scalar(1)) {
    return FiberForm(n, mono(I, J), c);
}

inline Scalar S(const char* text) { return Scalar::parse(text); }

inline long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (int t = 1; t <= b; ++t) r = r * (a - b + t) / t;
    return r;
}

// Plain sum h^{m-1} + h^{m-3} + ... at h = q.
inline Scalar qint_sum(int m) {
    Scalar s;
    for (int t = 0; t < m; ++t) s += Scalar::q(m - 1 - 2 * t);
    return s;
}

// q-Pascal recursion: [a, b] = q^b [a-1, b] + q^{-(a-b)} [a-1, b-1].
inline Scalar qbinom_pascal(int a, int b) {
    std::vector<std::vector<Scalar>> t(static_cast<std::size_t>(a + 1));
    for (int x = 0; x <= a; ++x) {
        t[x].resize(static_cast<std::size_t>(x + 1));
        t[x][0] = Scalar(1);
        t[x][x] = Scalar(1);
        for (int y = 1; y < x; ++y) t[x][y] = Scalar::q(y) * t[x - 1][y] + Scalar::q(-(x - y)) * t[x - 1][y - 1];
    }
    return t[a][b];
}

using Dense = std::vector<std::vector<Scalar>>;

// Gauss-Jordan with field division, first nonzero pivot.
inline std::size_t oracle_rank(Dense a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        Scalar inv = a[rank][c].inverse();
        for (auto& v : a[rank]) v *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Solves a x = b for square nonsingular a; empty result if singular.
inline std::vector<Scalar> oracle_solve(Dense a, std::vector<Scalar> b) {
    const std::size_t n = a.size();
    for (std::size_t r = 0; r < n; ++r) a[r].push_back(b[r]);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return {};
        std::swap(a[p], a[c]);
        Scalar inv = a[c][c].inverse();
        for (auto& v : a[c]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<Scalar> x;
    for (std::size_t r = 0; r < n; ++r) x.push_back(a[r][n]);
    return x;
}

inline Dense to_dense(const SparseMatrix& m) {
    Dense d(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c);
    return d;
}

inline SparseMatrix from_dense(const Dense& d) {
    SparseMatrix m(d.size(), d.empty() ? 0 : d[0].size());
    for (std::size_t r = 0; r < d.size(); ++r)
        for (std::size_t c = 0; c < d[r].size(); ++c) m.set(r, c, d[r][c]);
    return m;
}

// Coordinate rows of forms against the monomial basis of rank n.
inline Dense coordinate_rows(int n, const std::vector<FiberForm>& forms) {
    std::vector<Monomial> all;
    for (int k = 0; k <= 2 * n; ++k)
        for (const auto& m : basis(n, k)) all.push_back(m);
    Dense d;
    for (const auto& f : forms) d.push_back(coordinates(f, all));
    return d;
}

inline std::size_t span_rank(int n, const std::vector<FiberForm>& forms) {
    if (forms.empty()) return 0;
    return oracle_rank(coordinate_rows(n, forms));
}

class Fuzz {
public:
    explicit Fuzz(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    GaussianRational gaussian() {
        return GaussianRational(mpq_class(uniform(-4, 4), uniform(1, 3)), mpq_class(uniform(-2, 2)));
    }

    LaurentPoly laurent(int terms = 3) {
        LaurentPoly p;
        for (int t = 0; t < terms; ++t) p.add_term(uniform(-3, 3), gaussian());
        return p;
    }

    Scalar polynomial() { return Scalar(laurent()); }

    Scalar scalar() {
        LaurentPoly den = laurent(2);
        if (den.is_zero()) den = LaurentPoly(1);
        return Scalar(laurent(), den);
    }

    Scalar nonzero_scalar() {
        Scalar s = scalar();
        while (s.is_zero()) s = scalar();
        return s;
    }

    FiberForm fiber_form(int n, int terms = 4) {
        FiberForm u(n);
        for (int t = 0; t < terms; ++t) {
            Monomial m{static_cast<std::uint32_t>(uniform(0, (1 << n) - 1)),
                       static_cast<std::uint32_t>(uniform(0, (1 << n) - 1))};
            u.add_term(m, polynomial());
        }
        return u;
    }

    Monomial monomial(int n) {
        return Monomial{static_cast<std::uint32_t>(uniform(0, (1 << n) - 1)),
                        static_cast<std::uint32_t>(uniform(0, (1 << n) - 1))};
    }

    SU2Monomial su2_monomial(int max_degree) {
        while (true) {
            int a = uniform(0, max_degree), b = uniform(0, max_degree), c = uniform(0, max_degree),
                d = uniform(0, max_degree);
            if (a > 0 && d > 0) continue;
            if (a + b + c + d > max_degree) continue;
            return SU2Monomial::make(a, b, c, d);
        }
    }

    SU2Element su2_element(int max_degree, int terms = 3) {
        SU2Element x;
        for (int t = 0; t < terms; ++t) x.add_term(su2_monomial(max_degree), polynomial());
        return x;
    }

private:
    std::mt19937 rng_;
};

}  // namespace qk_test
