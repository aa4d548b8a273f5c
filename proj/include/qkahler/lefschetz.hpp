#pragma once

// Kahler form, Lefschetz operator, primitive spaces and the Lefschetz
// decomposition on V(n).

#include "fiber.hpp"
#include "linalg.hpp"
#include "operator.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkahler {

// kappa = i * sum_a e+_a ^ e-_a
inline FiberForm kappa(int n) {
    FiberForm k(n);
    for (int a = 1; a <= n; ++a) {
        std::uint32_t bit = 1u << (a - 1);
        k.add_term(Monomial{bit, bit}, Scalar::i());
    }
    return k;
}

inline FiberForm L(const FiberForm& u) { return wedge(kappa(u.rank()), u); }

inline FiberForm Lpow(const FiberForm& u, int j) {
    if (j < 0) throw std::invalid_argument("Lpow: negative power");
    FiberForm out = u;
    FiberForm k = kappa(u.rank());
    for (int t = 0; t < j && !out.is_zero(); ++t) out = wedge(k, out);
    return out;
}

inline GradedOperator lefschetz_operator(int n, int power = 1) {
    return GradedOperator::from_function(
        n, [power](const Bidegree& bd) { return Bidegree{bd.first + power, bd.second + power}; },
        [power](const FiberForm& u) { return Lpow(u, power); });
}

// Matrix of L^power : V^{(a,b)} -> V^{(a+power, b+power)} in monomial bases.
inline SparseMatrix lefschetz_matrix(int n, int a, int b, int power) {
    auto cols = basis(n, a, b);
    auto rows = basis(n, a + power, b + power);
    SparseMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto y = coordinates(Lpow(FiberForm(n, cols[c]), power), rows);
        for (std::size_t r = 0; r < rows.size(); ++r) m.set(r, c, y[r]);
    }
    return m;
}

// Basis of P^{(a,b)} = ker L^{n-k+1} on V^{(a,b)}, k = a + b; reduced echelon
// kernel vectors, free columns in monomial order.  Empty for k > n.
inline std::vector<FiberForm> primitive_basis(int n, int a, int b) {
    check_rank(n);
    std::vector<FiberForm> out;
    const int k = a + b;
    if (a < 0 || b < 0 || k > n) return out;
    auto cols = basis(n, a, b);
    const int power = n - k + 1;
    if (a + power > n || b + power > n) {
        for (const auto& m : cols) out.emplace_back(n, m);
        return out;
    }
    for (const auto& v : kernel(lefschetz_matrix(n, a, b, power))) out.push_back(from_coordinates(n, cols, v));
    return out;
}

struct PrimitiveBasis {
    int n = 0;
    std::map<Bidegree, std::vector<FiberForm>> spaces;  // (a, b) with a + b <= n

    std::size_t dimension(int k) const {
        std::size_t d = 0;
        for (const auto& [bd, forms] : spaces)
            if (bd.first + bd.second == k) d += forms.size();
        return d;
    }
};

inline PrimitiveBasis primitive_bases(int n) {
    PrimitiveBasis pb{n, {}};
    for (int k = 0; k <= n; ++k)
        for (int a = k; a >= 0; --a) pb.spaces.emplace(Bidegree{a, k - a}, primitive_basis(n, a, k - a));
    return pb;
}

struct LefschetzIsoReport {
    int n = 0;
    int k = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    bool full_rank = false;
    Scalar determinant;
};

// Certifies that L^{n-k} : V^k -> V^{2n-k} has full rank.
inline LefschetzIsoReport verify_lefschetz_iso(int n, int k) {
    check_rank(n);
    if (k < 0 || k >= n) throw std::invalid_argument("verify_lefschetz_iso: need 0 <= k < n");
    auto cols = basis(n, k);
    auto rows = basis(n, 2 * n - k);
    std::map<Monomial, std::size_t, MonomialOrder> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
    SparseMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        FiberForm image = Lpow(FiberForm(n, cols[c]), n - k);
        for (const auto& [mono, v] : image.terms()) m.set(row_index.at(mono), c, v);
    }
    EchelonForm e = reduced_echelon(m);
    LefschetzIsoReport rep;
    rep.n = n;
    rep.k = k;
    rep.rows = rows.size();
    rep.cols = cols.size();
    rep.rank = e.rank();
    rep.full_rank = rep.rank == rows.size() && rep.rank == cols.size();
    rep.determinant = e.determinant;
    return rep;
}

struct LefschetzComponent {
    int level = 0;          // j
    FiberForm primitive;    // alpha_j in P^{k-2j}
};

using LefschetzComponents = std::vector<LefschetzComponent>;

// prod_{t=1..j} [t]_h [n - t - k' + 1]_h, the scalar with Lambda^j L^j = c on P^{k'}.
inline Scalar lambda_power_constant(int n, int j, int primitive_degree, const HodgeMode& mode) {
    Scalar c(1);
    for (int t = 1; t <= j; ++t) c *= qint(t, mode) * qint(n - t - primitive_degree + 1, mode);
    return c;
}

// Top-down extraction: alpha_m = Lambda^m(rest) / c_m, then rest -= L^m(alpha_m).
inline LefschetzComponents lefschetz_decompose(const FiberForm& u, const GradedOperator& lambda, const HodgeMode& mode) {
    const int n = u.rank();
    LefschetzComponents out;
    if (u.is_zero()) return out;
    const int k = u.degree();
    if (k < 0) throw std::invalid_argument("lefschetz_decompose: input is not homogeneous");
    const int lowest = std::max(0, (k - n + 1) / 2);
    FiberForm rest = u;
    for (int j = k / 2; j >= lowest; --j) {
        const int kp = k - 2 * j;
        if (kp > n || j > n - kp) continue;
        FiberForm alpha = rest;
        for (int t = 0; t < j; ++t) alpha = lambda.apply(alpha);
        alpha *= lambda_power_constant(n, j, kp, mode).inverse();
        if (alpha.is_zero()) continue;
        rest -= Lpow(alpha, j);
        out.push_back({j, alpha});
    }
    if (!rest.is_zero()) throw std::logic_error("lefschetz_decompose: remainder " + rest.to_string());
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace qkahler
