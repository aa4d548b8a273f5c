#pragma once

// h-Hodge map, volume, metric, Gram blocks, positivity certificates and
// operator adjoints on V(n).

#include "fiber.hpp"
#include "lefschetz.hpp"
#include "linalg.hpp"
#include "operator.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkahler {

class DegreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// vol(e•) = i^{-n mod 2}; defined on V^{2n} only.
inline Scalar vol(const FiberForm& u) {
    const int n = u.rank();
    if (u.is_zero()) return Scalar{};
    if (u.degree() != 2 * n) {
        throw DegreeError("vol: expected a form of degree " + std::to_string(2 * n) + ", got " + u.to_string());
    }
    Scalar c = u.coefficient(top_monomial(n));
    return n % 2 == 1 ? c * -Scalar::i() : c;
}

// (-1)^{k(k+1)/2} i^{a-b} [j]! / [n-j-k]!, the Weil coefficient on L^j(P^{(a,b)}).
inline Scalar weil_coefficient(int n, int a, int b, int j, const HodgeMode& mode) {
    const int k = a + b;
    Scalar c = qfact(j, mode) / qfact(n - j - k, mode);
    if ((k * (k + 1) / 2) % 2 == 1) c = -c;
    switch (((a - b) % 4 + 4) % 4) {
        case 1: c *= Scalar::i(); break;
        case 2: c = -c; break;
        case 3: c *= -Scalar::i(); break;
        default: break;
    }
    return c;
}

struct GramBlock {
    Bidegree bidegree;
    std::vector<Monomial> basis;
    SparseMatrix entries;  // entries(r, s) = <m_r, m_s>_V
};

struct PosdefCertificate {
    mpq_class q0;
    std::vector<mpq_class> pivots;
    bool verdict = false;
};

// Exact evaluation at q0 followed by Hermitian LDL^T.
inline PosdefCertificate certify_posdef(const GramBlock& block, const mpq_class& q0) {
    const std::size_t n = block.basis.size();
    std::vector<std::vector<GaussianRational>> a(n, std::vector<GaussianRational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = block.entries.get(r, c).evaluate(q0);
    LdlResult ldl = ldl_hermitian(std::move(a));
    return {q0, std::move(ldl.pivots), ldl.positive_definite};
}

// All Kahler data of V(n) for one Hodge mode.  Matrices are built lazily and
// cached; access is serialized by an internal mutex.
class KahlerFiber {
public:
    KahlerFiber(int n, HodgeMode mode) : n_(n), mode_(std::move(mode)) { check_rank(n); }

    int rank() const { return n_; }
    const HodgeMode& mode() const { return mode_; }

    const std::vector<FiberForm>& primitives(int a, int b) const {
        std::lock_guard lock(mu_);
        return primitives_locked(a, b);
    }

    const GradedOperator& lefschetz() const {
        std::lock_guard lock(mu_);
        return lefschetz_locked();
    }

    const GradedOperator& hodge_operator() const {
        std::lock_guard lock(mu_);
        return hodge_locked();
    }

    const GradedOperator& hodge_inverse() const {
        std::lock_guard lock(mu_);
        return hodge_inverse_locked();
    }

    // Lambda = *^{-1} L *
    const GradedOperator& lambda() const {
        std::lock_guard lock(mu_);
        if (!lambda_) lambda_ = hodge_inverse_locked() * lefschetz_locked() * hodge_locked();
        return *lambda_;
    }

    FiberForm hodge(const FiberForm& u) const {
        check(u);
        return hodge_operator().apply(u);
    }

    LefschetzComponents decompose(const FiberForm& u) const {
        check(u);
        return lefschetz_decompose(u, lambda(), mode_);
    }

    // g(u, v) = vol(u ^ *(v*)), summed over degrees; 0 across degrees.
    Scalar metric(const FiberForm& u, const FiberForm& v) const {
        check(u);
        check(v);
        auto us = degree_split(u);
        Scalar total;
        for (const auto& [k, vk] : degree_split(v)) {
            auto it = us.find(k);
            if (it == us.end()) continue;
            total += vol(wedge(it->second, hodge(star(vk))));
        }
        return total;
    }

    const GramBlock& gram(int a, int b) const {
        std::lock_guard lock(mu_);
        auto it = gram_.find({a, b});
        if (it != gram_.end()) return it->second;
        GramBlock g;
        g.bidegree = {a, b};
        g.basis = basis(n_, a, b);
        g.entries = SparseMatrix(g.basis.size(), g.basis.size());
        // Columns: <., m_s> is determined by *(m_s*), computed once per s.
        const GradedOperator& h = hodge_locked();
        for (std::size_t s = 0; s < g.basis.size(); ++s) {
            FiberForm hs = h.apply(star(FiberForm(n_, g.basis[s])));
            for (std::size_t r = 0; r < g.basis.size(); ++r) {
                g.entries.set(r, s, vol(wedge(FiberForm(n_, g.basis[r]), hs)));
            }
        }
        return gram_.emplace(Bidegree{a, b}, std::move(g)).first->second;
    }

    // M^dagger with <M u, v> = <u, M^dagger v>.  With <u, v> = u^T G conj(v)
    // this is conj(G_src^{-1} M^T G_tgt).
    GradedOperator adjoint(const GradedOperator& m) const {
        if (m.rank() != n_) throw RankMismatch("adjoint: rank mismatch");
        GradedOperator out(n_);
        for (const auto& [src, blk] : m.blocks()) {
            const SparseMatrix& g_src = gram(src.first, src.second).entries;
            const SparseMatrix& g_tgt = gram(blk.target.first, blk.target.second).entries;
            SparseMatrix a = inverse(g_src) * blk.matrix.transpose() * g_tgt;
            out.set_block(blk.target, src, a.conjugate());
        }
        return out;
    }

private:
    void check(const FiberForm& u) const {
        if (u.rank() != n_) throw RankMismatch("KahlerFiber: form of rank " + std::to_string(u.rank()));
    }

    const std::vector<FiberForm>& primitives_locked(int a, int b) const {
        auto it = primitives_.find({a, b});
        if (it != primitives_.end()) return it->second;
        return primitives_.emplace(Bidegree{a, b}, primitive_basis(n_, a, b)).first->second;
    }

    const GradedOperator& lefschetz_locked() const {
        if (!lefschetz_) lefschetz_ = lefschetz_operator(n_);
        return *lefschetz_;
    }

    // On V^{(a,b)}: adapted basis {L^j alpha : alpha in P^{(a-j,b-j)}} mapped
    // by the Weil formula, then converted to monomial coordinates.
    const GradedOperator& hodge_locked() const {
        if (hodge_) return *hodge_;
        GradedOperator op(n_);
        for (const auto& [a, b] : all_bidegrees(n_)) {
            auto src = basis(n_, a, b);
            Bidegree tgt_bd{n_ - b, n_ - a};
            auto tgt = basis(n_, tgt_bd.first, tgt_bd.second);
            SparseMatrix adapted(src.size(), src.size());
            SparseMatrix images(tgt.size(), src.size());
            std::size_t col = 0;
            for (int j = 0; j <= std::min(a, b); ++j) {
                const int pa = a - j, pb = b - j, kp = pa + pb;
                if (kp > n_ || j > n_ - kp) continue;
                Scalar w = weil_coefficient(n_, pa, pb, j, mode_);
                for (const auto& alpha : primitives_locked(pa, pb)) {
                    if (col >= src.size()) throw std::logic_error("hodge: adapted basis overflows V^(a,b)");
                    auto x = coordinates(Lpow(alpha, j), src);
                    auto y = coordinates(w * Lpow(alpha, n_ - j - kp), tgt);
                    for (std::size_t r = 0; r < src.size(); ++r) adapted.set(r, col, x[r]);
                    for (std::size_t r = 0; r < tgt.size(); ++r) images.set(r, col, y[r]);
                    ++col;
                }
            }
            if (col != src.size()) throw std::logic_error("hodge: adapted basis does not span V^(a,b)");
            op.set_block({a, b}, tgt_bd, images * inverse(adapted));
        }
        hodge_ = std::move(op);
        return *hodge_;
    }

    const GradedOperator& hodge_inverse_locked() const {
        if (hodge_inverse_) return *hodge_inverse_;
        const GradedOperator& h = hodge_locked();
        GradedOperator inv(n_);
        for (const auto& [src, blk] : h.blocks()) inv.set_block(blk.target, src, inverse(blk.matrix));
        hodge_inverse_ = std::move(inv);
        return *hodge_inverse_;
    }

    int n_;
    HodgeMode mode_;
    mutable std::recursive_mutex mu_;
    mutable std::map<Bidegree, std::vector<FiberForm>> primitives_;
    mutable std::map<Bidegree, GramBlock> gram_;
    mutable std::optional<GradedOperator> lefschetz_;
    mutable std::optional<GradedOperator> hodge_;
    mutable std::optional<GradedOperator> hodge_inverse_;
    mutable std::optional<GradedOperator> lambda_;
};

struct StarFitCase {
    int n = 0;
    Monomial monomial;
    Scalar expected;  // <m, m> at h = q
};

struct StarFit {
    int range = 0;
    std::size_t candidates = 0;
    std::map<int, std::vector<std::vector<int>>> matches;  // rank -> exponent vectors s_1..s_n

    bool unique_standard() const {
        for (const auto& [n, list] : matches)
            if (list.size() != 1 || list.front() != StarConvention::standard(n).minus_exponent) return false;
        return !matches.empty();
    }
};

// Reference norms for CP^1 and CP^2 at h = q.
inline std::vector<StarFitCase> star_fit_cases() {
    auto mono = [](std::vector<int> i, std::vector<int> j) { return Monomial{Monomial::mask_of(i), Monomial::mask_of(j)}; };
    return {
        {1, mono({}, {1}), Scalar::q(6)},
        {2, mono({1}, {}), Scalar::q(-5)},
        {2, mono({2}, {}), Scalar::q(-5)},
        {2, mono({}, {1}), Scalar::q(7)},
        {2, mono({}, {2}), Scalar::q(9)},
        {2, mono({1, 2}, {}), Scalar::q(-11)},
        {2, mono({}, {1, 2}), Scalar::q(17)},
        {2, mono({1}, {2}), Scalar::q(3)},
        {2, mono({2}, {1}), Scalar::q(1)},
    };
}

// Brute-force search over (e-_a)* = q^{s_a} e+_a, |s_a| <= range, keeping the
// exponent vectors that reproduce every reference norm.
inline StarFit fit_star_convention(int range = 8) {
    StarFit fit;
    fit.range = range;
    auto cases = star_fit_cases();
    for (int n : {1, 2}) {
        KahlerFiber kf(n, HodgeMode::h_eq_q());
        std::vector<int> s(static_cast<std::size_t>(n), -range);
        fit.matches[n];
        while (true) {
            ++fit.candidates;
            StarConvention conv{s};
            bool ok = true;
            for (const auto& c : cases) {
                if (c.n != n) continue;
                FiberForm m(n, c.monomial);
                if (!(vol(wedge(m, kf.hodge(star(m, conv)))) == c.expected)) {
                    ok = false;
                    break;
                }
            }
            if (ok) fit.matches[n].push_back(s);
            std::size_t t = 0;
            while (t < s.size() && s[t] == range) s[t++] = -range;
            if (t == s.size()) break;
            ++s[t];
        }
    }
    return fit;
}

inline FiberForm hodge(const FiberForm& u, const HodgeMode& mode) { return KahlerFiber(u.rank(), mode).hodge(u); }

inline Scalar metric(const FiberForm& u, const FiberForm& v, const HodgeMode& mode) {
    return KahlerFiber(u.rank(), mode).metric(u, v);
}

}  // namespace qkahler
