#pragma once

// The quantum exterior algebra V(n) spanned by e+_I ^ e-_J, with the wedge
// product computed by rewriting words into the ordered-monomial normal form.

#include "scalar.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qkahler {

inline constexpr int kMaxRank = 12;

using Bidegree = std::pair<int, int>;

// One generator e+_index or e-_index.  Normal order: all e+ before all e-,
// indices ascending within each block.
struct Generator {
    bool minus = false;
    int index = 1;

    friend auto operator<=>(const Generator& a, const Generator& b) {
        if (a.minus != b.minus) return a.minus ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.index <=> b.index;
    }
    friend bool operator==(const Generator&, const Generator&) = default;
};

// e+_I ^ e-_J with I, J stored as bitmasks (bit a-1 <-> index a).
struct Monomial {
    std::uint32_t plus = 0;
    std::uint32_t minus = 0;

    int a() const { return std::popcount(plus); }
    int b() const { return std::popcount(minus); }
    int degree() const { return a() + b(); }
    Bidegree bidegree() const { return {a(), b()}; }
    bool is_unit() const { return plus == 0 && minus == 0; }

    static std::vector<int> indices(std::uint32_t mask) {
        std::vector<int> out;
        for (int k = 0; mask != 0; ++k, mask >>= 1)
            if (mask & 1u) out.push_back(k + 1);
        return out;
    }
    static std::uint32_t mask_of(const std::vector<int>& idx) {
        std::uint32_t m = 0;
        for (int k : idx) m |= 1u << (k - 1);
        return m;
    }

    // Generator word in normal order.
    std::vector<Generator> word() const {
        std::vector<Generator> w;
        for (int k : indices(plus)) w.push_back({false, k});
        for (int k : indices(minus)) w.push_back({true, k});
        return w;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const {
        auto list = [](std::uint32_t m) {
            std::string s = "[";
            bool first = true;
            for (int k : indices(m)) {
                if (!first) s += ",";
                s += std::to_string(k);
                first = false;
            }
            return s + "]";
        };
        if (is_unit()) return "1";
        std::string s;
        if (plus != 0) s = "e+" + list(plus);
        if (minus != 0) s += (s.empty() ? "" : "^") + std::string("e-") + list(minus);
        return s;
    }
};

namespace detail {

// Lexicographic comparison of the ascending index sequences of two masks.
inline int lex_compare(std::uint32_t x, std::uint32_t y) {
    while (x != 0 && y != 0) {
        int lx = std::countr_zero(x), ly = std::countr_zero(y);
        if (lx != ly) return lx < ly ? -1 : 1;
        x &= x - 1;
        y &= y - 1;
    }
    if (x == y) return 0;
    return x == 0 ? -1 : 1;
}

}  // namespace detail

// Monomial order: degree ascending, then a descending, then I, then J
// lexicographically.
struct MonomialOrder {
    bool operator()(const Monomial& x, const Monomial& y) const {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        if (x.a() != y.a()) return x.a() > y.a();
        if (int c = detail::lex_compare(x.plus, y.plus); c != 0) return c < 0;
        return detail::lex_compare(x.minus, y.minus) < 0;
    }
};

class RankMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void check_rank(int n) {
    if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank n must be in [1, " + std::to_string(kMaxRank) + "]");
}

class FiberForm {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

    explicit FiberForm(int n) : n_(n) { check_rank(n); }
    FiberForm(int n, const Monomial& m, Scalar c = 1) : FiberForm(n) { add_term(m, std::move(c)); }

    static FiberForm unit(int n) { return {n, Monomial{}}; }
    static FiberForm e_plus(int n, int a) { return {n, Monomial{1u << (a - 1), 0}}; }
    static FiberForm e_minus(int n, int a) { return {n, Monomial{0, 1u << (a - 1)}}; }
    static FiberForm generator(int n, const Generator& g) { return g.minus ? e_minus(n, g.index) : e_plus(n, g.index); }

    int rank() const { return n_; }
    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar{} : it->second;
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Degree if homogeneous; -1 for the zero form or mixed degrees.
    int degree() const {
        if (terms_.empty()) return -1;
        int k = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != k) return -1;
        return k;
    }
    bool is_homogeneous() const { return is_zero() || degree() >= 0; }
    bool is_bihomogeneous() const {
        if (terms_.empty()) return true;
        Bidegree bd = terms_.begin()->first.bidegree();
        return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.bidegree() == bd; });
    }

    FiberForm& operator+=(const FiberForm& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    FiberForm& operator-=(const FiberForm& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    FiberForm& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    FiberForm operator-() const {
        FiberForm r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend FiberForm operator+(FiberForm a, const FiberForm& b) { return a += b; }
    friend FiberForm operator-(FiberForm a, const FiberForm& b) { return a -= b; }
    friend FiberForm operator*(const Scalar& s, FiberForm u) { return u *= s; }
    friend FiberForm operator*(FiberForm u, const Scalar& s) { return u *= s; }
    friend bool operator==(const FiberForm& a, const FiberForm& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

    void check_same(const FiberForm& o) const {
        if (o.n_ != n_) {
            throw RankMismatch("fiber forms of rank " + std::to_string(n_) + " and " + std::to_string(o.n_));
        }
    }

    // "e+[1]^e-[2] + (-q)*e+[2]^e-[1]"; the zero form renders as "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            if (c.is_one()) out += m.to_string();
            else if (m.is_unit()) out += parenthesize(c.to_string());
            else out += parenthesize(c.to_string()) + "*" + m.to_string();
        }
        return out;
    }

private:
    int n_;
    TermMap terms_;
};

// ---------------------------------------------------------------- bases

inline std::vector<std::uint32_t> subsets_of_size(int n, int size) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == size) out.push_back(m);
    std::sort(out.begin(), out.end(), [](auto x, auto y) { return detail::lex_compare(x, y) < 0; });
    return out;
}

// Basis of V^{(a,b)} in monomial order.
inline std::vector<Monomial> basis(int n, int a, int b) {
    check_rank(n);
    std::vector<Monomial> out;
    if (a < 0 || b < 0 || a > n || b > n) return out;
    for (auto p : subsets_of_size(n, a))
        for (auto m : subsets_of_size(n, b)) out.push_back({p, m});
    return out;
}

// Basis of V^k in monomial order.
inline std::vector<Monomial> basis(int n, int k) {
    std::vector<Monomial> out;
    for (int a = std::min(n, k); a >= 0; --a) {
        auto part = basis(n, a, k - a);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// e• = e+_1 ^ ... ^ e+_n ^ e-_1 ^ ... ^ e-_n
inline Monomial top_monomial(int n) {
    std::uint32_t full = (1u << n) - 1;
    return {full, full};
}

// ---------------------------------------------------------------- wedge

namespace detail {

struct Rewrite {
    Scalar coeff;
    Generator first;
    Generator second;
};

// Relations oriented as rewrite rules y ^ g -> sum, applicable when g < y.
inline std::vector<Rewrite> rewrite_pair(int n, const Generator& y, const Generator& g) {
    if (!y.minus && !g.minus) return {{-Scalar::q(), g, y}};        // e+_i e+_h -> -q e+_h e+_i
    if (y.minus && g.minus) return {{-Scalar::q(-1), g, y}};        // e-_i e-_h -> -q^-1 e-_h e-_i
    if (y.index != g.index) return {{-Scalar::q(), g, y}};          // e-_i e+_j -> -q e+_j e-_i
    std::vector<Rewrite> out{{-Scalar::q(2), g, y}};                // e-_i e+_i -> -q^2 e+_i e-_i
    for (int a = y.index + 1; a <= n; ++a) {                        //   - (q^2 - 1) sum_{a>i} e+_a e-_a
        out.push_back({Scalar(1) - Scalar::q(2), {false, a}, {true, a}});
    }
    return out;
}

inline Generator last_generator(const Monomial& m) {
    if (m.minus != 0) return {true, 32 - std::countl_zero(m.minus)};
    return {false, 32 - std::countl_zero(m.plus)};
}

inline Monomial without(const Monomial& m, const Generator& g) {
    Monomial r = m;
    (g.minus ? r.minus : r.plus) &= ~(1u << (g.index - 1));
    return r;
}

inline Monomial with(const Monomial& m, const Generator& g) {
    Monomial r = m;
    (g.minus ? r.minus : r.plus) |= 1u << (g.index - 1);
    return r;
}

struct WedgeTables {
    std::mutex mu;
    std::map<std::tuple<int, std::uint32_t, std::uint32_t, bool, int>, FiberForm> by_generator;
    std::map<std::tuple<int, std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>, FiberForm> by_monomial;
};

// Per-thread memo; every entry is a pure function of its key.
inline WedgeTables& wedge_tables() {
    thread_local WedgeTables tables;
    return tables;
}

FiberForm times_generator(int n, const FiberForm& u, const Generator& g);

// Normal form of m ^ g.
inline FiberForm monomial_times_generator(int n, const Monomial& m, const Generator& g) {
    auto& tables = wedge_tables();
    auto key = std::make_tuple(n, m.plus, m.minus, g.minus, g.index);
    if (auto it = tables.by_generator.find(key); it != tables.by_generator.end()) return it->second;

    FiberForm result(n);
    if (m.is_unit()) {
        result = FiberForm::generator(n, g);
    } else {
        Generator y = last_generator(m);
        if (y < g) {
            result.add_term(with(m, g), Scalar(1));
        } else if (y == g) {
            // e+_i e+_i = e-_i e-_i = 0
        } else {
            FiberForm head(n, without(m, y));
            for (const auto& rule : rewrite_pair(n, y, g)) {
                result += rule.coeff * times_generator(n, times_generator(n, head, rule.first), rule.second);
            }
        }
    }
    tables.by_generator.emplace(key, result);
    return result;
}

inline FiberForm times_generator(int n, const FiberForm& u, const Generator& g) {
    FiberForm out(n);
    for (const auto& [m, c] : u.terms()) {
        FiberForm prod = monomial_times_generator(n, m, g);
        for (const auto& [m2, c2] : prod.terms()) out.add_term(m2, c * c2);
    }
    return out;
}

inline FiberForm monomial_product(int n, const Monomial& x, const Monomial& y) {
    auto& tables = wedge_tables();
    auto key = std::make_tuple(n, x.plus, x.minus, y.plus, y.minus);
    if (auto it = tables.by_monomial.find(key); it != tables.by_monomial.end()) return it->second;
    FiberForm acc(n, x);
    for (const auto& g : y.word()) {
        acc = times_generator(n, acc, g);
        if (acc.is_zero()) break;
    }
    tables.by_monomial.emplace(key, acc);
    return acc;
}

}  // namespace detail

inline FiberForm wedge(const FiberForm& u, const FiberForm& v) {
    u.check_same(v);
    const int n = u.rank();
    FiberForm out(n);
    for (const auto& [mu, cu] : u.terms()) {
        for (const auto& [mv, cv] : v.terms()) {
            Scalar c = cu * cv;
            FiberForm prod = detail::monomial_product(n, mu, mv);
            for (const auto& [m, cm] : prod.terms()) out.add_term(m, c * cm);
        }
    }
    return out;
}

// ---------------------------------------------------------------- *-map

// (e-_a)* = q^{s_a} e+_a and (e+_a)* = q^{-s_a} e-_a.  The default
// s_a = 2(a+1) is the convention used throughout; others exist for the fit.
struct StarConvention {
    std::vector<int> minus_exponent;  // s_1 .. s_n

    static StarConvention standard(int n) {
        StarConvention c;
        for (int a = 1; a <= n; ++a) c.minus_exponent.push_back(2 * (a + 1));
        return c;
    }
    int exponent(int a) const { return minus_exponent.at(static_cast<std::size_t>(a - 1)); }
};

namespace detail {

inline FiberForm star_generator(int n, const Generator& g, const StarConvention& conv) {
    int e = conv.exponent(g.index);
    if (g.minus) return {n, Monomial{1u << (g.index - 1), 0}, Scalar::q(e)};
    return {n, Monomial{0, 1u << (g.index - 1)}, Scalar::q(-e)};
}

// (x_1 ^ ... ^ x_k)* = (-1)^{k(k-1)/2} x_k* ^ ... ^ x_1*
inline FiberForm star_monomial(int n, const Monomial& m, const StarConvention& conv) {
    auto w = m.word();
    FiberForm acc = FiberForm::unit(n);
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = wedge(acc, star_generator(n, *it, conv));
    const std::size_t k = w.size();
    if ((k * (k - 1) / 2) % 2 == 1) acc = -acc;
    return acc;
}

}  // namespace detail

// Conjugate-linear graded anti-involution.
inline FiberForm star(const FiberForm& u, const StarConvention& conv) {
    if (static_cast<int>(conv.minus_exponent.size()) != u.rank()) throw RankMismatch("star: convention rank mismatch");
    FiberForm out(u.rank());
    for (const auto& [m, c] : u.terms()) {
        Scalar cc = c.conj();
        FiberForm image = detail::star_monomial(u.rank(), m, conv);
        for (const auto& [m2, c2] : image.terms()) out.add_term(m2, cc * c2);
    }
    return out;
}

inline FiberForm star(const FiberForm& u) { return star(u, StarConvention::standard(u.rank())); }

// ---------------------------------------------------------------- gradings

inline std::map<Bidegree, FiberForm> bidegree_split(const FiberForm& u) {
    std::map<Bidegree, FiberForm> out;
    for (const auto& [m, c] : u.terms()) {
        out.try_emplace(m.bidegree(), u.rank()).first->second.add_term(m, c);
    }
    return out;
}

inline std::map<int, FiberForm> degree_split(const FiberForm& u) {
    std::map<int, FiberForm> out;
    for (const auto& [m, c] : u.terms()) out.try_emplace(m.degree(), u.rank()).first->second.add_term(m, c);
    return out;
}

using Weight = std::vector<int>;

// Torus weight: e+_i contributes unit_i + (1,...,1), e-_i the negative.
inline Weight weight(int n, const Monomial& m) {
    Weight w(static_cast<std::size_t>(n), 0);
    auto bump = [&](std::uint32_t mask, int sign) {
        for (int i : Monomial::indices(mask)) {
            for (auto& x : w) x += sign;
            w[static_cast<std::size_t>(i - 1)] += sign;
        }
    };
    bump(m.plus, 1);
    bump(m.minus, -1);
    return w;
}

// Coordinates of u against a monomial list (components outside it ignored).
inline std::vector<Scalar> coordinates(const FiberForm& u, const std::vector<Monomial>& basis_list) {
    std::vector<Scalar> out;
    out.reserve(basis_list.size());
    for (const auto& m : basis_list) out.push_back(u.coefficient(m));
    return out;
}

inline FiberForm from_coordinates(int n, const std::vector<Monomial>& basis_list, const std::vector<Scalar>& coords) {
    FiberForm u(n);
    for (std::size_t k = 0; k < basis_list.size(); ++k) u.add_term(basis_list[k], coords[k]);
    return u;
}

}  // namespace qkahler
