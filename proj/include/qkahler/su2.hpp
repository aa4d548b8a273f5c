#pragma once

// C_q[SU_2] in the PBW basis a^x b^y c^z d^w (a and d never together), with
// the matrix-coalgebra coproduct, counit and antipode.

#include "scalar.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qkahler {

enum class SU2Gen { a = 0, b = 1, c = 2, d = 3 };

struct SU2Monomial {
    std::array<int, 4> exp{};  // powers of a, b, c, d

    static SU2Monomial unit() { return {}; }
    static SU2Monomial of(SU2Gen g) {
        SU2Monomial m;
        m.exp[static_cast<int>(g)] = 1;
        return m;
    }
    static SU2Monomial make(int a, int b, int c, int d) {
        if (a > 0 && d > 0) throw std::invalid_argument("SU2Monomial: a and d cannot both occur");
        if (a < 0 || b < 0 || c < 0 || d < 0) throw std::invalid_argument("SU2Monomial: negative exponent");
        return {{a, b, c, d}};
    }

    int degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
    bool is_unit() const { return degree() == 0; }

    // Letters in normal order.
    std::vector<SU2Gen> word() const {
        std::vector<SU2Gen> w;
        for (int g = 0; g < 4; ++g)
            for (int t = 0; t < exp[g]; ++t) w.push_back(static_cast<SU2Gen>(g));
        return w;
    }

    friend auto operator<=>(const SU2Monomial&, const SU2Monomial&) = default;

    // "a^2 b c"; the unit is "1".
    std::string to_string() const {
        static const char* names = "abcd";
        std::string s;
        for (int g = 0; g < 4; ++g) {
            if (exp[g] == 0) continue;
            if (!s.empty()) s += ' ';
            s += names[g];
            if (exp[g] > 1) s += "^" + std::to_string(exp[g]);
        }
        return s.empty() ? "1" : s;
    }
};

class SU2Element {
public:
    using TermMap = std::map<SU2Monomial, Scalar>;

    SU2Element() = default;
    SU2Element(const Scalar& s) { add_term(SU2Monomial::unit(), s); }  // NOLINT
    SU2Element(const SU2Monomial& m, const Scalar& c = Scalar(1)) { add_term(m, c); }

    static SU2Element generator(SU2Gen g) { return SU2Element(SU2Monomial::of(g)); }

    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    Scalar coefficient(const SU2Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar{} : it->second;
    }

    void add_term(const SU2Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SU2Element& operator+=(const SU2Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SU2Element& operator-=(const SU2Element& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    SU2Element operator-() const {
        SU2Element r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend SU2Element operator+(SU2Element x, const SU2Element& y) { return x += y; }
    friend SU2Element operator-(SU2Element x, const SU2Element& y) { return x -= y; }
    friend SU2Element operator*(const Scalar& s, const SU2Element& x) {
        SU2Element r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : x.terms_) r.terms_.emplace(m, s * c);
        return r;
    }
    friend bool operator==(const SU2Element&, const SU2Element&) = default;

    // Terms by descending degree then descending monomial: "(q^2)*a b + 1".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<SU2Monomial, Scalar>> ts(terms_.begin(), terms_.end());
        std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
            if (x.first.degree() != y.first.degree()) return x.first.degree() > y.first.degree();
            return y.first < x.first;
        });
        std::string out;
        for (const auto& [m, c] : ts) {
            if (!out.empty()) out += " + ";
            if (m.is_unit()) out += c.is_one() ? "1" : parenthesize(c.to_string());
            else if (c.is_one()) out += m.to_string();
            else out += parenthesize(c.to_string()) + "*" + m.to_string();
        }
        return out;
    }

private:
    TermMap terms_;
};

namespace detail {

// y * x for letters y > x, as a normal-form element.
inline SU2Element su2_swap(SU2Gen y, SU2Gen x) {
    const Scalar q = Scalar::q(), qi = Scalar::q(-1);
    auto m = [](int a, int b, int c, int d) { return SU2Monomial::make(a, b, c, d); };
    if (y == SU2Gen::b && x == SU2Gen::a) return SU2Element(m(1, 1, 0, 0), qi);
    if (y == SU2Gen::c && x == SU2Gen::a) return SU2Element(m(1, 0, 1, 0), qi);
    if (y == SU2Gen::d && x == SU2Gen::a) return SU2Element(Scalar(1)) + SU2Element(m(0, 1, 1, 0), qi);
    if (y == SU2Gen::c && x == SU2Gen::b) return SU2Element(m(0, 1, 1, 0));
    if (y == SU2Gen::d && x == SU2Gen::b) return SU2Element(m(0, 1, 0, 1), qi);
    if (y == SU2Gen::d && x == SU2Gen::c) return SU2Element(m(0, 0, 1, 1), qi);
    throw std::logic_error("su2_swap: letters already ordered");
}

inline SU2Element su2_times_generator(const SU2Monomial& m, SU2Gen g);

inline SU2Element su2_times_generator(const SU2Element& x, SU2Gen g) {
    SU2Element out;
    for (const auto& [m, c] : x.terms()) {
        SU2Element p = su2_times_generator(m, g);
        out += c * p;
    }
    return out;
}

inline SU2Element su2_times_word(SU2Element x, const std::vector<SU2Gen>& w) {
    for (SU2Gen g : w) x = su2_times_generator(x, g);
    return x;
}

inline SU2Element su2_times_generator(const SU2Monomial& m, SU2Gen g) {
    thread_local std::map<std::pair<SU2Monomial, int>, SU2Element> memo;
    auto key = std::make_pair(m, static_cast<int>(g));
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    SU2Element out;
    int last = -1;
    for (int t = 3; t >= 0; --t)
        if (m.exp[t] > 0) {
            last = t;
            break;
        }
    const int gi = static_cast<int>(g);
    if (last <= gi) {
        if (g == SU2Gen::d && m.exp[0] > 0) {
            // a^x b^y c^z d = q^{y+z} a^{x-1} (1 + q bc) b^y c^z
            const auto& e = m.exp;
            Scalar f = Scalar::q(e[1] + e[2]);
            out.add_term(SU2Monomial::make(e[0] - 1, e[1], e[2], 0), f);
            out.add_term(SU2Monomial::make(e[0] - 1, e[1] + 1, e[2] + 1, 0), f * Scalar::q());
        } else {
            SU2Monomial r = m;
            ++r.exp[gi];
            out.add_term(r, Scalar(1));
        }
    } else {
        SU2Monomial prefix = m;
        --prefix.exp[last];
        SU2Element swapped = su2_swap(static_cast<SU2Gen>(last), g);
        for (const auto& [w, c] : swapped.terms()) {
            SU2Element p = su2_times_word(SU2Element(prefix), w.word());
            out += c * p;
        }
    }
    memo.emplace(key, out);
    return out;
}

}  // namespace detail

inline SU2Element multiply(const SU2Element& x, const SU2Element& y) {
    SU2Element out;
    for (const auto& [my, cy] : y.terms()) {
        SU2Element p = detail::su2_times_word(x, my.word());
        out += cy * p;
    }
    return out;
}
inline SU2Element operator*(const SU2Element& x, const SU2Element& y) { return multiply(x, y); }

inline SU2Element su2_power(const SU2Element& x, int k) {
    if (k < 0) throw std::invalid_argument("su2_power: negative exponent");
    SU2Element r(Scalar(1));
    for (int t = 0; t < k; ++t) r = r * x;
    return r;
}

// u^i_j: u11 = a, u12 = b, u21 = c, u22 = d.
inline SU2Element u(int i, int j) {
    if (i < 1 || i > 2 || j < 1 || j > 2) throw std::invalid_argument("u: indices must be 1 or 2");
    return SU2Element::generator(static_cast<SU2Gen>(2 * (i - 1) + (j - 1)));
}

inline Scalar counit(const SU2Element& x) {
    Scalar r;
    for (const auto& [m, c] : x.terms())
        if (m.exp[1] == 0 && m.exp[2] == 0) r += c;
    return r;
}

inline SU2Element antipode_generator(SU2Gen g) {
    switch (g) {
        case SU2Gen::a: return u(2, 2);
        case SU2Gen::b: return Scalar(-1) * Scalar::q(-1) * u(1, 2);
        case SU2Gen::c: return Scalar(-1) * Scalar::q() * u(2, 1);
        case SU2Gen::d: return u(1, 1);
    }
    throw std::logic_error("antipode_generator");
}

inline SU2Element antipode(const SU2Element& x) {
    SU2Element out;
    for (const auto& [m, c] : x.terms()) {
        auto w = m.word();
        SU2Element p(Scalar(1));
        for (auto it = w.rbegin(); it != w.rend(); ++it) p = p * antipode_generator(*it);
        out += c * p;
    }
    return out;
}

// Sums of simple tensors x_1 (x) ... (x) x_legs in the PBW basis of each leg.
class TensorElement {
public:
    using Key = std::vector<SU2Monomial>;

    explicit TensorElement(int legs = 2) : legs_(legs) {}

    static TensorElement simple(const std::vector<SU2Element>& factors) {
        TensorElement t(static_cast<int>(factors.size()));
        t.add_term(Key(factors.size(), SU2Monomial::unit()), Scalar(1));
        for (std::size_t leg = 0; leg < factors.size(); ++leg) t = t.apply_leg(leg, factors[leg]);
        return t;
    }

    int legs() const { return legs_; }
    const std::map<Key, Scalar>& terms() const& { return terms_; }
    std::map<Key, Scalar> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(k.size()) != legs_) throw std::invalid_argument("TensorElement: wrong number of legs");
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    TensorElement& operator+=(const TensorElement& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    friend TensorElement operator+(TensorElement x, const TensorElement& y) { return x += y; }
    friend TensorElement operator-(TensorElement x, const TensorElement& y) {
        x.check(y);
        for (const auto& [k, c] : y.terms_) x.add_term(k, -c);
        return x;
    }
    friend TensorElement operator*(const Scalar& s, const TensorElement& x) {
        TensorElement r(x.legs_);
        for (const auto& [k, c] : x.terms_) r.add_term(k, s * c);
        return r;
    }
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

    // Legwise product.
    friend TensorElement operator*(const TensorElement& x, const TensorElement& y) {
        x.check(y);
        TensorElement out(x.legs_);
        for (const auto& [kx, cx] : x.terms_) {
            for (const auto& [ky, cy] : y.terms_) {
                TensorElement part(x.legs_);
                part.add_term(kx, cx * cy);
                for (int leg = 0; leg < x.legs_; ++leg) part = part.apply_leg(leg, SU2Element(ky[leg]));
                out += part;
            }
        }
        return out;
    }

    // Replace leg `leg` of every term by leg * y.
    TensorElement apply_leg(std::size_t leg, const SU2Element& y) const {
        TensorElement out(legs_);
        for (const auto& [k, c] : terms_) {
            SU2Element prod = SU2Element(k[leg]) * y;
            for (const auto& [m, cm] : prod.terms()) {
                Key k2 = k;
                k2[leg] = m;
                out.add_term(k2, c * cm);
            }
        }
        return out;
    }

    // Apply a linear map to one leg, splitting it into one or more legs.
    template <class F>
    TensorElement map_leg(std::size_t leg, int new_legs, F&& f) const {
        TensorElement out(legs_ - 1 + new_legs);
        for (const auto& [k, c] : terms_) {
            TensorElement image = f(SU2Element(k[leg]));
            for (const auto& [ki, ci] : image.terms()) {
                Key k2(k.begin(), k.begin() + static_cast<long>(leg));
                k2.insert(k2.end(), ki.begin(), ki.end());
                k2.insert(k2.end(), k.begin() + static_cast<long>(leg) + 1, k.end());
                out.add_term(k2, c * ci);
            }
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            if (!out.empty()) out += " + ";
            if (!c.is_one()) out += parenthesize(c.to_string()) + "*";
            for (std::size_t leg = 0; leg < k.size(); ++leg) {
                if (leg) out += " (x) ";
                out += k[leg].to_string();
            }
        }
        return out;
    }

private:
    void check(const TensorElement& o) const {
        if (o.legs_ != legs_) throw std::invalid_argument("TensorElement: leg count mismatch");
    }

    int legs_;
    std::map<Key, Scalar> terms_;
};

// Delta(u^i_j) = sum_k u^i_k (x) u^k_j, extended multiplicatively.
inline TensorElement coproduct(const SU2Element& x) {
    auto gen = [](SU2Gen g) {
        const int i = static_cast<int>(g) / 2 + 1, j = static_cast<int>(g) % 2 + 1;
        return TensorElement::simple({u(i, 1), u(1, j)}) + TensorElement::simple({u(i, 2), u(2, j)});
    };
    TensorElement out(2);
    for (const auto& [m, c] : x.terms()) {
        TensorElement p = TensorElement::simple({SU2Element(Scalar(1)), SU2Element(Scalar(1))});
        for (SU2Gen g : m.word()) p = p * gen(g);
        out += c * p;
    }
    return out;
}

// (Delta (x) id) Delta
inline TensorElement coproduct2(const SU2Element& x) {
    return coproduct(x).map_leg(0, 2, [](const SU2Element& y) { return coproduct(y); });
}

// z_ij = u^i_1 S(u^1_j)
inline SU2Element z(int i, int j) { return u(i, 1) * antipode(u(1, j)); }

// Nonzero values of X(u^a_b S(u^y_x)) Y(u^b_1 S(u^1_y)), keyed (a, b, x, y).
inline const std::map<std::array<int, 4>, Scalar>& xy_table() {
    static const std::map<std::array<int, 4>, Scalar> table = {
        {{1, 1, 1, 2}, -Scalar::q(2)},
        {{2, 1, 2, 2}, Scalar(1)},
    };
    return table;
}

inline Scalar xy_value(int a, int b, int x, int y) {
    auto it = xy_table().find({a, b, x, y});
    return it == xy_table().end() ? Scalar{} : it->second;
}

// -sum_{a,b,x,y} XY(a,b,x,y) u^i_a S(u^x_j)
inline SU2Element laplacian0_cp1(int i, int j) {
    if (i < 1 || i > 2 || j < 1 || j > 2) throw std::invalid_argument("laplacian0_cp1: indices must be 1 or 2");
    SU2Element out;
    for (const auto& [key, v] : xy_table()) {
        const int a = key[0], x = key[2];
        out -= v * (u(i, a) * antipode(u(x, j)));
    }
    return out;
}

// Normal-form monomials of total degree <= max_degree.
inline std::vector<SU2Monomial> pbw_monomials(int max_degree) {
    std::vector<SU2Monomial> out;
    for (int a = 0; a <= max_degree; ++a)
        for (int b = 0; a + b <= max_degree; ++b)
            for (int c = 0; a + b + c <= max_degree; ++c)
                for (int d = 0; a + b + c + d <= max_degree; ++d)
                    if (a == 0 || d == 0) out.push_back(SU2Monomial::make(a, b, c, d));
    return out;
}

}  // namespace qkahler
