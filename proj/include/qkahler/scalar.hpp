#pragma once

// Exact coefficient field Q(i)(q): Gaussian rationals, Laurent polynomials in
// q over them, and reduced rational functions.  Also the quantum-integer
// helpers and the Hodge-parameter mode used throughout the library.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace qkahler {

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        mpq_class d = o.norm();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / d;
        mpq_class m = (im_ * o.re_ - re_ * o.im_) / d;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // "3", "-1/2", "i", "-2*i", "1/2 - i"
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        if (sgn(re_) != 0) out = re_.get_str();
        if (sgn(im_) != 0) {
            mpq_class mag = abs(im_);
            std::string body = mag == 1 ? "i" : mag.get_str() + "*i";
            if (out.empty()) {
                out = (sgn(im_) < 0 ? "-" : "") + body;
            } else {
                out += (sgn(im_) < 0 ? " - " : " + ") + body;
            }
        }
        return out;
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline mpq_class rational_pow(const mpq_class& base, int e) {
    if (e == 0) return 1;
    if (e < 0) {
        if (sgn(base) == 0) throw std::domain_error("rational_pow: zero to a negative power");
        return 1 / rational_pow(base, -e);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

namespace detail {

// Dense polynomial over Q(i); index = degree, no trailing zeros.
using DensePoly = std::vector<GaussianRational>;

inline void trim(DensePoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Long division; b must be nonzero.
inline std::pair<DensePoly, DensePoly> divmod(DensePoly a, const DensePoly& b) {
    trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {DensePoly{}, a};
    DensePoly quot(a.size() - b.size() + 1);
    const GaussianRational& lead = b.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        const GaussianRational& top = a[k + b.size() - 1];
        if (top.is_zero()) continue;
        GaussianRational c = top / lead;
        for (std::size_t t = 0; t < b.size(); ++t) {
            if (!b[t].is_zero()) a[k + t] -= c * b[t];
        }
        quot[k] = std::move(c);
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(quot);
    return {quot, a};
}

inline void make_monic(DensePoly& p) {
    if (p.empty()) return;
    GaussianRational lead = p.back();
    for (auto& c : p) c /= lead;
}

// Monic Euclidean remainder sequence; gcd(0, 0) = 0.
inline DensePoly gcd(DensePoly a, DensePoly b) {
    trim(a);
    trim(b);
    make_monic(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        make_monic(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

}  // namespace detail

class LaurentPoly {
public:
    using TermMap = std::map<int, GaussianRational>;

    LaurentPoly() = default;
    LaurentPoly(long c) { add_term(0, GaussianRational(c)); }  // NOLINT(google-explicit-constructor)
    LaurentPoly(const GaussianRational& c) { add_term(0, c); }  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(int exponent, const GaussianRational& c = 1) {
        LaurentPoly p;
        p.add_term(exponent, c);
        return p;
    }

    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }
    int low() const { return terms_.begin()->first; }
    int high() const { return terms_.rbegin()->first; }
    std::size_t size() const { return terms_.size(); }

    GaussianRational coefficient(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? GaussianRational{} : it->second;
    }

    void add_term(int e, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
        return r;
    }

    LaurentPoly conj() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.conj());
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    GaussianRational evaluate(const mpq_class& q0) const {
        GaussianRational acc;
        for (const auto& [e, c] : terms_) acc += c * GaussianRational(rational_pow(q0, e));
        return acc;
    }

    // Coefficients of q^{-low} * p, as an ordinary polynomial.
    detail::DensePoly dense() const {
        detail::DensePoly d;
        if (is_zero()) return d;
        d.resize(static_cast<std::size_t>(high() - low() + 1));
        for (const auto& [e, c] : terms_) d[static_cast<std::size_t>(e - low())] = c;
        return d;
    }

    static LaurentPoly from_dense(const detail::DensePoly& d, int shift) {
        LaurentPoly p;
        for (std::size_t k = 0; k < d.size(); ++k) p.add_term(static_cast<int>(k) + shift, d[k]);
        return p;
    }

    // Exact quotient in Q(i)[q, q^-1], or nullopt when b does not divide a.
    friend std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw std::domain_error("LaurentPoly: division by zero");
        if (a.is_zero()) return LaurentPoly{};
        if (b.is_monomial()) {
            const auto& [eb, cb] = *b.terms_.begin();
            LaurentPoly r;
            for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e - eb, c / cb);
            return r;
        }
        auto [quot, rem] = detail::divmod(a.dense(), b.dense());
        if (!rem.empty()) return std::nullopt;
        return from_dense(quot, a.low() - b.low());
    }

    // Monic gcd with lowest exponent 0 (units of the Laurent ring removed).
    friend LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() && b.is_zero()) return {};
        if (a.is_zero() || b.is_zero()) {
            const LaurentPoly& x = a.is_zero() ? b : a;
            return from_dense(detail::gcd(x.dense(), {}), 0);
        }
        if (a.is_monomial() || b.is_monomial()) return LaurentPoly(1);
        return from_dense(detail::gcd(a.dense(), b.dense()), 0);
    }

    std::string to_string() const;

private:
    TermMap terms_;
};

// Hodge parameter selector.  NUMERIC keeps q symbolic and fixes h = h0; q0 is
// the sample point for numeric certification.
struct HodgeMode {
    enum class Kind { HEqQ, HEqOne, Numeric };
    Kind kind = Kind::HEqQ;
    mpq_class q0{1};
    mpq_class h0{1};

    static HodgeMode h_eq_q() { return {}; }
    static HodgeMode h_eq_one() { return {Kind::HEqOne, 1, 1}; }
    static HodgeMode numeric(mpq_class q0, mpq_class h0) {
        if (sgn(q0) <= 0 || sgn(h0) <= 0) throw std::invalid_argument("numeric mode needs q0, h0 > 0");
        return {Kind::Numeric, std::move(q0), std::move(h0)};
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::HEqQ: return "hq";
            case Kind::HEqOne: return "h1";
            case Kind::Numeric: return "numeric:" + q0.get_str() + ":" + h0.get_str();
        }
        return {};
    }

    friend bool operator==(const HodgeMode& a, const HodgeMode& b) {
        return a.kind == b.kind && a.q0 == b.q0 && a.h0 == b.h0;
    }
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};
class NonPositiveSampleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Element of Q(i)(q), always stored reduced with the denominator's lowest
// term equal to 1*q^0.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}                     // NOLINT(google-explicit-constructor)
    Scalar(const GaussianRational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}   // NOLINT(google-explicit-constructor)
    Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    static Scalar q(int power = 1) { return LaurentPoly::monomial(power); }
    static Scalar i() { return GaussianRational::i(); }
    static Scalar rational(long num, long den) { return GaussianRational(mpq_class(num, den)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Scalar conj() const {
        Scalar r;
        r.num_ = num_.conj();
        r.den_ = den_.conj();
        r.normalize_den();
        return r;
    }

    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Scalar& operator+=(const Scalar& o) {
        if (o.is_zero()) return *this;
        if (den_.is_one() && o.den_.is_one()) {
            num_ += o.num_;
            return *this;
        }
        if (den_ == o.den_) {
            num_ += o.num_;
            canonicalize();
            return *this;
        }
        LaurentPoly g = gcd(den_, o.den_);
        LaurentPoly a = *exact_quotient(o.den_, g);
        LaurentPoly b = *exact_quotient(den_, g);
        num_ = num_ * a + o.num_ * b;
        den_ = den_ * a;
        canonicalize();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += -o; }
    Scalar& operator*=(const Scalar& o) {
        if (is_zero()) return *this;
        if (o.is_zero()) return *this = Scalar{};
        if (den_.is_one() && o.den_.is_one()) {
            num_ = num_ * o.num_;
            return *this;
        }
        LaurentPoly g1 = gcd(num_, o.den_);
        LaurentPoly g2 = gcd(o.num_, den_);
        num_ = *exact_quotient(num_, g1) * *exact_quotient(o.num_, g2);
        den_ = *exact_quotient(den_, g2) * *exact_quotient(o.den_, g1);
        normalize_den();
        return *this;
    }
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        Scalar r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_den();
        return r;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    Scalar pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar r(1), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // Exact substitution q = q0.
    GaussianRational evaluate(const mpq_class& q0) const {
        if (sgn(q0) <= 0) throw NonPositiveSampleError("evaluate: sample point must be > 0, got " + q0.get_str());
        GaussianRational d = den_.evaluate(q0);
        if (d.is_zero()) throw PoleError("evaluate: pole at q = " + q0.get_str());
        return num_.evaluate(q0) / d;
    }

    // Rough size used to rank elimination pivots.
    std::size_t complexity() const {
        std::size_t c = num_.size() + den_.size();
        if (!num_.is_zero()) c += static_cast<std::size_t>(num_.high() - num_.low());
        c += static_cast<std::size_t>(den_.high() - den_.low());
        return c;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

    static Scalar parse(std::string_view text);

private:
    void normalize_den() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        auto [e, c] = *den_.terms().begin();
        if (e == 0 && c.is_one()) return;
        LaurentPoly unit = LaurentPoly::monomial(-e, GaussianRational(1) / c);
        num_ = num_ * unit;
        den_ = den_ * unit;
    }
    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        if (!den_.is_monomial()) {
            LaurentPoly g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = *exact_quotient(num_, g);
                den_ = *exact_quotient(den_, g);
            }
        }
        normalize_den();
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

inline Scalar conjugate(const Scalar& s) { return s.conj(); }
inline GaussianRational evaluate(const Scalar& s, const mpq_class& q0) { return s.evaluate(q0); }

// ---------------------------------------------------------------- rendering

inline std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string qpart = e == 0 ? "" : e == 1 ? "q" : "q^" + std::to_string(e);
        if (c.is_real()) {
            bool neg = sgn(c.real()) < 0;
            mpq_class mag = abs(c.real());
            std::string body;
            if (qpart.empty()) body = mag.get_str();
            else if (mag == 1) body = qpart;
            else body = mag.get_str() + "*" + qpart;
            if (first) out = (neg ? "-" : "") + body;
            else out += (neg ? " - " : " + ") + body;
        } else {
            std::string body = "(" + c.to_string() + ")" + (qpart.empty() ? "" : "*" + qpart);
            out += first ? body : " + " + body;
        }
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- parsing
//
// expr  := term (('+' | '-') term)*
// term  := unary (('*' | '/') unary)*
// unary := '-' unary | power
// power := atom ('^' '-'? integer)?
// atom  := integer | 'q' | 'i' | '(' expr ')'

namespace detail {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    Scalar run() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("Scalar::parse: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                         std::string(s_) + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (accept('*')) v *= unary();
            else if (accept('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else return v;
        }
    }
    Scalar unary() {
        if (accept('-')) return -unary();
        return power();
    }
    Scalar power() {
        Scalar base = atom();
        if (accept('^')) {
            bool neg = accept('-');
            skip();
            long e = integer();
            return base.pow(static_cast<int>(neg ? -e : e));
        }
        return base;
    }
    long integer() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    Scalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return Scalar::q();
        }
        if (c == 'i') {
            ++pos_;
            return Scalar::i();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class z(std::string(s_.substr(start, pos_ - start)));
            return GaussianRational(mpq_class(z));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) { return detail::ScalarParser(text).run(); }

// ---------------------------------------------------------------- quantum integers

// h as a Scalar under the given mode.
inline Scalar hodge_parameter(const HodgeMode& mode) {
    switch (mode.kind) {
        case HodgeMode::Kind::HEqQ: return Scalar::q();
        case HodgeMode::Kind::HEqOne: return Scalar(1);
        case HodgeMode::Kind::Numeric: return GaussianRational(mode.h0);
    }
    return Scalar(1);
}

inline Scalar hpow(int e, const HodgeMode& mode) {
    if (mode.kind == HodgeMode::Kind::HEqQ) return Scalar::q(e);
    if (mode.kind == HodgeMode::Kind::HEqOne) return Scalar(1);
    return GaussianRational(rational_pow(mode.h0, e));
}

namespace detail {

struct QintCache {
    std::mutex mu;
    std::map<std::tuple<int, std::string, int>, Scalar> values;
};

inline QintCache& qint_cache() {
    static QintCache cache;
    return cache;
}

inline Scalar qint_uncached(int m, const HodgeMode& mode) {
    Scalar r;
    for (int t = 0; t < m; ++t) r += hpow(m - 1 - 2 * t, mode);
    return r;
}

}  // namespace detail

// [m]_h = h^{m-1} + h^{m-3} + ... + h^{1-m}; [0] = 0.
inline Scalar qint(int m, const HodgeMode& mode = HodgeMode::h_eq_q()) {
    if (m < 0) throw std::invalid_argument("qint: negative argument " + std::to_string(m));
    if (m <= 1) return Scalar(m);
    auto& cache = detail::qint_cache();
    auto key = std::make_tuple(static_cast<int>(mode.kind), mode.h0.get_str(), m);
    {
        std::lock_guard lock(cache.mu);
        if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
    }
    Scalar v = detail::qint_uncached(m, mode);
    std::lock_guard lock(cache.mu);
    cache.values.emplace(key, v);
    return v;
}

// [-m] = -[m]; used by the counting operator H.
inline Scalar signed_qint(int m, const HodgeMode& mode = HodgeMode::h_eq_q()) {
    return m < 0 ? -qint(-m, mode) : qint(m, mode);
}

inline Scalar qfact(int m, const HodgeMode& mode = HodgeMode::h_eq_q()) {
    if (m < 0) throw std::invalid_argument("qfact: negative argument " + std::to_string(m));
    Scalar r(1);
    for (int j = 2; j <= m; ++j) r *= qint(j, mode);
    return r;
}

inline Scalar qbinom(int a, int b, const HodgeMode& mode = HodgeMode::h_eq_q()) {
    if (b < 0 || a < 0 || b > a) {
        throw std::invalid_argument("qbinom: need 0 <= b <= a, got (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ")");
    }
    return qfact(a, mode) / (qfact(b, mode) * qfact(a - b, mode));
}

// Wraps s in parentheses unless it already is one balanced group.
inline std::string parenthesize(const std::string& s) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        std::size_t i = 0;
        for (; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            else if (s[i] == ')' && --depth == 0) break;
        }
        if (i == s.size() - 1) return s;
    }
    return "(" + s + ")";
}

}  // namespace qkahler
