#pragma once

// Verification suites over one (n, mode) configuration.  Every check yields a
// pass/fail/n-a entry; failures carry a witness.

#include "fiber.hpp"
#include "hodge.hpp"
#include "io.hpp"
#include "lefschetz.hpp"
#include "su2.hpp"
#include "uqsl2.hpp"

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qkahler {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    int n = 2;
    HodgeMode mode = HodgeMode::h_eq_q();
    std::vector<mpq_class> q_samples{mpq_class(9, 10), mpq_class(1), mpq_class(11, 10)};
    std::string suite = "all";
};

// "hq" / "h=q", "h1" / "h=1", "numeric:Q0[:H0]" (H0 defaults to Q0).
inline HodgeMode parse_mode(const std::string& text) {
    if (text == "hq" || text == "h=q") return HodgeMode::h_eq_q();
    if (text == "h1" || text == "h=1") return HodgeMode::h_eq_one();
    const std::string prefix = "numeric:";
    if (text.rfind(prefix, 0) == 0) {
        std::string rest = text.substr(prefix.size());
        std::string q0s = rest, h0s;
        if (auto colon = rest.find(':'); colon != std::string::npos) {
            q0s = rest.substr(0, colon);
            h0s = rest.substr(colon + 1);
        }
        auto rat = [&](const std::string& s) {
            mpq_class v;
            if (s.empty() || v.set_str(s, 10) != 0) throw ConfigError("bad rational '" + s + "' in mode " + text);
            v.canonicalize();
            if (sgn(v) <= 0) throw ConfigError("numeric mode needs positive values: " + text);
            return v;
        };
        mpq_class q0 = rat(q0s);
        mpq_class h0 = h0s.empty() ? q0 : rat(h0s);
        return HodgeMode::numeric(q0, h0);
    }
    throw ConfigError("unknown mode '" + text + "' (expected hq, h1 or numeric:Q0[:H0])");
}

inline std::vector<mpq_class> parse_q_samples(const std::string& text) {
    std::vector<mpq_class> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        mpq_class v;
        if (item.empty() || v.set_str(item, 10) != 0) throw ConfigError("bad q sample '" + item + "'");
        v.canonicalize();
        if (sgn(v) <= 0) throw ConfigError("q samples must be positive, got " + item);
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"relations", "hodge",   "metric",        "lids",
                                                   "strings",   "posdef",  "cp1-laplacian", "all"};
    return names;
}

struct CheckResult {
    std::string suite;
    std::string check;
    CheckStatus status = CheckStatus::Pass;
    bool informational = false;
    json detail;
    std::optional<json> witness;
};

struct SuiteRun {
    std::vector<CheckResult> results;

    bool passed() const {
        for (const auto& r : results)
            if (!r.informational && r.status == CheckStatus::Fail) return false;
        return true;
    }

    json results_json() const {
        json arr = json::array();
        for (const auto& r : results) {
            json j = {{"suite", r.suite}, {"check", r.check}, {"status", to_string(r.status)}};
            if (r.informational) j["informational"] = true;
            if (!r.detail.is_null()) j["detail"] = r.detail;
            arr.push_back(std::move(j));
        }
        return arr;
    }

    json failures_json() const {
        json arr = json::array();
        for (const auto& r : results) {
            if (r.status != CheckStatus::Fail || r.informational) continue;
            json j = {{"suite", r.suite}, {"check", r.check}};
            if (r.witness) j["witness"] = *r.witness;
            if (!r.detail.is_null()) j["detail"] = r.detail;
            arr.push_back(std::move(j));
        }
        return arr;
    }
};

namespace detail {

inline json form_witness(const FiberForm& input, const FiberForm& lhs, const FiberForm& rhs) {
    return {{"input", to_json(input)}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
}

inline json scalar_witness(const std::string& input, const Scalar& lhs, const Scalar& rhs) {
    return {{"input", input}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
}

inline std::string bd_string(const Bidegree& bd) {
    return "(" + std::to_string(bd.first) + "," + std::to_string(bd.second) + ")";
}

inline long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (int t = 1; t <= b; ++t) r = r * (a - b + t) / t;
    return r;
}

}  // namespace detail

class Verifier {
public:
    explicit Verifier(RunConfig cfg) : cfg_(validated(std::move(cfg))), kf_(cfg_.n, cfg_.mode) {}

    static RunConfig validated(RunConfig cfg) {
        if (cfg.n < 1 || cfg.n > 6) throw ConfigError("rank n must be in [1, 6]");
        if (cfg.q_samples.empty()) throw ConfigError("at least one q sample is required");
        for (const auto& q0 : cfg.q_samples)
            if (sgn(q0) <= 0) throw ConfigError("q samples must be positive");
        if (std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end()) {
            throw ConfigError("unknown suite '" + cfg.suite + "'");
        }
        if (cfg.mode.kind != HodgeMode::Kind::Numeric && cfg.n > 4 && cfg.suite != "cp1-laplacian") {
            throw ConfigError("symbolic modes support n <= 4 for verification");
        }
        return cfg;
    }

    const KahlerFiber& fiber() const { return kf_; }

    SuiteRun run() {
        const std::string& s = cfg_.suite;
        auto want = [&](const char* name) { return s == "all" || s == name; };
        if (want("relations")) relations();
        if (want("hodge")) hodge();
        if (want("metric")) metric();
        if (want("lids")) lids();
        if (want("strings")) strings();
        if (want("posdef")) posdef();
        if (want("cp1-laplacian")) cp1_laplacian();
        return std::move(run_);
    }

private:
    void add(const char* suite, std::string check, bool ok, json detail = nullptr, std::optional<json> witness = {},
             bool informational = false) {
        run_.results.push_back({suite, std::move(check), ok ? CheckStatus::Pass : CheckStatus::Fail, informational,
                                std::move(detail), ok ? std::nullopt : std::move(witness)});
    }

    // ------------------------------------------------------------ relations
    void relations() {
        const int n = cfg_.n;
        const char* S = "relations";
        for (int k = 0; k <= 2 * n; ++k) {
            long expect = detail::binomial(2 * n, k);
            std::size_t got = basis(n, k).size();
            add(S, "dim V^" + std::to_string(k) + " = C(2n,k)", static_cast<long>(got) == expect,
                {{"dimension", got}, {"expected", expect}});
        }
        add(S, "dim V^{2n} = 1", basis(n, 2 * n).size() == 1);

        std::vector<Generator> gens;
        for (int i = 1; i <= n; ++i) gens.push_back({false, i});
        for (int i = 1; i <= n; ++i) gens.push_back({true, i});
        const Scalar q = Scalar::q();
        auto mono = [&](const Generator& x, const Generator& y) {
            Monomial m;
            (x.minus ? m.minus : m.plus) |= 1u << (x.index - 1);
            (y.minus ? m.minus : m.plus) |= 1u << (y.index - 1);
            return FiberForm(n, m);
        };
        std::optional<json> bad;
        for (const auto& x : gens) {
            for (const auto& y : gens) {
                FiberForm got = wedge(FiberForm::generator(n, x), FiberForm::generator(n, y));
                FiberForm want(n);
                if (x == y) {
                } else if (x < y) {
                    want = mono(x, y);
                } else if (!x.minus && !y.minus) {
                    want = -q * mono(y, x);
                } else if (x.minus && y.minus) {
                    want = -Scalar::q(-1) * mono(y, x);
                } else if (x.index != y.index) {
                    want = -q * mono(y, x);
                } else {
                    want = -Scalar::q(2) * mono(y, x);
                    for (int a = x.index + 1; a <= n; ++a)
                        want -= (Scalar::q(2) - Scalar(1)) * mono({false, a}, {true, a});
                }
                if (!(got == want) && !bad) {
                    bad = detail::form_witness(FiberForm::generator(n, x), got, want);
                    (*bad)["right"] = to_json(FiberForm::generator(n, y));
                }
            }
        }
        add(S, "generator relations", !bad, nullptr, bad);

        auto small = basis_upto(n, std::min(2, 2 * n));
        bad.reset();
        for (const auto& u : small) {
            for (const auto& v : small) {
                for (const auto& w : small) {
                    if (u.degree() + v.degree() + w.degree() > 2 * n) continue;
                    FiberForm U(n, u), V(n, v), W(n, w);
                    FiberForm l = wedge(wedge(U, V), W), r = wedge(U, wedge(V, W));
                    if (!(l == r) && !bad) bad = detail::form_witness(U, l, r);
                }
            }
        }
        add(S, "wedge associativity (degree <= 2 factors)", !bad, nullptr, bad);

        FiberForm kap = kappa(n);
        bad.reset();
        for (const auto& g : gens) {
            FiberForm x = FiberForm::generator(n, g);
            FiberForm l = wedge(kap, x), r = wedge(x, kap);
            if (!(l == r) && !bad) bad = detail::form_witness(x, l, r);
        }
        add(S, "kappa is central", !bad, nullptr, bad);
        FiberForm ks = star(kap);
        add(S, "star(kappa) = kappa", ks == kap, nullptr, detail::form_witness(kap, ks, kap));

        bad.reset();
        std::optional<json> bad_anti, bad_weight;
        for (const auto& m : basis_upto(n, 2 * n)) {
            FiberForm u(n, m);
            FiberForm ss = star(star(u));
            if (!(ss == u) && !bad) bad = detail::form_witness(u, ss, u);
            const int l = m.degree();
            for (const auto& g : gens) {
                FiberForm x = FiberForm::generator(n, g);
                FiberForm lhs = star(wedge(x, u));
                FiberForm rhs = wedge(star(u), star(x));
                if (l % 2 == 1) rhs = -rhs;
                if (!(lhs == rhs) && !bad_anti) bad_anti = detail::form_witness(u, lhs, rhs);
            }
            Weight w = weight(n, m);
            bool zero = std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
            if (zero != (m.plus == m.minus) && !bad_weight) bad_weight = json{{"input", m.to_string()}, {"weight", w}};
        }
        add(S, "star is an involution", !bad, nullptr, bad);
        add(S, "star(x ^ u) = (-1)^{deg u} star(u) ^ star(x)", !bad_anti, nullptr, bad_anti);
        add(S, "weight 0 iff I = J", !bad_weight, nullptr, bad_weight);

        StarFit fit = fit_star_convention();
        json matches = json::object();
        for (const auto& [r, list] : fit.matches) matches[std::to_string(r)] = list;
        add(S, "star convention fit (e-_a)* = q^{2(a+1)} e+_a is the unique match", fit.unique_standard(),
            {{"range", fit.range}, {"candidates", fit.candidates}, {"matches", matches}});
    }

    // ------------------------------------------------------------ hodge
    void hodge() {
        const int n = cfg_.n;
        const char* S = "hodge";
        const GradedOperator& H = kf_.hodge_operator();
        GradedOperator sq = H * H;
        for (int k = 0; k <= 2 * n; ++k) {
            GradedOperator want = GradedOperator::diagonal(n, [&](const Bidegree& bd) {
                                      return Scalar((bd.first + bd.second) % 2 == 0 ? 1 : -1);
                                  }).restricted_to_degree(k);
            auto w = find_witness(n, k, sq, want);
            add(S, "*^2 = (-1)^k on V^" + std::to_string(k), !w, nullptr,
                w ? std::optional<json>(to_json(*w)) : std::nullopt);
        }
        bool swap_ok = true;
        json swap_bad;
        for (const auto& bd : all_bidegrees(n)) {
            const OperatorBlock* blk = H.block(bd);
            Bidegree want{n - bd.second, n - bd.first};
            if (!blk || blk->target != want) {
                swap_ok = false;
                swap_bad = {{"source", detail::bd_string(bd)}};
            }
        }
        add(S, "* maps V^(a,b) onto V^(n-b,n-a)", swap_ok, swap_bad);

        std::optional<json> bad;
        for (const auto& m : basis_upto(n, 2 * n)) {
            FiberForm u(n, m);
            FiberForm l = kf_.hodge(star(u)), r = star(kf_.hodge(u));
            if (!(l == r) && !bad) bad = detail::form_witness(u, l, r);
        }
        add(S, "* commutes with star", !bad, nullptr, bad);

        bool unitary = true;
        json ubad;
        for (const auto& [src, blk] : H.blocks()) {
            const SparseMatrix& gs = kf_.gram(src.first, src.second).entries;
            const SparseMatrix& gt = kf_.gram(blk.target.first, blk.target.second).entries;
            if (!(blk.matrix.transpose() * gt * blk.matrix.conjugate() == gs)) {
                unitary = false;
                ubad = {{"bidegree", detail::bd_string(src)}};
            }
        }
        add(S, "<*u, *v> = <u, v> on all basis pairs", unitary, ubad);

        GradedOperator adj = kf_.adjoint(kf_.lefschetz());
        bool eq = adj == kf_.lambda();
        std::optional<json> w;
        if (!eq) {
            for (int k = 0; k <= 2 * n && !w; ++k)
                if (auto x = find_witness(n, k, adj, kf_.lambda())) w = to_json(*x);
        }
        add(S, "adjoint(L) = *^-1 L *", eq, nullptr, w);
    }

    // ------------------------------------------------------------ metric
    void metric() {
        const int n = cfg_.n;
        const char* S = "metric";
        bool sym = true;
        json sbad;
        for (const auto& bd : all_bidegrees(n)) {
            const SparseMatrix& g = kf_.gram(bd.first, bd.second).entries;
            if (!(g == g.conjugate_transpose())) {
                sym = false;
                sbad = {{"bidegree", detail::bd_string(bd)}};
            }
        }
        add(S, "<u, v> = conj(<v, u>)", sym, sbad);

        std::optional<json> bad;
        for (int k = 0; k <= 2 * n; ++k) {
            auto ms = basis(n, k);
            for (const auto& x : ms)
                for (const auto& y : ms) {
                    if (x.bidegree() == y.bidegree()) continue;
                    Scalar v = kf_.metric(FiberForm(n, x), FiberForm(n, y));
                    if (!v.is_zero() && !bad) bad = detail::scalar_witness(x.to_string() + " , " + y.to_string(), v, Scalar{});
                }
        }
        {
            FiberForm a = FiberForm::unit(n), b = kappa(n);
            Scalar v = kf_.metric(FiberForm::e_plus(n, 1), a) + kf_.metric(b, FiberForm::e_minus(n, 1));
            if (!v.is_zero() && !bad) bad = detail::scalar_witness("mixed degrees", v, Scalar{});
        }
        add(S, "orthogonal across bidegrees and degrees", !bad, nullptr, bad);

        bool law = true;
        json law_bad;
        json stated = json::array();
        for (int k = 0; k <= n; ++k) {
            for (int a = k; a >= 0; --a) {
                const auto& prims = kf_.primitives(a, k - a);
                for (int j = 0; j <= n - k; ++j) {
                    Scalar c = qfact(j, cfg_.mode) * qfact(n - k, cfg_.mode) / qfact(n - j - k, cfg_.mode);
                    for (const auto& x : prims) {
                        FiberForm lx = Lpow(x, j);
                        for (const auto& y : prims) {
                            Scalar lhs = kf_.metric(lx, Lpow(y, j));
                            Scalar rhs = c * kf_.metric(x, y);
                            if (!(lhs == rhs) && law) {
                                law = false;
                                law_bad = detail::scalar_witness("j=" + std::to_string(j) + " alpha=" + x.to_string() +
                                                                     " beta=" + y.to_string(),
                                                                 lhs, rhs);
                            }
                        }
                    }
                    if (a == k) {
                        Scalar lit;
                        std::string lit_s = "undefined";
                        if (n - j - k >= j) {
                            lit = qbinom(n - j - k, j, cfg_.mode).inverse();
                            lit_s = lit.to_string();
                        }
                        stated.push_back({{"k", k}, {"j", j}, {"derived", c.to_string()}, {"stated", lit_s},
                                          {"agree", lit_s != "undefined" && lit == c}});
                    }
                }
            }
        }
        add(S, "<L^j a, L^j b> = [j]![n-k]!/[n-j-k]! <a, b> on primitive bases", law, nullptr,
            law ? std::nullopt : std::optional<json>(law_bad));
        bool all_agree = std::all_of(stated.begin(), stated.end(), [](const json& e) { return e["agree"].get<bool>(); });
        add(S, "rescaling constant as stated (binom(n-j-k, j)_h^-1) agrees with the derived constant", all_agree,
            {{"note", "the closed-form binomial constant differs from the directly computed one; the computed one is used"},
             {"comparison", stated}},
            std::nullopt, true);

        bad.reset();
        for (int k = 0; k <= 2 * n; ++k) {
            std::vector<std::pair<int, FiberForm>> adapted;
            for (int j = 0; 2 * j <= k; ++j) {
                int kp = k - 2 * j;
                if (kp > n || j > n - kp) continue;
                for (int a = kp; a >= 0; --a)
                    for (const auto& x : kf_.primitives(a, kp - a)) adapted.emplace_back(j, Lpow(x, j));
            }
            for (const auto& [j1, x] : adapted)
                for (const auto& [j2, y] : adapted) {
                    if (j1 == j2) continue;
                    Scalar v = kf_.metric(x, y);
                    if (!v.is_zero() && !bad) bad = detail::form_witness(x, y, FiberForm(n));
                }
        }
        add(S, "orthogonal across Lefschetz levels", !bad, nullptr, bad);

        bool serre = true;
        json sbad2;
        for (const auto& bd : all_bidegrees(n)) {
            auto rows = basis(n, bd.first, bd.second);
            auto cols = basis(n, n - bd.first, n - bd.second);
            SparseMatrix m(rows.size(), cols.size());
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < cols.size(); ++c)
                    m.set(r, c, vol(wedge(FiberForm(n, rows[r]), FiberForm(n, cols[c]))));
            if (rows.size() != cols.size() || qkahler::rank(m) != rows.size()) {
                serre = false;
                sbad2 = {{"bidegree", detail::bd_string(bd)}};
            }
        }
        add(S, "vol(u ^ v) pairs V^(a,b) and V^(n-a,n-b) nondegenerately", serre, sbad2);

        if (n == 1 && cfg_.mode.kind == HodgeMode::Kind::HEqQ) {
            Scalar ep = kf_.metric(FiberForm::e_plus(1, 1), FiberForm::e_plus(1, 1));
            Scalar em = kf_.metric(FiberForm::e_minus(1, 1), FiberForm::e_minus(1, 1));
            add(S, "<e-_1, e-_1> = q^6", em == Scalar::q(6), {{"value", em.to_string()}});
            add(S, "<e+_1, e+_1> = q^-4", ep == Scalar::q(-4),
                {{"value", ep.to_string()},
                 {"flag", "reference value q^4 is inconsistent with the CP^1 Hodge table and star values"}});
        }
    }

    // ------------------------------------------------------------ lids
    void lids() {
        const int n = cfg_.n;
        const char* S = "lids";
        IdentityReport rep = verify_lefschetz_identities(kf_);
        for (const auto& c : rep.checks) {
            CheckResult r{S, c.relation + " on V^" + std::to_string(c.degree), c.status, c.informational, nullptr,
                          std::nullopt};
            if (c.witness) r.witness = to_json(*c.witness);
            if (c.informational && c.status == CheckStatus::Fail) r.detail = {{"witness", to_json(*c.witness)}};
            run_.results.push_back(std::move(r));
        }
        add(S, "report notes", true, {{"notes", rep.notes}}, std::nullopt, true);

        const GradedOperator& Lam = kf_.lambda();
        std::optional<json> bad;
        for (int k = 0; k <= n; ++k)
            for (int a = k; a >= 0; --a)
                for (const auto& alpha : kf_.primitives(a, k - a))
                    for (int j = 1; j <= n - k; ++j) {
                        FiberForm lhs = Lam.apply(Lpow(alpha, j));
                        FiberForm rhs = (qint(j, cfg_.mode) * qint(n - j - k + 1, cfg_.mode)) * Lpow(alpha, j - 1);
                        if (!(lhs == rhs) && !bad) bad = detail::form_witness(alpha, lhs, rhs);
                    }
        add(S, "Lambda L^j(a) = [j][n-j-k+1] L^{j-1}(a) on primitive bases", !bad, nullptr, bad);

        for (int k = 0; k <= 2 * n; ++k) {
            std::size_t ker = 0, prim = 0;
            bool killed = true;
            for (int a = std::min(k, n); a >= 0 && k - a <= n; --a) {
                const OperatorBlock* blk = Lam.block({a, k - a});
                std::size_t dim = basis(n, a, k - a).size();
                ker += blk ? dim - qkahler::rank(blk->matrix) : dim;
                if (k <= n) {
                    for (const auto& alpha : kf_.primitives(a, k - a)) {
                        ++prim;
                        if (!Lam.apply(alpha).is_zero()) killed = false;
                    }
                }
            }
            add(S, "P^" + std::to_string(k) + " = ker Lambda on V^" + std::to_string(k), killed && ker == prim,
                {{"dim_ker_lambda", ker}, {"dim_primitive", prim}});
        }
    }

    // ------------------------------------------------------------ strings
    void strings() {
        const int n = cfg_.n;
        const char* S = "strings";
        auto strs = string_decomposition(kf_);
        std::size_t total = 0;
        std::map<int, std::vector<std::pair<std::size_t, FiberForm>>> by_degree;
        std::optional<json> bad_seed, bad_top;
        bool lengths = true;
        for (std::size_t s = 0; s < strs.size(); ++s) {
            const auto& st = strs[s];
            total += st.members.size();
            if (st.length != n - st.degree + 1 || static_cast<int>(st.members.size()) != st.length) lengths = false;
            FiberForm lam = kf_.lambda().apply(st.seed);
            if (!lam.is_zero() && !bad_seed) bad_seed = detail::form_witness(st.seed, lam, FiberForm(n));
            FiberForm top = Lpow(st.seed, n - st.degree + 1);
            if (!top.is_zero() && !bad_top) bad_top = detail::form_witness(st.seed, top, FiberForm(n));
            for (int j = 0; j < static_cast<int>(st.members.size()); ++j)
                by_degree[st.degree + 2 * j].emplace_back(s, st.members[static_cast<std::size_t>(j)]);
        }
        add(S, "total dimension 4^n", total == (std::size_t{1} << (2 * n)), {{"total", total}, {"strings", strs.size()}});
        add(S, "string length n-k+1", lengths);
        add(S, "Lambda(seed) = 0", !bad_seed, nullptr, bad_seed);
        add(S, "L^{n-k+1}(seed) = 0", !bad_top, nullptr, bad_top);

        bool spans = true;
        json span_bad;
        std::optional<json> orth_bad;
        for (int k = 0; k <= 2 * n; ++k) {
            auto ms = basis(n, k);
            const auto& members = by_degree[k];
            SparseMatrix m(ms.size(), members.size());
            for (std::size_t c = 0; c < members.size(); ++c) {
                auto x = coordinates(members[c].second, ms);
                for (std::size_t r = 0; r < ms.size(); ++r) m.set(r, c, x[r]);
            }
            if (members.size() != ms.size() || qkahler::rank(m) != ms.size()) {
                spans = false;
                span_bad = {{"degree", k}, {"members", members.size()}, {"dimension", ms.size()}};
            }
            for (const auto& [s1, x] : members)
                for (const auto& [s2, y] : members) {
                    if (s1 >= s2 || orth_bad) continue;
                    Scalar g = kf_.metric(x, y);
                    if (!g.is_zero()) orth_bad = json{{"u", to_json(x)}, {"v", to_json(y)}, {"metric", g.to_string()}};
                }
        }
        add(S, "string members form a basis of each V^k", spans, span_bad);
        add(S, "distinct strings are orthogonal in each degree", !orth_bad, nullptr, orth_bad);
    }

    // ------------------------------------------------------------ posdef
    void posdef() {
        const int n = cfg_.n;
        const char* S = "posdef";
        for (const auto& bd : all_bidegrees(n)) {
            const GramBlock& g = kf_.gram(bd.first, bd.second);
            for (const auto& q0 : cfg_.q_samples) {
                std::string name = "Gram " + detail::bd_string(bd) + " positive definite at q0 = " + q0.get_str();
                try {
                    PosdefCertificate cert = certify_posdef(g, q0);
                    add(S, name, cert.verdict, to_json(cert), json{{"certificate", to_json(cert)}});
                } catch (const std::exception& e) {
                    add(S, name, false, {{"error", e.what()}}, json{{"error", e.what()}});
                }
            }
        }
    }

    // ------------------------------------------------------------ cp1-laplacian
    void cp1_laplacian() {
        const char* S = "cp1-laplacian";
        const Scalar q = Scalar::q();
        for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
            std::string ij = std::to_string(i) + std::to_string(j);
            SU2Element lap = laplacian0_cp1(i, j);
            SU2Element mid = Scalar::q(2) * (u(i, 1) * antipode(u(1, j))) - u(i, 2) * antipode(u(2, j));
            add(S, "Delta(z" + ij + ") = q^2 u^" + std::to_string(i) + "_1 S(u^1_" + std::to_string(j) + ") - u^" +
                       std::to_string(i) + "_2 S(u^2_" + std::to_string(j) + ")",
                lap == mid, {{"value", lap.to_string()}},
                json{{"lhs", to_json(lap)}, {"rhs", to_json(mid)}});
            SU2Element want = (q * qint(2)) * z(i, j);
            add(S, "Delta(z" + ij + ") = q[2]_q z" + ij, lap == want, {{"z", z(i, j).to_string()}},
                json{{"lhs", to_json(lap)}, {"rhs", to_json(want)}});
        }
        bool axiom = true;
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) {
                SU2Element s = u(i, 1) * antipode(u(1, j)) + u(i, 2) * antipode(u(2, j));
                if (!(s == SU2Element(Scalar(i == j ? 1 : 0)))) axiom = false;
            }
        add(S, "sum_k u^i_k S(u^k_j) = delta_ij", axiom);
    }

    static std::vector<Monomial> basis_upto(int n, int max_degree) {
        std::vector<Monomial> out;
        for (int k = 0; k <= max_degree; ++k) {
            auto b = basis(n, k);
            out.insert(out.end(), b.begin(), b.end());
        }
        return out;
    }

    RunConfig cfg_;
    KahlerFiber kf_;
    SuiteRun run_;
};

inline SuiteRun run_suite(const RunConfig& cfg) { return Verifier(cfg).run(); }

}  // namespace qkahler
