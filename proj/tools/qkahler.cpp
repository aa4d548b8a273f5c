#include "qkahler/qkahler.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qkahler;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

struct Options {
    int n = 2;
    std::string mode = "hq";
    std::string suite = "all";
    std::string q_samples = "9/10,1,11/10";
    bool json = false;
    std::string out;
    int k = -1;
    std::string bidegree;
    bool all_degrees = false;
};

struct Report {
    std::string command;
    json config;
    json results = json::array();
    json failures = json::array();
    std::ostringstream text;

    bool ok() const { return failures.empty(); }
};

void add_common(CLI::App* cmd, Options& o, bool mode, bool samples) {
    cmd->add_option("-n,--rank", o.n, "rank n of CP^n (1..6)")->capture_default_str();
    if (mode) cmd->add_option("--mode", o.mode, "Hodge parameter: hq, h1 or numeric:Q0[:H0]")->capture_default_str();
    if (samples) cmd->add_option("--q-samples", o.q_samples, "comma separated rationals > 0")->capture_default_str();
    cmd->add_flag("--json", o.json, "emit JSON");
    cmd->add_option("--out", o.out, "write output to FILE");
}

RunConfig make_config(const Options& o) {
    if (o.n < 1 || o.n > 6) throw ConfigError("rank n must be in [1, 6], got " + std::to_string(o.n));
    RunConfig cfg;
    cfg.n = o.n;
    cfg.mode = parse_mode(o.mode);
    cfg.q_samples = parse_q_samples(o.q_samples);
    cfg.suite = o.suite;
    return cfg;
}

json config_json(const RunConfig& cfg) {
    json samples = json::array();
    for (const auto& q0 : cfg.q_samples) samples.push_back(q0.get_str());
    return {{"n", cfg.n}, {"mode", cfg.mode.to_string()}, {"q_samples", samples}, {"suite", cfg.suite}};
}

std::string weight_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t t = 0; t < w.size(); ++t) s += (t ? "," : "") + std::to_string(w[t]);
    return s + ")";
}

void cmd_basis(const Options& o, const RunConfig& cfg, Report& rep) {
    const int n = cfg.n;
    std::vector<Monomial> ms;
    json where;
    if (!o.bidegree.empty()) {
        int a = 0, b = 0;
        char comma = 0;
        std::istringstream in(o.bidegree);
        if (!(in >> a >> comma >> b) || comma != ',' || !in.eof()) throw ConfigError("bad --bidegree '" + o.bidegree + "'");
        if (a < 0 || b < 0 || a > n || b > n) throw ConfigError("bidegree out of range for n = " + std::to_string(n));
        ms = basis(n, a, b);
        where = {{"bidegree", {a, b}}};
        rep.text << "V^(" << a << "," << b << ")";
    } else {
        if (o.k < 0 || o.k > 2 * n) throw ConfigError("degree k must be in [0, " + std::to_string(2 * n) + "]");
        ms = basis(n, o.k);
        where = {{"degree", o.k}};
        rep.text << "V^" << o.k;
    }
    rep.text << " of rank " << n << ": dimension " << ms.size() << "\n";
    json list = json::array();
    for (const auto& m : ms) {
        Weight w = weight(n, m);
        rep.text << "  " << m.to_string() << "  weight " << weight_string(w) << "\n";
        list.push_back({{"monomial", m.to_string()}, {"I", Monomial::indices(m.plus)}, {"J", Monomial::indices(m.minus)},
                        {"weight", w}});
    }
    where["dimension"] = ms.size();
    where["monomials"] = list;
    rep.results.push_back(where);
}

void cmd_hodge(const Options& o, const RunConfig& cfg, Report& rep) {
    const int n = cfg.n;
    KahlerFiber kf(n, cfg.mode);
    const int top = o.all_degrees ? 2 * n : n;
    for (int k = 0; k <= top; ++k) {
        for (const auto& m : basis(n, k)) {
            FiberForm u(n, m);
            FiberForm h = kf.hodge(u);
            rep.text << "*(" << m.to_string() << ") = " << h.to_string() << "\n";
            rep.results.push_back({{"input", to_json(u)}, {"image", to_json(h)}, {"degree", k}});
        }
    }
}

void cmd_primitive(const RunConfig& cfg, Report& rep) {
    const int n = cfg.n;
    KahlerFiber kf(n, cfg.mode);
    for (int k = 0; k <= n; ++k) {
        for (int a = k; a >= 0; --a) {
            const auto& prims = kf.primitives(a, k - a);
            rep.text << "P^(" << a << "," << k - a << "): dimension " << prims.size() << "\n";
            json forms = json::array();
            for (const auto& p : prims) {
                rep.text << "  " << p.to_string() << "\n";
                forms.push_back(to_json(p));
            }
            rep.results.push_back({{"bidegree", {a, k - a}}, {"dimension", prims.size()}, {"basis", forms}});
        }
    }
    json summary = lefschetz_report(kf);
    for (const auto& d : summary["degrees"]) {
        if (d["iso_ranks"].is_null()) continue;
        bool full = d["iso_ranks"]["full_rank"].get<bool>();
        rep.text << "L^" << n - d["degree"].get<int>() << ": V^" << d["degree"].get<int>() << " -> V^"
                 << 2 * n - d["degree"].get<int>() << " rank " << d["iso_ranks"]["rank"].get<std::size_t>()
                 << (full ? " (isomorphism)" : " (NOT full rank)") << "\n";
        if (!full) rep.failures.push_back({{"check", "Lefschetz isomorphism"}, {"degree", d["degree"]}});
    }
    rep.results.push_back({{"lefschetz", summary}});
}

void cmd_gram(const RunConfig& cfg, Report& rep) {
    const int n = cfg.n;
    KahlerFiber kf(n, cfg.mode);
    for (const auto& bd : all_bidegrees(n)) {
        const GramBlock& g = kf.gram(bd.first, bd.second);
        rep.text << "Gram V^(" << bd.first << "," << bd.second << ") on [";
        for (std::size_t t = 0; t < g.basis.size(); ++t) rep.text << (t ? ", " : "") << g.basis[t].to_string();
        rep.text << "]\n";
        for (std::size_t r = 0; r < g.basis.size(); ++r) {
            rep.text << "  ";
            for (std::size_t c = 0; c < g.basis.size(); ++c) rep.text << (c ? " | " : "") << g.entries.get(r, c).to_string();
            rep.text << "\n";
        }
        json certs = json::array();
        for (const auto& q0 : cfg.q_samples) {
            try {
                PosdefCertificate cert = certify_posdef(g, q0);
                rep.text << "  q0 = " << q0.get_str() << ": " << (cert.verdict ? "positive definite" : "NOT positive definite")
                         << ", pivots";
                for (const auto& p : cert.pivots) rep.text << " " << p.get_str();
                rep.text << "\n";
                certs.push_back(to_json(cert));
                if (!cert.verdict)
                    rep.failures.push_back({{"check", "positive definite"}, {"bidegree", {bd.first, bd.second}},
                                            {"certificate", to_json(cert)}});
            } catch (const std::exception& e) {
                rep.text << "  q0 = " << q0.get_str() << ": " << e.what() << "\n";
                rep.failures.push_back({{"check", "positive definite"}, {"bidegree", {bd.first, bd.second}},
                                        {"q0", q0.get_str()}, {"error", e.what()}});
            }
        }
        json entry = to_json(g);
        entry["certificates"] = certs;
        rep.results.push_back(entry);
    }
}

void cmd_verify(const RunConfig& cfg, Report& rep) {
    SuiteRun run = run_suite(cfg);
    for (const auto& r : run.results) {
        std::string tag = r.status == CheckStatus::Pass ? "PASS" : r.status == CheckStatus::Fail ? "FAIL" : "N/A ";
        if (r.informational) tag = r.status == CheckStatus::Fail ? "NOTE" : "INFO";
        rep.text << "[" << tag << "] " << r.suite << ": " << r.check << "\n";
        if (r.informational && !r.detail.is_null()) rep.text << "       " << r.detail.dump() << "\n";
        else if (r.detail.contains("flag")) rep.text << "       " << r.detail.dump() << "\n";
        if (r.status == CheckStatus::Fail && !r.informational && r.witness) rep.text << "       witness " << r.witness->dump() << "\n";
    }
    rep.results = run.results_json();
    rep.failures = run.failures_json();
    std::size_t failed = rep.failures.size();
    rep.text << run.results.size() << " checks, " << failed << " failed\n";
}

void cmd_laplacian(Report& rep) {
    const Scalar q = Scalar::q();
    for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}}) {
        std::string ij = std::to_string(i) + std::to_string(j);
        SU2Element lap = laplacian0_cp1(i, j);
        SU2Element mid = Scalar::q(2) * (u(i, 1) * antipode(u(1, j))) - u(i, 2) * antipode(u(2, j));
        SU2Element want = (q * qint(2)) * z(i, j);
        bool ok_mid = lap == mid, ok = lap == want;
        rep.text << "z" << ij << " = " << z(i, j).to_string() << "\n";
        rep.text << "Δ(z" << ij << ") = q^2 u^" << i << "_1 S(u^1_" << j << ") - u^" << i << "_2 S(u^2_" << j
                 << ") = " << lap.to_string() << ": " << (ok_mid ? "PASS" : "FAIL") << "\n";
        rep.text << "Δ(z" << ij << ") = q[2]_q z" << ij << ": " << (ok ? "PASS" : "FAIL") << "\n";
        rep.results.push_back({{"i", i}, {"j", j}, {"z", to_json(z(i, j))}, {"laplacian", to_json(lap)},
                               {"intermediate", ok_mid}, {"eigenvalue", (q * qint(2)).to_string()}, {"status", ok ? "pass" : "fail"}});
        if (!ok_mid) rep.failures.push_back({{"check", "intermediate Δ(z" + ij + ")"}, {"lhs", to_json(lap)}, {"rhs", to_json(mid)}});
        if (!ok) rep.failures.push_back({{"check", "Δ(z" + ij + ") = q[2]_q z" + ij}, {"lhs", to_json(lap)}, {"rhs", to_json(want)}});
    }
}

int emit(const Options& o, Report& rep) {
    std::string body;
    if (o.json) {
        json doc = {{"schema", "qkahler/1"}, {"command", rep.command}, {"config", rep.config},
                    {"results", rep.results}, {"failures", rep.failures}};
        body = doc.dump(2) + "\n";
    } else {
        body = rep.text.str();
    }
    if (o.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return kExitConfig;
        }
        f << body;
    }
    return rep.ok() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kahler structure on the fiber algebra of quantum projective space"};
    app.require_subcommand(1);
    Options o;

    auto* basis_cmd = app.add_subcommand("basis", "list basis monomials of V^k or V^(a,b)");
    add_common(basis_cmd, o, false, false);
    auto* k_opt = basis_cmd->add_option("-k,--degree", o.k, "total degree k");
    auto* bd_opt = basis_cmd->add_option("--bidegree", o.bidegree, "bidegree a,b");
    k_opt->excludes(bd_opt);

    auto* hodge_cmd = app.add_subcommand("hodge", "Hodge map on basis monomials of degree <= n");
    add_common(hodge_cmd, o, true, false);
    hodge_cmd->add_flag("--all-degrees", o.all_degrees, "include degrees above n");

    auto* prim_cmd = app.add_subcommand("primitive", "primitive bases and Lefschetz isomorphisms");
    add_common(prim_cmd, o, false, false);

    auto* gram_cmd = app.add_subcommand("gram", "Gram blocks and positivity certificates");
    add_common(gram_cmd, o, true, true);

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    add_common(verify_cmd, o, true, true);
    verify_cmd->add_option("--suite", o.suite, "relations, hodge, metric, lids, strings, posdef, cp1-laplacian or all")
        ->capture_default_str();

    auto* lap_cmd = app.add_subcommand("laplacian-cp1", "zero-form Laplacian eigenvalue on CP^1");
    lap_cmd->add_flag("--json", o.json, "emit JSON");
    lap_cmd->add_option("--out", o.out, "write output to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    Report rep;
    try {
        RunConfig cfg = make_config(o);
        if (basis_cmd->parsed() && o.k < 0 && o.bidegree.empty()) throw ConfigError("basis needs -k or --bidegree");
        if ((hodge_cmd->parsed() || gram_cmd->parsed() || prim_cmd->parsed()) && cfg.n > 4 &&
            cfg.mode.kind != HodgeMode::Kind::Numeric)
            throw ConfigError("symbolic modes support n <= 4 for this command");
        if (verify_cmd->parsed()) (void)Verifier::validated(cfg);
        rep.config = config_json(cfg);
        if (basis_cmd->parsed()) {
            rep.command = "basis";
            rep.config.erase("mode");
            rep.config.erase("q_samples");
            rep.config.erase("suite");
            cmd_basis(o, cfg, rep);
        } else if (hodge_cmd->parsed()) {
            rep.command = "hodge";
            rep.config.erase("q_samples");
            rep.config.erase("suite");
            cmd_hodge(o, cfg, rep);
        } else if (prim_cmd->parsed()) {
            rep.command = "primitive";
            rep.config.erase("mode");
            rep.config.erase("q_samples");
            rep.config.erase("suite");
            cmd_primitive(cfg, rep);
        } else if (gram_cmd->parsed()) {
            rep.command = "gram";
            rep.config.erase("suite");
            cmd_gram(cfg, rep);
        } else if (verify_cmd->parsed()) {
            rep.command = "verify";
            cmd_verify(cfg, rep);
        } else if (lap_cmd->parsed()) {
            rep.command = "laplacian-cp1";
            rep.config = json::object();
            cmd_laplacian(rep);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return emit(o, rep);
}
