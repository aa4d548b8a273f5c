#pragma once

// JSON encodings of forms, Gram blocks, certificates, reports and SU_q(2)
// elements.  Scalars are always written as canonical strings.

#include "fiber.hpp"
#include "hodge.hpp"
#include "lefschetz.hpp"
#include "su2.hpp"
#include "uqsl2.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qkahler {

using json = nlohmann::json;

inline json to_json(const Scalar& s) { return s.to_string(); }

inline json to_json(const Monomial& m) {
    return {{"I", Monomial::indices(m.plus)}, {"J", Monomial::indices(m.minus)}};
}

// [{"I": [...], "J": [...], "coeff": "..."}] in monomial order.
inline json to_json(const FiberForm& u) {
    json arr = json::array();
    for (const auto& [m, c] : u.terms()) {
        json t = to_json(m);
        t["coeff"] = c.to_string();
        arr.push_back(std::move(t));
    }
    return arr;
}

inline FiberForm fiber_form_from_json(int n, const json& arr) {
    if (!arr.is_array()) throw ParseError("fiber form JSON must be an array of terms");
    FiberForm u(n);
    for (const auto& t : arr) {
        std::vector<int> I = t.at("I").get<std::vector<int>>(), J = t.at("J").get<std::vector<int>>();
        for (int x : I)
            if (x < 1 || x > n) throw ParseError("index out of range in I");
        for (int x : J)
            if (x < 1 || x > n) throw ParseError("index out of range in J");
        Monomial m{Monomial::mask_of(I), Monomial::mask_of(J)};
        if (static_cast<std::size_t>(m.a()) != I.size() || static_cast<std::size_t>(m.b()) != J.size()) {
            throw ParseError("repeated index in fiber form term");
        }
        // A listed index set is taken as the ordered wedge of its generators.
        FiberForm word = FiberForm::unit(n);
        for (int x : I) word = wedge(word, FiberForm::e_plus(n, x));
        for (int x : J) word = wedge(word, FiberForm::e_minus(n, x));
        u += Scalar::parse(t.at("coeff").get<std::string>()) * word;
    }
    return u;
}

inline json to_json(const GramBlock& g) {
    json basis = json::array();
    for (const auto& m : g.basis) basis.push_back(m.to_string());
    json rows = json::array();
    for (std::size_t r = 0; r < g.basis.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < g.basis.size(); ++c) row.push_back(g.entries.get(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return {{"bidegree", {g.bidegree.first, g.bidegree.second}}, {"basis", basis}, {"entries", rows}};
}

inline json to_json(const PosdefCertificate& c) {
    json piv = json::array();
    for (const auto& p : c.pivots) piv.push_back(p.get_str());
    return {{"q0", c.q0.get_str()}, {"pivots", piv}, {"verdict", c.verdict}};
}

inline json to_json(const Witness& w) {
    return {{"input", to_json(w.input)}, {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}};
}

inline json to_json(const IdentityCheck& c) {
    json j = {{"relation", c.relation}, {"degree", c.degree}, {"status", to_string(c.status)}};
    if (c.informational) j["informational"] = true;
    if (c.witness) j["witness"] = to_json(*c.witness);
    return j;
}

inline json to_json(const IdentityReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"n", r.n}, {"mode", r.mode.to_string()}, {"max_degree", r.max_degree}, {"checks", checks},
            {"notes", r.notes}, {"passed", r.passed()}};
}

inline json to_json(const Sl2String& s) {
    json members = json::array();
    for (const auto& m : s.members) members.push_back(to_json(m));
    return {{"seed", to_json(s.seed)},
            {"bidegree", {s.bidegree.first, s.bidegree.second}},
            {"degree", s.degree},
            {"length", s.length},
            {"members", members}};
}

// String inventory: seed, bidegree and length only.
inline json strings_inventory(const std::vector<Sl2String>& strings) {
    json arr = json::array();
    for (const auto& s : strings) {
        arr.push_back({{"seed", to_json(s.seed)}, {"bidegree", {s.bidegree.first, s.bidegree.second}}, {"length", s.length}});
    }
    return arr;
}

// {degree, bidegree, primitive_dims, iso_ranks, identities_checked}
inline json lefschetz_report(const KahlerFiber& kf, const IdentityReport* identities = nullptr) {
    const int n = kf.rank();
    json degrees = json::array();
    for (int k = 0; k <= n; ++k) {
        json bidegrees = json::array();
        json dims = json::object();
        std::size_t total = 0;
        for (int a = k; a >= 0; --a) {
            std::size_t d = kf.primitives(a, k - a).size();
            total += d;
            bidegrees.push_back({a, k - a});
            dims["(" + std::to_string(a) + "," + std::to_string(k - a) + ")"] = d;
        }
        json entry = {{"degree", k}, {"bidegree", bidegrees}, {"primitive_dims", dims}, {"primitive_dim", total}};
        if (k < n) {
            LefschetzIsoReport iso = verify_lefschetz_iso(n, k);
            entry["iso_ranks"] = {{"rank", iso.rank}, {"rows", iso.rows}, {"cols", iso.cols}, {"full_rank", iso.full_rank}};
        } else {
            entry["iso_ranks"] = nullptr;
        }
        degrees.push_back(std::move(entry));
    }
    json out = {{"n", n}, {"degrees", degrees}};
    if (identities) {
        json checked = json::array();
        for (const auto& c : identities->checks) {
            if (std::find(checked.begin(), checked.end(), c.relation) == checked.end()) checked.push_back(c.relation);
        }
        out["identities_checked"] = checked;
    } else {
        out["identities_checked"] = json::array();
    }
    return out;
}

// [{"monomial": "a^2 b", "exponents": [2,1,0,0], "coeff": "..."}]
inline json to_json(const SU2Element& x) {
    json arr = json::array();
    for (const auto& [m, c] : x.terms()) {
        arr.push_back({{"monomial", m.to_string()},
                       {"exponents", {m.exp[0], m.exp[1], m.exp[2], m.exp[3]}},
                       {"coeff", c.to_string()}});
    }
    return arr;
}

}  // namespace qkahler
