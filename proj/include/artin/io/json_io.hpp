#pragma once

/**
 * @file json_io.hpp
 * @brief Reading and writing groups, fields, Satake systems and mod-ℓ Frobenius tables.
 *
 * Rationals are written as strings "a/b" (or "a"); readers accept integers too.
 */

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/arith/integer.hpp"
#include "artin/arith/number_field.hpp"
#include "artin/errors.hpp"
#include "artin/matgroup/group.hpp"
#include "artin/recover/recover.hpp"
#include "artin/satake/satake.hpp"

namespace artin::io {

using json = nlohmann::json;
using arith::AlgebraicNumber;
using arith::FieldRef;
using arith::Int;
using arith::Rational;

inline json parse_json(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_input("malformed JSON in " + where + ": " + e.what());
    }
}

inline json read_json_file(std::istream& in, const std::string& where) {
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str(), where);
}

/// Non-empty lines, each parsed as JSON.
inline std::vector<json> read_jsonl(std::istream& in, const std::string& where) {
    std::vector<json> out;
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parse_json(line, where + ":" + std::to_string(no)));
    }
    if (out.empty()) throw invalid_input(where + " is empty");
    return out;
}

inline const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw invalid_input(where + ": missing key \"" + key + "\"");
    return j.at(key);
}

inline Rational to_rational(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return arith::parse_rational(j.get<std::string>());
    throw invalid_input(where + ": expected an integer or \"a/b\" string");
}

inline Int to_int(const json& j, const std::string& where) {
    const Rational r = to_rational(j, where);
    if (arith::denom(r) != 1) throw invalid_input(where + ": expected an integer");
    return arith::numer(r);
}

inline std::uint64_t to_u64(const json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw invalid_input(where + ": expected a non-negative integer");
    return j.get<std::uint64_t>();
}

inline json rational_json(const Rational& r) { return arith::to_string(r); }

inline json algebraic_json(const AlgebraicNumber& a) {
    json arr = json::array();
    for (const auto& c : a.coords()) arr.push_back(rational_json(c));
    return arr;
}

inline std::vector<Int> read_poly(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() < 2) throw invalid_input(where + ": field polynomial must be a coefficient list");
    std::vector<Int> f;
    for (const auto& c : j) f.push_back(to_int(c, where));
    return f;
}

/// {"field": [c_0, …, c_d], "label": optional}
inline FieldRef read_field(const json& j, const std::string& where) {
    const auto f = read_poly(need(j, "field", where), where);
    std::string label = j.value("label", std::string("K"));
    return arith::NumberField::make(f, label);
}

inline AlgebraicNumber read_algebraic(const FieldRef& K, const json& j, const std::string& where) {
    if (j.is_number_integer() || j.is_string()) return AlgebraicNumber::from_rational(K, to_rational(j, where));
    if (!j.is_array() || j.size() > K->degree()) throw invalid_input(where + ": bad coordinate vector");
    std::vector<Rational> c(K->degree(), Rational(0));
    for (std::size_t i = 0; i < j.size(); ++i) c[i] = to_rational(j[i], where);
    return AlgebraicNumber(K, c);
}

/// {"n":…, "q":…, "generators": [[row-major entries], …]}
inline matgroup::FiniteMatrixGroup read_group(const json& j, const std::string& where,
                                              std::size_t cap = matgroup::default_cap) {
    const auto n = to_u64(need(j, "n", where), where);
    const auto q = to_u64(need(j, "q", where), where);
    if (n == 0 || n > matgroup::max_dim) throw invalid_input(where + ": n must lie in 1..6");
    if (q < 2 || q > 65536) throw invalid_input(where + ": q out of range");
    auto F = arith::FiniteField::make(static_cast<std::uint32_t>(q));
    std::vector<matgroup::MatFq> gens;
    for (const auto& g : need(j, "generators", where)) {
        if (!g.is_array() || g.size() != n * n) throw invalid_input(where + ": generator needs n*n entries");
        std::vector<long long> e;
        for (const auto& x : g) {
            if (!x.is_number_integer()) throw invalid_input(where + ": matrix entries must be integers");
            e.push_back(x.get<long long>());
        }
        gens.push_back(matgroup::from_rows(*F, static_cast<unsigned>(n), e));
    }
    return matgroup::FiniteMatrixGroup::close(F, static_cast<unsigned>(n), gens, cap);
}

inline json group_json(const matgroup::FiniteMatrixGroup& G) {
    json j;
    j["n"] = G.n();
    j["q"] = G.field().q();
    j["generators"] = json::array();
    for (const auto& g : G.generators()) {
        json row = json::array();
        for (unsigned i = 0; i < G.n(); ++i)
            for (unsigned k = 0; k < G.n(); ++k) row.push_back(g.at(i, k));
        j["generators"].push_back(row);
    }
    return j;
}

/// Header {"n", "N", "field"}, then {"p", "a": [...]} or {"p", "alpha": [...]} per line.
inline satake::SatakeSystem read_satake(const std::vector<json>& lines, const std::string& where) {
    const json& h = lines.front();
    const std::string hw = where + ":header";
    const auto n = to_u64(need(h, "n", hw), hw);
    const Int N = to_int(need(h, "N", hw), hw);
    const FieldRef K = arith::NumberField::make(read_poly(need(h, "field", hw), hw), h.value("label", std::string("K")));
    satake::SatakeSystem S(static_cast<unsigned>(n), N, K);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string lw = where + ":" + std::to_string(i + 1);
        const json& e = lines[i];
        const auto p = to_u64(need(e, "p", lw), lw);
        const bool tuple = e.contains("alpha");
        const json& vals = tuple ? e.at("alpha") : need(e, "a", lw);
        if (!vals.is_array()) throw invalid_input(lw + ": values must be a list");
        std::vector<AlgebraicNumber> v;
        for (const auto& x : vals) v.push_back(read_algebraic(K, x, lw));
        if (tuple)
            S.add_parameters(p, std::move(v));
        else
            S.add_coefficients(p, std::move(v));
    }
    return S;
}

inline void write_satake(std::ostream& out, const satake::SatakeSystem& S) {
    json h;
    h["n"] = S.n();
    h["N"] = S.conductor().str();
    h["field"] = json::array();
    for (const auto& c : S.field()->defining_poly()) h["field"].push_back(c.str());
    h["label"] = S.field()->label();
    out << h.dump() << "\n";
    for (const auto& [p, a] : S.coefficients()) {
        json e;
        e["p"] = p;
        if (S.has_parameters(p)) {
            e["alpha"] = json::array();
            for (const auto& x : S.parameters_at(p)) e["alpha"].push_back(algebraic_json(x));
        } else {
            e["a"] = json::array();
            for (const auto& x : a) e["a"].push_back(algebraic_json(x));
        }
        out << e.dump() << "\n";
    }
}

/// Header {"ell", "field", "root", "excluded"}, then {"p", "coeffs"} per line.
inline recover::ModLFrobTable read_table(const std::vector<json>& lines, const std::string& where) {
    recover::ModLFrobTable t;
    const json& h = lines.front();
    const std::string hw = where + ":header";
    t.ell = to_u64(need(h, "ell", hw), hw);
    t.field = read_poly(need(h, "field", hw), hw);
    t.root = to_u64(need(h, "root", hw), hw);
    if (h.contains("excluded"))
        for (const auto& x : h.at("excluded")) t.excluded.push_back(to_u64(x, hw));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string lw = where + ":" + std::to_string(i + 1);
        const auto p = to_u64(need(lines[i], "p", lw), lw);
        std::vector<std::uint64_t> c;
        for (const auto& x : need(lines[i], "coeffs", lw)) c.push_back(to_u64(x, lw));
        if (!t.entries.emplace(p, c).second) throw invalid_input(lw + ": duplicate prime " + std::to_string(p));
    }
    return t;
}

inline void write_table(std::ostream& out, const recover::ModLFrobTable& t) {
    json h;
    h["ell"] = t.ell;
    h["field"] = json::array();
    for (const auto& c : t.field) h["field"].push_back(c.str());
    h["root"] = t.root;
    h["excluded"] = t.excluded;
    out << h.dump() << "\n";
    for (const auto& [p, c] : t.entries) {
        json e;
        e["p"] = p;
        e["coeffs"] = c;
        out << e.dump() << "\n";
    }
}

}  // namespace artin::io
