#pragma once

// JSON (de)serialization for the CLI: polynomials, columns, staircases,
// ASMs, certificates and verification reports.

#include <string>

#include <json.hpp>

#include "escalier/errors.hpp"
#include "escalier/laurent.hpp"
#include "escalier/partitionfn.hpp"
#include "escalier/staircase.hpp"

namespace escalier {

inline std::string variable_name(Variable v) {
    const char* f = v.family == Family::X ? "x" : v.family == Family::Y ? "y" : "z";
    return f + std::to_string(v.index);
}

inline Variable variable_from_name(const std::string& s) {
    if (s.size() < 2) throw ParseError("bad variable name: " + s);
    Family f = s[0] == 'x'   ? Family::X
               : s[0] == 'y' ? Family::Y
               : s[0] == 'z' ? Family::Z
                             : throw ParseError("bad variable family: " + s);
    return Variable{f, std::stoi(s.substr(1))};
}

// polynomial = [{coeff: "p/q", exps: {"x1": e, ...}}, ...], graded-lex order
inline nlohmann::json to_json(const LaurentPoly& p) {
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](auto& a, auto& b) { return graded_lex_greater(a.first, b.first); });
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [m, c] : terms) {
        nlohmann::json exps = nlohmann::json::object();
        for (auto& [v, e] : m.exponents()) exps[variable_name(v)] = e;
        arr.push_back({{"coeff", c.str()}, {"exps", exps}});
    }
    return arr;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
    LaurentPoly p;
    for (const auto& term : j) {
        Monomial m;
        for (auto it = term.at("exps").begin(); it != term.at("exps").end(); ++it)
            m.multiply_by(variable_from_name(it.key()), it.value().get<int>());
        p += LaurentPoly::term(m, Rational(term.at("coeff").get<std::string>()));
    }
    return p;
}

inline nlohmann::json to_json(const Column& c) { return c.entries; }

inline Column column_from_json(const nlohmann::json& j) {
    return Column(j.get<std::vector<int>>());
}

inline nlohmann::json to_json(const Staircase& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Column& c : t.columns) arr.push_back(c.entries);
    return arr;
}

inline Staircase staircase_from_json(const nlohmann::json& j) {
    std::vector<Column> cols;
    for (const auto& c : j) cols.push_back(column_from_json(c));
    return Staircase(std::move(cols));
}

inline nlohmann::json to_json(const AsmMatrix& a) { return a.rows; }

inline AsmMatrix asm_from_json(const nlohmann::json& j) {
    return AsmMatrix(j.get<std::vector<std::vector<int>>>());
}

inline nlohmann::json to_json(const ClosedFormCertificate& c) {
    return {{"prefactor", to_json(c.prefactor)},
            {"core", to_json(c.core)},
            {"assembled", to_json(c.assembled)},
            {"description", c.description}};
}

inline nlohmann::json to_json(const Report& r) {
    nlohmann::json cases = nlohmann::json::array();
    for (const CaseResult& c : r.cases)
        cases.push_back({{"suite", c.suite},
                         {"case", c.name},
                         {"status", c.pass ? "pass" : "fail"},
                         {"witness", c.witness}});
    return {{"cases", cases}, {"all_pass", r.all_pass()}};
}

} // namespace escalier
