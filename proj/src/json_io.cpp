#include "apolar/json_io.hpp"

#include <fstream>

namespace apolar {

using nlohmann::json;

json polynomial_to_json(const Polynomial& p) {
    json j;
    j["n"] = p.nvars();
    j["terms"] = json::array();
    // canonical storage is already descending degrevlex
    for (const auto& [m, c] : p.terms()) {
        j["terms"].push_back(
            {{"exp", m.exponents()}, {"num", num_string(c)}, {"den", den_string(c)}});
    }
    return j;
}

Polynomial polynomial_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Polynomial::Term> terms;
    for (const auto& t : j.at("terms")) {
        Monomial m(t.at("exp").get<std::vector<int>>());
        if (m.nvars() != n) throw InputError("polynomial JSON: exponent length != n");
        for (int e : m.exponents())
            if (e < 0) throw InputError("polynomial JSON: negative exponent");
        terms.emplace_back(m, rational_from_strings(t.at("num").get<std::string>(),
                                                    t.at("den").get<std::string>()));
    }
    return Polynomial::from_terms(n, std::move(terms));
}

json monomial_ideal_to_json(const MonomialIdeal& J) {
    json j;
    j["n"] = J.nvars();
    j["gens"] = json::array();
    for (const auto& g : J.gens()) j["gens"].push_back(g.exponents());
    return j;
}

MonomialIdeal monomial_ideal_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens")) gens.emplace_back(g.get<std::vector<int>>());
    return MonomialIdeal(n, std::move(gens));
}

json groebner_to_json(const GroebnerBasis& B) {
    json j;
    j["order"] = B.order.name();
    j["certified"] = B.certified;
    if (B.degree_cap) j["degree_cap"] = *B.degree_cap;
    j["elems"] = json::array();
    for (const auto& p : B.elems) j["elems"].push_back(polynomial_to_json(p));
    return j;
}

Polynomial read_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open polynomial file: " + path);
    json j;
    in >> j;
    return polynomial_from_json(j);
}

} // namespace apolar
