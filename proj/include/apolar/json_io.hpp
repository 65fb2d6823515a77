#ifndef APOLAR_JSON_IO_HPP
#define APOLAR_JSON_IO_HPP

#include <json.hpp>

#include "apolar/groebner.hpp"
#include "apolar/monomial_ideal.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

/// {"n": int, "terms": [{"exp": [int..], "num": "...", "den": "..."}, ..]},
/// terms descending in degrevlex.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// {"n": int, "gens": [[int..], ..]}, generators descending in degrevlex.
nlohmann::json monomial_ideal_to_json(const MonomialIdeal& J);
MonomialIdeal monomial_ideal_from_json(const nlohmann::json& j);

/// {"order": "...", "certified": bool, "elems": [polynomial..]}.
nlohmann::json groebner_to_json(const GroebnerBasis& B);

Polynomial read_polynomial_file(const std::string& path);

} // namespace apolar

#endif
