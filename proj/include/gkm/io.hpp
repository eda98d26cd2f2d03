#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gkm/cohomology.hpp"
#include "gkm/gkm_pair.hpp"
#include "gkm/localization.hpp"
#include "gkm/morse.hpp"
#include "gkm/validation.hpp"

namespace gkm::io {

using Json = nlohmann::ordered_json;

// Errors name the offending field with a JSON-pointer-like path.
Rational rational_from_json(const Json& j, const std::string& path);
Json to_json(const Rational& q);

Json to_json(const Polynomial& p);
// Accepts the object form {"n", "terms"} or a text polynomial such as
// "x1^2 - 3/2*x1*x2" (then n must be supplied, n = 0 means unknown).
Polynomial polynomial_from_json(const Json& j, std::size_t n, const std::string& path);

// Text polynomials in x1..xn with rational coefficients, +, -, *, ^ and
// parentheses.
Polynomial parse_polynomial(std::string_view text, std::size_t n);

// "1,2/3,0" -> coordinates; "1,0;0,1" -> list.
std::vector<Rational> parse_coords(std::string_view text);
std::vector<std::vector<Rational>> parse_coord_list(std::string_view text);

Json to_json(const CovectorQ& c);
Json to_json(const VectorQ& v);

GkmPair graph_from_json(const Json& j);
Json to_json(const GkmPair& pair);
GkmPair load_graph(const std::string& path);

CohClass class_from_json(const GkmPair& pair, const Json& j);
Json to_json(const GkmPair& pair, const CohClass& f);
CohClass load_class(const GkmPair& pair, const std::string& path);

Json to_json(const ValidationReport& r);

Json read_json_file(const std::string& path);

}  // namespace gkm::io
