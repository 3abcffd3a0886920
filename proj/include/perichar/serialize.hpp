#pragma once

#include <string>

#include <json.hpp>

#include "perichar/euler.hpp"
#include "perichar/superchar.hpp"

namespace perichar {

/// Interchange schema for polynomials (used by every CLI command):
///   {"nvars": int, "terms": [[[e1,...,en], "coef"], ...]}
/// terms sorted lexicographically by exponent vector, coefficients as decimal
/// strings of unbounded magnitude. Serialization is deterministic
/// (byte-identical across runs).
nlohmann::ordered_json poly_to_json(const LaurentPolynomial& f);
LaurentPolynomial poly_from_json(const nlohmann::json& j);
std::string poly_to_string(const LaurentPolynomial& f);
LaurentPolynomial poly_from_string(const std::string& text);

/// Human-readable form, leading term first, e.g. "x1^2*x2 - x2^-1 + 3".
std::string poly_to_text(const LaurentPolynomial& f);

/// {"n": int, "terms": [[[l1,...,ln], coeff], ...]} sorted lexicographically
/// by weight.
nlohmann::ordered_json combo_to_json(const ThinKacCombination& c);
ThinKacCombination combo_from_json(const nlohmann::json& j);
std::string combo_to_text(const ThinKacCombination& c);

nlohmann::ordered_json probe_to_json(const ProbeReport& report);
std::string probe_to_text(const ProbeReport& report);

/// Comma-separated integers, e.g. "2,0,-1".
std::vector<std::int64_t> parse_csv_integers(const std::string& text);
std::string format_csv_integers(const std::vector<std::int64_t>& values);

} // namespace perichar
