#pragma once

#include <nlohmann/json.hpp>

#include "dualpoly/boolcube.hpp"
#include "dualpoly/ratpoly.hpp"

namespace dualpoly {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
/// Accepts "a/b" strings and JSON integers.
Rational rational_from_json(const Json& j);

Json to_json(const std::vector<Rational>& v);
std::vector<Rational> rationals_from_json(const Json& j);

/// Coefficient array, lowest power first.
Json to_json(const RationalPoly& p);
RationalPoly poly_from_json(const Json& j);

/// {"n": n, "coeffs": [{"set": [i, ...], "c": "a/b"}, ...]} with 1-based indices.
Json to_json(const ParityPoly& p);

/// {"n": n, "weight_probs": [...]}.
Json to_json(const SymmetricDistribution& d);
SymmetricDistribution distribution_from_json(const Json& j);

/// Adds "representation", "claimed_degree" and "values".
Json to_json(const DualWitness& w);
DualWitness witness_from_json(const Json& j);

}  // namespace dualpoly
