#include "dualpoly/json_io.hpp"

#include <stdexcept>

namespace dualpoly {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string or integer, got " + j.dump());
}

Json to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(to_string(q));
  return arr;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

Json to_json(const RationalPoly& p) { return to_json(p.coeffs()); }

RationalPoly poly_from_json(const Json& j) { return RationalPoly(rationals_from_json(j)); }

Json to_json(const ParityPoly& p) {
  Json coeffs = Json::array();
  for (const auto& [mask, c] : p.coeffs()) {
    Json set = Json::array();
    for (int i = 0; i < p.n(); ++i)
      if ((mask >> i) & 1u) set.push_back(i + 1);
    coeffs.push_back({{"set", set}, {"c", to_string(c)}});
  }
  return {{"n", p.n()}, {"coeffs", coeffs}};
}

Json to_json(const SymmetricDistribution& d) { return {{"n", d.n}, {"weight_probs", to_json(d.weight_probs)}}; }

SymmetricDistribution distribution_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("weight_probs"))
    throw std::invalid_argument("distribution JSON needs \"n\" and \"weight_probs\"");
  SymmetricDistribution d{j.at("n").get<int>(), rationals_from_json(j.at("weight_probs"))};
  d.validate();
  return d;
}

Json to_json(const DualWitness& w) {
  return {{"n", w.n},
          {"representation", w.representation == DualWitness::Representation::Symmetric ? "symmetric" : "cube"},
          {"claimed_degree", to_string(w.claimed_degree)},
          {"values", to_json(w.values)}};
}

DualWitness witness_from_json(const Json& j) {
  for (const char* key : {"n", "representation", "claimed_degree", "values"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("witness JSON lacks \"") + key + "\"");
  DualWitness w;
  w.n = j.at("n").get<int>();
  const auto rep = j.at("representation").get<std::string>();
  if (rep == "symmetric")
    w.representation = DualWitness::Representation::Symmetric;
  else if (rep == "cube")
    w.representation = DualWitness::Representation::Cube;
  else
    throw std::invalid_argument("unknown witness representation " + rep);
  w.claimed_degree = rational_from_json(j.at("claimed_degree"));
  w.values = rationals_from_json(j.at("values"));
  if (w.n < 1 || w.n > kMaxCubeBits) throw std::invalid_argument("witness n out of range");
  const std::size_t expected =
      w.representation == DualWitness::Representation::Symmetric ? std::size_t(w.n + 1) : std::size_t{1} << w.n;
  if (w.values.size() != expected) throw std::invalid_argument("witness has the wrong number of values");
  return w;
}

}  // namespace dualpoly
