#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "dualpoly/rational.hpp"

namespace dualpoly {

/// Largest n for which whole-cube tables are built.
inline constexpr int kMaxCubeBits = 24;

/// A point of {0,1}^n stored as a bitmask; bit i of `mask` is bits_i. The
/// ±1 coordinate is x_i = 1 - 2*bits_i.
struct CubePoint {
  int n = 0;
  std::uint32_t mask = 0;

  int bit(int i) const { return static_cast<int>((mask >> i) & 1u); }
  int pm(int i) const { return 1 - 2 * bit(i); }
  int weight() const { return std::popcount(mask); }
};

/// chi_S(x) = prod_{i in S} x_i for masks S and x.
inline int character(std::uint32_t s, std::uint32_t x) { return (std::popcount(s & x) & 1) ? -1 : 1; }

/// Unnormalized character transform, in place: out[x] = sum_S in[S] chi_S(x).
/// Throws std::invalid_argument if the length is not a power of two.
template <class T>
void walsh_hadamard_inplace(std::vector<T>& v) {
  const std::size_t len = v.size();
  if (len == 0 || (len & (len - 1)) != 0) throw std::invalid_argument("walsh_hadamard: length must be a power of two");
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        T a = v[j];
        T b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

std::vector<Rational> walsh_hadamard(std::vector<Rational> values);

/// Nonnegative weights w_1..w_n.
struct WeightVector {
  std::vector<Rational> w;

  static WeightVector uniform(int n) { return {std::vector<Rational>(n, Rational(1))}; }
  int n() const { return static_cast<int>(w.size()); }
  Rational l1() const;
  Rational l2_squared() const;
  /// w(S) = sum_{i in S} w_i.
  Rational of_set(std::uint32_t s) const;
  /// Throws std::invalid_argument on a negative entry.
  void validate() const;
};

/// Multilinear polynomial over {-1,1}^n in the parity basis.
class ParityPoly {
 public:
  ParityPoly() = default;
  explicit ParityPoly(int n) : n_(n) {}

  /// Interpolates the unique multilinear polynomial through 2^n cube values.
  static ParityPoly from_cube_values(int n, const std::vector<Rational>& values);

  int n() const noexcept { return n_; }
  const std::map<std::uint32_t, Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::uint32_t s) const;
  void add(std::uint32_t s, const Rational& c);

  Rational operator()(std::uint32_t x) const;
  /// Values at all 2^n points, indexed by mask.
  std::vector<Rational> cube_values() const;
  /// Largest |S| with nonzero coefficient; -1 for the zero polynomial.
  int degree() const;

  ParityPoly& operator+=(const ParityPoly& rhs);
  ParityPoly& operator*=(const Rational& s);
  friend bool operator==(const ParityPoly& a, const ParityPoly& b) { return a.n_ == b.n_ && a.coeffs_ == b.coeffs_; }

 private:
  int n_ = 0;
  std::map<std::uint32_t, Rational> coeffs_;
};

/// sum_S |c_S|.
Rational parity_weight(const ParityPoly& p);

/// Multilinear polynomial over {0,1}^n in the monomial basis prod_{i in T} b_i.
struct MonomialPoly {
  int n = 0;
  std::map<std::uint32_t, Rational> coeffs;
};

/// Substitutes b_i = (1 - x_i)/2.
ParityPoly basis_convert(const MonomialPoly& p);

/// Probability vector over Hamming weights 0..n.
struct SymmetricDistribution {
  int n = 0;
  std::vector<Rational> weight_probs;

  /// Throws std::invalid_argument unless entries are >= 0 and sum to 1.
  void validate() const;
  /// Probability of one particular string of weight h.
  Rational per_string(int h) const;
  static SymmetricDistribution point_mass(int n, int h);
  static SymmetricDistribution uniform_cube(int n);
};

/// Law of X|_S for |S| = K. Throws std::invalid_argument unless 1 <= K <= n.
SymmetricDistribution project_symmetric(const SymmetricDistribution& d, int K);

/// Half the L1 distance between weight distributions.
Rational stat_distance_symmetric(const SymmetricDistribution& d1, const SymmetricDistribution& d2);

/// Size-k marginals agree exactly (k = 0 is always true).
bool kwise_indistinguishable(const SymmetricDistribution& d1, const SymmetricDistribution& d2, int k);

/// sum_{|x| = h} chi_S(x) for any fixed S with |S| = j:
/// sum_i (-1)^i C(j, i) C(n - j, h - i).
Integer character_sum(int n, int j, int h);

/// Coefficient of every chi_S with |S| = j in the multilinear extension of a
/// symmetric function given by its values g(0..n).
std::vector<Rational> symmetric_levels(int n, const std::vector<Rational>& g);

/// Parity-basis weight sum_j C(n, j) |a_j| of a symmetric function.
Rational symmetric_weight(int n, const std::vector<Rational>& g);

/// A signed function on the cube, or a symmetric one given per weight
/// (values[h] is the value of each single string of weight h).
struct DualWitness {
  enum class Representation { Symmetric, Cube };

  int n = 0;
  Representation representation = Representation::Cube;
  std::vector<Rational> values;
  Rational claimed_degree = 0;

  Rational value_at(std::uint32_t x) const;
  /// sum_x |psi(x)|, counting each weight class with multiplicity C(n, h).
  Rational l1_norm() const;
  /// Cube values (expands a symmetric witness).
  std::vector<Rational> to_cube() const;
};

/// <psi, chi_S> for every S, indexed by mask (one transform).
std::vector<Rational> witness_spectrum(const DualWitness& psi);
/// <psi, chi_S> for |S| = j of a symmetric witness.
Rational symmetric_character_pairing(const DualWitness& psi, int j);

Rational pair_with_witness(const DualWitness& psi, const ParityPoly& p);
Rational pair_with_witness(const DualWitness& psi, const std::function<Rational(std::uint32_t)>& f);
/// Pairing of a symmetric witness with a symmetric function given per weight.
Rational pair_symmetric(const DualWitness& psi, const std::vector<Rational>& f_by_weight);

}  // namespace dualpoly
