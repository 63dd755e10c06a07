#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "dualpoly/boolcube.hpp"

namespace dualpoly {

struct DualAndParams {
  int n = 0;
  WeightVector w;
  Rational d;

  static DualAndParams uniform(int n, const Rational& d) { return {n, WeightVector::uniform(n), d}; }
  /// Throws std::invalid_argument on n out of [1, 24], a wrong weight count,
  /// negative weights or d outside (0, ||w||_1].
  void validate() const;
};

struct DualAndWitness {
  DualAndParams params;
  /// |H| for H = {S : w(S) <= (||w||_1 - d)/2}.
  Integer h_size;
  /// 2^n / |H|.
  Rational z;
  DualWitness phi;
  /// |H| / 2^n, also phi at the all-(+1) point.
  Rational epsilon;
  /// c(x) = sum_{S in H} chi_S(x), indexed by mask.
  std::vector<std::int64_t> char_sums;
  /// True when the (-1)^n orientation was flipped to make <phi, AND> > 0.
  bool negated = false;
};

/// phi(x) = ((-1)^n / Z) chi_[n](x) (E_{S~H} chi_S(x))^2, oriented so that
/// phi is positive at the all-(+1) point. Throws std::invalid_argument when
/// H is empty.
DualAndWitness build_phi(const DualAndParams& params);

/// build_phi for uniform weights, as a symmetric witness (values per
/// weight). Works for any n >= 1; d must lie in (0, n].
DualWitness build_phi_symmetric(int n, const Rational& d);

/// AND over {-1,1}^n: 1 at the all-(+1) point (mask 0), else 0.
Rational and_pm(std::uint32_t x);

struct WitnessReport {
  /// <phi, chi_S> = 0 for every S with w(S) < d.
  bool pure_high_degree = false;
  std::optional<std::uint32_t> violating_set;
  /// Informational: <phi, chi_S> = 0 also for every S with w(S) = d.
  bool boundary_orthogonal = false;
  Rational l1;
  Rational correlation;
};

WitnessReport verify_witness(const DualWitness& phi, const std::function<Rational(std::uint32_t)>& f,
                             const Rational& d, const WeightVector& w);

/// Pr_{X uniform on {-1,1}^n}[<w, X> >= d], exactly.
Rational epsilon_of(const DualAndParams& params);

struct WeightedCorollary {
  Rational probability;
  bool holds = false;
};

/// Pr[<w, X> >= ||w||_2 / 2] by enumeration, compared against 3/32.
WeightedCorollary weighted_corollary_check(const WeightVector& w);

/// Draws shares x with probability proportional to |psi(x)| restricted to the
/// positive part of psi (secret +1) or the negative part (secret -1). For a
/// witness from build_phi this is proportional to c(x)^2 on the class
/// prod x_i = secret.
class ShareSampler {
 public:
  explicit ShareSampler(const DualWitness& psi);

  CubePoint sample(int secret, std::mt19937_64& rng) const;
  /// Exact conditional law, indexed by mask.
  std::vector<Rational> exact_table(int secret) const;
  int n() const noexcept { return n_; }

 private:
  struct Side {
    std::vector<std::uint32_t> points;
    std::vector<std::uint64_t> cumulative;
  };
  const Side& side(int secret) const;

  int n_ = 0;
  Side positive_;
  Side negative_;
};

/// E[f(shares) | +1] - E[f(shares) | -1] from the exact tables.
Rational reconstruction_advantage(const ShareSampler& sampler, const std::function<Rational(std::uint32_t)>& f);

}  // namespace dualpoly
