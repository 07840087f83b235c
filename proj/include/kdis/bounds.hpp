#pragma once

#include <cstdint>
#include <span>

namespace kdis {

struct AlphaBound {
  double value;
  int d;
};

/// Smallest degree the per-vertex bound has to cover for a given k.
/// Degrees below k force the vertex into every k-DIS, and for k = 2 the
/// degrees 1..3 are handled by the sharper recurrences (see tau roots).
int alpha_min_degree(int k);

/// max over d in [alpha_min_degree(k), 8k+8] of ((k+d)/k)^(1/(d+1)).
/// k=1 -> 3^(1/3) at d=2; k=2 -> 3^(1/5) at d=4.
AlphaBound alpha_bound(int k);

/// The same maximum taken over every d in [1, 8k+8].
AlphaBound alpha_bound_all_degrees(int k);

/// Root of the polynomial with the given coefficients (highest degree
/// first) inside [lo, hi], by bisection to 1e-12. Throws if P(lo) and P(hi)
/// have the same sign.
double poly_root(std::span<const double> coefficients, double lo, double hi);
double poly_eval(std::span<const double> coefficients, double x);

/// Roots of the minimum-degree recurrences for 2-DIS counting:
/// delta=2: x^4-x-1, delta=3 (independent neighborhood): x^8-x^4-x-2,
/// delta=3 (an edge inside N(v)): x^7-x^3-2, and the forced-pair case
/// x^5-x-1. Each lies below 3^(1/5).
struct TauRoots {
  double tau1, tau2, tau3, tau_pair;
};
TauRoots tau_roots();

struct RandomModelParams {
  int n = 0;
  int t = 0;
  int k = 1;
  double p = 0.5;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
};

/// E[number of size-t k-DISes in G(n,p)]
///   = C(n,t) (1-p)^C(t,2) (1 - sum_{j<k} C(t,j) p^j (1-p)^(t-j))^(n-t).
double expected_kdis_count(const RandomModelParams& params);

struct MonteCarloEstimate {
  double mean;
  double standard_error;
};

/// Samples G(n,p) (n <= 64) and averages the number of size-t k-DISes.
/// Sample i draws its edges from SplitMix64::stream(seed, i), so results
/// are reproducible per seed and independent of evaluation order.
MonteCarloEstimate monte_carlo_expected(const RandomModelParams& params);

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, output
/// is the finalizer mix of the new state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  /// Independent stream i of a seed: seeded with mix(seed + (i+1)*golden).
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t i);
  static std::uint64_t mix(std::uint64_t z);

  std::uint64_t next();
  /// Uniform in [0,1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

double binomial(int n, int r);

}  // namespace kdis
