#include "kdis/bounds.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "kdis/detail/engine.hpp"

namespace kdis {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

AlphaBound alpha_scan(int k, int d_lo) {
  if (k < 1) throw std::invalid_argument("alpha_bound: k must be positive");
  AlphaBound best{0.0, 0};
  for (int d = d_lo; d <= 8 * k + 8; ++d) {
    const double v = std::pow(static_cast<double>(k + d) / k, 1.0 / (d + 1));
    if (v > best.value) best = {v, d};
  }
  return best;
}

}  // namespace

int alpha_min_degree(int k) {
  if (k == 1) return 1;
  if (k == 2) return 4;
  return k;
}

AlphaBound alpha_bound(int k) { return alpha_scan(k, alpha_min_degree(k)); }

AlphaBound alpha_bound_all_degrees(int k) { return alpha_scan(k, 1); }

double poly_eval(std::span<const double> coefficients, double x) {
  double acc = 0.0;
  for (double c : coefficients) acc = acc * x + c;
  return acc;
}

double poly_root(std::span<const double> coefficients, double lo, double hi) {
  if (coefficients.empty()) throw std::invalid_argument("poly_root: empty polynomial");
  double flo = poly_eval(coefficients, lo);
  const double fhi = poly_eval(coefficients, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0) == (fhi < 0)) {
    throw std::invalid_argument("poly_root: no sign change on [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    const double fm = poly_eval(coefficients, mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

TauRoots tau_roots() {
  const std::array<double, 5> p1{1, 0, 0, -1, -1};
  const std::array<double, 9> p2{1, 0, 0, 0, -1, 0, 0, -1, -2};
  const std::array<double, 8> p3{1, 0, 0, 0, -1, 0, 0, -2};
  const std::array<double, 6> pp{1, 0, 0, 0, -1, -1};
  return {poly_root(p1, 1, 2), poly_root(p2, 1, 2), poly_root(p3, 1, 2), poly_root(pp, 1, 2)};
}

double binomial(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

double expected_kdis_count(const RandomModelParams& params) {
  const int n = params.n, t = params.t, k = params.k;
  const double p = params.p;
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  if (t < 0 || t > n) throw std::invalid_argument("t must lie in [0,n]");
  if (k < 1) throw std::invalid_argument("k must be positive");
  const double q = 1.0 - p;
  double miss = 0.0;  // P(an outside vertex has fewer than k neighbors in the set)
  for (int j = 0; j < k; ++j) miss += binomial(t, j) * std::pow(p, j) * std::pow(q, t - j);
  const double inside = std::pow(q, binomial(t, 2));
  const double outside = std::pow(1.0 - miss, n - t);
  return binomial(n, t) * inside * outside;
}

std::uint64_t SplitMix64::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += kGolden;
  return mix(state_);
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t i) {
  return SplitMix64(mix(seed + (i + 1) * kGolden));
}

MonteCarloEstimate monte_carlo_expected(const RandomModelParams& params) {
  const int n = params.n, t = params.t, k = params.k;
  if (n < 1 || n > 64) throw std::invalid_argument("monte_carlo_expected: n must be in [1,64]");
  if (t < 0 || t > n) throw std::invalid_argument("t must lie in [0,n]");
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw std::invalid_argument("p must lie in [0,1]");
  if (params.samples < 1000) throw std::invalid_argument("monte_carlo_expected: need >= 1000 samples");

  using Bits = detail::FixedBits<1>;
  std::vector<Bits> rows(static_cast<std::size_t>(n));
  double sum = 0.0, sum_sq = 0.0;
  for (std::uint64_t s = 0; s < params.samples; ++s) {
    auto rng = SplitMix64::stream(params.seed, s);
    for (auto& r : rows) r = Bits{};
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (rng.uniform() < params.p) {
          rows[i].set(static_cast<std::size_t>(j));
          rows[j].set(static_cast<std::size_t>(i));
        }
      }
    }
    std::uint64_t hits = 0;
    detail::KdisEngine<1>(rows.data(), static_cast<std::size_t>(n), k).run([&](const Bits& d) {
      if (d.count() == t) ++hits;
    });
    const auto x = static_cast<double>(hits);
    sum += x;
    sum_sq += x * x;
  }
  const auto m = static_cast<double>(params.samples);
  const double mean = sum / m;
  const double var = std::max(0.0, (sum_sq - m * mean * mean) / (m - 1));
  return {mean, std::sqrt(var / m)};
}

}  // namespace kdis
