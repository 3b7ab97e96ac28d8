#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dualdist {

// Dense pmf over the 1-indexed domain [n] = {1, ..., n}. Entries must be
// nonnegative and sum to 1 within kMassTolerance; construction rejects
// anything else unless the caller explicitly opts into renormalization.
class ExplicitDistribution {
 public:
  static constexpr double kMassTolerance = 1e-9;

  explicit ExplicitDistribution(std::vector<double> pmf, bool renormalize = false);

  std::int64_t n() const { return static_cast<std::int64_t>(pmf_.size()); }

  // D(i) for 1-based i.
  double mass(std::int64_t i) const;

  // Raw entries, 0-based storage.
  const std::vector<double>& pmf() const { return pmf_; }

  bool operator==(const ExplicitDistribution& other) const { return pmf_ == other.pmf_; }

 private:
  std::vector<double> pmf_;
};

// Partial sums cdf[j] = D([j]) = sum_{i<=j} D(i), with value(0) == 0.
class PrefixCdf {
 public:
  explicit PrefixCdf(const ExplicitDistribution& d);

  std::int64_t n() const { return static_cast<std::int64_t>(cdf_.size()); }
  double value(std::int64_t j) const;

  // Smallest 1-based j with cdf[j] > u; never lands on a zero-mass point.
  std::int64_t inverse(double u) const;

 private:
  std::vector<double> cdf_;
};

// Total variation distance, (1/2) sum_i |D1(i) - D2(i)|.
double tv_distance(const ExplicitDistribution& d1, const ExplicitDistribution& d2);

// Shannon entropy in bits, with 0 log(1/0) := 0. All logarithms in this
// library are base 2.
double entropy_exact(const ExplicitDistribution& d);

// |{ i : D(i) >= threshold }|, threshold > 0.
std::int64_t support_size_exact(const ExplicitDistribution& d, double threshold);

bool is_monotone_nonincreasing(const ExplicitDistribution& d);

// Binary entropy h2(p) in bits; h2(0) = h2(1) = 0.
double binary_entropy(double p);

// Bound on |H(D1) - H(D2)| for tv(D1, D2) <= alpha over [n]:
// alpha * log2(n-1) + h2(alpha).
double entropy_diff_bound(double alpha, std::int64_t n);

// Fixture constructors.
ExplicitDistribution uniform_distribution(std::int64_t n);
ExplicitDistribution uniform_on_prefix(std::int64_t n, std::int64_t k);
ExplicitDistribution point_mass(std::int64_t n, std::int64_t atom);
ExplicitDistribution random_distribution(std::int64_t n, std::uint64_t seed);
ExplicitDistribution random_monotone(std::int64_t n, std::uint64_t seed);

// File formats. JSON: {"n": <int>, "pmf": [<n doubles>]}. Binary: 8-byte
// little-endian unsigned n followed by n little-endian IEEE-754 doubles.
// load/save dispatch on extension: ".json" -> JSON, anything else -> binary.
ExplicitDistribution load_distribution(const std::string& path);
void save_distribution(const ExplicitDistribution& d, const std::string& path);
ExplicitDistribution load_distribution_json(std::istream& in);
void save_distribution_json(const ExplicitDistribution& d, std::ostream& out);
ExplicitDistribution load_distribution_binary(std::istream& in);
void save_distribution_binary(const ExplicitDistribution& d, std::ostream& out);

}  // namespace dualdist
