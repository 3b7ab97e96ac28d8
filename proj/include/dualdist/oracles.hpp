#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "dualdist/distribution.hpp"
#include "dualdist/random.hpp"

namespace dualdist {

// Per-oracle query accounting; each counter moves by exactly 1 per call.
struct QueryStats {
  std::uint64_t samp_count = 0;
  std::uint64_t eval_count = 0;
  std::uint64_t ceval_count = 0;

  std::uint64_t total() const { return samp_count + eval_count + ceval_count; }

  friend QueryStats operator+(const QueryStats& a, const QueryStats& b) {
    return {a.samp_count + b.samp_count, a.eval_count + b.eval_count,
            a.ceval_count + b.ceval_count};
  }
  friend QueryStats operator-(const QueryStats& a, const QueryStats& b) {
    return {a.samp_count - b.samp_count, a.eval_count - b.eval_count,
            a.ceval_count - b.ceval_count};
  }
  friend bool operator==(const QueryStats& a, const QueryStats& b) {
    return a.samp_count == b.samp_count && a.eval_count == b.eval_count &&
           a.ceval_count == b.ceval_count;
  }
};

// Multiplicative perturbation of evaluation answers: every noisy answer
// satisfies hat_d / D(i) in [1/(1+tau), 1+tau]. Exactly-zero masses are
// answered 0.
struct NoiseModel {
  enum class Mode { random, adversarial };

  double tau = 0;
  Mode mode = Mode::random;
  // Adversarial mode: the callback picks the multiplier for each query and
  // must stay inside [1/(1+tau), 1+tau].
  std::function<double(std::int64_t point, double true_mass)> multiplier;

  // Random mode draws the multiplier log-uniformly in [-log(1+tau), log(1+tau)].
  static NoiseModel random_mode(double tau);
  static NoiseModel adversarial_mode(
      double tau, std::function<double(std::int64_t, double)> multiplier);
};

// SAMP + EVAL access to a hidden distribution. An instance is single-threaded;
// concurrent trials each get their own instance. The sampling stream is
// seeded independently of the noise stream, so noiseless and noisy runs with
// the same seed see the same samples.
class DualOracle {
 public:
  DualOracle(ExplicitDistribution dist, std::uint64_t seed,
             std::optional<NoiseModel> noise = std::nullopt);
  DualOracle(std::shared_ptr<const ExplicitDistribution> dist, std::uint64_t seed,
             std::optional<NoiseModel> noise = std::nullopt);

  // Independent draw from D; 1-based element.
  std::int64_t samp();

  // D(j), exact when noiseless, perturbed within the noise envelope otherwise.
  double eval(std::int64_t j);

  std::int64_t domain_size() const { return dist_->n(); }
  const QueryStats& stats() const { return stats_; }
  const std::optional<NoiseModel>& noise() const { return noise_; }

 private:
  double perturb(std::int64_t j, double mass);

  std::shared_ptr<const ExplicitDistribution> dist_;
  PrefixCdf cdf_;
  Rng samp_rng_;
  Rng noise_rng_;
  QueryStats stats_;
  std::optional<NoiseModel> noise_;
};

// SAMP + CEVAL access. Noisy CEVAL semantics are not defined by the model;
// an instance carrying a noise model refuses ceval()/eval_via_ceval() with an
// explicit error instead of guessing.
class CumulativeDualOracle {
 public:
  CumulativeDualOracle(ExplicitDistribution dist, std::uint64_t seed,
                       std::optional<NoiseModel> noise = std::nullopt);
  CumulativeDualOracle(std::shared_ptr<const ExplicitDistribution> dist,
                       std::uint64_t seed,
                       std::optional<NoiseModel> noise = std::nullopt);

  std::int64_t samp();

  // D([j]) = sum_{i<=j} D(i).
  double ceval(std::int64_t j);

  // EVAL simulated by ceval(j) - ceval(j-1): two CEVAL queries, one when j = 1.
  double eval_via_ceval(std::int64_t j);

  std::int64_t domain_size() const { return dist_->n(); }
  const QueryStats& stats() const { return stats_; }
  bool noisy() const { return noise_.has_value(); }

 private:
  std::shared_ptr<const ExplicitDistribution> dist_;
  PrefixCdf cdf_;
  Rng samp_rng_;
  QueryStats stats_;
  std::optional<NoiseModel> noise_;
};

// Uncounted inverse-cdf sampler for distributions the algorithm itself holds
// (a known D*); such draws cost no oracle queries.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(const ExplicitDistribution& d);
  std::int64_t sample(Rng& rng) const;

 private:
  PrefixCdf cdf_;
};

}  // namespace dualdist
