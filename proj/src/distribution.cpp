#include "dualdist/distribution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "dualdist/random.hpp"
#include "json.hpp"

namespace dualdist {

ExplicitDistribution::ExplicitDistribution(std::vector<double> pmf, bool renormalize)
    : pmf_(std::move(pmf)) {
  if (pmf_.empty()) throw std::invalid_argument("pmf: must be non-empty");
  double sum = 0;
  for (double p : pmf_) {
    if (!(p >= 0)) throw std::invalid_argument("pmf: entries must be >= 0");
    sum += p;
  }
  if (renormalize) {
    if (sum <= 0) throw std::invalid_argument("pmf: cannot renormalize zero mass");
    for (double& p : pmf_) p /= sum;
  } else if (std::abs(sum - 1.0) > kMassTolerance) {
    throw std::invalid_argument("pmf: entries must sum to 1 within 1e-9 (got " +
                                std::to_string(sum) + ")");
  }
}

double ExplicitDistribution::mass(std::int64_t i) const {
  if (i < 1 || i > n()) throw std::out_of_range("mass: index outside [n]");
  return pmf_[static_cast<std::size_t>(i - 1)];
}

PrefixCdf::PrefixCdf(const ExplicitDistribution& d) {
  cdf_.reserve(d.pmf().size());
  double acc = 0;
  for (double p : d.pmf()) {
    acc += p;
    cdf_.push_back(acc);
  }
}

double PrefixCdf::value(std::int64_t j) const {
  if (j < 0 || j > n()) throw std::out_of_range("cdf: index outside [0, n]");
  return j == 0 ? 0.0 : cdf_[static_cast<std::size_t>(j - 1)];
}

std::int64_t PrefixCdf::inverse(double u) const {
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) {
    // u at or above the accumulated total; take the last positive-mass point.
    std::size_t j = cdf_.size() - 1;
    while (j > 0 && cdf_[j] <= cdf_[j - 1]) --j;
    return static_cast<std::int64_t>(j) + 1;
  }
  return static_cast<std::int64_t>(it - cdf_.begin()) + 1;
}

double tv_distance(const ExplicitDistribution& d1, const ExplicitDistribution& d2) {
  if (d1.n() != d2.n())
    throw std::invalid_argument("tv_distance: domain sizes differ");
  double sum = 0;
  for (std::size_t i = 0; i < d1.pmf().size(); ++i)
    sum += std::abs(d1.pmf()[i] - d2.pmf()[i]);
  return sum / 2;
}

double entropy_exact(const ExplicitDistribution& d) {
  double h = 0;
  for (double p : d.pmf())
    if (p > 0) h -= p * std::log2(p);
  return h;
}

std::int64_t support_size_exact(const ExplicitDistribution& d, double threshold) {
  if (!(threshold > 0))
    throw std::invalid_argument("support_size_exact: threshold must be > 0");
  std::int64_t count = 0;
  for (double p : d.pmf())
    if (p >= threshold) ++count;
  return count;
}

bool is_monotone_nonincreasing(const ExplicitDistribution& d) {
  for (std::size_t i = 1; i < d.pmf().size(); ++i)
    if (d.pmf()[i] > d.pmf()[i - 1]) return false;
  return true;
}

double binary_entropy(double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("binary_entropy: p outside [0,1]");
  if (p == 0 || p == 1) return 0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

double entropy_diff_bound(double alpha, std::int64_t n) {
  if (alpha < 0 || alpha > 1)
    throw std::invalid_argument("entropy_diff_bound: alpha outside [0,1]");
  if (n < 2) throw std::invalid_argument("entropy_diff_bound: n must be >= 2");
  return alpha * std::log2(static_cast<double>(n - 1)) + binary_entropy(alpha);
}

ExplicitDistribution uniform_distribution(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("uniform_distribution: n must be >= 1");
  return ExplicitDistribution(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n), true);
}

ExplicitDistribution uniform_on_prefix(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("uniform_on_prefix: need 1 <= k <= n");
  std::vector<double> pmf(static_cast<std::size_t>(n), 0.0);
  for (std::int64_t i = 0; i < k; ++i) pmf[static_cast<std::size_t>(i)] = 1.0 / k;
  return ExplicitDistribution(std::move(pmf), true);
}

ExplicitDistribution point_mass(std::int64_t n, std::int64_t atom) {
  if (n < 1 || atom < 1 || atom > n)
    throw std::invalid_argument("point_mass: atom outside [n]");
  std::vector<double> pmf(static_cast<std::size_t>(n), 0.0);
  pmf[static_cast<std::size_t>(atom - 1)] = 1.0;
  return ExplicitDistribution(std::move(pmf));
}

ExplicitDistribution random_distribution(std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_distribution: n must be >= 1");
  Rng rng(seed);
  std::vector<double> pmf(static_cast<std::size_t>(n));
  for (double& p : pmf) p = 1.0 - uniform_unit(rng);  // (0, 1]
  return ExplicitDistribution(std::move(pmf), true);
}

ExplicitDistribution random_monotone(std::int64_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> pmf(static_cast<std::size_t>(n));
  for (double& p : pmf) p = 1.0 - uniform_unit(rng);
  std::sort(pmf.begin(), pmf.end(), std::greater<double>());
  return ExplicitDistribution(std::move(pmf), true);
}

ExplicitDistribution load_distribution_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("distribution file: malformed JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("pmf"))
    throw std::runtime_error("distribution file: missing field \"n\" or \"pmf\"");
  auto n = j.at("n").get<std::int64_t>();
  auto pmf = j.at("pmf").get<std::vector<double>>();
  if (n != static_cast<std::int64_t>(pmf.size()))
    throw std::runtime_error("distribution file: field \"n\" does not match pmf length");
  return ExplicitDistribution(std::move(pmf));
}

void save_distribution_json(const ExplicitDistribution& d, std::ostream& out) {
  nlohmann::json j;
  j["n"] = d.n();
  j["pmf"] = d.pmf();
  out << j.dump() << "\n";
}

namespace {

void put_u64_le(std::ostream& os, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>(v >> (8 * i));
  os.write(b, 8);
}

std::uint64_t get_u64_le(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  if (!is) throw std::runtime_error("distribution file: truncated binary data");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

}  // namespace

ExplicitDistribution load_distribution_binary(std::istream& in) {
  std::uint64_t n = get_u64_le(in);
  if (n == 0 || n > (1ULL << 32))
    throw std::runtime_error("distribution file: implausible binary domain size");
  std::vector<double> pmf(n);
  for (auto& p : pmf) p = std::bit_cast<double>(get_u64_le(in));
  return ExplicitDistribution(std::move(pmf));
}

void save_distribution_binary(const ExplicitDistribution& d, std::ostream& out) {
  put_u64_le(out, static_cast<std::uint64_t>(d.n()));
  for (double p : d.pmf()) put_u64_le(out, std::bit_cast<std::uint64_t>(p));
}

namespace {

bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

}  // namespace

ExplicitDistribution load_distribution(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("distribution file: cannot open " + path);
  return has_json_extension(path) ? load_distribution_json(in)
                                  : load_distribution_binary(in);
}

void save_distribution(const ExplicitDistribution& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("distribution file: cannot open " + path + " for writing");
  if (has_json_extension(path))
    save_distribution_json(d, out);
  else
    save_distribution_binary(d, out);
}

}  // namespace dualdist
