// Copyright 2026 The spinjoint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinjoint/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

namespace spinjoint {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

SeededStream SeededStream::fork(std::uint64_t k) const {
  return {seed, splitmix64(stream_id ^ splitmix64(k ^ 0xD1B54A32D192ED03ULL))};
}

std::mt19937_64 SeededStream::engine() const {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(stream_id)));
}

double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::vector<std::uint64_t> draw_counts(const std::vector<double>& probabilities, std::uint64_t n,
                                       const SeededStream& stream, unsigned workers) {
  const std::size_t k = probabilities.size();
  if (k == 0) throw Error(Errc::InvalidArgument, "no categories to draw from");

  std::vector<double> cdf(k);
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double p = std::max(probabilities[i], 0.0);
    if (p > 0.0) last_positive = i;
    acc += p;
    cdf[i] = acc;
  }
  if (!(acc > 0.0)) throw Error(Errc::InvalidArgument, "probabilities sum to zero");
  for (auto& c : cdf) c /= acc;

  const std::uint64_t blocks = (n + kBlockSize - 1) / kBlockSize;
  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::uint64_t>(workers == 0 ? 1 : workers, 1, std::max<std::uint64_t>(blocks, 1)));
  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(k, 0));

  auto run = [&](unsigned t) {
    auto& local = partial[t];
    for (std::uint64_t b = t; b < blocks; b += threads) {
      auto engine = stream.fork(b).engine();
      const std::uint64_t draws = std::min(kBlockSize, n - b * kBlockSize);
      for (std::uint64_t d = 0; d < draws; ++d) {
        const double u = uniform01(engine);
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx =
            it == cdf.end() ? last_positive : static_cast<std::size_t>(it - cdf.begin());
        ++local[idx];
      }
    }
  };

  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }

  std::vector<std::uint64_t> counts(k, 0);
  for (const auto& local : partial)
    for (std::size_t i = 0; i < k; ++i) counts[i] += local[i];
  return counts;
}

std::uint64_t SampleStats::count(std::string_view label) const {
  for (const auto& c : counts)
    if (c.label == label) return c.count;
  return 0;
}

double SampleStats::frequency(std::string_view label) const {
  return n == 0 ? 0.0 : static_cast<double>(count(label)) / static_cast<double>(n);
}

SampleStats summarize(std::vector<LabelCount> counts,
                      const std::function<double(const std::string&)>& value) {
  SampleStats s;
  for (const auto& c : counts) s.n += c.count;
  s.counts = std::move(counts);
  if (s.n == 0) return s;
  const double n = static_cast<double>(s.n);
  double sum = 0.0;
  for (const auto& c : s.counts) sum += value(c.label) * static_cast<double>(c.count);
  s.mean = sum / n;
  double ss = 0.0;
  for (const auto& c : s.counts) {
    const double dv = value(c.label) - s.mean;
    ss += dv * dv * static_cast<double>(c.count);
  }
  s.variance = s.n > 1 ? ss / (n - 1.0) : 0.0;
  s.std_error = std::sqrt(s.variance / n);
  return s;
}

SampleStats slot_summary(const SampleStats& stats, std::size_t slot) {
  return summarize(stats.counts,
                   [slot](const std::string& l) { return double(outcome_value(l, slot)); });
}

namespace {

double first_slot_value(const std::string& label) {
  if (!label.empty() && (label[0] == '+' || label[0] == '-')) return label[0] == '+' ? 1.0 : -1.0;
  return std::numeric_limits<double>::quiet_NaN();
}

void require_draws(std::uint64_t n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "sample size must be at least 1");
}

}  // namespace

SampleStats sample_povm(const Povm& povm, const QubitState& state, std::uint64_t n,
                        const SeededStream& stream, unsigned workers) {
  require_draws(n);
  const auto probs = outcome_probabilities(povm, state);
  std::vector<double> p;
  for (const auto& o : probs) p.push_back(o.probability);
  const auto counts = draw_counts(p, n, stream, workers);
  std::vector<LabelCount> tally;
  for (std::size_t i = 0; i < povm.size(); ++i) tally.push_back({povm[i].label, counts[i]});
  return summarize(std::move(tally), first_slot_value);
}

Estimate TwoPartyTally::correlation(std::size_t slot) const {
  if (n == 0) return {};
  double sum = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double v = outcome_value(labels[i], slot);
    sum += v * (static_cast<double>(counts(i, 0)) - static_cast<double>(counts(i, 1)));
  }
  const double nd = static_cast<double>(n);
  const double e = sum / nd;
  // Products are ±1, so the per-draw variance is 1 - E² (unbiased form).
  const double var = n > 1 ? (1.0 - e * e) * nd / (nd - 1.0) : 0.0;
  return {e, std::sqrt(std::max(var, 0.0) / nd)};
}

std::vector<LabelCount> TwoPartyTally::first_marginal() const {
  std::vector<LabelCount> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    out.push_back({labels[i], counts(i, 0) + counts(i, 1)});
  return out;
}

TwoPartyTally sample_two_party(const Povm& povm1, const UnitVector3& setting, std::uint64_t n,
                               const SeededStream& stream, unsigned workers) {
  require_draws(n);
  const Eigen::MatrixXd table = two_party_probabilities(povm1, projective_povm(setting), singlet());
  std::vector<double> flat;
  for (Eigen::Index i = 0; i < table.rows(); ++i)
    for (Eigen::Index j = 0; j < 2; ++j) flat.push_back(table(i, j));
  const auto counts = draw_counts(flat, n, stream, workers);

  TwoPartyTally tally;
  tally.n = n;
  tally.counts.resize(table.rows(), 2);
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    tally.labels.push_back(povm1[i].label);
    tally.counts(i, 0) = counts[2 * i];
    tally.counts(i, 1) = counts[2 * i + 1];
  }
  return tally;
}

double two_proportion_z(std::uint64_t hits1, std::uint64_t n1, std::uint64_t hits2,
                        std::uint64_t n2) {
  const double p1 = static_cast<double>(hits1) / static_cast<double>(n1);
  const double p2 = static_cast<double>(hits2) / static_cast<double>(n2);
  const double pooled = static_cast<double>(hits1 + hits2) / static_cast<double>(n1 + n2);
  const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / double(n1) + 1.0 / double(n2)));
  if (!(se > 0.0)) return 0.0;
  return (p1 - p2) / se;
}

SignallingResult signalling_experiment(const JointSpec& spec, const Settings& settings,
                                       std::uint64_t n, const SeededStream& stream,
                                       unsigned workers) {
  const Povm povm = general_joint_povm(spec);
  auto equality_stats = [&](const UnitVector3& direction, std::uint64_t k) {
    const auto tally = sample_two_party(povm, direction, n, stream.fork(k), workers);
    std::uint64_t equal = 0;
    for (const auto& lc : tally.first_marginal()) {
      if (outcome_value(lc.label, 0) == outcome_value(lc.label, 1)) equal += lc.count;
    }
    return summarize({{"equal", equal}, {"different", n - equal}},
                     [](const std::string& l) { return l == "equal" ? 1.0 : 0.0; });
  };
  SignallingResult r;
  r.under_b = equality_stats(settings.b, 0);
  r.under_b_prime = equality_stats(settings.b_prime, 1);
  r.z = two_proportion_z(r.under_b.count("equal"), n, r.under_b_prime.count("equal"), n);
  return r;
}

double chi_square_survival(double x, int dof) {
  if (dof < 1) throw Error(Errc::InvalidArgument, "chi-square needs at least one degree of freedom");
  if (!(x > 0.0)) return 1.0;
  const double h = x / 2.0;
  double sum = 0.0;
  if (dof % 2 == 0) {
    double term = 1.0;
    for (int i = 0; i < dof / 2; ++i) {
      sum += term;
      term *= h / (i + 1);
    }
    return std::exp(-h) * sum;
  }
  double term = std::sqrt(h) / (std::sqrt(std::numbers::pi) / 2.0);  // h^{1/2} / Γ(3/2)
  for (int i = 0; i < dof / 2; ++i) {
    sum += term;
    term *= h / (i + 1.5);
  }
  return std::erfc(std::sqrt(h)) + std::exp(-h) * sum;
}

ChiSquareResult chi_square_gof(const std::vector<std::uint64_t>& counts,
                               const std::vector<double>& probabilities) {
  if (counts.size() != probabilities.size()) {
    throw Error(Errc::InvalidArgument, "counts and probabilities differ in length");
  }
  std::uint64_t n = 0;
  for (auto c : counts) n += c;
  ChiSquareResult r;
  int categories = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double p = probabilities[i];
    if (p <= 1e-15) {
      if (counts[i] > 0) {
        r.statistic = std::numeric_limits<double>::infinity();
        r.p_value = 0.0;
        return r;
      }
      continue;
    }
    ++categories;
    const double expected = p * static_cast<double>(n);
    const double diff = static_cast<double>(counts[i]) - expected;
    r.statistic += diff * diff / expected;
  }
  r.dof = categories - 1;
  r.p_value = r.dof >= 1 ? chi_square_survival(r.statistic, r.dof) : 1.0;
  return r;
}

Estimate alpha_estimate(const SampleStats& stats, double exact_expectation) {
  if (exact_expectation == 0.0) {
    throw Error(Errc::InvalidArgument, "alpha is unidentifiable when <a·σ> = 0");
  }
  return {stats.mean / exact_expectation, stats.std_error / std::abs(exact_expectation)};
}

}  // namespace spinjoint
