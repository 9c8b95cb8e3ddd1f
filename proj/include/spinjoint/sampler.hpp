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

#pragma once

// Monte Carlo draws from Born distributions. Draws are split into fixed-size
// blocks, each with its own substream derived from (seed, stream_id, block),
// so tallies do not depend on how many worker threads process the blocks.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "spinjoint/povm.hpp"
#include "spinjoint/singlet.hpp"

namespace spinjoint {

inline constexpr std::string_view kGeneratorName = "mt19937_64/splitmix64-substreams";
inline constexpr std::uint64_t kBlockSize = 1u << 16;

/// 64-bit finalizer used to derive substream seeds.
std::uint64_t splitmix64(std::uint64_t x);

struct SeededStream {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  /// Child stream k; deterministic in (seed, stream_id, k).
  SeededStream fork(std::uint64_t k) const;
  std::mt19937_64 engine() const;
};

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(std::mt19937_64& engine);

/// Inverse-CDF draws of `n` categories with the given probabilities.
/// Negative entries are treated as zero; the vector need not be normalized
/// beyond rounding.
std::vector<std::uint64_t> draw_counts(const std::vector<double>& probabilities, std::uint64_t n,
                                       const SeededStream& stream, unsigned workers = 1);

struct LabelCount {
  std::string label;
  std::uint64_t count = 0;
};

struct SampleStats {
  std::uint64_t n = 0;
  std::vector<LabelCount> counts;
  double mean = 0.0;
  double variance = 0.0;  ///< unbiased per-draw variance
  double std_error = 0.0; ///< sqrt(variance / n)

  std::uint64_t count(std::string_view label) const;
  double frequency(std::string_view label) const;
};

/// Builds stats from tallies and a per-label numeric value.
SampleStats summarize(std::vector<LabelCount> counts,
                      const std::function<double(const std::string&)>& value);

/// Re-summarizes with the ±1 value at `slot` of each label (slot 1 gives A'_J).
SampleStats slot_summary(const SampleStats& stats, std::size_t slot);

/// Draws n outcomes of `povm` on `state`. Mean/variance refer to the ±1 value in
/// the first label slot.
SampleStats sample_povm(const Povm& povm, const QubitState& state, std::uint64_t n,
                        const SeededStream& stream, unsigned workers = 1);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Joint tally over (observer-1 label, observer-2 result ±1) on the singlet.
struct TwoPartyTally {
  std::vector<std::string> labels;
  /// Row per observer-1 label; column 0 is B = +1, column 1 is B = -1.
  Eigen::Matrix<std::uint64_t, Eigen::Dynamic, 2> counts;
  std::uint64_t n = 0;

  /// Empirical E(X, B) with X read from `slot` of the observer-1 label.
  Estimate correlation(std::size_t slot) const;
  /// Observer-1 marginal counts.
  std::vector<LabelCount> first_marginal() const;
};

TwoPartyTally sample_two_party(const Povm& povm1, const UnitVector3& setting, std::uint64_t n,
                               const SeededStream& stream, unsigned workers = 1);

/// Indicator tallies of A_J = A'_J ("equal" / "different") under b and under b',
/// with the two-proportion z-score of their difference.
struct SignallingResult {
  SampleStats under_b;
  SampleStats under_b_prime;
  double z = 0.0;
};

SignallingResult signalling_experiment(const JointSpec& spec, const Settings& settings,
                                       std::uint64_t n, const SeededStream& stream,
                                       unsigned workers = 1);

/// Pooled two-proportion z statistic; 0 when both samples are degenerate.
double two_proportion_z(std::uint64_t hits1, std::uint64_t n1, std::uint64_t hits2,
                        std::uint64_t n2);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Pearson goodness of fit. Zero-probability categories are dropped from the
/// statistic; any draw landing in one forces p = 0.
ChiSquareResult chi_square_gof(const std::vector<std::uint64_t>& counts,
                               const std::vector<double>& probabilities);

/// Upper tail of the chi-square distribution with integer dof.
double chi_square_survival(double x, int dof);

/// α estimate from a sampled mean and the exact ⟨a·σ⟩ it should be proportional to.
Estimate alpha_estimate(const SampleStats& stats, double exact_expectation);

}  // namespace spinjoint
