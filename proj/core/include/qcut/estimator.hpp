// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "qcut/cutting.hpp"
#include "qcut/pauli.hpp"

namespace qcut {

/// Counter-based RNG: every draw is a hash of (seed, shard, sample, counter),
/// so results are reproducible under any parallel schedule.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t shard, std::uint64_t sample);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double next_double();
  /// Uniform in [lo, hi).
  double next_double(double lo, double hi);

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

/// Fixed (seed, shards) reproduces results exactly regardless of thread
/// scheduling; changing the shard count selects a different, equally
/// deterministic sample stream.
struct EstimatorConfig {
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;
  unsigned shards = 1;
};

struct ExpectationEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
  std::uint64_t samples = 0;
  double kappa_total = 1.0;
};

/// Maximum cut count accepted by exact_reconstruction (6^cuts term
/// assignments are enumerated).
inline constexpr int kExactReconstructionCutCap = 6;

/// Exact cut-circuit expectation by enumerating every term assignment and
/// signed-measurement branch; each block is simulated independently and the
/// joint register is never materialized. Equals the uncut expectation.
double exact_reconstruction(const Circuit& c, const Partition& p, const PauliSum& o);

/// Monte Carlo estimate: per sample, one term per cut is drawn with
/// probability |a_i|/kappa, measurement outcomes are Born-sampled, and block
/// observables enter as exact sub-expectations. Unbiased for the uncut value.
ExpectationEstimate mc_estimate(const Circuit& c, const Partition& p, const PauliSum& o,
                                const EstimatorConfig& cfg);

/// Shots needed for parity with an uncut run of base_shots (saturating).
double shots_for_parity(double base_shots, const OverheadReport& report);
/// log10 of the same quantity; finite even when saturated.
double log10_shots_for_parity(double base_shots, const OverheadReport& report);

}  // namespace qcut
