#pragma once

#include <cstdint>
#include <random>

namespace frob {

/// Deterministic source for every sampled quantity.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use rejection sampling on the raw 64-bit output
/// instead of std::uniform_int_distribution, whose algorithm is
/// implementation-defined, so the same seed yields the same functionals on
/// every platform. Sub-streams for trial k of a run seeded with s are seeded
/// with s + k.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Generator for the k-th independent trial of a run seeded with `seed`.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) { return Rng(seed + trial); }

private:
  std::mt19937_64 engine_;
};

}  // namespace frob
