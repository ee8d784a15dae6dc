#pragma once

// Case-space sweeps shared by every exhaustive check.
//
// Each sweep has a serial reference loop and an OpenMP kernel running the
// same body over a partition of the outer index range. Tallies merge
// associatively and keep the lexicographically least witnesses, so both
// paths produce identical results regardless of thread count or schedule.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

#include "json.hpp"

namespace laguerre {

enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec exec);

/// Reads LAGUERRE_THREADS (if set) and applies it to the OpenMP runtime.
void configure_threads_from_env();

struct Witness {
  std::uint64_t key = 0;
  std::uint64_t sub = 0;
  nlohmann::json detail;
};

class Tally {
 public:
  static constexpr std::size_t kMaxWitnesses = 16;

  void count(std::uint64_t n = 1) noexcept { cases_ += n; }
  void fail(std::uint64_t key, std::uint64_t sub, nlohmann::json detail);
  void merge(Tally&& other);

  std::uint64_t cases() const noexcept { return cases_; }
  std::uint64_t violations() const noexcept { return violations_; }
  bool ok() const noexcept { return violations_ == 0; }

  /// Sorted by (key, sub), truncated to kMaxWitnesses.
  std::vector<nlohmann::json> witnesses() const;

 private:
  void trim();

  std::uint64_t cases_ = 0;
  std::uint64_t violations_ = 0;
  std::vector<Witness> witnesses_;
};

/// Runs body(i, tally) for i in [0, n).
template <typename Body>
Tally sweep(std::int64_t n, Exec exec, Body&& body) {
  if (exec == Exec::serial) {
    Tally tally;
    for (std::int64_t i = 0; i < n; ++i) body(i, tally);
    return tally;
  }
  Tally total;
#pragma omp parallel
  {
    Tally local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t i = 0; i < n; ++i) body(i, local);
#pragma omp critical(laguerre_tally_merge)
    total.merge(std::move(local));
  }
  return total;
}

/// Sweep budget: exhaustive, or `samples` seeded draws.
struct Budget {
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static Budget exhaustive_budget() { return {}; }
  static Budget sampled(std::uint64_t samples, std::uint64_t seed = 0) { return {false, samples, seed}; }

  /// Parses "exhaustive" or "sample:K". Throws Error{invalid_argument}.
  static Budget parse(const std::string& text, std::uint64_t seed = 0);
  std::string to_string() const;
};

/// Counter-based generator: draw j of a seeded sweep is independent of the
/// order in which draws are evaluated.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static SplitMix64 for_draw(std::uint64_t seed, std::uint64_t draw) noexcept {
    SplitMix64 mix(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uint64_t base = mix.next();
    return SplitMix64(base + draw * 0xbf58476d1ce4e5b9ULL);
  }

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n) (multiply-shift; bias is below 2^-40 for the sizes used here).
  std::uint64_t below(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace laguerre
