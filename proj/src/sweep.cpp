#include "laguerre/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <tuple>
#include <cstdlib>

#include "laguerre/error.hpp"

namespace laguerre {

namespace {
std::atomic<Exec> g_default_exec{Exec::parallel};
}

Exec default_exec() { return g_default_exec.load(); }
void set_default_exec(Exec exec) { g_default_exec.store(exec); }

void configure_threads_from_env() {
  if (const char* env = std::getenv("LAGUERRE_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
}

void Tally::fail(std::uint64_t key, std::uint64_t sub, nlohmann::json detail) {
  ++violations_;
  witnesses_.push_back({key, sub, std::move(detail)});
  if (witnesses_.size() > 4 * kMaxWitnesses) trim();
}

void Tally::merge(Tally&& other) {
  cases_ += other.cases_;
  violations_ += other.violations_;
  for (auto& w : other.witnesses_) witnesses_.push_back(std::move(w));
  trim();
}

void Tally::trim() {
  std::sort(witnesses_.begin(), witnesses_.end(),
            [](const Witness& a, const Witness& b) { return std::tie(a.key, a.sub) < std::tie(b.key, b.sub); });
  if (witnesses_.size() > kMaxWitnesses) witnesses_.resize(kMaxWitnesses);
}

std::vector<nlohmann::json> Tally::witnesses() const {
  std::vector<Witness> sorted = witnesses_;
  std::sort(sorted.begin(), sorted.end(),
            [](const Witness& a, const Witness& b) { return std::tie(a.key, a.sub) < std::tie(b.key, b.sub); });
  std::vector<nlohmann::json> out;
  for (std::size_t i = 0; i < sorted.size() && i < kMaxWitnesses; ++i) out.push_back(sorted[i].detail);
  return out;
}

Budget Budget::parse(const std::string& text, std::uint64_t seed) {
  if (text == "exhaustive") return {true, 0, seed};
  const std::string prefix = "sample:";
  if (text.rfind(prefix, 0) == 0) {
    std::string count = text.substr(prefix.size());
    char* end = nullptr;
    unsigned long long k = std::strtoull(count.c_str(), &end, 10);
    if (!count.empty() && end && *end == '\0' && k > 0) return {false, k, seed};
  }
  throw Error(Errc::invalid_argument, "budget must be 'exhaustive' or 'sample:K' (K > 0), got '" + text + "'");
}

std::string Budget::to_string() const {
  return exhaustive ? std::string("exhaustive") : "sample:" + std::to_string(samples);
}

}  // namespace laguerre
