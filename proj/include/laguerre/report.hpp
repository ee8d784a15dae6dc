#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "laguerre/sweep.hpp"

namespace laguerre {

enum class Status { pass, fail, report_only, error };

const char* to_string(Status s);
Status parse_status(const std::string& s);

/// Verdict of one check.
struct Report {
  std::string check_id;
  int q = 0;
  Status status = Status::pass;
  std::uint64_t cases_checked = 0;
  std::int64_t elapsed_ms = 0;
  std::vector<nlohmann::json> witnesses;
  nlohmann::json stats = nlohmann::json::object();
  std::optional<std::string> reading_notes;

  bool ok() const { return status == Status::pass || status == Status::report_only; }

  /// Pass iff the tally has no violations; witnesses copied from the tally.
  static Report from_tally(std::string id, int q, const Tally& tally);

  /// Folds another tally into this report (cases add up, any violation fails).
  void absorb(const Tally& tally);
};

/// elapsed_ms is emitted only when include_timing is set so that repeated
/// runs stay byte-identical.
nlohmann::json to_json(const Report& r, bool include_timing = false);
Report report_from_json(const nlohmann::json& j);

void print_text(std::ostream& os, const Report& r, bool include_timing = false);

/// Measures wall time of fn() into report.elapsed_ms.
template <typename Fn>
Report timed(Fn&& fn);

}  // namespace laguerre

#include <chrono>

template <typename Fn>
laguerre::Report laguerre::timed(Fn&& fn) {
  auto start = std::chrono::steady_clock::now();
  Report r = fn();
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}
