#include "laguerre/report.hpp"

#include "laguerre/error.hpp"

namespace laguerre {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::report_only: return "report_only";
    case Status::error: return "error";
  }
  return "error";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "report_only") return Status::report_only;
  if (s == "error") return Status::error;
  throw Error(Errc::invalid_argument, "unknown status '" + s + "'");
}

Report Report::from_tally(std::string id, int q, const Tally& tally) {
  Report r;
  r.check_id = std::move(id);
  r.q = q;
  r.absorb(tally);
  return r;
}

void Report::absorb(const Tally& tally) {
  cases_checked += tally.cases();
  if (!tally.ok()) {
    status = Status::fail;
    for (auto& w : tally.witnesses())
      if (witnesses.size() < Tally::kMaxWitnesses) witnesses.push_back(w);
  }
  std::uint64_t prior = stats.value("violations", std::uint64_t{0});
  stats["violations"] = prior + tally.violations();
}

nlohmann::json to_json(const Report& r, bool include_timing) {
  nlohmann::json j;
  j["check_id"] = r.check_id;
  j["q"] = r.q;
  j["status"] = to_string(r.status);
  j["cases_checked"] = r.cases_checked;
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  j["stats"] = r.stats;
  j["witnesses"] = r.witnesses;
  if (r.reading_notes) j["reading_notes"] = *r.reading_notes;
  return j;
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.check_id = j.at("check_id").get<std::string>();
  r.q = j.at("q").get<int>();
  r.status = parse_status(j.at("status").get<std::string>());
  r.cases_checked = j.at("cases_checked").get<std::uint64_t>();
  r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
  r.stats = j.value("stats", nlohmann::json::object());
  for (const auto& w : j.at("witnesses")) r.witnesses.push_back(w);
  if (j.contains("reading_notes")) r.reading_notes = j.at("reading_notes").get<std::string>();
  return r;
}

void print_text(std::ostream& os, const Report& r, bool include_timing) {
  os << "[" << to_string(r.status) << "] " << r.check_id << " q=" << r.q << " cases=" << r.cases_checked;
  if (include_timing) os << " time=" << r.elapsed_ms << "ms";
  if (!r.stats.empty()) os << " stats=" << r.stats.dump();
  os << "\n";
  if (r.reading_notes) os << "    note: " << *r.reading_notes << "\n";
  for (const auto& w : r.witnesses) os << "    witness: " << w.dump() << "\n";
}

}  // namespace laguerre
