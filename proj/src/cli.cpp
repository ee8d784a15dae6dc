#include "laguerre/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "laguerre/autgroup.hpp"
#include "laguerre/error.hpp"
#include "laguerre/export.hpp"
#include "laguerre/plane.hpp"
#include "laguerre/skewaffine.hpp"
#include "laguerre/verify.hpp"

namespace laguerre {

using nlohmann::json;

namespace {

struct Options {
  bool json = false;
  bool timing = false;
  int q = 0;
  std::string q_list;
  std::string pencil = "canonical";
  std::string axiom = "all";
  std::string budget;
  std::uint64_t seed = 0;
  std::string id = "all";
  std::string what;
  std::string out_file;
};

int exit_code(const std::vector<Report>& reports) {
  bool fail = std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.status == Status::fail; });
  bool error = std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.status == Status::error; });
  return fail ? 1 : error ? 2 : 0;
}

int emit(const Options& o, const std::string& command, const std::vector<Report>& reports, std::ostream& out) {
  if (o.json) {
    json arr = json::array();
    for (const Report& r : reports) arr.push_back(to_json(r, o.timing));
    out << json{{"command", command}, {"reports", arr}}.dump(2) << "\n";
  } else {
    for (const Report& r : reports) print_text(out, r, o.timing);
  }
  return exit_code(reports);
}

Plane make_plane(int q) { return Plane(FieldSpec::make(q)); }

int plane_verify(const Options& o, std::ostream& out) {
  Plane plane = make_plane(o.q);
  std::vector<Report> reports;
  reports.push_back(timed([&] { return verify_laguerre_axioms(plane); }));
  reports.push_back(timed([&] { return derived_affine_plane(plane, Point::at_infinity(0)).second; }));
  return emit(o, "plane verify", reports, out);
}

Report normal_transitivity_report(const DeltaGroup& G) {
  NormalTransitivity nt = normally_transitive(G.tables(), G.residual_points());
  Report r;
  r.check_id = "NT";
  r.q = G.plane().q();
  r.cases_checked = G.residual_points().size();
  r.status = nt.holds ? Status::pass : Status::report_only;
  if (!nt.holds) {
    json w = nt.witness;
    for (const char* k : {"x", "y", "from", "unreached"})
      if (w.contains(k)) w[k] = to_json(G.plane().point(w[k].get<int>()));
    r.stats["witness"] = w;
    r.reading_notes = "Not normally transitive: some point stabilizer fixes a second point. The group space is still built.";
  }
  return r;
}

int group_verify(const Options& o, std::ostream& out) {
  Plane plane = make_plane(o.q);
  Pencil pencil = parse_pencil(plane, o.pencil);
  std::unique_ptr<DeltaGroup> group;
  if (!plane.field().char_two()) group = std::make_unique<DeltaGroup>(DeltaGroup::build(plane, pencil));
  std::vector<Report> reports = verify_group_axioms(plane, pencil, group.get());
  if (group) {
    Census c = census(plane.field(), group->elements());
    reports[0].stats["census"] = {{"identity", c.identity}, {"translations", c.translations}, {"strains", c.strains},
                                  {"symmetries", c.symmetries}, {"glides", c.glides}, {"total", c.total}};
    reports.push_back(normal_transitivity_report(*group));
  }
  return emit(o, "group verify", reports, out);
}

int skewaffine_verify(const Options& o, std::ostream& out) {
  std::vector<Axiom> axioms = o.axiom == "all" ? all_axioms() : std::vector<Axiom>{parse_axiom(o.axiom)};
  std::optional<Budget> fixed;
  if (!o.budget.empty()) fixed = Budget::parse(o.budget, o.seed);
  Plane plane = make_plane(o.q);
  if (plane.field().char_two()) throw Error(Errc::char_two, "the residual plane needs odd characteristic");
  DeltaGroup group = DeltaGroup::build(plane, canonical_pencil());
  GroupSpace space = GroupSpace::build(group);
  std::vector<Report> reports;
  for (Axiom a : axioms) {
    Budget b = fixed.value_or(default_budget(a, o.q));
    b.seed = o.seed;
    reports.push_back(check_axiom(space, a, b));
  }
  return emit(o, "skewaffine verify", reports, out);
}

std::vector<int> parse_q_list(const std::string& text) {
  std::vector<int> qs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int q = 0;
    try {
      q = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(Errc::invalid_argument, "bad --q value '" + item + "'");
    qs.push_back(q);
  }
  if (qs.empty()) throw Error(Errc::invalid_argument, "--q needs at least one value");
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

int theorems_run(const Options& o, std::ostream& out) {
  std::vector<int> qs = parse_q_list(o.q_list);
  std::vector<CheckId> ids = o.id == "all" ? all_checks() : std::vector<CheckId>{parse_check(o.id)};
  std::optional<Budget> fixed;
  if (!o.budget.empty()) fixed = Budget::parse(o.budget, o.seed);
  std::vector<std::unique_ptr<TheoremContext>> contexts;
  for (int q : qs) contexts.push_back(std::make_unique<TheoremContext>(q));
  std::vector<Report> reports;
  for (CheckId id : ids)
    for (const auto& ctx : contexts) {
      Budget b = fixed.value_or(default_theorem_budget(id, ctx->q()));
      b.seed = o.seed;
      reports.push_back(run_check(*ctx, id, b));
    }
  return emit(o, "theorems run", reports, out);
}

int export_cmd(const Options& o, std::ostream& out) {
  Plane plane = make_plane(o.q);
  json doc;
  if (o.what == "plane") {
    doc = plane_to_json(plane);
  } else {
    if (plane.field().char_two()) throw Error(Errc::char_two, "no pencil group in characteristic 2");
    DeltaGroup group = DeltaGroup::build(plane, parse_pencil(plane, o.pencil));
    doc = o.what == "group" ? group_to_json(group) : space_to_json(GroupSpace::build(group));
  }
  std::ofstream file(o.out_file);
  if (!file) throw Error(Errc::invalid_argument, "cannot write " + o.out_file);
  file << doc.dump(2) << "\n";
  if (!file) throw Error(Errc::invalid_argument, "write to " + o.out_file + " failed");
  if (!o.json) out << "wrote " << o.what << " for q=" << o.q << " to " << o.out_file << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite Laguerre planes, pencil groups and their residual skewaffine planes", "laguerre"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Print reports as JSON");
  app.add_flag("--timing", o.timing, "Include elapsed time in reports");

  auto* plane = app.add_subcommand("plane", "Laguerre plane over GF(q)")->require_subcommand(1);
  auto* plane_verify_cmd = plane->add_subcommand("verify", "Check the Laguerre axioms and the derived affine plane");
  plane_verify_cmd->add_option("--q", o.q, "Prime field order")->required();

  auto* group = app.add_subcommand("group", "Pencil group")->require_subcommand(1);
  auto* group_verify_cmd = group->add_subcommand("verify", "Check transitivity, circular transitivity and unique pencil tangency");
  group_verify_cmd->add_option("--q", o.q, "Prime field order")->required();
  group_verify_cmd->add_option("--pencil", o.pencil, "canonical | p:x,y[@K:a,b,c] | ideal:a[@K:a,b,c]");

  auto* ska = app.add_subcommand("skewaffine", "Residual skewaffine plane")->require_subcommand(1);
  auto* ska_verify_cmd = ska->add_subcommand(
      "verify",
      "Check the skewaffine axioms. Default budget: exhaustive, except T, Des and Pap above q = 5 (sample:1000000)");
  ska_verify_cmd->add_option("--q", o.q, "Prime field order")->required();
  ska_verify_cmd->add_option("--axiom", o.axiom, "L1 L2 P1 P2 T V Pgm Des Pap or all");
  ska_verify_cmd->add_option("--budget", o.budget, "exhaustive | sample:K");
  ska_verify_cmd->add_option("--seed", o.seed, "Sampling seed (default 0)");

  auto* thm = app.add_subcommand("theorems", "Statement checks")->require_subcommand(1);
  auto* thm_run_cmd = thm->add_subcommand(
      "run", "Run catalog checks. Default budget: exhaustive for q <= 7 (equivalence checks up to 11), else sample:2000");
  thm_run_cmd->add_option("--q", o.q_list, "Prime field order, or a comma-separated list")->required();
  thm_run_cmd->add_option("--id", o.id, "Check id or all");
  thm_run_cmd->add_option("--budget", o.budget, "exhaustive | sample:K");
  thm_run_cmd->add_option("--seed", o.seed, "Sampling seed (default 0)");

  auto* exp = app.add_subcommand("export", "Write a structure as JSON");
  exp->add_option("--q", o.q, "Prime field order")->required();
  exp->add_option("--what", o.what, "plane | group | space")->required()->check(CLI::IsMember({"plane", "group", "space"}));
  exp->add_option("--out", o.out_file, "Output file")->required();
  exp->add_option("--pencil", o.pencil, "canonical | p:x,y[@K:a,b,c] | ideal:a[@K:a,b,c]");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*plane_verify_cmd) return plane_verify(o, out);
    if (*group_verify_cmd) return group_verify(o, out);
    if (*ska_verify_cmd) return skewaffine_verify(o, out);
    if (*thm_run_cmd) return theorems_run(o, out);
    if (*exp) return export_cmd(o, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    if (!e.detail().is_null()) err << "detail: " << e.detail().dump() << "\n";
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace laguerre
