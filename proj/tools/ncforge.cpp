#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ncforge/gbasis.hpp"
#include "ncforge/parse.hpp"
#include "ncforge/verify.hpp"

using namespace ncforge;

namespace {

struct Options {
  std::string field = "fp:10009";
  std::uint64_t seed = 42;
  std::size_t bound = kDefaultDegreeBound;
  std::size_t max_rules = kDefaultMaxRules;
  std::size_t trials = 50;
  std::string json_out;
  std::string grid = "default";
  std::string check_id;
  std::string input;
  bool quiet = false;
};

CheckConfig make_config(const Options& o) {
  CheckConfig cfg;
  cfg.field = FieldSpec::parse(o.field);
  cfg.seed = o.seed;
  cfg.degree_bound = o.bound;
  cfg.max_rules = o.max_rules;
  if (o.trials == 0) throw CheckError("--trials must be at least 1");
  cfg.trials = o.trials;
  return cfg;
}

void print_summary(const Report& r, std::ostream& out) {
  std::size_t n[4] = {0, 0, 0, 0};
  for (const auto& p : r.points) ++n[static_cast<int>(p.status)];
  out << r.check_id << ": " << status_name(r.status) << " (" << n[0] << " pass, " << n[1] << " fail, " << n[2]
      << " skipped, " << n[3] << " error)";
  if (r.error_bound) out << " bound 10^" << r.error_bound->log10();
  out << "\n";
  for (const auto& p : r.points) {
    if (p.status == Status::Pass) continue;
    out << "  " << status_name(p.status) << " at " << p.params.dump();
    if (!p.reason.empty()) out << ": " << p.reason;
    if (p.status == Status::Fail && p.details.contains("assertions")) {
      for (const auto& [k, v] : p.details["assertions"].items()) {
        if (!v.get<bool>()) out << "\n    failed: " << k;
      }
    }
    out << "\n";
  }
}

void emit_json(const Json& doc, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw CheckError("cannot write " + path);
  f << doc.dump(2) << "\n";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass:
    case Status::Skipped: return 0;
    case Status::Fail: return 1;
    case Status::Error: return 2;
  }
  return 2;
}

int run_one(const Options& o, bool require_grid) {
  auto cfg = make_config(o);
  const auto& info = check_info(o.check_id);
  cfg.grid = parse_grid(o.grid, info.axes.size(), cfg);
  auto rep = require_grid ? scan(o.check_id, cfg) : run_check(o.check_id, cfg);
  if (!o.quiet && o.json_out != "-") print_summary(rep, std::cout);
  emit_json(rep.to_json(), o.json_out);
  return exit_code(rep.status);
}

int run_all(const Options& o) {
  auto cfg = make_config(o);
  Json doc;
  doc["schema"] = "ncforge-report/1";
  Json reports = Json::array();
  std::vector<Report> reps;
  for (const auto& info : registered_checks()) {
    auto rep = run_check(info.id, cfg);
    if (!o.quiet && o.json_out != "-") print_summary(rep, std::cout);
    reports.push_back(rep.to_json());
    reps.push_back(std::move(rep));
  }
  doc["reports"] = reports;
  emit_json(doc, o.json_out);
  int code = 0;
  for (const auto& r : reps) code = std::max(code, exit_code(r.status));
  return code;
}

template <Field F>
int analyze(const F& field, const Options& o) {
  std::ifstream in(o.input);
  if (!in) throw CheckError("cannot read " + o.input);
  std::stringstream buf;
  buf << in.rdbuf();
  auto pres = parse_presentation(field, buf.str(), o.input);
  Json doc;
  doc["schema"] = "ncforge-analysis/1";
  doc["input"] = o.input;
  doc["field"] = field.name();
  doc["relations"] = pres.relations.size();
  try {
    auto rs = complete(pres, o.bound, o.max_rules);
    Json rules = Json::array();
    for (const auto& r : rs.rules()) rules.push_back(pres.ring->alphabet().format(r.lead) + " -> " + r.tail.to_string());
    doc["certified"] = rs.certified();
    doc["rules"] = rules;
    bool finite = is_finite_dimensional(rs);
    doc["finite"] = finite;
    if (finite) {
      auto words = normal_words(rs, std::nullopt);
      std::size_t top = 0;
      for (const auto& w : words) top = std::max(top, w.size());
      doc["dimension"] = words.size();
      doc["hilbert"] = hilbert_series(rs, top);
    } else {
      doc["hilbert_prefix"] = hilbert_series(rs, 8);
    }
  } catch (const CompletionOverflow<F>& e) {
    doc["certified"] = false;
    doc["error"] = e.what();
    doc["partial_rules"] = e.partial().rules().size();
    std::cout << doc.dump(2) << "\n";
    return 2;
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncforge: exact computation in finitely presented algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", o.field, "fp:<prime> or qq")->capture_default_str();
    sub->add_option("--seed", o.seed, "seed for random grid points and trials")->capture_default_str();
    sub->add_option("--bound", o.bound, "degree bound for completion")->capture_default_str();
    sub->add_option("--max-rules", o.max_rules, "rule budget for completion")->capture_default_str();
    sub->add_option("--trials", o.trials, "trials for randomized identity tests")->capture_default_str();
    sub->add_option("--json", o.json_out, "write the JSON report to a file ('-' for stdout)");
    sub->add_flag("-q,--quiet", o.quiet, "no summary lines");
  };

  auto* list = app.add_subcommand("list", "list registered checks");
  auto* check = app.add_subcommand("check", "run one check at its default points");
  check->add_option("check_id", o.check_id)->required();
  check->add_option("--grid", o.grid, "grid spec, see README")->capture_default_str();
  add_common(check);
  auto* scan_cmd = app.add_subcommand("scan", "run one check over a parameter grid");
  scan_cmd->add_option("check_id", o.check_id)->required();
  scan_cmd->add_option("--grid", o.grid, "grid spec, see README")->required();
  add_common(scan_cmd);
  auto* all = app.add_subcommand("all", "run every registered check");
  add_common(all);
  auto* an = app.add_subcommand("analyze", "complete a presentation file and report its structure");
  an->add_option("file", o.input)->required()->check(CLI::ExistingFile);
  an->add_option("--field", o.field)->capture_default_str();
  an->add_option("--bound", o.bound)->capture_default_str();
  an->add_option("--max-rules", o.max_rules)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& c : registered_checks()) {
        std::string axes;
        for (const auto& a : c.axes) axes += (axes.empty() ? "" : ",") + a;
        std::cout << c.id << "  (" << (axes.empty() ? "-" : axes) << ")  " << c.summary << "\n";
      }
      return 0;
    }
    if (check->parsed()) return run_one(o, false);
    if (scan_cmd->parsed()) {
      if (o.grid == "default") throw CheckError("scan needs an explicit grid");
      return run_one(o, true);
    }
    if (all->parsed()) return run_all(o);
    if (an->parsed()) {
      auto spec = FieldSpec::parse(o.field);
      if (spec.characteristic == 0) return analyze(RationalField{}, o);
      return analyze(PrimeField(spec.characteristic), o);
    }
  } catch (const ParseError& e) {
    std::cerr << "ncforge: " << o.input << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ncforge: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
