#include "betaquad/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "betaquad/catalog.hpp"
#include "betaquad/verify.hpp"

namespace betaquad::cli {

namespace {

namespace cat = betaquad::catalog;

std::string number(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

void print_list(std::ostream& out) {
  std::vector<const cat::IdentityRecord*> sorted;
  for (const auto& rec : cat::all_entries()) sorted.push_back(&rec);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });
  for (const auto* rec : sorted) {
    out << std::left << std::setw(22) << rec->id << ' '
        << cat::to_char(rec->group) << "  " << rec->citation << '\n';
  }
}

void print_entry(std::ostream& out, const cat::IdentityRecord& rec) {
  out << "id:        " << rec.id << '\n'
      << "group:     " << cat::to_char(rec.group) << '\n'
      << "citation:  " << rec.citation << '\n'
      << "tolerance: " << cat::to_string(rec.tolerance_class) << " (rtol "
      << number(cat::relative_tolerance(rec.tolerance_class)) << ")\n"
      << "parameters:\n";
  for (const auto& r : rec.domain.params) {
    out << "  " << std::left << std::setw(6) << r.name << ' ';
    if (r.kind == cat::ParamKind::integer) {
      out << "integer in [" << number(r.lo) << ", " << number(r.hi) << "]";
    } else {
      out << "real in " << (r.lo_open ? '(' : '[') << number(r.lo) << ", "
          << number(r.hi) << (r.hi_open ? ')' : ']');
    }
    for (double e : r.excluded) out << ", != " << number(e);
    out << '\n';
  }
  if (!rec.domain.relations.empty()) {
    out << "relations:\n";
    for (const auto& rel : rec.domain.relations) out << "  " << rel.text << '\n';
  }
  if (!rec.fake_param.empty()) {
    out << "fake parameter: " << rec.fake_param << '\n';
  }
}

struct VerifyFlags {
  std::vector<std::string> ids;
  std::size_t samples = 20;
  std::uint64_t seed = 7;
  std::optional<double> rtol;
  double atol = 1e-12;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string report_path;
  std::string format = "json";
  bool timings = false;
};

int run_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
  verify::RunConfig cfg;
  cfg.seed = flags.seed;
  cfg.samples_per_entry = flags.samples;
  cfg.rtol_override = flags.rtol;
  cfg.atol = flags.atol;
  cfg.entry_filter = flags.ids;
  cfg.parallelism = flags.jobs;
  cfg.record_timings = flags.timings;
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    err << "betaquad: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  if (!flags.report_path.empty()) {
    file.open(flags.report_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "betaquad: cannot open report file '" << flags.report_path
          << "'\n";
      return kExitUsage;
    }
  }

  verify::Report report = verify::verify_all(cfg);
  if (cfg.entry_filter.empty()) {
    report.merge(verify::cross_check_consistency(cfg));
  }

  std::ostream& sink = file.is_open() ? static_cast<std::ostream&>(file) : out;
  if (flags.format == "text") {
    verify::write_text(sink, report);
  } else {
    verify::write_json_lines(sink, report);
  }
  sink.flush();
  if (!sink) {
    err << "betaquad: failed writing the report\n";
    return kExitUsage;
  }
  return report.passed() ? kExitPass : kExitFailure;
}

int run_export(const std::string& path, std::ostream& err) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "betaquad: cannot open '" << path << "' for writing\n";
    return kExitUsage;
  }
  file << cat::catalog_json();
  file.flush();
  if (!file) {
    err << "betaquad: failed writing '" << path << "'\n";
    return kExitUsage;
  }
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Numerical verification of beta-function integral identities",
               "betaquad"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "Print roster ids, groups and citations");

  std::string show_id;
  auto* show = app.add_subcommand("show", "Describe one catalog entry");
  show->add_option("id", show_id, "Catalog id")->required();

  VerifyFlags vf;
  double rtol = 0.0;
  auto* ver = app.add_subcommand("verify", "Check closed forms against quadrature");
  ver->add_option("--id", vf.ids, "Restrict to these catalog ids")
      ->allow_extra_args(false);
  ver->add_option("--samples", vf.samples, "Parameter samples per entry")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1'000'000}));
  ver->add_option("--seed", vf.seed, "Sampling seed");
  auto* rtol_opt = ver->add_option("--rtol", rtol,
                                   "Override the relative tolerance of every entry")
                       ->check(CLI::PositiveNumber);
  ver->add_option("--atol", vf.atol, "Absolute tolerance")
      ->check(CLI::PositiveNumber);
  ver->add_option("--jobs", vf.jobs, "Concurrent tasks")
      ->check(CLI::Range(1u, 4096u));
  ver->add_option("--report", vf.report_path, "Write the report to this file");
  ver->add_option("--format", vf.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  ver->add_flag("--timings", vf.timings,
                "Record elapsed times (reports are then not reproducible)");

  std::string export_path;
  auto* exp = app.add_subcommand("export", "Write the catalog as JSON");
  exp->add_option("--out", export_path, "Output path")->required();

  std::vector<const char*> argv{"betaquad"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "betaquad: " << e.what() << '\n';
    return kExitUsage;
  }

  if (list->parsed()) {
    print_list(out);
    return kExitPass;
  }
  if (show->parsed()) {
    try {
      print_entry(out, cat::entry(show_id));
    } catch (const cat::unknown_id_error& e) {
      err << "betaquad: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitPass;
  }
  if (ver->parsed()) {
    if (*rtol_opt) vf.rtol = rtol;
    return run_verify(vf, out, err);
  }
  if (exp->parsed()) return run_export(export_path, err);
  return kExitUsage;
}

}  // namespace betaquad::cli
