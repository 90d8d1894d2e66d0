#include "shiftbetti/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "shiftbetti/betti.hpp"
#include "shiftbetti/binomial.hpp"
#include "shiftbetti/error.hpp"
#include "shiftbetti/family.hpp"
#include "shiftbetti/report.hpp"
#include "shiftbetti/tables.hpp"

namespace shiftbetti {

namespace {

std::vector<Int> parse_list(const std::string& text, const char* flag) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item(text.data() + pos, comma - pos);
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::InvalidInput,
                  std::string("malformed integer list for ") + flag + ": '" + text + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("BETTI_JOBS")) {
    unsigned v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) return v;
  }
  return 1;
}

struct Common {
  std::string format = "pretty";
  unsigned jobs = 1;
  std::optional<Int> bound_override;
  bool timing = false;
};

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_json(std::ostream& out, const std::string& command, Json params, Json payload,
               const Common& common, const Timer& timer) {
  std::optional<double> timing;
  if (common.timing) timing = timer.elapsed_ms();
  out << output_record(command, std::move(params), std::move(payload), timing).dump(2)
      << "\n";
}

FamilySpec family_from(const std::string& abc, Int offset) {
  const auto v = parse_list(abc, "--abc");
  if (v.size() != 3) throw Error(ErrorKind::InvalidInput, "--abc needs exactly three values");
  return FamilySpec(v[0], v[1], v[2], offset);
}

Json bound_json(const Common& c) {
  return c.bound_override ? Json(*c.bound_override) : Json(nullptr);
}

int cmd_betti(const std::string& gens_text, const Common& c, std::ostream& out) {
  Timer timer;
  const Semigroup s = Semigroup::normalize(parse_list(gens_text, "--gens"));
  const GradedBettiTable table = graded_betti(s, c.bound_override);
  if (c.format == "json") {
    Json params{{"gens", s.raw_generators()},
                {"generators", s.generators()},
                {"content", s.content()},
                {"bound_override", bound_json(c)}};
    emit_json(out, "betti", params, betti_to_json(table), c, timer);
  } else if (c.format == "csv") {
    out << "degree";
    for (std::size_t i = 0; i < table.columns; ++i) out << ",b" << i;
    out << "\n";
    for (const auto& [m, row] : table.rows) {
      out << m;
      for (Int v : row) out << ',' << v;
      out << "\n";
    }
  } else {
    out << pretty_totals(table.totals) << "\n";
  }
  return kExitOk;
}

int cmd_gens(const std::string& gens_text, const Common& c, std::ostream& out) {
  Timer timer;
  const Semigroup s = Semigroup::normalize(parse_list(gens_text, "--gens"));
  const MinimalGenerators g = minimal_generators(s, c.bound_override);
  if (c.format == "json") {
    Json list = Json::array();
    for (std::size_t i = 0; i < g.binomials.size(); ++i) {
      list.push_back(binomial_to_json(g.binomials[i], g.degrees[i]));
    }
    Json params{{"gens", s.raw_generators()},
                {"generators", s.generators()},
                {"content", s.content()},
                {"bound_override", bound_json(c)}};
    emit_json(out, "gens", params, Json{{"mu", g.mu}, {"generators", list}}, c, timer);
  } else if (c.format == "csv") {
    out << "degree,vector,binomial\n";
    for (std::size_t i = 0; i < g.binomials.size(); ++i) {
      const auto v = g.binomials[i].vector();
      out << g.degrees[i] << ",\"";
      for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
      out << "\"," << g.binomials[i].to_string() << "\n";
    }
  } else {
    out << "mu = " << g.mu << "\n";
    for (std::size_t i = 0; i < g.binomials.size(); ++i) {
      out << g.binomials[i].to_string() << "    [degree " << g.degrees[i] << "]\n";
    }
  }
  return kExitOk;
}

int cmd_critical(const std::string& gens_text, const Common& c, std::ostream& out) {
  Timer timer;
  const Semigroup s = Semigroup::normalize(parse_list(gens_text, "--gens"));
  std::vector<CriticalWitness> witnesses;
  for (std::size_t i = 0; i < s.rank(); ++i) witnesses.push_back(critical_exponent(s, i));
  if (c.format == "json") {
    Json list = Json::array();
    for (const auto& w : witnesses) {
      Json item = binomial_to_json(w.binomial(), w.complement.degree);
      item["index"] = w.index + 1;
      item["exponent"] = w.exponent;
      list.push_back(item);
    }
    Json params{{"gens", s.raw_generators()}, {"generators", s.generators()},
                {"content", s.content()}};
    emit_json(out, "critical", params, Json{{"critical", list}}, c, timer);
  } else if (c.format == "csv") {
    out << "index,exponent,degree,binomial\n";
    for (const auto& w : witnesses) {
      out << w.index + 1 << ',' << w.exponent << ',' << w.complement.degree << ','
          << w.binomial().to_string() << "\n";
    }
  } else {
    for (const auto& w : witnesses) out << w.binomial().to_string() << "\n";
  }
  return kExitOk;
}

Json period_json(const FamilyScanReport& report) {
  try {
    const auto p = detect_period(report);
    if (!p) return Json{{"status", "unconfirmed"}};
    return Json{{"status", "verified"},
                {"start", p->start},
                {"length", p->length},
                {"window", p->window}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InsufficientData) throw;
    return Json{{"status", "insufficient-data"}};
  }
}

int cmd_scan(const std::string& abc, Int offset, Int from, Int to, const Common& c,
             std::ostream& out) {
  Timer timer;
  const FamilySpec family = family_from(abc, offset);
  const FamilyScanReport report = scan(family, from, to, c.jobs, c.bound_override);
  if (c.format == "csv") {
    out << scan_csv(report);
  } else if (c.format == "json") {
    Json payload = scan_to_json(report);
    payload["period"] = period_json(report);
    Json params{{"abc", {family.a(), family.b(), family.c()}},
                {"offset", family.offset()},
                {"from", from},
                {"to", to},
                {"bound_override", bound_json(c)}};
    emit_json(out, "scan", params, payload, c, timer);
  } else {
    out << "# abc=" << family.a() << "," << family.b() << "," << family.c()
        << " offset=" << family.offset() << "\n";
    for (const ScanRow& r : report.rows) out << pretty_row(r.j, r.totals) << "\n";
    const Json p = period_json(report);
    out << "# period: " << p["status"].get<std::string>();
    if (p.contains("length")) {
      out << " T=" << p["length"] << " from j=" << p["start"] << " (window "
          << p["window"] << ")";
    }
    out << "\n";
  }
  return kExitOk;
}

int emit_verification(const std::string& command, Json params,
                      const VerificationReport& report, const Common& c,
                      const Timer& timer, std::ostream& out, std::ostream& err) {
  if (c.format == "json") {
    emit_json(out, command, std::move(params), verification_to_json(report), c, timer);
  } else if (c.format == "csv") {
    out << "case,n,t,j,leading,mu,ci,expected_ci,agrees\n";
    for (const auto& vc : report.cases) {
      out << vc.label << ',' << vc.n << ',' << vc.t << ',' << vc.j << ',' << vc.leading
          << ',' << vc.mu << ',' << (vc.ci ? 1 : 0) << ',' << (vc.expected_ci ? 1 : 0)
          << ',' << (vc.agrees ? 1 : 0) << "\n";
    }
  } else {
    out << report.theorem << ": " << report.agreements << "/" << report.cases.size()
        << " cases agree, " << report.counterexamples.size() << " counterexamples\n";
    for (const auto& vc : report.counterexamples) out << "  " << vc.detail << "\n";
  }
  if (!report.passed()) {
    err << report.theorem << ": counterexample found\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_table(int example, const Common& c, std::ostream& out, std::ostream& err) {
  Timer timer;
  const TableComparison cmp = reproduce_table(example, c.jobs);
  if (c.format == "json") {
    Json payload{{"example", cmp.example}, {"pass", cmp.pass},  {"matched", cmp.matched},
                 {"total", cmp.total},     {"ci_rows", cmp.ci_rows}, {"diff", cmp.diff}};
    const FamilySpec& f = expected_table(example).family;
    Json params{{"example", example},
                {"abc", {f.a(), f.b(), f.c()}},
                {"offset", f.offset()}};
    emit_json(out, "table", params, payload, c, timer);
  } else {
    out << "example " << example << ": " << (cmp.pass ? "pass" : "FAIL") << ", "
        << cmp.matched << "/" << cmp.total << " rows, CI rows:";
    if (cmp.ci_rows.empty()) out << " none";
    for (Int j : cmp.ci_rows) out << " " << j;
    out << "\n" << cmp.diff;
  }
  if (!cmp.pass) {
    err << "table " << example << " does not match\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti numbers and complete intersections of shifted numerical semigroups",
               args.empty() ? "shiftbetti" : args.front()};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  common.jobs = default_jobs();
  Int bound_override = -1;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));
  app.add_option("--jobs", common.jobs, "Worker threads (default: $BETTI_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--bound-override", bound_override,
                 "Largest degree examined instead of frobenius + sum of generators")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", common.timing, "Report elapsed time (JSON and stderr)");

  std::string gens_text;
  auto* betti = app.add_subcommand("betti", "Graded Betti table of R/P");
  betti->add_option("--gens", gens_text, "Comma-separated generators")->required();
  auto* gens = app.add_subcommand("gens", "Minimal binomial generators of P");
  gens->add_option("--gens", gens_text, "Comma-separated generators")->required();
  auto* critical = app.add_subcommand("critical", "Full set of critical binomials");
  critical->add_option("--gens", gens_text, "Comma-separated generators")->required();

  std::string abc;
  Int offset = 1;
  Int from = 0, to = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Scan a shifted family over a range of j");
  scan_cmd->add_option("--abc", abc, "a,b,c")->required();
  scan_cmd->add_option("--offset", offset, "Index offset s (0 or 1)")
      ->check(CLI::IsMember({0, 1}));
  scan_cmd->add_option("--from", from, "First j")->required();
  scan_cmd->add_option("--to", to, "Last j")->required();

  auto* verify = app.add_subcommand("verify", "Check a theorem over a range");
  verify->require_subcommand(1);
  verify->fallthrough();
  Int verify_offset = 0;
  Int n_max = 10;
  bool no_t = false;
  auto* theorem_a = verify->add_subcommand("theorem-a", "mu = 3 / mu = 4 cases");
  theorem_a->add_option("--abc", abc, "a,b,c")->required();
  theorem_a->add_option("--offset", verify_offset, "Index offset s (0 or 1)")
      ->check(CLI::IsMember({0, 1}));
  theorem_a->add_option("--n-max", n_max, "Largest n")->check(CLI::PositiveNumber);
  theorem_a->add_flag("--no-t", no_t, "Only the mu = 3 case");
  auto* theorem_b = verify->add_subcommand("theorem-b", "CI <=> (a+b+c) | j");
  theorem_b->add_option("--abc", abc, "a,b,c")->required();
  theorem_b->add_option("--offset", verify_offset, "Index offset s (0 or 1)")
      ->check(CLI::IsMember({0, 1}));
  theorem_b->add_option("--from", from, "First j")->required();
  theorem_b->add_option("--to", to, "Last j")->required();
  Int q_max = 200, ab_max = 12;
  auto* hs3 = verify->add_subcommand("hs3", "Three-generated CI criterion");
  hs3->add_option("--q-max", q_max, "Largest q")->check(CLI::PositiveNumber);
  hs3->add_option("--ab-max", ab_max, "Largest a+b")->check(CLI::PositiveNumber);

  int example = 0;
  auto* table = app.add_subcommand("table", "Reproduce a published table");
  table->add_option("--example", example, "1, 2 or 3")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (bound_override >= 0) common.bound_override = bound_override;

  Timer timer;
  int code = kExitOk;
  try {
    if (*betti) {
      code = cmd_betti(gens_text, common, out);
    } else if (*gens) {
      code = cmd_gens(gens_text, common, out);
    } else if (*critical) {
      code = cmd_critical(gens_text, common, out);
    } else if (*scan_cmd) {
      code = cmd_scan(abc, offset, from, to, common, out);
    } else if (*table) {
      code = cmd_table(example, common, out, err);
    } else if (*theorem_a) {
      const FamilySpec f = family_from(abc, verify_offset);
      const auto report = verify_theorem_a(f, n_max, !no_t);
      Json params{{"abc", {f.a(), f.b(), f.c()}},
                  {"offset", f.offset()},
                  {"n_max", n_max},
                  {"include_t", !no_t}};
      code = emit_verification("verify theorem-a", params, report, common, timer, out, err);
    } else if (*theorem_b) {
      const FamilySpec f = family_from(abc, verify_offset);
      const auto report = verify_theorem_b(f, from, to, common.jobs);
      Json params{{"abc", {f.a(), f.b(), f.c()}},
                  {"offset", f.offset()},
                  {"from", from},
                  {"to", to}};
      code = emit_verification("verify theorem-b", params, report, common, timer, out, err);
    } else if (*hs3) {
      const auto report = verify_hs3(q_max, ab_max);
      code = emit_verification("verify hs3", Json{{"q_max", q_max}, {"ab_max", ab_max}},
                               report, common, timer, out, err);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitUsage;
  }
  if (common.timing) err << "elapsed: " << timer.elapsed_ms() << " ms\n";
  return code;
}

}  // namespace shiftbetti
