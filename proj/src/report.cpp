#include "shiftbetti/report.hpp"

#include <sstream>

namespace shiftbetti {

std::string pretty_totals(const std::vector<Int>& totals) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < totals.size(); ++i) {
    if (i) os << ", ";
    os << totals[i];
  }
  os << ')';
  return os.str();
}

std::string pretty_row(Int j, const std::vector<Int>& totals) {
  return "j=" + std::to_string(j) + " -> " + pretty_totals(totals);
}

std::string scan_csv(const FamilyScanReport& report) {
  std::ostringstream os;
  os << kScanCsvHeader << '\n';
  for (const ScanRow& r : report.rows) {
    os << r.j;
    for (Int g : r.generators) os << ',' << g;
    os << ',' << r.content;
    for (Int b : r.totals) os << ',' << b;
    os << ',' << r.mu << ',' << (r.ci ? 1 : 0) << '\n';
  }
  return os.str();
}

Json betti_to_json(const GradedBettiTable& table) {
  Json rows = Json::object();
  for (const auto& [m, row] : table.rows) rows[std::to_string(m)] = row;
  return Json{{"totals", table.totals}, {"rows", rows}};
}

GradedBettiTable betti_from_json(const Json& j) {
  GradedBettiTable table;
  table.totals = j.at("totals").get<std::vector<Int>>();
  table.columns = table.totals.size();
  for (const auto& [key, row] : j.at("rows").items()) {
    table.rows.emplace(std::stoll(key), row.get<std::vector<Int>>());
  }
  table.bound = table.rows.empty() ? 0 : table.rows.rbegin()->first;
  return table;
}

Json scan_row_to_json(const ScanRow& r) {
  return Json{{"j", r.j},           {"raw", r.raw},       {"generators", r.generators},
              {"content", r.content}, {"totals", r.totals}, {"mu", r.mu},
              {"ci", r.ci}};
}

ScanRow scan_row_from_json(const Json& j) {
  ScanRow r;
  r.j = j.at("j").get<Int>();
  r.raw = j.at("raw").get<std::vector<Int>>();
  r.generators = j.at("generators").get<std::vector<Int>>();
  r.content = j.at("content").get<Int>();
  r.totals = j.at("totals").get<std::vector<Int>>();
  r.mu = j.at("mu").get<std::size_t>();
  r.ci = j.at("ci").get<bool>();
  return r;
}

Json scan_to_json(const FamilyScanReport& report) {
  const FamilySpec& f = report.family;
  Json rows = Json::array();
  for (const ScanRow& r : report.rows) rows.push_back(scan_row_to_json(r));
  Json out{{"abc", {f.a(), f.b(), f.c()}}, {"offset", f.offset()}, {"rows", rows}};
  if (report.bound_override) out["bound_override"] = *report.bound_override;
  return out;
}

FamilyScanReport scan_from_json(const Json& j) {
  const auto abc = j.at("abc").get<std::vector<Int>>();
  FamilyScanReport report{FamilySpec(abc.at(0), abc.at(1), abc.at(2),
                                     j.at("offset").get<Int>()),
                          {},
                          std::nullopt};
  for (const auto& row : j.at("rows")) report.rows.push_back(scan_row_from_json(row));
  if (j.contains("bound_override")) report.bound_override = j["bound_override"].get<Int>();
  return report;
}

Json binomial_to_json(const Binomial& b, std::optional<Int> degree) {
  Json out{{"vector", b.vector()}, {"binomial", b.to_string()}};
  if (degree) out["degree"] = *degree;
  return out;
}

Json verification_to_json(const VerificationReport& report) {
  auto case_json = [](const VerifyCase& c) {
    Json out{{"case", c.label},
             {"n", c.n},
             {"t", c.t},
             {"j", c.j},
             {"leading", c.leading},
             {"generators", c.generators},
             {"mu", c.mu},
             {"ci", c.ci},
             {"expected_ci", c.expected_ci},
             {"agrees", c.agrees}};
    if (c.expected_mu) out["expected_mu"] = c.expected_mu;
    if (c.ideal_matches) out["ideal_matches"] = *c.ideal_matches;
    if (!c.detail.empty()) out["detail"] = c.detail;
    return out;
  };
  Json cases = Json::array();
  for (const auto& c : report.cases) cases.push_back(case_json(c));
  Json counter = Json::array();
  for (const auto& c : report.counterexamples) counter.push_back(case_json(c));
  return Json{{"theorem", report.theorem},
              {"agreements", report.agreements},
              {"counterexamples", counter},
              {"passed", report.passed()},
              {"cases", cases}};
}

Json output_record(const std::string& command, Json parameters, Json payload,
                   std::optional<double> timing_ms) {
  Json out{{"schema_version", kSchemaVersion},
           {"command", command},
           {"parameters", std::move(parameters)},
           {"payload", std::move(payload)}};
  if (timing_ms) out["timing_ms"] = *timing_ms;
  return out;
}

}  // namespace shiftbetti
