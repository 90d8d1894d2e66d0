#include "shiftbetti/tables.hpp"

#include <charconv>
#include <regex>
#include <sstream>

#include "shiftbetti/error.hpp"
#include "shiftbetti/report.hpp"
#include "tables_data.hpp"

namespace shiftbetti {

std::string_view embedded_table_text(int example) {
  switch (example) {
    case 1: return detail::kTable1;
    case 2: return detail::kTable2;
    case 3: return detail::kTable3;
    default:
      throw Error(ErrorKind::InvalidInput, "example must be 1, 2 or 3");
  }
}

namespace {

std::vector<Int> parse_ints(const std::string& text) {
  std::vector<Int> out;
  static const std::regex number(R"(\d+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number);
       it != std::sregex_iterator(); ++it) {
    out.push_back(std::stoll(it->str()));
  }
  return out;
}

}  // namespace

ExpectedTable parse_table(std::string_view text) {
  static const std::regex header(
      R"(#\s*example=(\d+)\s+abc=(\d+),(\d+),(\d+)\s+offset=(\d+)\s+from=(\d+)\s+to=(\d+))");
  static const std::regex row(R"(j=(\d+)\s*->\s*\(([^)]*)\))");
  ExpectedTable table;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::smatch m;
    if (std::regex_search(line, m, header)) {
      table.example = std::stoi(m[1]);
      table.family = FamilySpec(std::stoll(m[2]), std::stoll(m[3]), std::stoll(m[4]),
                                std::stoll(m[5]));
      table.from = std::stoll(m[6]);
      table.to = std::stoll(m[7]);
      have_header = true;
    } else if (std::regex_search(line, m, row)) {
      table.rows.emplace_back(std::stoll(m[1]), parse_ints(m[2]));
    }
  }
  if (!have_header) throw Error(ErrorKind::InvalidInput, "table header missing");
  return table;
}

ExpectedTable expected_table(int example) {
  return parse_table(embedded_table_text(example));
}

TableComparison compare_table(const ExpectedTable& expected,
                              const FamilyScanReport& computed) {
  TableComparison cmp;
  cmp.example = expected.example;
  cmp.total = expected.rows.size();
  std::ostringstream diff;
  bool header_written = false;
  const std::vector<Int> koszul{1, 3, 3, 1, 0};
  for (const ScanRow& r : computed.rows) {
    if (r.totals == koszul) cmp.ci_rows.push_back(r.j);
  }
  for (std::size_t i = 0; i < expected.rows.size(); ++i) {
    const auto& [j, want] = expected.rows[i];
    const ScanRow* got = nullptr;
    for (const ScanRow& r : computed.rows) {
      if (r.j == j) got = &r;
    }
    if (got && got->totals == want) {
      ++cmp.matched;
      continue;
    }
    if (!header_written) {
      diff << "--- expected/table" << expected.example << "\n"
           << "+++ computed/table" << expected.example << "\n";
      header_written = true;
    }
    const std::size_t line = i + 1;
    diff << "@@ -" << line << ",1 +" << line << (got ? ",1" : ",0") << " @@\n"
         << "-" << pretty_row(j, want) << "\n";
    if (got) diff << "+" << pretty_row(j, got->totals) << "\n";
  }
  cmp.pass = cmp.matched == cmp.total && cmp.total > 0;
  cmp.diff = diff.str();
  return cmp;
}

TableComparison reproduce_table(int example, unsigned jobs) {
  const ExpectedTable expected = expected_table(example);
  const FamilyScanReport computed = scan(expected.family, expected.from, expected.to, jobs);
  return compare_table(expected, computed);
}

}  // namespace shiftbetti
