#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shiftbetti/family.hpp"

namespace shiftbetti {

/// A published Betti table, parsed from the data files under data/.
struct ExpectedTable {
  int example = 0;
  FamilySpec family{1, 1, 1};
  Int from = 0;
  Int to = 0;
  std::vector<std::pair<Int, std::vector<Int>>> rows;
};

/// Raw text of data/table<example>.txt, compiled into the library.
std::string_view embedded_table_text(int example);

/// Parses the "# example=.. abc=a,b,c offset=s from=.. to=.." header and
/// "j=22 -> (1, 6, 9, 4, 0)" rows.
ExpectedTable parse_table(std::string_view text);

ExpectedTable expected_table(int example);

struct TableComparison {
  int example = 0;
  bool pass = false;
  std::size_t matched = 0;
  std::size_t total = 0;
  std::vector<Int> ci_rows;  // j values whose computed row is (1,3,3,1,0)
  std::string diff;          // unified diff, empty on pass
};

TableComparison compare_table(const ExpectedTable& expected,
                              const FamilyScanReport& computed);

TableComparison reproduce_table(int example, unsigned jobs = 1);

}  // namespace shiftbetti
