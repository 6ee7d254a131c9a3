#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "primewheel/int128.hpp"
#include "primewheel/rational.hpp"

namespace primewheel::tool {

// One cell of output. Integers that fit 64 bits stay JSON numbers; wider
// integers and all rendered decimals travel as strings.
using Cell = nlohmann::ordered_json;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  Cell provenance = Cell::object();  // published-table id -> {row.col: "discrepant"}
};

Cell wide_cell(u128 v);
Cell big_cell(const BigInt& v);
Cell rat_cell(const Rat& r, int sig_digits);
Cell double_cell(double v, int sig_digits);
Cell agree_cell(bool equal);

// CSV: comma separated, \n line ends, fields quoted when they contain
// specials, schema_version leading every row. JSON: one object per invocation.
void emit(const Table& t, bool as_json, std::ostream& out);

}  // namespace primewheel::tool
