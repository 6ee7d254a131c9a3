#include "emit.hpp"

#include <cassert>
#include <cstdint>
#include <cstdio>
#include <ostream>

namespace primewheel::tool {

Cell wide_cell(u128 v) {
  if (v <= (u128)UINT64_MAX) return Cell((u64)v);
  return Cell(to_string(v));
}

Cell big_cell(const BigInt& v) {
  if (v >= 0 && v <= BigInt(UINT64_MAX)) return Cell(v.convert_to<u64>());
  return Cell(v.str());
}

Cell rat_cell(const Rat& r, int sig_digits) { return Cell(decimal(r, sig_digits)); }

Cell double_cell(double v, int sig_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", sig_digits, v);
  return Cell(std::string(buf));
}

Cell agree_cell(bool equal) { return Cell(equal ? "equal" : "discrepant"); }

namespace {

std::string csv_field(const Cell& v) {
  std::string s;
  if (v.is_string())
    s = v.get<std::string>();
  else if (v.is_boolean())
    s = v.get<bool>() ? "true" : "false";
  else
    s = v.dump();
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += "\"";
  return quoted;
}

}  // namespace

void emit(const Table& t, bool as_json, std::ostream& out) {
  if (as_json) {
    Cell doc = Cell::object();
    doc["schema_version"] = "1";
    doc["command"] = t.command;
    doc["columns"] = t.columns;
    Cell rows = Cell::array();
    for (const auto& r : t.rows) {
      assert(r.size() == t.columns.size());
      Cell obj = Cell::object();
      for (size_t i = 0; i < t.columns.size(); i++) obj[t.columns[i]] = r[i];
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    doc["provenance"] = t.provenance;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "schema_version";
  for (const auto& c : t.columns) out << "," << csv_field(Cell(c));
  out << "\n";
  for (const auto& r : t.rows) {
    assert(r.size() == t.columns.size());
    out << "1";
    for (const auto& v : r) out << "," << csv_field(v);
    out << "\n";
  }
}

}  // namespace primewheel::tool
