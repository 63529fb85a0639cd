#include "topgen/tsv.hpp"

#include <fstream>

#include "topgen/errors.hpp"

namespace topgen {

TsvFile read_tsv(const std::string& path, const std::vector<std::string>& expect_cols) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  TsvFile out;
  out.path = path;
  std::string line;
  int lineno = 0;
  bool cols_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("#cols:", 0) == 0) {
      std::vector<std::string> cols;
      std::size_t pos = 7;  // "#cols:\t"
      while (pos <= line.size()) {
        std::size_t tab = line.find('\t', pos);
        if (tab == std::string::npos) tab = line.size();
        if (tab > pos) cols.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
        if (tab == line.size()) break;
      }
      if (cols != expect_cols) {
        std::string msg = path + ": unexpected columns [";
        for (const auto& c : cols) msg += c + " ";
        msg += "]";
        fail(Errc::ParseError, msg);
      }
      cols_seen = true;
      continue;
    }
    if (line[0] == '#') continue;
    TsvRow row;
    row.lineno = lineno;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t tab = line.find('\t', pos);
      if (tab == std::string::npos) tab = line.size();
      row.cells.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
      if (tab == line.size()) break;
    }
    if (row.cells.size() != expect_cols.size())
      fail(Errc::ParseError, path + ":" + std::to_string(lineno) + ": expected " +
                                 std::to_string(expect_cols.size()) + " columns, got " +
                                 std::to_string(row.cells.size()));
    out.rows.push_back(std::move(row));
  }
  if (!cols_seen) fail(Errc::ParseError, path + ": missing #cols header");
  return out;
}

}  // namespace topgen
