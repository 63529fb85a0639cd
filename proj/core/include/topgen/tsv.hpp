#ifndef TOPGEN_TSV_HPP
#define TOPGEN_TSV_HPP

#include <string>
#include <vector>

namespace topgen {

struct TsvRow {
  int lineno = 0;
  std::vector<std::string> cells;
};

struct TsvFile {
  std::string path;
  std::vector<TsvRow> rows;
};

// strict line-oriented reader: '#' comments, a mandatory "#cols:" header that
// must match expect_cols exactly, fixed cell count per row
TsvFile read_tsv(const std::string& path, const std::vector<std::string>& expect_cols);

}  // namespace topgen

#endif
