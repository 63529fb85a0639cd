#ifndef TOPGEN_CLOSURE_HPP
#define TOPGEN_CLOSURE_HPP

#include <map>
#include <string>
#include <vector>

#include "topgen/catalog.hpp"

namespace topgen {

enum class Leq { True, False, Unknown };

// The closure partial order, evaluated per characteristic.  Reachability over
// the p-admissible edges is cached per (group, p).  Classes with
// closure_cover = false never get a definite answer (except reflexivity).
class ClosurePoset {
 public:
  explicit ClosurePoset(const Catalog& cat);

  Leq leq(GroupType g, const ClassLabel& a, const ClassLabel& b, int p) const;

  // true iff some bijection X -> Y has X_i in the closure of Y_sigma(i); the
  // tau-image of X is tried as well.  Unknown when no matching is definite
  // but some matching is blocked only by missing poset data.
  Leq product_dominated(GroupType g, int p, const std::vector<ClassLabel>& X,
                        const std::vector<ClassLabel>& Y) const;

  // all catalog classes definitely below b at p (used by audit reporting)
  std::vector<ClassLabel> down_set(GroupType g, const ClassLabel& b, int p) const;

 private:
  struct Graph {
    // adjacency over class indices of the group's catalog order
    std::vector<std::vector<int>> succ;
    std::vector<std::vector<bool>> reach;  // computed on construction
  };
  const Graph& graph(GroupType g, int p) const;
  Leq leq_idx(GroupType g, const Graph& gr, int ia, int ib, int p) const;
  int index_of(GroupType g, const ClassLabel& l) const;

  const Catalog* cat_;
  std::map<GroupType, std::map<std::string, int>> index_;
  mutable std::map<std::pair<GroupType, int>, Graph> cache_;
};

}  // namespace topgen

#endif
