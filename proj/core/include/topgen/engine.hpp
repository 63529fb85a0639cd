#ifndef TOPGEN_ENGINE_HPP
#define TOPGEN_ENGINE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "topgen/bounds.hpp"
#include "topgen/catalog.hpp"
#include "topgen/closure.hpp"

namespace topgen {

enum class Verdict { Empty, NonEmpty };
enum class Route { Tables, Inequality, Closure };
const char* verdict_name(Verdict v);
const char* route_name(Route r);

struct RouteResult {
  Route route;
  std::optional<Verdict> verdict;  // nullopt = data gap
  std::string evidence;
  std::string gap;  // reason when verdict is nullopt
};

struct Decision {
  Verdict verdict = Verdict::NonEmpty;
  Route route = Route::Tables;
  std::string evidence;
  std::optional<long long> margin;  // inequality route slack when available
  std::vector<RouteResult> routes;  // every route that was evaluated
  std::vector<std::string> warnings;
};

class Engine {
 public:
  explicit Engine(const Catalog& cat) : cat_(&cat), bounds_(cat), poset_(cat) {}

  const Catalog& catalog() const { return *cat_; }
  const Bounds& bounds() const { return bounds_; }
  const ClosurePoset& poset() const { return poset_; }

  // Checks the hypotheses and canonicalizes.  With extended=true, tuples the
  // extension data speaks about are admitted even when a class lacks order-p
  // elements (everything else is still rejected).
  CanonicalTuple validate_input(GroupType g, int p, std::vector<ClassLabel> labels,
                                bool extended = false) const;

  Decision decide_tables(const CanonicalTuple& t) const;
  Decision decide_inequality(const CanonicalTuple& t) const;  // throws MissingData
  Decision decide_closure(const CanonicalTuple& t) const;     // throws MissingPosetData

  // consensus: all routes with data must agree; tables verdict is returned
  Decision decide(const CanonicalTuple& t) const;

  // extended route (p=2 order-4 pairs; good-characteristic table rows)
  std::optional<Decision> decide_extended(GroupType g, int p,
                                          const std::vector<ClassLabel>& sorted_labels) const;

  // table lookup helpers (canonical row sets per (group,p))
  bool in_table(const CanonicalTuple& t, char which) const;
  std::optional<int> table_row_id(const CanonicalTuple& t, char which) const;
  bool table_row_admitted(const TableRow& row, int p) const;

  std::vector<CanonicalTuple> enumerate_domain(GroupType g, int p, int tmin, int tmax) const;

 private:
  const Catalog* cat_;
  Bounds bounds_;
  ClosurePoset poset_;
};

}  // namespace topgen

#endif
