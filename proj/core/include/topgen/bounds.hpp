#ifndef TOPGEN_BOUNDS_HPP
#define TOPGEN_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "topgen/catalog.hpp"

namespace topgen {

// dim C_Omega(y) = dim Omega - dim y^G + dim(y^G cap H)
int fixed_point_dim(int dim_omega, int dim_class, int dim_intersection);

struct AlphaValue {
  Rat value;
  bool exact = false;
  std::string prov;
};

struct SigmaTerm {
  ClassLabel cls;
  std::optional<Rat> alpha;  // nullopt = no bound available
  std::string source;        // "table", "long-root", "missing"
};

struct SigmaLedger {
  std::string subgroup;
  std::vector<SigmaTerm> terms;
  Rat total;        // sum of known terms
  int missing = 0;  // number of terms without a bound
  Rat threshold;    // t - 1
  bool conclusive() const { return missing == 0; }
  bool below_threshold() const { return missing == 0 && total < threshold; }
};

enum class Verdict3 { ForcesEmpty, ForcesNonEmpty, Inconclusive };
const char* verdict3_name(Verdict3 v);

struct CriterionOutcome {
  Verdict3 verdict = Verdict3::Inconclusive;
  std::string evidence;
  std::optional<long long> margin;      // inequality slack where meaningful
  std::vector<SigmaLedger> ledgers;     // certificate evidence
};

class Bounds {
 public:
  Bounds(const Catalog& cat) : cat_(&cat) {}

  // evaluated beta with the delta term resolved at p
  AlphaValue alpha_bound(GroupType g, const std::string& subgroup, const ClassLabel& cls, int p) const;

  SigmaLedger sigma_bound(GroupType g, const MaxSubgroupRecord& sub, const CanonicalTuple& tuple) const;

  // Sigma_X(H) >= t-1 can hold for a maximal parabolic H only in the listed
  // cases: the fixed-space inequality (directly or via tau) or an explicit row.
  bool parabolic_obstructed(const CanonicalTuple& tuple) const;

  // ForcesEmpty iff sum dim C_V(y_i) > (t-1) dim V, tested for the tuple and
  // its tau-image.  Throws MissingData when a fixed-space dim is absent.
  CriterionOutcome weyl_inequality_test(const CanonicalTuple& tuple) const;
  // raw inequality value without the B-route; nullopt = missing data
  std::optional<bool> weyl_inequality_holds(const CanonicalTuple& tuple) const;

  // two-class criterion on the adjoint module
  CriterionOutcome lie_algebra_test(const CanonicalTuple& tuple) const;

  // ForcesNonEmpty when no positive-dimensional maximal subgroup can catch the
  // generated subgroup: Delta+ nonempty, no parabolic obstruction, and every
  // admitted reductive subgroup has a conclusive sigma ledger below t-1.
  CriterionOutcome generation_certificate(const CanonicalTuple& tuple) const;

 private:
  const Catalog* cat_;
};

}  // namespace topgen

#endif
