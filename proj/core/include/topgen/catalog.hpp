#ifndef TOPGEN_CATALOG_HPP
#define TOPGEN_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topgen/labels.hpp"
#include "topgen/pcond.hpp"
#include "topgen/rational.hpp"

namespace topgen {

struct GroupDescriptor {
  GroupType type;
  int dim = 0;
  int rank = 0;
  int coxeter = 0;
  int ref_module_dim = 0;
  int adjoint_dim = 0;
  RegimeMap lie_center;  // centre of the Lie algebra, by p-regime (may be empty)
  std::string prov;
};

struct ClassRecord {
  ClassLabel label;
  PCond exists;
  PCond order_p;
  RegimeMap dim_class;   // p-regime map (a few classes have p-dependent dimension)
  RegimeMap fixed_ref;   // dim C_V(y) on the reference module, by p-regime
  RegimeMap fixed_adj;   // dim C_W(y) on the adjoint module, by p-regime
  bool closure_cover = true;  // false: the closure dataset does not speak about this class
  std::string prov;
};

struct MaxSubgroupRecord {
  std::string label;
  bool parabolic = false;
  int parabolic_index = 0;  // 1..rank when parabolic
  PCond cond;
  std::optional<int> dim_omega;
  bool in_long = false;  // membership in the long-root collection
  std::string prov;
};

struct AlphaEntry {
  GroupType group;
  std::string subgroup;
  ClassLabel cls;
  Rat base;
  int delta_prime = 0;  // 0 = no delta term
  Rat delta_coeff;
  bool exact = false;
  std::string prov;

  Rat value(int p) const { return delta_prime != 0 && p == delta_prime ? base + delta_coeff : base; }
};

struct TableRow {
  char table = 'A';  // 'A' or 'B'
  GroupType group;
  PCond cond;
  std::vector<ClassLabel> labels;  // stored sorted
  int id = 0;                      // row index within the file
  std::string prov;
};

struct ClosGenRow {
  GroupType group;
  PCond cond;
  std::vector<ClassLabel> labels;
  std::string prov;
};

struct ClosureEdge {
  GroupType group;
  ClassLabel smaller, larger;
  PCond cond;
  std::string prov;
};

struct FibreInstance {
  GroupType group;
  PCond cond;
  std::string L, M;
  int dim_M = 0;
  std::vector<ClassLabel> x_labels;
  std::vector<int> d_dims;
  bool m_class_flag = false;  // D_i taken as M-classes rather than L-classes
  std::string prov;
};

struct GraphCosetRecord {
  std::string family;  // "A2m", "A2m-1", "E6", "D4"
  int p = 0;
  int n = 0;
  std::vector<std::string> dim_exprs;  // integers or the Table formulas in m
  std::vector<std::string> centralizers;
  std::string prov;
};

struct ParabObstruction {
  GroupType group;
  std::string case_tag;  // "iii" or "iv"
  std::vector<ClassLabel> labels;
  std::string prov;
};

struct ExtendedPair {
  GroupType group;
  int p = 0;
  std::vector<ClassLabel> labels;
  std::string prov;
};

struct B4FusionRow {
  GroupType group;
  std::string subgroup;
  int p = 0;
  std::string h_class, as_label;
  int dim_h = 0;
  ClassLabel g_class;
  std::string prov;
};

struct CanonicalTuple {
  GroupType group;
  int p = 0;
  std::vector<ClassLabel> labels;  // sorted, tau-minimal
  std::size_t size() const { return labels.size(); }
};

inline const std::vector<int>& representative_primes() {
  static const std::vector<int> ps = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  return ps;
}

class Catalog {
 public:
  static Catalog load(const std::string& dir);

  const GroupDescriptor& group(GroupType g) const;

  // class access
  const ClassRecord& class_info(GroupType g, const ClassLabel& label) const;
  const ClassRecord* find_class(GroupType g, const ClassLabel& label) const;
  const std::vector<ClassRecord>& classes(GroupType g) const;
  bool class_exists_at(GroupType g, const ClassLabel& label, int p) const;
  bool has_order_p(GroupType g, const ClassLabel& label, int p) const;
  int class_dim(GroupType g, const ClassLabel& label, int p) const;
  int fixed_space_dim(GroupType g, const ClassLabel& label, int p) const;
  std::vector<ClassLabel> order_p_classes(GroupType g, int p) const;

  // subgroups
  std::vector<MaxSubgroupRecord> subgroups(GroupType g, int p) const;
  const MaxSubgroupRecord* find_subgroup(GroupType g, const std::string& label) const;
  const std::vector<MaxSubgroupRecord>& all_subgroups(GroupType g) const;

  // graph automorphism data
  bool has_tau(GroupType g, int p) const;
  // identity when (g,p) carries no graph automorphism; MissingTauData when it
  // does but the dataset has no entry for this label
  ClassLabel tau_image(GroupType g, int p, const ClassLabel& label) const;

  CanonicalTuple canonical_tuple(GroupType g, int p, std::vector<ClassLabel> labels) const;
  // sorted only; tau applied when fully known, left alone otherwise
  CanonicalTuple canonical_tuple_lenient(GroupType g, int p, std::vector<ClassLabel> labels) const;

  // alpha bounds
  const AlphaEntry* find_alpha(GroupType g, const std::string& subgroup, const ClassLabel& cls) const;

  std::vector<GraphCosetRecord> graph_coset_classes(const std::string& family, int p) const;

  const std::vector<TableRow>& table_rows() const { return tables_; }
  const std::vector<ClosGenRow>& closure_generators() const { return clos_gens_; }
  const std::vector<ClosureEdge>& closure_edges() const { return closure_edges_; }
  const std::vector<FibreInstance>& fibre_instances() const { return fibre_; }
  const std::vector<ParabObstruction>& parab_obstructions() const { return parab_; }
  const std::vector<ExtendedPair>& extended_pairs() const { return extended_; }
  const std::vector<B4FusionRow>& b4_fusion() const { return b4_; }
  const std::vector<AlphaEntry>& alpha_entries() const { return alpha_; }
  const std::map<std::pair<GroupType, int>, std::map<std::string, std::string>>& tau_tables() const {
    return tau_;
  }

 private:
  void cross_link();

  std::map<GroupType, GroupDescriptor> groups_;
  std::map<GroupType, std::vector<ClassRecord>> classes_;
  std::map<GroupType, std::vector<MaxSubgroupRecord>> subgroups_;
  std::map<std::pair<GroupType, int>, std::map<std::string, std::string>> tau_;  // formatted labels
  std::vector<ClosureEdge> closure_edges_;
  std::vector<AlphaEntry> alpha_;
  std::vector<TableRow> tables_;
  std::vector<ClosGenRow> clos_gens_;
  std::vector<FibreInstance> fibre_;
  std::vector<GraphCosetRecord> graph_;
  std::vector<ParabObstruction> parab_;
  std::vector<ExtendedPair> extended_;
  std::vector<B4FusionRow> b4_;
};

// data directory resolution: explicit flag > TOPGEN_DATA env > compiled default
std::string default_data_dir();

}  // namespace topgen

#endif
