#include "topgen/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "topgen/errors.hpp"
#include "topgen/tsv.hpp"

#ifndef TOPGEN_DATA_DIR
#define TOPGEN_DATA_DIR ""
#endif

namespace topgen {

std::string default_data_dir() {
  if (const char* env = std::getenv("TOPGEN_DATA"); env && *env) return env;
  return TOPGEN_DATA_DIR;
}

namespace {

std::string where(const TsvFile& f, const TsvRow& r) {
  return f.path + ":" + std::to_string(r.lineno);
}

int to_int(const std::string& s, const TsvFile& f, const TsvRow& r) {
  try {
    return std::stoi(s);
  } catch (...) {
    fail(Errc::ParseError, where(f, r) + ": bad integer '" + s + "'");
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t c = s.find(',', pos);
    if (c == std::string::npos) c = s.size();
    out.push_back(s.substr(pos, c - pos));
    pos = c + 1;
    if (c == s.size()) break;
  }
  return out;
}

}  // namespace

Catalog Catalog::load(const std::string& dir) {
  Catalog cat;
  auto path = [&](const char* name) { return dir + "/" + name; };

  {
    TsvFile f = read_tsv(path("groups.tsv"),
                         {"group", "dim", "rank", "coxeter", "ref_dim", "adjoint_dim", "lie_center", "prov"});
    for (const auto& r : f.rows) {
      GroupDescriptor g;
      g.type = group_from_name(r.cells[0]);
      g.dim = to_int(r.cells[1], f, r);
      g.rank = to_int(r.cells[2], f, r);
      g.coxeter = to_int(r.cells[3], f, r);
      g.ref_module_dim = to_int(r.cells[4], f, r);
      g.adjoint_dim = to_int(r.cells[5], f, r);
      g.lie_center = RegimeMap::parse(r.cells[6]);
      g.prov = r.cells[7];
      if (cat.groups_.count(g.type)) fail(Errc::DuplicateRow, where(f, r) + ": duplicate group");
      cat.groups_[g.type] = g;
    }
    if (cat.groups_.size() != 5) fail(Errc::ParseError, "groups.tsv must define all five groups");
  }

  {
    TsvFile f = read_tsv(path("classes.tsv"), {"group", "label", "exists", "order_p", "dim", "fixed_ref",
                                               "fixed_adj", "closure_cover", "prov"});
    for (const auto& r : f.rows) {
      GroupType g = group_from_name(r.cells[0]);
      ClassRecord rec;
      rec.label = parse_label(r.cells[1]);
      rec.exists = PCond::parse(r.cells[2]);
      rec.order_p = PCond::parse(r.cells[3]);
      rec.dim_class = RegimeMap::parse(r.cells[4]);
      rec.fixed_ref = RegimeMap::parse(r.cells[5]);
      rec.fixed_adj = RegimeMap::parse(r.cells[6]);
      rec.closure_cover = to_int(r.cells[7], f, r) != 0;
      rec.prov = r.cells[8];
      auto& vec = cat.classes_[g];
      for (const auto& e : vec)
        if (e.label == rec.label) fail(Errc::DuplicateRow, where(f, r) + ": duplicate class " + r.cells[1]);
      vec.push_back(std::move(rec));
    }
    for (auto& [g, vec] : cat.classes_)
      std::sort(vec.begin(), vec.end(), [](const ClassRecord& a, const ClassRecord& b) {
        return a.label < b.label;
      });
  }

  {
    TsvFile f = read_tsv(path("tau.tsv"), {"group", "p", "label", "image", "prov"});
    for (const auto& r : f.rows) {
      GroupType g = group_from_name(r.cells[0]);
      int p = to_int(r.cells[1], f, r);
      // store formatted canonical renderings for lookup
      std::string a = format_label(parse_label(r.cells[2]));
      std::string b = format_label(parse_label(r.cells[3]));
      auto& m = cat.tau_[{g, p}];
      if (m.count(a)) fail(Errc::DuplicateRow, where(f, r) + ": duplicate tau entry");
      m[a] = b;
    }
  }

  {
    TsvFile f = read_tsv(path("closure.tsv"), {"group", "smaller", "larger", "cond", "prov"});
    for (const auto& r : f.rows) {
      ClosureEdge e;
      e.group = group_from_name(r.cells[0]);
      e.smaller = parse_label(r.cells[1]);
      e.larger = parse_label(r.cells[2]);
      e.cond = PCond::parse(r.cells[3]);
      e.prov = r.cells[4];
      cat.closure_edges_.push_back(std::move(e));
    }
  }

  {
    TsvFile f = read_tsv(path("subgroups.tsv"),
                         {"group", "label", "kind", "cond", "dim_omega", "in_long", "prov"});
    for (const auto& r : f.rows) {
      GroupType g = group_from_name(r.cells[0]);
      MaxSubgroupRecord s;
      s.label = r.cells[1];
      if (r.cells[2].rfind("parabolic:", 0) == 0) {
        s.parabolic = true;
        s.parabolic_index = std::stoi(r.cells[2].substr(10));
      } else if (r.cells[2] == "reductive") {
        s.parabolic = false;
      } else {
        fail(Errc::ParseError, where(f, r) + ": bad kind '" + r.cells[2] + "'");
      }
      s.cond = PCond::parse(r.cells[3]);
      if (r.cells[4] != "-") s.dim_omega = to_int(r.cells[4], f, r);
      s.in_long = to_int(r.cells[5], f, r) != 0;
      s.prov = r.cells[6];
      auto& vec = cat.subgroups_[g];
      for (const auto& e : vec)
        if (e.label == s.label) fail(Errc::DuplicateRow, where(f, r) + ": duplicate subgroup " + s.label);
      vec.push_back(std::move(s));
    }
  }

  {
    TsvFile f = read_tsv(path("alpha_bounds.tsv"), {"group", "subgroup", "class", "base", "delta_prime",
                                                    "delta_coeff", "exact", "prov"});
    for (const auto& r : f.rows) {
      AlphaEntry a;
      a.group = group_from_name(r.cells[0]);
      a.subgroup = r.cells[1];
      a.cls = parse_label(r.cells[2]);
      a.base = Rat::parse(r.cells[3]);
      a.delta_prime = r.cells[4] == "-" ? 0 : to_int(r.cells[4], f, r);
      a.delta_coeff = r.cells[5] == "-" ? Rat(0) : Rat::parse(r.cells[5]);
      a.exact = to_int(r.cells[6], f, r) != 0;
      a.prov = r.cells[7];
      for (const auto& e : cat.alpha_)
        if (e.group == a.group && e.subgroup == a.subgroup && e.cls == a.cls)
          fail(Errc::DuplicateRow, where(f, r) + ": duplicate alpha row");
      cat.alpha_.push_back(std::move(a));
    }
  }

  {
    TsvFile f = read_tsv(path("tables_ab.tsv"), {"table", "group", "cond", "labels", "prov"});
    int id = 0;
    for (const auto& r : f.rows) {
      TableRow t;
      if (r.cells[0] != "A" && r.cells[0] != "B")
        fail(Errc::ParseError, where(f, r) + ": table must be A or B");
      t.table = r.cells[0][0];
      t.group = group_from_name(r.cells[1]);
      t.cond = PCond::parse(r.cells[2]);
      t.labels = parse_tuple(r.cells[3]);
      t.id = ++id;
      t.prov = r.cells[4];
      std::vector<ClassLabel> sorted = t.labels;
      sort_labels(sorted);
      if (!(sorted == t.labels)) fail(Errc::ParseError, where(f, r) + ": row not stored sorted");
      for (const auto& e : cat.tables_)
        if (e.group == t.group && e.labels == t.labels && e.table == t.table)
          fail(Errc::DuplicateRow, where(f, r) + ": duplicate table row");
      cat.tables_.push_back(std::move(t));
    }
  }

  {
    TsvFile f = read_tsv(path("table_clos.tsv"), {"group", "cond", "labels", "prov"});
    for (const auto& r : f.rows) {
      ClosGenRow t;
      t.group = group_from_name(r.cells[0]);
      t.cond = PCond::parse(r.cells[1]);
      t.labels = parse_tuple(r.cells[2]);
      t.prov = r.cells[3];
      cat.clos_gens_.push_back(std::move(t));
    }
  }

  {
    TsvFile f = read_tsv(path("fibre_instances.tsv"),
                         {"group", "cond", "L", "M", "dim_M", "x_labels", "d_dims", "flags", "prov"});
    for (const auto& r : f.rows) {
      FibreInstance inst;
      inst.group = group_from_name(r.cells[0]);
      inst.cond = PCond::parse(r.cells[1]);
      inst.L = r.cells[2];
      inst.M = r.cells[3];
      inst.dim_M = to_int(r.cells[4], f, r);
      inst.x_labels = parse_tuple(r.cells[5]);
      for (const auto& c : split_commas(r.cells[6])) inst.d_dims.push_back(std::stoi(c));
      inst.m_class_flag = r.cells[7] == "m";
      inst.prov = r.cells[8];
      if (inst.x_labels.size() != inst.d_dims.size())
        fail(Errc::ParseError, where(f, r) + ": |X| != |D|");
      cat.fibre_.push_back(std::move(inst));
    }
  }

  {
    TsvFile f = read_tsv(path("graph_coset.tsv"), {"family", "p", "n", "dims", "centralizers", "prov"});
    for (const auto& r : f.rows) {
      GraphCosetRecord g;
      g.family = r.cells[0];
      g.p = to_int(r.cells[1], f, r);
      g.n = to_int(r.cells[2], f, r);
      g.dim_exprs = split_commas(r.cells[3]);
      g.centralizers = split_commas(r.cells[4]);
      g.prov = r.cells[5];
      if (static_cast<int>(g.dim_exprs.size()) != g.n || static_cast<int>(g.centralizers.size()) != g.n)
        fail(Errc::ParseError, where(f, r) + ": list lengths must equal n");
      cat.graph_.push_back(std::move(g));
    }
  }

  {
    TsvFile f = read_tsv(path("parabolic_obstructions.tsv"), {"group", "case", "labels", "prov"});
    for (const auto& r : f.rows) {
      ParabObstruction o;
      o.group = group_from_name(r.cells[0]);
      o.case_tag = r.cells[1];
      o.labels = parse_tuple(r.cells[2]);
      o.prov = r.cells[3];
      cat.parab_.push_back(std::move(o));
    }
  }

  {
    TsvFile f = read_tsv(path("extended_pairs.tsv"), {"group", "p", "labels", "prov"});
    for (const auto& r : f.rows) {
      ExtendedPair e;
      e.group = group_from_name(r.cells[0]);
      e.p = to_int(r.cells[1], f, r);
      e.labels = parse_tuple(r.cells[2]);
      e.prov = r.cells[3];
      cat.extended_.push_back(std::move(e));
    }
  }

  {
    TsvFile f = read_tsv(path("b4_fusion.tsv"),
                         {"group", "subgroup", "p", "h_class", "as_label", "dim_h", "g_class", "prov"});
    for (const auto& r : f.rows) {
      B4FusionRow b;
      b.group = group_from_name(r.cells[0]);
      b.subgroup = r.cells[1];
      b.p = to_int(r.cells[2], f, r);
      b.h_class = r.cells[3];
      b.as_label = r.cells[4];
      b.dim_h = to_int(r.cells[5], f, r);
      b.g_class = parse_label(r.cells[6]);
      b.prov = r.cells[7];
      cat.b4_.push_back(std::move(b));
    }
  }

  cat.cross_link();
  return cat;
}

void Catalog::cross_link() {
  // every label referenced anywhere must resolve to a class record
  auto need = [&](GroupType g, const ClassLabel& l, const std::string& who) {
    if (!find_class(g, l))
      fail(Errc::DanglingReference,
           who + " references unknown class " + format_label(l) + " in " + group_name(g));
  };
  for (const auto& t : tables_)
    for (const auto& l : t.labels) need(t.group, l, "tables_ab");
  for (const auto& t : clos_gens_)
    for (const auto& l : t.labels) need(t.group, l, "table_clos");
  for (const auto& e : closure_edges_) {
    need(e.group, e.smaller, "closure");
    need(e.group, e.larger, "closure");
  }
  for (const auto& a : alpha_) {
    need(a.group, a.cls, "alpha_bounds");
    bool sub_ok = false;
    for (const auto& s : subgroups_.at(a.group))
      if (s.label == a.subgroup) sub_ok = true;
    if (!sub_ok)
      fail(Errc::DanglingReference, "alpha_bounds references unknown subgroup " + a.subgroup);
  }
  for (const auto& i : fibre_)
    for (const auto& l : i.x_labels) need(i.group, l, "fibre_instances");
  for (const auto& o : parab_)
    for (const auto& l : o.labels) need(o.group, l, "parabolic_obstructions");
  for (const auto& e : extended_)
    for (const auto& l : e.labels) need(e.group, l, "extended_pairs");
  for (const auto& b : b4_) need(b.group, b.g_class, "b4_fusion");
  for (const auto& [gp, m] : tau_)
    for (const auto& [a, b] : m) {
      need(gp.first, parse_label(a), "tau");
      need(gp.first, parse_label(b), "tau");
    }
  for (const auto& [g, vec] : subgroups_)
    for (const auto& s : vec)
      if (s.parabolic && (s.parabolic_index < 1 || s.parabolic_index > groups_.at(g).rank))
        fail(Errc::ParseError, "parabolic index out of range for " + s.label);
}

const GroupDescriptor& Catalog::group(GroupType g) const { return groups_.at(g); }

const std::vector<ClassRecord>& Catalog::classes(GroupType g) const {
  auto it = classes_.find(g);
  if (it == classes_.end()) fail(Errc::UnknownGroup, group_name(g));
  return it->second;
}

const ClassRecord* Catalog::find_class(GroupType g, const ClassLabel& label) const {
  auto it = classes_.find(g);
  if (it == classes_.end()) return nullptr;
  for (const auto& rec : it->second)
    if (rec.label == label) return &rec;
  return nullptr;
}

const ClassRecord& Catalog::class_info(GroupType g, const ClassLabel& label) const {
  const ClassRecord* rec = find_class(g, label);
  if (!rec)
    fail(Errc::UnknownClass, format_label(label) + " is not a cataloged class of " + group_name(g));
  return *rec;
}

bool Catalog::class_exists_at(GroupType g, const ClassLabel& label, int p) const {
  return class_info(g, label).exists.admits(p, g);
}

bool Catalog::has_order_p(GroupType g, const ClassLabel& label, int p) const {
  const ClassRecord& rec = class_info(g, label);
  return rec.exists.admits(p, g) && rec.order_p.admits(p, g);
}

int Catalog::class_dim(GroupType g, const ClassLabel& label, int p) const {
  const ClassRecord& rec = class_info(g, label);
  if (!rec.dim_class.has(p, g))
    fail(Errc::MissingData, "no class dimension for " + format_label(label) + " at p=" + std::to_string(p));
  return rec.dim_class.get(p, g);
}

int Catalog::fixed_space_dim(GroupType g, const ClassLabel& label, int p) const {
  const ClassRecord& rec = class_info(g, label);
  if (!rec.fixed_ref.has(p, g))
    fail(Errc::MissingData,
         "no fixed-space data for " + format_label(label) + " at p=" + std::to_string(p));
  return rec.fixed_ref.get(p, g);
}

std::vector<ClassLabel> Catalog::order_p_classes(GroupType g, int p) const {
  std::vector<ClassLabel> out;
  for (const auto& rec : classes(g))
    if (rec.exists.admits(p, g) && rec.order_p.admits(p, g)) out.push_back(rec.label);
  return out;
}

std::vector<MaxSubgroupRecord> Catalog::subgroups(GroupType g, int p) const {
  std::vector<MaxSubgroupRecord> out;
  for (const auto& s : subgroups_.at(g))
    if (s.cond.admits(p, g)) out.push_back(s);
  return out;
}

const MaxSubgroupRecord* Catalog::find_subgroup(GroupType g, const std::string& label) const {
  for (const auto& s : subgroups_.at(g))
    if (s.label == label) return &s;
  return nullptr;
}

const std::vector<MaxSubgroupRecord>& Catalog::all_subgroups(GroupType g) const {
  return subgroups_.at(g);
}

bool Catalog::has_tau(GroupType g, int p) const { return tau_.count({g, p}) != 0; }

ClassLabel Catalog::tau_image(GroupType g, int p, const ClassLabel& label) const {
  class_info(g, label);  // UnknownClass if absent
  auto it = tau_.find({g, p});
  if (it == tau_.end()) return label;
  auto jt = it->second.find(format_label(label));
  if (jt == it->second.end())
    fail(Errc::MissingTauData, "graph automorphism image of " + format_label(label) + " at (" +
                                   group_name(g) + ",p=" + std::to_string(p) + ") is not recorded");
  return parse_label(jt->second);
}

CanonicalTuple Catalog::canonical_tuple(GroupType g, int p, std::vector<ClassLabel> labels) const {
  if (labels.empty()) fail(Errc::TupleTooSmall, "empty tuple");
  for (const auto& l : labels) class_info(g, l);
  sort_labels(labels);
  if (has_tau(g, p)) {
    std::vector<ClassLabel> img;
    img.reserve(labels.size());
    for (const auto& l : labels) img.push_back(tau_image(g, p, l));
    sort_labels(img);
    if (labels_less(img, labels)) labels = std::move(img);
  }
  return CanonicalTuple{g, p, std::move(labels)};
}

CanonicalTuple Catalog::canonical_tuple_lenient(GroupType g, int p,
                                                std::vector<ClassLabel> labels) const {
  try {
    return canonical_tuple(g, p, labels);
  } catch (const Error& e) {
    if (e.code() != Errc::MissingTauData) throw;
    sort_labels(labels);
    return CanonicalTuple{g, p, std::move(labels)};
  }
}

const AlphaEntry* Catalog::find_alpha(GroupType g, const std::string& subgroup,
                                      const ClassLabel& cls) const {
  for (const auto& a : alpha_)
    if (a.group == g && a.subgroup == subgroup && a.cls == cls) return &a;
  return nullptr;
}

std::vector<GraphCosetRecord> Catalog::graph_coset_classes(const std::string& family, int p) const {
  // family may be concrete ("A6") or generic ("A2m", "A2m-1", "E6", "D4")
  std::string key = family;
  int m = 0;
  if (family.size() >= 2 && family[0] == 'A' && std::isdigit(static_cast<unsigned char>(family[1]))) {
    int rank = std::stoi(family.substr(1));
    if (rank % 2 == 0) { key = "A2m"; m = rank / 2; }
    else { key = "A2m-1"; m = (rank + 1) / 2; }
  }
  std::vector<GraphCosetRecord> out;
  for (const auto& g : graph_)
    if (g.family == key && g.p == p) {
      GraphCosetRecord r = g;
      if (m > 0) {
        for (auto& e : r.dim_exprs) {
          if (e == "m(2m+3)") e = std::to_string(m * (2 * m + 3));
          else if (e == "2m^2+m-1") e = std::to_string(2 * m * m + m - 1);
          else if (e == "2m^2-m-1") e = std::to_string(2 * m * m - m - 1);
        }
        for (auto& c : r.centralizers) {
          if (c == "B_m") c = "B" + std::to_string(m);
          else if (c == "C_m") c = "C" + std::to_string(m);
          else if (c == "C_{C_m}(u)") c = "C_{C" + std::to_string(m) + "}(u)";
        }
      }
      out.push_back(std::move(r));
    }
  if (out.empty())
    fail(Errc::NoGraphAutomorphism,
         family + " has no order-" + std::to_string(p) + " graph automorphism row");
  return out;
}

}  // namespace topgen
