#include "topgen/engine.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "topgen/errors.hpp"

namespace topgen {

const char* verdict_name(Verdict v) { return v == Verdict::Empty ? "EMPTY" : "NONEMPTY"; }

const char* route_name(Route r) {
  switch (r) {
    case Route::Tables: return "tables";
    case Route::Inequality: return "inequality";
    case Route::Closure: return "closure";
  }
  return "?";
}

bool Engine::table_row_admitted(const TableRow& row, int p) const {
  return row.cond.admits(p, row.group);
}

bool Engine::in_table(const CanonicalTuple& t, char which) const {
  return table_row_id(t, which).has_value();
}

std::optional<int> Engine::table_row_id(const CanonicalTuple& t, char which) const {
  const bool tau = cat_->has_tau(t.group, t.p);
  for (const auto& row : cat_->table_rows()) {
    if (row.table != which || row.group != t.group) continue;
    if (row.labels.size() != t.labels.size()) continue;
    if (!table_row_admitted(row, t.p)) continue;
    if (!tau) {
      // rows are stored sorted, which is already canonical without tau
      if (row.labels == t.labels) return row.id;
      continue;
    }
    CanonicalTuple canon = cat_->canonical_tuple(t.group, t.p, row.labels);
    if (canon.labels == t.labels) return row.id;
  }
  return std::nullopt;
}

CanonicalTuple Engine::validate_input(GroupType g, int p, std::vector<ClassLabel> labels,
                                      bool extended) const {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not a prime");
  if (labels.size() < 2) fail(Errc::TupleTooSmall, "need at least two classes");
  for (const auto& l : labels) {
    const ClassRecord& rec = cat_->class_info(g, l);
    if (!rec.exists.admits(p, g))
      fail(Errc::UnknownClass, format_label(l) + " is not a class of " + group_name(g) +
                                   " in characteristic " + std::to_string(p));
  }

  bool all_order_p = true;
  for (const auto& l : labels)
    if (!cat_->has_order_p(g, l, p)) all_order_p = false;

  if (extended && !all_order_p) {
    std::vector<ClassLabel> sorted = labels;
    sort_labels(sorted);
    if (decide_extended(g, p, sorted).has_value())
      return cat_->canonical_tuple_lenient(g, p, std::move(labels));
    // fall through to the precise error below
  }

  if (labels.size() == 2 && p == 2 && all_order_p)
    fail(Errc::TwoInvolutionsUnsupported,
         "two involutions generate a dihedral group; take p >= 3 for t = 2");
  for (const auto& l : labels)
    if (!cat_->has_order_p(g, l, p))
      fail(Errc::NotOrderP, format_label(l) + " has no elements of order " + std::to_string(p));
  if (labels.size() == 2 && p == 2)
    fail(Errc::TwoInvolutionsUnsupported,
         "two involutions generate a dihedral group; take p >= 3 for t = 2");
  return cat_->canonical_tuple(g, p, std::move(labels));
}

Decision Engine::decide_tables(const CanonicalTuple& t) const {
  Decision d;
  d.route = Route::Tables;
  const std::size_t bound = t.group == GroupType::G2 ? 4 : 5;
  if (t.size() >= bound) {
    d.verdict = Verdict::NonEmpty;
    d.evidence = "t = " + std::to_string(t.size()) + " >= " + std::to_string(bound) +
                 ": always topologically generating";
    return d;
  }
  if (auto id = table_row_id(t, 'A')) {
    d.verdict = Verdict::Empty;
    d.evidence = "table A row #" + std::to_string(*id);
    return d;
  }
  if (auto id = table_row_id(t, 'B')) {
    d.verdict = Verdict::Empty;
    d.evidence = "table B row #" + std::to_string(*id);
    return d;
  }
  d.verdict = Verdict::NonEmpty;
  d.evidence = "not a classified exception";
  return d;
}

Decision Engine::decide_inequality(const CanonicalTuple& t) const {
  Decision d;
  d.route = Route::Inequality;
  const std::size_t bound = t.group == GroupType::G2 ? 4 : 5;
  if (t.size() >= bound) {
    d.verdict = Verdict::NonEmpty;
    d.evidence = "t above the generation bound";
    return d;
  }
  CriterionOutcome weyl = bounds_.weyl_inequality_test(t);
  d.margin = weyl.margin;
  if (weyl.verdict == Verdict3::ForcesEmpty) {
    d.verdict = Verdict::Empty;
    d.evidence = weyl.evidence;
    return d;
  }
  if (auto id = table_row_id(t, 'B')) {
    d.verdict = Verdict::Empty;
    d.evidence = "fixed-space inequality fails but the tuple is table B row #" + std::to_string(*id);
    return d;
  }
  d.verdict = Verdict::NonEmpty;
  d.evidence = weyl.evidence;
  return d;
}

Decision Engine::decide_closure(const CanonicalTuple& t) const {
  Decision d;
  d.route = Route::Closure;
  bool unknown = false;
  for (const auto& gen : cat_->closure_generators()) {
    if (gen.group != t.group || gen.labels.size() != t.labels.size()) continue;
    if (!gen.cond.admits(t.p, t.group)) continue;
    Leq r = poset_.product_dominated(t.group, t.p, t.labels, gen.labels);
    if (r == Leq::True) {
      d.verdict = Verdict::Empty;
      d.evidence = "dominated by generator (" + format_tuple(gen.labels) + ")";
      return d;
    }
    if (r == Leq::Unknown) unknown = true;
  }
  if (unknown)
    fail(Errc::MissingPosetData,
         "closure data cannot settle domination for (" + format_tuple(t.labels) + ")");
  d.verdict = Verdict::NonEmpty;
  d.evidence = "dominated by no generator";
  return d;
}

Decision Engine::decide(const CanonicalTuple& t) const {
  Decision tables = decide_tables(t);
  RouteResult rt{Route::Tables, tables.verdict, tables.evidence, ""};

  RouteResult ri{Route::Inequality, std::nullopt, "", ""};
  try {
    Decision ineq = decide_inequality(t);
    ri.verdict = ineq.verdict;
    ri.evidence = ineq.evidence;
    tables.margin = ineq.margin;
  } catch (const Error& e) {
    if (e.code() != Errc::MissingData) throw;
    ri.gap = e.what();
  }

  RouteResult rc{Route::Closure, std::nullopt, "", ""};
  try {
    Decision clos = decide_closure(t);
    rc.verdict = clos.verdict;
    rc.evidence = clos.evidence;
  } catch (const Error& e) {
    if (e.code() != Errc::MissingPosetData) throw;
    rc.gap = e.what();
  }

  for (const RouteResult* r : {&ri, &rc}) {
    if (r->verdict && *r->verdict != tables.verdict)
      fail(Errc::RouteDisagreement,
           "tables say " + std::string(verdict_name(tables.verdict)) + " but " +
               route_name(r->route) + " says " + verdict_name(*r->verdict) + " for (" +
               format_tuple(t.labels) + ") at p=" + std::to_string(t.p));
  }

  Decision out = tables;
  out.routes = {rt, ri, rc};
  for (const RouteResult& r : out.routes)
    if (!r.verdict && !r.gap.empty()) out.warnings.push_back(r.gap);
  return out;
}

std::optional<Decision> Engine::decide_extended(GroupType g, int p,
                                                const std::vector<ClassLabel>& sorted_labels) const {
  // the explicitly listed order-4 pairs at p=2
  for (const auto& e : cat_->extended_pairs()) {
    if (e.group != g || e.p != p) continue;
    std::vector<ClassLabel> row = e.labels;
    sort_labels(row);
    if (row == sorted_labels) {
      Decision d;
      d.verdict = Verdict::Empty;
      d.route = Route::Tables;
      d.evidence = "extended pair (second class has order 4 at p=2)";
      return d;
    }
  }
  // table A rows hold for every characteristic in which the classes exist
  for (const auto& row : cat_->table_rows()) {
    if (row.group != g || row.labels.size() != sorted_labels.size()) continue;
    bool exist = true;
    for (const auto& l : row.labels)
      if (!cat_->class_exists_at(g, l, p)) exist = false;
    if (!exist) continue;
    CanonicalTuple canon = cat_->canonical_tuple_lenient(g, p, row.labels);
    CanonicalTuple mine = cat_->canonical_tuple_lenient(g, p, sorted_labels);
    if (!(canon.labels == mine.labels)) continue;
    if (row.table == 'A') {
      Decision d;
      d.verdict = Verdict::Empty;
      d.route = Route::Tables;
      d.evidence = "table A row #" + std::to_string(row.id) + " (valid in every characteristic)";
      return d;
    }
    // table B rows extend to good characteristic
    const bool good = g == GroupType::E8 ? p >= 7 : p >= 5;
    if (row.table == 'B' && good) {
      Decision d;
      d.verdict = Verdict::Empty;
      d.route = Route::Tables;
      d.evidence = "table B row #" + std::to_string(row.id) + " (good characteristic)";
      return d;
    }
  }
  return std::nullopt;
}

std::vector<CanonicalTuple> Engine::enumerate_domain(GroupType g, int p, int tmin, int tmax) const {
  std::vector<ClassLabel> cls = cat_->order_p_classes(g, p);
  std::sort(cls.begin(), cls.end());
  std::vector<CanonicalTuple> out;
  std::set<std::string> seen;
  const int n = static_cast<int>(cls.size());
  for (int t = tmin; t <= tmax; ++t) {
    if (t == 2 && p == 2) continue;
    if (n == 0) continue;
    std::vector<int> idx(t, 0);
    while (true) {
      std::vector<ClassLabel> labels;
      labels.reserve(t);
      for (int i : idx) labels.push_back(cls[i]);
      CanonicalTuple canon = cat_->canonical_tuple(g, p, std::move(labels));
      std::string key = format_tuple(canon.labels);
      if (seen.insert(std::move(key)).second) out.push_back(std::move(canon));
      // next multiset (nondecreasing index vectors)
      int k = t - 1;
      while (k >= 0 && idx[k] == n - 1) --k;
      if (k < 0) break;
      ++idx[k];
      for (int j = k + 1; j < t; ++j) idx[j] = idx[k];
    }
  }
  return out;
}

}  // namespace topgen
