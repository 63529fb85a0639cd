#include "topgen/audit.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "topgen/errors.hpp"
#include "topgen/fibre.hpp"

namespace topgen {

namespace {

constexpr GroupType kGroups[] = {GroupType::G2, GroupType::F4, GroupType::E6, GroupType::E7,
                                 GroupType::E8};

// the worked parabolic fixture: permutation character values on the two
// classes meeting B2, as polynomials in q (ascending coefficients)
const std::vector<long long> kChi1 = {1, 1, 2, 3, 2};  // 2q^4+3q^3+2q^2+q+1
const std::vector<long long> kChi2 = {1, 1, 0, 1};     // q^3+q+1

int poly_degree(const std::vector<long long>& coeffs) {
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    if (coeffs[i] != 0) return i;
  return -1;
}

}  // namespace

AuditReport run_audit(const Engine& eng, const AuditOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const Catalog& cat = eng.catalog();
  AuditReport rep;
  auto fail_msg = [&](const std::string& m) { rep.failures.push_back(m); };
  auto gap_msg = [&](const std::string& m) {
    if (rep.gaps.size() < 200) rep.gaps.push_back(m);
  };

  std::vector<int> primes = representative_primes();
  if (opt.fast) primes = {2, 3, 5, 7, 31};

  // (a) route agreement + (b) inequality <=> table A over the enumeration domain
  for (GroupType g : kGroups) {
    for (int p : primes) {
      std::vector<CanonicalTuple> domain = eng.enumerate_domain(g, p, 2, 4);
      rep.domain_size += domain.size();
      for (const auto& tup : domain) {
        Decision tables = eng.decide_tables(tup);
        std::optional<Verdict> ineq, clos;
        try {
          ineq = eng.decide_inequality(tup).verdict;
        } catch (const Error& e) {
          if (e.code() != Errc::MissingData) throw;
          gap_msg("inequality gap: " + std::string(group_name(g)) + " p=" + std::to_string(p) +
                  " (" + format_tuple(tup.labels) + ")");
        }
        try {
          clos = eng.decide_closure(tup).verdict;
        } catch (const Error& e) {
          if (e.code() != Errc::MissingPosetData) throw;
          gap_msg("closure gap: " + std::string(group_name(g)) + " p=" + std::to_string(p) + " (" +
                  format_tuple(tup.labels) + ")");
        }
        if (ineq && *ineq != tables.verdict)
          fail_msg("route disagreement (inequality) at " + std::string(group_name(g)) +
                   " p=" + std::to_string(p) + " (" + format_tuple(tup.labels) + ")");
        if (clos && *clos != tables.verdict)
          fail_msg("route disagreement (closure) at " + std::string(group_name(g)) +
                   " p=" + std::to_string(p) + " (" + format_tuple(tup.labels) + ")");
        // (b): the fixed-space inequality (with its tau variant) holds exactly
        // on table A
        std::optional<bool> weyl = eng.bounds().weyl_inequality_holds(tup);
        if (weyl.has_value() && *weyl != eng.in_table(tup, 'A'))
          fail_msg("fixed-space inequality mismatch with table A at " +
                   std::string(group_name(g)) + " p=" + std::to_string(p) + " (" +
                   format_tuple(tup.labels) + ")");
        if (rep.failures.size() > 50) {
          rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          return rep;
        }
      }
      ++rep.checks_run;
    }
  }

  // (c) table B rows fail the inequality at every admitted prime
  for (const auto& row : cat.table_rows()) {
    if (row.table != 'B') continue;
    for (int p : primes) {
      if (!row.cond.admits(p, row.group)) continue;
      CanonicalTuple tup = cat.canonical_tuple(row.group, p, row.labels);
      std::optional<bool> weyl = eng.bounds().weyl_inequality_holds(tup);
      if (!weyl.has_value()) {
        gap_msg("table B inequality gap: row #" + std::to_string(row.id));
        continue;
      }
      if (*weyl)
        fail_msg("table B row #" + std::to_string(row.id) + " satisfies the fixed-space inequality");
    }
  }
  ++rep.checks_run;

  // (d) downward closedness of emptiness over t in {2,3}
  for (GroupType g : kGroups) {
    for (int p : primes) {
      std::vector<ClassLabel> cls = cat.order_p_classes(g, p);
      for (const auto& tup : eng.enumerate_domain(g, p, 2, 3)) {
        if (eng.decide_tables(tup).verdict != Verdict::Empty) continue;
        for (std::size_t i = 0; i < tup.labels.size(); ++i) {
          for (const auto& lower : cls) {
            if (lower == tup.labels[i]) continue;
            if (eng.poset().leq(g, lower, tup.labels[i], p) != Leq::True) continue;
            std::vector<ClassLabel> labels = tup.labels;
            labels[i] = lower;
            CanonicalTuple low = cat.canonical_tuple(g, p, std::move(labels));
            if (eng.decide_tables(low).verdict != Verdict::Empty)
              fail_msg("downward closedness broken: (" + format_tuple(tup.labels) + ") empty but (" +
                       format_tuple(low.labels) + ") not, " + group_name(g) +
                       " p=" + std::to_string(p));
          }
        }
      }
    }
  }
  ++rep.checks_run;

  // (e) tau invariance of decisions
  for (auto [g, p] : {std::pair{GroupType::G2, 3}, std::pair{GroupType::F4, 2}}) {
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) continue;
    for (const auto& tup : eng.enumerate_domain(g, p, 2, 3)) {
      std::vector<ClassLabel> img;
      for (const auto& l : tup.labels) img.push_back(cat.tau_image(g, p, l));
      CanonicalTuple timg = cat.canonical_tuple(g, p, std::move(img));
      if (eng.decide_tables(tup).verdict != eng.decide_tables(timg).verdict)
        fail_msg("tau invariance broken at " + std::string(group_name(g)) + " (" +
                 format_tuple(tup.labels) + ")");
    }
  }
  ++rep.checks_run;

  // (f) stored tables: pairwise disjoint and canonical at every admitted prime
  for (int p : primes) {
    std::map<GroupType, std::set<std::string>> seenA, seenB;
    for (const auto& row : cat.table_rows()) {
      if (!row.cond.admits(p, row.group)) continue;
      if (row.labels.size() == 2 && p == 2) continue;
      CanonicalTuple canon = cat.canonical_tuple(row.group, p, row.labels);
      const std::string key = format_tuple(canon.labels);
      auto& mine = row.table == 'A' ? seenA[row.group] : seenB[row.group];
      auto& other = row.table == 'A' ? seenB[row.group] : seenA[row.group];
      if (!mine.insert(key).second)
        fail_msg("duplicate canonical table row at p=" + std::to_string(p) + ": " + key);
      if (other.count(key))
        fail_msg("tables A and B overlap at p=" + std::to_string(p) + ": " + key);
    }
  }
  ++rep.checks_run;

  // (g) fibre identities at every admitted representative prime
  for (const auto& inst : cat.fibre_instances()) {
    for (int p : primes) {
      if (!inst.cond.admits(p, inst.group)) continue;
      FibreCheck chk = check_fibre_instance(cat, inst, p);
      if (!chk.ok)
        fail_msg("fibre residual " + std::to_string(chk.residual) + " for " +
                 std::string(group_name(inst.group)) + "/" + inst.M + " (" +
                 format_tuple(inst.x_labels) + ") at p=" + std::to_string(p));
    }
  }
  ++rep.checks_run;

  // (h) fusion fixture rows and the worked parabolic character fixture
  for (const auto& b : cat.b4_fusion()) {
    const MaxSubgroupRecord* sub = cat.find_subgroup(b.group, b.subgroup);
    if (!sub || !sub->dim_omega) {
      fail_msg("fusion fixture subgroup missing dim omega");
      continue;
    }
    try {
      (void)fixed_point_dim(*sub->dim_omega, cat.class_dim(b.group, b.g_class, b.p), b.dim_h);
    } catch (const Error& e) {
      fail_msg("fusion fixture row " + b.h_class + ": " + e.what());
    }
  }
  {
    const int dim_fix = std::max(poly_degree(kChi1), poly_degree(kChi2));
    if (dim_fix != 4) fail_msg("parabolic fixture: character degree is not 4");
    const AlphaEntry* a = cat.find_alpha(GroupType::F4, "P1", parse_label("B2"));
    if (!a || !(a->base == Rat(4, 15)))
      fail_msg("parabolic fixture: alpha(F4,P1,B2) is not 4/15");
  }
  ++rep.checks_run;

  // alpha-table sanity: evaluated bounds stay inside [0,1]
  for (const auto& a : cat.alpha_entries())
    for (int p : primes) {
      Rat v = a.value(p);
      if (v < Rat(0) || v > Rat(1))
        fail_msg("alpha out of range: " + a.subgroup + "/" + format_label(a.cls));
    }
  ++rep.checks_run;

  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace topgen
