// topgen: exact decision engine for topological generation of exceptional
// algebraic groups by tuples of order-p unipotent classes.
//
// Exit codes: 0 decided, 2 invalid input, 3 data gap, 4 audit failure,
//             5 route disagreement.
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "topgen/audit.hpp"
#include "topgen/engine.hpp"
#include "topgen/errors.hpp"
#include "topgen/fibre.hpp"

using njson = nlohmann::ordered_json;
using namespace topgen;

namespace {

constexpr const char* kSchemaVersion = "1";

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::MissingData:
    case Errc::MissingPosetData:
    case Errc::MissingBound:
    case Errc::MissingTauData:
      return 3;
    case Errc::RouteDisagreement:
      return 5;
    default:
      return 2;
  }
}

njson decision_json(GroupType g, int p, const std::vector<ClassLabel>& input,
                    const CanonicalTuple& tuple, const Decision& d) {
  njson j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = group_name(g);
  j["p"] = p;
  njson cls = njson::array();
  for (const auto& l : input) cls.push_back(format_label(l));
  j["classes"] = cls;
  njson canon = njson::array();
  for (const auto& l : tuple.labels) canon.push_back(format_label(l));
  j["canonical"] = canon;
  j["verdict"] = d.verdict == Verdict::Empty ? "empty" : "nonempty";
  j["route"] = route_name(d.route);
  njson ev;
  ev["summary"] = d.evidence;
  if (d.margin) ev["inequality_margin"] = *d.margin;
  njson routes = njson::array();
  for (const auto& r : d.routes) {
    njson rr;
    rr["route"] = route_name(r.route);
    rr["verdict"] = r.verdict ? (*r.verdict == Verdict::Empty ? "empty" : "nonempty") : "gap";
    rr["evidence"] = r.verdict ? r.evidence : r.gap;
    routes.push_back(rr);
  }
  ev["routes"] = routes;
  j["evidence"] = ev;
  j["warnings"] = d.warnings;
  return j;
}

void print_ledger(std::ostream& os, const SigmaLedger& led) {
  os << "  H = " << led.subgroup << ": Sigma = " << led.total.str();
  if (led.missing) os << " (+" << led.missing << " unbounded terms)";
  os << "  [threshold " << led.threshold.str() << "]\n";
  for (const auto& term : led.terms) {
    os << "      " << format_label(term.cls) << ": "
       << (term.alpha ? term.alpha->str() : std::string("-")) << "  (" << term.source << ")\n";
  }
}

struct Common {
  std::string data_dir;
  std::string format = "text";
  bool extended = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact decision engine for topological generation by unipotent classes"};
  app.require_subcommand(1);

  Common common;
  app.add_option("--data", common.data_dir, "dataset directory (default: bundled, or $TOPGEN_DATA)");
  app.add_option("--format", common.format, "output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--extended", common.extended,
               "also decide the recorded order-4 pairs at p=2 and good-characteristic rows");

  std::string group_s, classes_s, subgroup_s, leq_a, leq_b, which = "A";
  int prime = 0;
  bool fast = false;
  std::string route_s = "all";

  auto* cmd_decide = app.add_subcommand("decide", "decide whether the tuple can generate");
  cmd_decide->add_option("-g,--group", group_s, "group: G2 F4 E6 E7 E8")->required();
  cmd_decide->add_option("-p,--prime", prime, "characteristic")->required();
  cmd_decide->add_option("-c,--classes", classes_s, "comma-separated class labels")->required();
  cmd_decide->add_option("--route", route_s, "route: all|tables|inequality|closure")
      ->check(CLI::IsMember({"all", "tables", "inequality", "closure"}));

  auto* cmd_explain = app.add_subcommand("explain", "decide and print the full bound ledger");
  cmd_explain->add_option("-g,--group", group_s)->required();
  cmd_explain->add_option("-p,--prime", prime)->required();
  cmd_explain->add_option("-c,--classes", classes_s)->required();

  auto* cmd_closure = app.add_subcommand("closure", "closure-order queries");
  cmd_closure->add_option("-g,--group", group_s)->required();
  cmd_closure->add_option("-p,--prime", prime)->required();
  cmd_closure->add_option("--leq", leq_a, "smaller class")->required();
  cmd_closure->add_option("larger", leq_b, "larger class")->required();

  auto* cmd_alpha = app.add_subcommand("alpha", "look up a fixed-point-ratio bound");
  cmd_alpha->add_option("-g,--group", group_s)->required();
  cmd_alpha->add_option("-H,--subgroup", subgroup_s)->required();
  cmd_alpha->add_option("-c,--class", classes_s)->required();
  cmd_alpha->add_option("-p,--prime", prime)->required();

  auto* cmd_tables = app.add_subcommand("tables", "dump the classification tables");
  cmd_tables->add_option("--which", which, "A|B|clos")->check(CLI::IsMember({"A", "B", "clos"}));

  auto* cmd_audit = app.add_subcommand("audit", "run the full dataset audit");
  cmd_audit->add_flag("--fast", fast, "restrict to a smaller prime set");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string dir = common.data_dir.empty() ? default_data_dir() : common.data_dir;
    Catalog cat = Catalog::load(dir);
    Engine eng(cat);

    if (cmd_decide->parsed() || cmd_explain->parsed()) {
      GroupType g = group_from_name(group_s);
      std::vector<ClassLabel> input = parse_tuple(classes_s);
      CanonicalTuple tuple = eng.validate_input(g, prime, input, common.extended);

      Decision d;
      bool extended_hit = false;
      if (common.extended) {
        std::vector<ClassLabel> sorted = input;
        sort_labels(sorted);
        bool all_order_p = true;
        for (const auto& l : sorted)
          if (!cat.has_order_p(g, l, prime)) all_order_p = false;
        if (!all_order_p) {
          auto ext = eng.decide_extended(g, prime, sorted);
          if (ext) {
            d = *ext;
            extended_hit = true;
          }
        }
      }
      if (!extended_hit) {
        if (route_s == "tables") d = eng.decide_tables(tuple);
        else if (route_s == "inequality") d = eng.decide_inequality(tuple);
        else if (route_s == "closure") d = eng.decide_closure(tuple);
        else d = eng.decide(tuple);
      }

      if (common.format == "json") {
        std::cout << decision_json(g, prime, input, tuple, d).dump(2) << "\n";
      } else {
        std::cout << verdict_name(d.verdict) << " (" << d.evidence << ")\n";
        for (const auto& r : d.routes) {
          std::cout << "  " << route_name(r.route) << ": "
                    << (r.verdict ? verdict_name(*r.verdict) : "gap") << " — "
                    << (r.verdict ? r.evidence : r.gap) << "\n";
        }
      }

      if (cmd_explain->parsed()) {
        const Bounds& bounds = eng.bounds();
        std::cout << "canonical tuple: (" << format_tuple(tuple.labels) << ")\n";
        try {
          CriterionOutcome weyl = bounds.weyl_inequality_test(tuple);
          std::cout << "fixed-space inequality: " << verdict3_name(weyl.verdict) << " — "
                    << weyl.evidence << "\n";
        } catch (const Error& e) {
          std::cout << "fixed-space inequality: no data (" << e.what() << ")\n";
        }
        if (tuple.size() == 2) {
          try {
            CriterionOutcome lie = bounds.lie_algebra_test(tuple);
            std::cout << "Lie-algebra criterion: " << verdict3_name(lie.verdict) << " — "
                      << lie.evidence << "\n";
          } catch (const Error& e) {
            std::cout << "Lie-algebra criterion: no data (" << e.what() << ")\n";
          }
        }
        CriterionOutcome cert = bounds.generation_certificate(tuple);
        std::cout << "generation certificate: " << verdict3_name(cert.verdict) << " — "
                  << cert.evidence << "\n";
        for (const auto& led : cert.ledgers) print_ledger(std::cout, led);
      }
      return 0;
    }

    if (cmd_closure->parsed()) {
      GroupType g = group_from_name(group_s);
      if (!is_prime(prime)) fail(Errc::NotPrime, std::to_string(prime) + " is not a prime");
      ClassLabel a = parse_label(leq_a), b = parse_label(leq_b);
      Leq r = eng.poset().leq(g, a, b, prime);
      if (r == Leq::Unknown)
        fail(Errc::MissingPosetData, "closure data does not cover this pair");
      if (common.format == "json") {
        njson j;
        j["schema_version"] = kSchemaVersion;
        j["group"] = group_name(g);
        j["p"] = prime;
        j["smaller"] = format_label(a);
        j["larger"] = format_label(b);
        j["leq"] = r == Leq::True;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << format_label(a) << (r == Leq::True ? " <= " : " !<= ") << format_label(b)
                  << " at p=" << prime << "\n";
      }
      return 0;
    }

    if (cmd_alpha->parsed()) {
      GroupType g = group_from_name(group_s);
      if (!is_prime(prime)) fail(Errc::NotPrime, std::to_string(prime) + " is not a prime");
      ClassLabel cls = parse_label(classes_s);
      AlphaValue v = eng.bounds().alpha_bound(g, subgroup_s, cls, prime);
      if (common.format == "json") {
        njson j;
        j["schema_version"] = kSchemaVersion;
        j["group"] = group_name(g);
        j["subgroup"] = subgroup_s;
        j["class"] = format_label(cls);
        j["p"] = prime;
        j["alpha"] = v.value.str();
        j["exact"] = v.exact;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << v.value.str() << (v.exact ? " (exact)" : " (upper bound)") << "\n";
      }
      return 0;
    }

    if (cmd_tables->parsed()) {
      if (which == "clos") {
        for (const auto& row : cat.closure_generators())
          std::cout << group_name(row.group) << "\t" << row.cond.str() << "\t("
                    << format_tuple(row.labels) << ")\n";
      } else {
        for (const auto& row : cat.table_rows())
          if (row.table == which[0])
            std::cout << group_name(row.group) << "\t" << row.cond.str() << "\t("
                      << format_tuple(row.labels) << ")\t#" << row.id << "\n";
      }
      return 0;
    }

    if (cmd_audit->parsed()) {
      AuditOptions opt;
      opt.fast = fast;
      AuditReport rep = run_audit(eng, opt);
      std::cout << "audit: " << rep.domain_size << " tuples enumerated, " << rep.checks_run
                << " check groups, " << rep.gaps.size() << " data gaps, " << rep.failures.size()
                << " failures, " << rep.elapsed_seconds << "s\n";
      for (const auto& g : rep.gaps) std::cout << "  gap: " << g << "\n";
      for (const auto& f : rep.failures) std::cout << "  FAIL: " << f << "\n";
      if (!rep.ok()) return 4;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
