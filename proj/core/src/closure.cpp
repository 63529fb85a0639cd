#include "topgen/closure.hpp"

#include <algorithm>
#include <numeric>

#include "topgen/errors.hpp"

namespace topgen {

ClosurePoset::ClosurePoset(const Catalog& cat) : cat_(&cat) {
  for (GroupType g : {GroupType::G2, GroupType::F4, GroupType::E6, GroupType::E7, GroupType::E8}) {
    auto& idx = index_[g];
    int i = 0;
    for (const auto& rec : cat.classes(g)) idx[format_label(rec.label)] = i++;
  }
}

int ClosurePoset::index_of(GroupType g, const ClassLabel& l) const {
  const auto& idx = index_.at(g);
  auto it = idx.find(format_label(l));
  if (it == idx.end())
    fail(Errc::UnknownClass, format_label(l) + " is not a cataloged class of " + group_name(g));
  return it->second;
}

const ClosurePoset::Graph& ClosurePoset::graph(GroupType g, int p) const {
  auto key = std::make_pair(g, p);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  const auto& classes = cat_->classes(g);
  const int n = static_cast<int>(classes.size());
  Graph gr;
  gr.succ.resize(n);
  for (const auto& e : cat_->closure_edges()) {
    if (e.group != g || !e.cond.admits(p, g)) continue;
    gr.succ[index_of(g, e.smaller)].push_back(index_of(g, e.larger));
  }
  // reachability by DFS from each node; the graphs are tiny
  gr.reach.assign(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack{s};
    gr.reach[s][s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : gr.succ[x])
        if (!gr.reach[s][y]) {
          gr.reach[s][y] = true;
          stack.push_back(y);
        }
    }
  }
  return cache_.emplace(key, std::move(gr)).first->second;
}

Leq ClosurePoset::leq_idx(GroupType g, const Graph& gr, int ia, int ib, int p) const {
  if (ia == ib) return Leq::True;
  const auto& classes = cat_->classes(g);
  const ClassRecord& a = classes[ia];
  const ClassRecord& b = classes[ib];
  // strict containment forces a strict dimension increase
  if (!a.dim_class.empty() && !b.dim_class.empty() && a.dim_class.has(p, g) && b.dim_class.has(p, g) &&
      a.dim_class.get(p, g) >= b.dim_class.get(p, g))
    return Leq::False;
  if (gr.reach[ia][ib]) return Leq::True;
  if (!a.closure_cover || !b.closure_cover) return Leq::Unknown;
  return Leq::False;
}

Leq ClosurePoset::leq(GroupType g, const ClassLabel& a, const ClassLabel& b, int p) const {
  const Graph& gr = graph(g, p);
  return leq_idx(g, gr, index_of(g, a), index_of(g, b), p);
}

Leq ClosurePoset::product_dominated(GroupType g, int p, const std::vector<ClassLabel>& X,
                                    const std::vector<ClassLabel>& Y) const {
  if (X.size() != Y.size())
    fail(Errc::SizeMismatch, "product_dominated requires tuples of equal size");
  const Graph& gr = graph(g, p);
  const int t = static_cast<int>(X.size());

  auto try_tuple = [&](const std::vector<ClassLabel>& xs) {
    std::vector<int> xi(t), yi(t);
    for (int i = 0; i < t; ++i) {
      xi[i] = index_of(g, xs[i]);
      yi[i] = index_of(g, Y[i]);
    }
    std::vector<int> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    bool unknown_seen = false;
    do {
      bool all_true = true, blocked = false;
      for (int i = 0; i < t && !blocked; ++i) {
        Leq r = leq_idx(g, gr, xi[i], yi[perm[i]], p);
        if (r == Leq::False) {
          blocked = true;
          all_true = false;
        } else if (r == Leq::Unknown) {
          all_true = false;
        }
      }
      if (all_true) return Leq::True;
      if (!blocked) unknown_seen = true;  // only missing data stood in the way
    } while (std::next_permutation(perm.begin(), perm.end()));
    return unknown_seen ? Leq::Unknown : Leq::False;
  };

  Leq direct = try_tuple(X);
  if (direct == Leq::True) return Leq::True;
  Leq via_tau = Leq::False;
  if (cat_->has_tau(g, p)) {
    bool have_all = true;
    std::vector<ClassLabel> img;
    img.reserve(X.size());
    for (const auto& l : X) {
      try {
        img.push_back(cat_->tau_image(g, p, l));
      } catch (const Error& e) {
        if (e.code() != Errc::MissingTauData) throw;
        have_all = false;
        break;
      }
    }
    if (have_all) via_tau = try_tuple(img);
    else via_tau = Leq::Unknown;
  }
  if (via_tau == Leq::True) return Leq::True;
  if (direct == Leq::Unknown || via_tau == Leq::Unknown) return Leq::Unknown;
  return Leq::False;
}

std::vector<ClassLabel> ClosurePoset::down_set(GroupType g, const ClassLabel& b, int p) const {
  std::vector<ClassLabel> out;
  for (const auto& rec : cat_->classes(g)) {
    if (!rec.exists.admits(p, g)) continue;
    if (leq(g, rec.label, b, p) == Leq::True) out.push_back(rec.label);
  }
  return out;
}

}  // namespace topgen
