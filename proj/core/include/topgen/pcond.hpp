#ifndef TOPGEN_PCOND_HPP
#define TOPGEN_PCOND_HPP

#include <string>
#include <vector>

namespace topgen {

enum class GroupType { G2, F4, E6, E7, E8 };

const char* group_name(GroupType g);
GroupType group_from_name(const std::string& s);

bool is_prime(int p);

// Condition on the characteristic.  `Good` is group-relative: the good primes
// are p >= 5, except p >= 7 for E8.  `Never` marks classes with no order-p
// elements at any p (they exist only through the --extended route).
struct PCond {
  enum class Kind { All, AtLeast, Exactly, NotEq, InSet, Good, Never };
  Kind kind = Kind::All;
  int n = 0;
  std::vector<int> set;

  bool admits(int p, GroupType g) const;
  std::string str() const;

  static PCond all() { return PCond{}; }
  static PCond at_least(int m) { return PCond{Kind::AtLeast, m, {}}; }
  static PCond exactly(int q) { return PCond{Kind::Exactly, q, {}}; }
  static PCond never() { return PCond{Kind::Never, 0, {}}; }
  static PCond parse(const std::string& s);
};

// First-match regime map, e.g. "p=2:16|p>=3:22".
struct RegimeMap {
  std::vector<std::pair<PCond, int>> entries;
  bool empty() const { return entries.empty(); }
  // returns nullptr-like miss via has/get pair
  bool has(int p, GroupType g) const;
  int get(int p, GroupType g) const;  // throws MissingData on miss
  static RegimeMap parse(const std::string& s);  // "-" yields empty map
  std::string str() const;
};

}  // namespace topgen

#endif
