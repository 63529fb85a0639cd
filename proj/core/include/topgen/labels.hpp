#ifndef TOPGEN_LABELS_HPP
#define TOPGEN_LABELS_HPP

#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace topgen {

// Unipotent class labels, ASCII grammar:
//   label := item+
//   item  := atom | '(' atom+ ')' deco
//   deco  := '^(' INT ')' | '_' INT
//   atom  := '~'? FAMILY INT ('^' INT)? ('(' 'a' INT ')')?
// Examples: A1, ~A2A1, A1^2, D4(a1)A1, (~A1)_2, (A1^3)^(1), (C3(a1))_2.
// A decoration always applies to the whole label.

struct LabelPart {
  char family = 'A';
  bool tilde = false;
  int rank = 0;
  int power = 1;
  int inner = 0;  // k of an inner mark (a_k); 0 = none

  auto key() const { return std::make_tuple(family, tilde, rank, power, inner); }
  friend bool operator==(const LabelPart& a, const LabelPart& b) { return a.key() == b.key(); }
  friend bool operator<(const LabelPart& a, const LabelPart& b) { return a.key() < b.key(); }
};

struct Decoration {
  int kind = 0;  // 0 none, 1 subscript, 2 superscript
  int value = 0;

  auto key() const { return std::make_tuple(kind, value); }
  friend bool operator==(const Decoration& a, const Decoration& b) { return a.key() == b.key(); }
  friend bool operator<(const Decoration& a, const Decoration& b) { return a.key() < b.key(); }
};

struct ClassLabel {
  std::vector<LabelPart> parts;
  Decoration deco;

  friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
    return a.parts == b.parts && a.deco == b.deco;
  }
  friend bool operator!=(const ClassLabel& a, const ClassLabel& b) { return !(a == b); }
  // total order: parts lexicographically by key, then decoration
  friend bool operator<(const ClassLabel& a, const ClassLabel& b);
};

ClassLabel parse_label(std::string_view text);
std::string format_label(const ClassLabel& label);

// sorts a tuple of labels by the total order
void sort_labels(std::vector<ClassLabel>& labels);
bool labels_less(const std::vector<ClassLabel>& a, const std::vector<ClassLabel>& b);

std::string format_tuple(const std::vector<ClassLabel>& labels);
std::vector<ClassLabel> parse_tuple(std::string_view text);  // comma separated

}  // namespace topgen

#endif
