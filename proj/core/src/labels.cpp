#include "topgen/labels.hpp"

#include <algorithm>
#include <cctype>

#include "topgen/errors.hpp"

namespace topgen {
namespace {

// rank alphabet of the label grammar: families and ranks that occur in the
// exceptional-group class catalogs
bool family_rank_ok(char f, int rank) {
  switch (f) {
    case 'A': return rank >= 1 && rank <= 8;
    case 'B': return rank >= 2 && rank <= 4;
    case 'C': return rank >= 3 && rank <= 4;
    case 'D': return rank >= 4 && rank <= 8;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return i < s.size() ? s[i] : '\0'; }
  char next() { return s[i++]; }
};

int read_int(Cursor& c) {
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    fail(Errc::SyntaxError, "expected integer at offset " + std::to_string(c.i) + " in label");
  int v = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.next() - '0');
    if (v > 1000) fail(Errc::SyntaxError, "integer too large in label");
  }
  return v;
}

LabelPart read_atom(Cursor& c) {
  LabelPart part;
  if (c.peek() == '~') {
    part.tilde = true;
    c.next();
  }
  char f = c.peek();
  if (f < 'A' || f > 'G') fail(Errc::SyntaxError, "expected family letter, got '" + std::string(1, f) + "'");
  part.family = c.next();
  part.rank = read_int(c);
  if (!family_rank_ok(part.family, part.rank))
    fail(Errc::UnknownFamily,
         std::string(1, part.family) + std::to_string(part.rank) + " is outside the catalog alphabet");
  if (c.peek() == '^' && c.i + 1 < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i + 1]))) {
    c.next();
    part.power = read_int(c);
    if (part.power < 1) fail(Errc::SyntaxError, "power must be positive");
  }
  if (c.peek() == '(' && c.i + 1 < c.s.size() && c.s[c.i + 1] == 'a') {
    c.next();
    c.next();  // 'a'
    part.inner = read_int(c);
    if (c.peek() != ')') fail(Errc::SyntaxError, "unterminated inner mark");
    c.next();
    if (part.inner < 1) fail(Errc::SyntaxError, "inner mark must be positive");
  }
  return part;
}

bool atom_starts(const Cursor& c) {
  char ch = c.peek();
  return ch == '~' || (ch >= 'A' && ch <= 'G');
}

std::string strip_ws(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

}  // namespace

ClassLabel parse_label(std::string_view text) {
  const std::string s = strip_ws(text);
  if (s.empty()) fail(Errc::SyntaxError, "empty label");
  Cursor c{s, 0};
  ClassLabel label;
  bool have_deco = false;
  while (!c.done()) {
    if (atom_starts(c)) {
      label.parts.push_back(read_atom(c));
      continue;
    }
    if (c.peek() == '(') {
      // parenthesized group with decoration
      c.next();
      std::size_t group_begin = label.parts.size();
      while (atom_starts(c)) label.parts.push_back(read_atom(c));
      if (label.parts.size() == group_begin) fail(Errc::SyntaxError, "empty parenthesized group");
      if (c.peek() != ')') fail(Errc::SyntaxError, "unterminated parenthesized group");
      c.next();
      Decoration d;
      if (c.peek() == '^') {
        c.next();
        if (c.peek() != '(') fail(Errc::SyntaxError, "superscript must be parenthesized");
        c.next();
        d = Decoration{2, read_int(c)};
        if (c.peek() != ')') fail(Errc::SyntaxError, "unterminated superscript");
        c.next();
      } else if (c.peek() == '_') {
        c.next();
        d = Decoration{1, read_int(c)};
      } else {
        fail(Errc::SyntaxError, "parenthesized group must carry a decoration");
      }
      if (have_deco) fail(Errc::SyntaxError, "label has more than one decoration");
      have_deco = true;
      label.deco = d;
      continue;
    }
    fail(Errc::SyntaxError, "unexpected character '" + std::string(1, c.peek()) + "' in label");
  }
  if (label.parts.empty()) fail(Errc::SyntaxError, "label has no parts");
  // a decoration applies to the whole label: reject e.g. "(A1)_2A1"
  if (have_deco && label.parts.size() > 0 && c.done()) {
    // decoration must have covered every part, i.e. nothing outside the group
    // was parsed before or after; verify by reformatting round trip below
  }
  if (have_deco) {
    const std::string canon = format_label(label);
    if (canon != s) fail(Errc::SyntaxError, "decoration must cover the whole label in '" + s + "'");
  }
  return label;
}

std::string format_label(const ClassLabel& label) {
  std::string body;
  for (const auto& p : label.parts) {
    if (p.tilde) body += '~';
    body += p.family;
    body += std::to_string(p.rank);
    if (p.power != 1) body += "^" + std::to_string(p.power);
    if (p.inner != 0) body += "(a" + std::to_string(p.inner) + ")";
  }
  if (label.deco.kind == 0) return body;
  if (label.deco.kind == 1) return "(" + body + ")_" + std::to_string(label.deco.value);
  return "(" + body + ")^(" + std::to_string(label.deco.value) + ")";
}

bool operator<(const ClassLabel& a, const ClassLabel& b) {
  const std::size_t n = std::min(a.parts.size(), b.parts.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.parts[i].key() != b.parts[i].key()) return a.parts[i].key() < b.parts[i].key();
  }
  if (a.parts.size() != b.parts.size()) return a.parts.size() < b.parts.size();
  return a.deco.key() < b.deco.key();
}

void sort_labels(std::vector<ClassLabel>& labels) { std::sort(labels.begin(), labels.end()); }

bool labels_less(const std::vector<ClassLabel>& a, const std::vector<ClassLabel>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string format_tuple(const std::vector<ClassLabel>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += format_label(labels[i]);
  }
  return out;
}

std::vector<ClassLabel> parse_tuple(std::string_view text) {
  std::vector<ClassLabel> out;
  std::size_t pos = 0;
  const std::string s(text);
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string cell = s.substr(pos, comma - pos);
    if (!strip_ws(cell).empty()) out.push_back(parse_label(cell));
    pos = comma + 1;
    if (comma == s.size()) break;
  }
  if (out.empty()) fail(Errc::SyntaxError, "empty class list");
  return out;
}

}  // namespace topgen
