#include "topgen/pcond.hpp"

#include <algorithm>

#include "topgen/errors.hpp"

namespace topgen {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::UnknownGroup: return "UnknownGroup";
    case Errc::UnknownClass: return "UnknownClass";
    case Errc::UnknownSubgroup: return "UnknownSubgroup";
    case Errc::MissingTauData: return "MissingTauData";
    case Errc::MissingData: return "MissingData";
    case Errc::MissingPosetData: return "MissingPosetData";
    case Errc::MissingBound: return "MissingBound";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::DanglingReference: return "DanglingReference";
    case Errc::DuplicateRow: return "DuplicateRow";
    case Errc::NegativeDimension: return "NegativeDimension";
    case Errc::NotOrderP: return "NotOrderP";
    case Errc::TwoInvolutionsUnsupported: return "TwoInvolutionsUnsupported";
    case Errc::TupleTooSmall: return "TupleTooSmall";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NoGraphAutomorphism: return "NoGraphAutomorphism";
    case Errc::RouteDisagreement: return "RouteDisagreement";
    case Errc::BadUsage: return "BadUsage";
  }
  return "Error";
}

const char* group_name(GroupType g) {
  switch (g) {
    case GroupType::G2: return "G2";
    case GroupType::F4: return "F4";
    case GroupType::E6: return "E6";
    case GroupType::E7: return "E7";
    case GroupType::E8: return "E8";
  }
  return "?";
}

GroupType group_from_name(const std::string& s) {
  if (s == "G2") return GroupType::G2;
  if (s == "F4") return GroupType::F4;
  if (s == "E6") return GroupType::E6;
  if (s == "E7") return GroupType::E7;
  if (s == "E8") return GroupType::E8;
  fail(Errc::UnknownGroup, "'" + s + "' is not one of G2,F4,E6,E7,E8");
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool PCond::admits(int p, GroupType g) const {
  switch (kind) {
    case Kind::All: return true;
    case Kind::AtLeast: return p >= n;
    case Kind::Exactly: return p == n;
    case Kind::NotEq: return p != n;
    case Kind::InSet: return std::find(set.begin(), set.end(), p) != set.end();
    case Kind::Good: return g == GroupType::E8 ? p >= 7 : p >= 5;
    case Kind::Never: return false;
  }
  return false;
}

std::string PCond::str() const {
  switch (kind) {
    case Kind::All: return "all";
    case Kind::AtLeast: return "p>=" + std::to_string(n);
    case Kind::Exactly: return "p=" + std::to_string(n);
    case Kind::NotEq: return "p!=" + std::to_string(n);
    case Kind::InSet: {
      std::string s = "p in {";
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(set[i]);
      }
      return s + "}";
    }
    case Kind::Good: return "good";
    case Kind::Never: return "never";
  }
  return "?";
}

PCond PCond::parse(const std::string& s) {
  if (s == "all") return PCond{};
  if (s == "good") return PCond{Kind::Good, 0, {}};
  if (s == "never") return PCond{Kind::Never, 0, {}};
  auto num = [&](std::size_t off) {
    try {
      return std::stoi(s.substr(off));
    } catch (...) {
      fail(Errc::ParseError, "bad p-condition '" + s + "'");
    }
  };
  if (s.rfind("p>=", 0) == 0) return PCond{Kind::AtLeast, num(3), {}};
  if (s.rfind("p!=", 0) == 0) return PCond{Kind::NotEq, num(3), {}};
  if (s.rfind("p in {", 0) == 0 && s.back() == '}') {
    PCond c{Kind::InSet, 0, {}};
    std::string body = s.substr(6, s.size() - 7);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      c.set.push_back(std::stoi(body.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    if (c.set.empty()) fail(Errc::ParseError, "empty p-set in '" + s + "'");
    return c;
  }
  if (s.rfind("p=", 0) == 0) return PCond{Kind::Exactly, num(2), {}};
  fail(Errc::ParseError, "bad p-condition '" + s + "'");
}

bool RegimeMap::has(int p, GroupType g) const {
  for (const auto& [c, v] : entries)
    if (c.admits(p, g)) return true;
  return false;
}

int RegimeMap::get(int p, GroupType g) const {
  for (const auto& [c, v] : entries)
    if (c.admits(p, g)) return v;
  fail(Errc::MissingData, "no regime entry at p=" + std::to_string(p));
}

RegimeMap RegimeMap::parse(const std::string& s) {
  RegimeMap m;
  if (s == "-" || s.empty()) return m;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t bar = s.find('|', pos);
    if (bar == std::string::npos) bar = s.size();
    std::string cell = s.substr(pos, bar - pos);
    std::size_t colon = cell.rfind(':');
    if (colon == std::string::npos) fail(Errc::ParseError, "bad regime cell '" + cell + "'");
    m.entries.emplace_back(PCond::parse(cell.substr(0, colon)), std::stoi(cell.substr(colon + 1)));
    pos = bar + 1;
  }
  return m;
}

std::string RegimeMap::str() const {
  if (entries.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += "|";
    out += entries[i].first.str() + ":" + std::to_string(entries[i].second);
  }
  return out;
}

}  // namespace topgen
