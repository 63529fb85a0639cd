#include "topgen/rational.hpp"

namespace topgen {

Rat Rat::parse(const std::string& s) {
  if (s.empty()) fail(Errc::ParseError, "empty rational");
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const Error&) {
    throw;
  } catch (...) {
    fail(Errc::ParseError, "bad rational '" + s + "'");
  }
}

}  // namespace topgen
