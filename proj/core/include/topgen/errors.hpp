#ifndef TOPGEN_ERRORS_HPP
#define TOPGEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace topgen {

enum class Errc {
  SyntaxError,
  UnknownFamily,
  UnknownGroup,
  UnknownClass,
  UnknownSubgroup,
  MissingTauData,
  MissingData,
  MissingPosetData,
  MissingBound,
  SizeMismatch,
  ParseError,
  DanglingReference,
  DuplicateRow,
  NegativeDimension,
  NotOrderP,
  TwoInvolutionsUnsupported,
  TupleTooSmall,
  NotPrime,
  NoGraphAutomorphism,
  RouteDisagreement,
  BadUsage,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace topgen

#endif
