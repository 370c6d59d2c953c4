#include "plord/rational.hpp"

#include <cctype>

#include "plord/error.hpp"
#include "plord/sign.hpp"

namespace plord {

Rat rat_from_string(const std::string& s) {
  auto fail = [&]() -> void {
    throw Error(ErrorCode::ParseError, "malformed rational '" + s + "'");
  };
  size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) fail();
  if (i < s.size()) {
    if (s[i] != '/') fail();
    ++i;
    size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != s.size()) fail();
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) fail();
  if (r.get_den() == 0)
    throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Sign sign_from_string(const std::string& s, bool allow_zero) {
  if (s == "+") return Sign::Positive;
  if (s == "-") return Sign::Negative;
  if (allow_zero && s == "0") return Sign::Zero;
  throw Error(ErrorCode::ParseError, "malformed sign '" + s + "'");
}

std::string error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidHomeo: return "InvalidHomeo";
    case ErrorCode::InvalidBump: return "InvalidBump";
    case ErrorCode::InvalidIntervals: return "InvalidIntervals";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::NotAPlusPart: return "NotAPlusPart";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::NotJointlyPositivizable: return "NotJointlyPositivizable";
    case ErrorCode::Undecided: return "Undecided";
    case ErrorCode::BallTooSmall: return "BallTooSmall";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "UnknownError";
}

}  // namespace plord
