#pragma once

#include <string>

#include "plord/rational.hpp"

namespace plord {

// Three-valued comparison outcome. Zero is reserved for exact equality
// (of functions, of germs, of group elements) and never encodes "unknown".
enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline Sign flip(Sign s) {
  return static_cast<Sign>(-static_cast<int>(s));
}

inline Sign sign_of_rat(const Rat& r) {
  int s = sgn(r);
  return s > 0 ? Sign::Positive : (s < 0 ? Sign::Negative : Sign::Zero);
}

inline std::string sign_to_string(Sign s) {
  switch (s) {
    case Sign::Positive: return "+";
    case Sign::Negative: return "-";
    default: return "0";
  }
}

// Parses "+", "-" (or "0" when allow_zero). Throws std::invalid_argument.
Sign sign_from_string(const std::string& s, bool allow_zero = false);

}  // namespace plord
