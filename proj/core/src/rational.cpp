#include "omegaq/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace omegaq {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!is_integer_token(num)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (slash == std::string::npos) {
    return Rat(Int(num));
  }
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(den) || Int(den) == 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  Rat q(Int(num), Int(den));
  q.canonicalize();
  return q;
}

bool fits_json_number(const Int& v) {
  if (v == 0) return true;
  return mpz_sizeinbase(v.get_mpz_t(), 2) <= 53;
}

}  // namespace omegaq
