#include "l1hom/rational.hpp"

#include <stdexcept>

namespace l1hom {

std::string rat_str(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  // mpq_class accepts optional sign, digits, optional "/digits"; reject
  // anything else up front so garbage like "1/2x" cannot slip through.
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw std::invalid_argument("malformed rational: " + s);
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational: " + s);
  Rat q(s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace l1hom
