#include "leflab/rational.hpp"

#include <stdexcept>

namespace leflab {

Rational rat_parse(const std::string& s)
{
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // mpq_class accepts "p/q" directly but not surrounding whitespace; validate
  // the character set so garbage does not silently parse as 0.
  std::size_t slashes = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      ++slashes;
      continue;
    }
    if (c == '-' || c == '+') {
      if (i != 0 && s[i - 1] != '/') throw std::invalid_argument("bad rational literal: " + s);
      continue;
    }
    if (c < '0' || c > '9') throw std::invalid_argument("bad rational literal: " + s);
  }
  if (slashes > 1) throw std::invalid_argument("bad rational literal: " + s);
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r)
{
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace leflab
