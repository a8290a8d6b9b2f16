#ifndef LEFLAB_RATIONAL_HPP
#define LEFLAB_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace leflab {

// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
// positive denominator.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1)
{
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational rat_parse(const std::string& s);

// Renders as "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rational& r);

using Vec = std::vector<Rational>;

}  // namespace leflab

#endif
