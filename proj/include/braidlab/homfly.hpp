#pragma once
// HOMFLY polynomial of closed braids by skein recursion, convention
// a P(L+) - a^-1 P(L-) = z P(L0), P(unknot) = 1, and the
// Morton-Franks-Williams braid-index lower bound.
#include <array>
#include <map>
#include <vector>

#include "braidlab/braid.hpp"

namespace braidlab {

struct HomflyPoly {
  // (a exponent, z exponent) -> coefficient; zero coefficients never stored
  std::map<std::pair<int, int>, long long> terms;

  bool operator==(const HomflyPoly& o) const { return terms == o.terms; }
  bool is_zero() const { return terms.empty(); }

  void add_term(int ae, int ze, long long c);
  HomflyPoly& operator+=(const HomflyPoly& o);
  // multiply by c * a^ae * z^ze
  HomflyPoly shifted(int ae, int ze, long long c) const;
  HomflyPoly operator*(const HomflyPoly& o) const;

  static HomflyPoly one();
  // sorted [a_exp, z_exp, coeff] triples
  std::vector<std::array<long long, 3>> triples() const;
  std::string str() const;
};

HomflyPoly homfly(const BraidWord& w, int budget = 24);
int mfw_bound(const HomflyPoly& p);

}  // namespace braidlab
