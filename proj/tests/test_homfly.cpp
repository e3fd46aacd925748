#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "braidlab/cabling.hpp"
#include "braidlab/homfly.hpp"
#include "braidlab/moves.hpp"

using namespace braidlab;

namespace {

HomflyPoly from_triples(std::vector<std::array<long long, 3>> t) {
  HomflyPoly p;
  for (auto& [ae, ze, c] : t)
    p.add_term(static_cast<int>(ae), static_cast<int>(ze), c);
  return p;
}

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1), sgn(0, 1);
  BraidWord w;
  w.strands = n;
  for (int i = 0; i < len; ++i)
    w.letters.push_back(gen(rng) * (sgn(rng) ? 1 : -1));
  return w;
}

}  // namespace

TEST_CASE("normalization and unlinks") {
  CHECK(homfly(BraidWord{1, {}}) == HomflyPoly::one());
  // trivial 2-braid: (a - a^-1) z^-1
  CHECK(homfly(BraidWord{2, {}}) ==
        from_triples({{1, -1, 1}, {-1, -1, -1}}));
  // positive kink is still the unknot
  CHECK(homfly(BraidWord{2, {1}}) == HomflyPoly::one());
  CHECK(homfly(BraidWord{2, {-1}}) == HomflyPoly::one());
  // trivial 3-braid: delta^2
  CHECK(homfly(BraidWord{3, {}}) ==
        from_triples({{2, -2, 1}, {0, -2, -2}, {-2, -2, 1}}));
}

TEST_CASE("hand-computed golden values") {
  // positive Hopf link: P = a^-1 z + (a^-1 - a^-3) z^-1
  CHECK(homfly(BraidWord{2, {1, 1}}) ==
        from_triples({{-1, 1, 1}, {-1, -1, 1}, {-3, -1, -1}}));
  // right trefoil: P = 2a^-2 - a^-4 + a^-2 z^2
  HomflyPoly tref = from_triples({{-2, 0, 2}, {-4, 0, -1}, {-2, 2, 1}});
  CHECK(homfly(BraidWord{2, {1, 1, 1}}) == tref);
  // left trefoil: mirror a -> -a^-1, z -> z
  CHECK(homfly(BraidWord{2, {-1, -1, -1}}) ==
        from_triples({{2, 0, 2}, {4, 0, -1}, {2, 2, 1}}));
  // T(2,5): a^-4 z^4 + 4 a^-4 z^2 - a^-6 z^2 + 3 a^-4 - 2 a^-6
  CHECK(homfly(BraidWord{2, {1, 1, 1, 1, 1}}) ==
        from_triples({{-4, 4, 1},
                      {-4, 2, 4},
                      {-6, 2, -1},
                      {-4, 0, 3},
                      {-6, 0, -2}}));
}

TEST_CASE("z-parity matches component parity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    BraidWord w = random_word(rng, 4, 8);
    int m = component_count(w);
    for (const auto& [k, c] : homfly(w).terms)
      CHECK(((k.second % 2) + 2) % 2 == (m - 1) % 2);
  }
}

TEST_CASE("Markov invariance at desk scale") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    BraidWord w = random_word(rng, 4, 9);
    HomflyPoly p = homfly(w);
    BraidWord g = random_word(rng, 4, 4);
    CHECK(homfly(conjugate(w, g.letters)) == p);
    CHECK(homfly(stabilize(w, +1)) == p);
    CHECK(homfly(stabilize(w, -1)) == p);
  }
}

TEST_CASE("flype preserves HOMFLY") {
  BraidWord w{3, {1, 1, 1, 2, 2, 1, 1, -2}};
  CHECK(homfly(flype3(w, -1)) == homfly(w));
  BraidWord v{3, {1, 1, -2, -2, -2, 1, 1, 1, 2}};
  CHECK(homfly(flype3(v, +1)) == homfly(v));
}

TEST_CASE("MFW bound certifies torus braid index") {
  CHECK(mfw_bound(HomflyPoly::one()) == 1);
  CHECK(mfw_bound(homfly(BraidWord{2, {1, 1, 1}})) == 2);
  struct PQ {
    int p, q;
  };
  for (PQ pq : {PQ{2, 3}, PQ{2, 5}, PQ{2, 7}, PQ{3, 4}, PQ{3, 5}}) {
    BraidWord t = torus_braid(1, pq.p, pq.q);
    CHECK(mfw_bound(homfly(t)) == pq.p);
    CHECK(mfw_bound(homfly(t)) <= t.strands);
  }
  CHECK_THROWS_AS(mfw_bound(HomflyPoly{}), BadWord);
}

TEST_CASE("budget guard") {
  BraidWord big{2, std::vector<int>(30, 1)};
  CHECK_THROWS_AS(homfly(big), BadWord);
  CHECK_NOTHROW(homfly(big, 40));
}
