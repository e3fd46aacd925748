#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "braidlab/braid.hpp"

using namespace braidlab;

TEST_CASE("parse and print round-trip") {
  BraidWord w = parse_word("1 2 -1 2", 3);
  CHECK(w.strands == 3);
  CHECK(w.letters == std::vector<int>{1, 2, -1, 2});
  CHECK(print_word(w) == "1 2 -1 2");
  CHECK(print_word(parse_word("", 2)) == "");
}

TEST_CASE("parse rejects bad tokens with position info") {
  CHECK_THROWS_AS(parse_word("1 0 2", 3), BadWord);
  CHECK_THROWS_AS(parse_word("1 3", 3), BadWord);   // out of range
  CHECK_THROWS_AS(parse_word("1 x", 3), BadWord);
  CHECK_THROWS_AS(parse_word("1", 1), BadWord);
  try {
    parse_word("1 -3 2", 3);
    CHECK(false);
  } catch (const BadWord& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);  // token #2
  }
}

TEST_CASE("permutation and components") {
  BraidWord tref{2, {1, 1, 1}};
  CHECK(permutation(tref) == Perm{1, 0});
  CHECK(component_count(tref) == 1);
  BraidWord hopf{2, {1, 1}};
  CHECK(component_count(hopf) == 2);
  BraidWord id3{3, {}};
  CHECK(permutation(id3) == Perm{0, 1, 2});
  CHECK(component_count(id3) == 3);
}

TEST_CASE("bennequin number of knots") {
  CHECK(bennequin(BraidWord{2, {1, 1, 1}}) == 1);     // trefoil
  CHECK(bennequin(BraidWord{2, {-1, -1, -1}}) == -5); // mirror trefoil
  CHECK(bennequin(BraidWord{2, {1}}) == -1);          // unknot
  CHECK(bennequin(BraidWord{3, {1, 2}}) == -1);       // unknot, 3 strands
  CHECK(bennequin(BraidWord{2, {1, 1, 1, 1, 1}}) == 3); // T(2,5)
  CHECK_THROWS_AS(bennequin(BraidWord{2, {1, 1}}), BadWord); // 2 components
}

TEST_CASE("link bennequin per component") {
  // trivial m-braid: every component has beta = -1
  for (int m = 1; m <= 4; ++m) {
    LinkBennequin lb = link_bennequin(BraidWord{m, {}});
    REQUIRE(static_cast<int>(lb.twice.size()) == m);
    for (int v : lb.twice) CHECK(v == -2);
  }
  // sigma_1^2: Hopf link, both components get 0
  LinkBennequin hopf = link_bennequin(BraidWord{2, {1, 1}});
  CHECK(hopf.twice == std::vector<int>{0, 0});
  // negative Hopf link: -2 each
  LinkBennequin nh = link_bennequin(BraidWord{2, {-1, -1}});
  CHECK(nh.twice == std::vector<int>{-4, -4});
  // knot case degenerates to 2*bennequin
  LinkBennequin k = link_bennequin(BraidWord{2, {1, 1, 1}});
  CHECK(k.twice == std::vector<int>{2});
}

TEST_CASE("free reduction") {
  BraidWord w{3, {1, -1, 2, 2, -2, -2}};
  CHECK(free_reduce(w).letters.empty());
  BraidWord c{3, {1, 2, -1}};
  CHECK(free_cyclic_reduce(c).letters == std::vector<int>{2});
  CHECK(free_cyclic_reduce(BraidWord{3, {-2, 1, 2}}).letters ==
        std::vector<int>{1});
}

TEST_CASE("conjugation reduces freely") {
  BraidWord w{3, {1, 1}};
  BraidWord g = conjugate(w, {2, 1});
  // free cyclic reduction collapses the conjugator sandwich
  CHECK(g.letters == std::vector<int>{1, 1});
  CHECK(exponent_sum(g) == exponent_sum(w));
  CHECK(conjugate(w, {1}).letters == w.letters);
}

TEST_CASE("validate rejects malformed words") {
  CHECK_THROWS_AS(validate(BraidWord{1, {1}}), BadWord);
  CHECK_THROWS_AS(validate(BraidWord{3, {3}}), BadWord);
  CHECK_THROWS_AS(validate(BraidWord{3, {0}}), BadWord);
  CHECK_NOTHROW(validate(BraidWord{3, {1, -2}}));
}
