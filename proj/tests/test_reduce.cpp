#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "braidlab/braid.hpp"
#include "braidlab/cabling.hpp"
#include "braidlab/canonical.hpp"
#include "braidlab/moves.hpp"
#include "braidlab/reduce.hpp"

using namespace braidlab;

static long count_kind(const Transcript& t, MoveKind k, int sign) {
  long n = 0;
  for (const auto& r : t.records)
    if (r.kind == k && (sign == 0 || r.sign == sign)) ++n;
  return n;
}

TEST_CASE("sigma1 in B2 reduces to the trivial 1-braid") {
  ReduceResult r = reduce({2, {1}});
  CHECK(r.word.strands == 1);
  CHECK(r.word.letters.empty());
  CHECK(count_kind(r.transcript, MoveKind::destabilize, +1) == 1);
  CHECK(count_kind(r.transcript, MoveKind::destabilize, -1) == 0);
  CHECK(!r.budget_exhausted);
}

TEST_CASE("sigma1 sigma2^-1 in B3: one destab each sign, ledger -3 -> -1") {
  ReduceResult r = reduce({3, {1, -2}});
  CHECK(r.word.strands == 1);
  CHECK(r.word.letters.empty());
  CHECK(count_kind(r.transcript, MoveKind::destabilize, +1) == 1);
  CHECK(count_kind(r.transcript, MoveKind::destabilize, -1) == 1);
  std::vector<int> ledger = beta_ledger(r.transcript);
  CHECK(ledger.front() == -3);
  CHECK(ledger.back() == -1);
}

TEST_CASE("positive trefoil cable word is already minimal") {
  BraidWord w = iterated_word(parse_cable_spec("+(2,3)"));
  ReduceResult r = reduce(w);
  CHECK(r.word.strands == w.strands);
  CHECK(r.word.letters.size() == w.letters.size());
  CHECK(conjugate_closed(r.word, w, 4000).verdict == ConjVerdict::yes);
}

TEST_CASE("transcripts replay and end at the reported word") {
  for (BraidWord w : {BraidWord{4, {1, 2, 3, -3, -1}}, BraidWord{3, {2, 2, -1}},
                      BraidWord{5, {1, -2, 3, -4}}}) {
    ReduceResult r = reduce(w);
    CHECK(transcript_valid(r.transcript));
    CHECK(r.transcript.start == w);
    CHECK(r.transcript.end == r.word);
  }
}

TEST_CASE("sigma2 sigma1^-1 in B3 is unlink-reducible") {
  // closure is a single unknotted component, so the target is the
  // trivial 1-braid
  UnlinkResult u = is_unlink_reducible({3, {2, -1}});
  CHECK(u.reducible);
  CHECK(u.transcript.end.strands == 1);
  CHECK(u.transcript.end.letters.empty());
}

TEST_CASE("trivial m-braid is unlink-reducible with empty transcript") {
  UnlinkResult u = is_unlink_reducible({2, {}});
  CHECK(u.reducible);
  CHECK(u.transcript.records.empty());
}

TEST_CASE("hopf link is not unlink-reducible") {
  UnlinkResult u = is_unlink_reducible({2, {1, 1}});
  CHECK(!u.reducible);
}

TEST_CASE("random stabilized unknots reduce to the trivial 1-braid") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    BraidWord w{1, {}};
    int k = 1 + static_cast<int>(rng() % 5);
    for (int s = 0; s < k; ++s) {
      int sign = (rng() % 2) ? +1 : -1;
      w = apply_move(w, make_stabilize_record(sign));
      int conjs = static_cast<int>(rng() % 4);
      for (int c = 0; c < conjs && w.strands > 1; ++c) {
        int g = 1 + static_cast<int>(rng() % (w.strands - 1));
        if (rng() % 2) g = -g;
        w = conjugate(w, {g});
      }
    }
    CAPTURE(trial);
    ReduceResult r = reduce(w, 20000);
    CHECK(r.word.strands == 1);
    CHECK(r.word.letters.empty());
  }
}

TEST_CASE("reduce ledger matches destabilization signs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    BraidWord w{1, {}};
    for (int s = 0; s < 4; ++s) {
      w = apply_move(w, make_stabilize_record((rng() % 2) ? +1 : -1));
      w = conjugate(w, {1 + static_cast<int>(rng() % (w.strands - 1))});
    }
    ReduceResult r = reduce(w);
    std::vector<int> ledger = beta_ledger(r.transcript);
    long dm = count_kind(r.transcript, MoveKind::destabilize, -1);
    CHECK(ledger.back() - ledger.front() == 2 * dm);
  }
}

TEST_CASE("reorder: already ordered transcript is kept") {
  Transcript t;
  t.start = {3, {2, -1}};
  auto d1 = destabilize(t.start, +1);
  REQUIRE(d1);
  auto d2 = destabilize(d1->first, -1);
  REQUIRE(d2);
  t.records = d1->second.records;
  t.records.insert(t.records.end(), d2->second.records.begin(),
                   d2->second.records.end());
  t.end = d2->first;
  REQUIRE(transcript_valid(t));
  ReorderResult res = reorder_transcript(t);
  CHECK(res.reordered);
  CHECK(res.transcript.records.size() == t.records.size());
}

TEST_CASE("reorder: negative destab moved after positive one") {
  // doubly stabilized unknot, destabilized negative-first
  BraidWord w{1, {}};
  Transcript t;
  t.start = {3, {1, -2}};
  t.records.push_back(make_destabilize_record(-1));
  t.records.push_back(make_destabilize_record(+1));
  t.end = {1, {}};
  REQUIRE(transcript_valid(t));
  ReorderResult res = reorder_transcript(t, 20000);
  CHECK(res.reordered);
  // all negative destabs at the tail
  bool tail = true;
  for (auto it = res.transcript.records.rbegin();
       it != res.transcript.records.rend(); ++it) {
    bool neg = it->kind == MoveKind::destabilize && it->sign < 0;
    if (!neg) tail = false;
    CHECK((!neg || tail));
  }
  CHECK(count_kind(res.transcript, MoveKind::destabilize, -1) == 1);
  CHECK(conjugate_closed(res.transcript.end, t.end, 4000).verdict ==
        ConjVerdict::yes);
  // ledger: flat during transversal phase, +2 per negative destab
  std::vector<int> ledger = beta_ledger(res.transcript);
  size_t m = ledger.size() - 1;  // one negative destab at the very end
  for (size_t i = 1; i < m; ++i) CHECK(ledger[i] == ledger[0]);
  CHECK(ledger[m] == ledger[0] + 2);
}

TEST_CASE("reorder on random conjugated double stabilizations") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 8; ++trial) {
    // build start = conjugated (stab- then stab+) unknot word
    BraidWord w{1, {}};
    w = apply_move(w, make_stabilize_record(-1));
    w = apply_move(w, make_stabilize_record(+1));
    for (int c = 0; c < 3; ++c) {
      int g = 1 + static_cast<int>(rng() % (w.strands - 1));
      if (rng() % 2) g = -g;
      w = conjugate(w, {g});
    }
    // original transcript via reduce, but force a neg-first ordering when
    // possible by checking reduce output then reordering
    ReduceResult r = reduce(w);
    REQUIRE(r.word.strands == 1);
    CAPTURE(trial);
    ReorderResult res = reorder_transcript(r.transcript, 20000);
    CHECK(res.reordered);
    bool tail = true;
    for (auto it = res.transcript.records.rbegin();
         it != res.transcript.records.rend(); ++it) {
      bool neg = it->kind == MoveKind::destabilize && it->sign < 0;
      if (!neg) tail = false;
      CHECK((!neg || tail));
    }
    CHECK(conjugate_closed(res.transcript.end, r.transcript.end, 4000)
              .verdict == ConjVerdict::yes);
  }
}
