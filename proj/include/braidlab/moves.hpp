#pragma once
// Move calculus: (de)stabilization, exchange moves, trivial-loop slides,
// 3-braid flypes; every move carries exact (dn, de, dbeta, transversal)
// metadata and is recorded in replayable transcripts.
#include <optional>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/canonical.hpp"

namespace braidlab {

enum class MoveKind {
  conjugate,
  stabilize,
  destabilize,
  exchange,
  flype,
  slide_step,
};

enum class SlideOp {
  commute,        // swap distant letters at pos, pos+1
  braid_relation, // sigma_i sigma_j sigma_i -> sigma_j sigma_i sigma_j at pos
  free_cancel,    // delete the canceling pair at pos, pos+1
  free_insert,    // insert (letter, -letter) at pos
};

struct MoveRecord {
  MoveKind kind;
  int sign = 0;                 // stabilize/destabilize/flype
  std::vector<int> by;          // conjugate: conjugator letters
  std::vector<int> pre_conj;    // destabilize: conjugation applied first
  int split_i = -1, split_j = -1;  // exchange: distinguished positions
  SlideOp slide_op = SlideOp::commute;  // slide_step
  int pos = 0;                  // slide_step position
  int ins_letter = 0;           // slide_step free_insert letter

  int delta_n = 0, delta_e = 0, delta_beta = 0;
  bool transversal = true;
};

struct Transcript {
  BraidWord start;
  std::vector<MoveRecord> records;
  BraidWord end;
};

MoveRecord make_conjugate_record(std::vector<int> by);
MoveRecord make_stabilize_record(int sign);
MoveRecord make_destabilize_record(int sign, std::vector<int> pre_conj = {});
MoveRecord make_exchange_record(int i, int j);
MoveRecord make_flype_record(int sign);
MoveRecord make_slide_record(SlideOp op, int pos, int ins_letter = 0);

// Deterministic single-move rewrite; throws BadWord on any mismatch.
BraidWord apply_move(const BraidWord& w, const MoveRecord& r);
// replay(start, records) must equal end letter-for-letter.
BraidWord replay(const BraidWord& start, const std::vector<MoveRecord>& rs);
bool transcript_valid(const Transcript& t);

BraidWord stabilize(const BraidWord& w, int sign);

// Bounded conjugacy search for a representative u * sigma_{n-1}^sign with u
// avoiding sigma_{n-1}; absence is "not found", never "impossible".
std::optional<std::pair<BraidWord, Transcript>> destabilize(
    const BraidWord& w, int sign, long budget = 10000);

// w = A sigma_{n-1} B sigma_{n-1}^{-1}  ->  A sigma_{n-1}^{-1} B sigma_{n-1};
// split = positions of the two distinguished letters.
BraidWord exchange(const BraidWord& w, int split_i, int split_j);

// Realize the exchange move as conjugations/slides + one stabilize(+) and one
// destabilize(+); end is conjugate to exchange(w). Throws BadWord on budget
// exhaustion (never fails silently).
Transcript exchange_as_stab_destab(const BraidWord& w, int split_i,
                                   int split_j, long budget = 20000);

// Move the unique trivial loop letter to the other side of the named
// crossing; conjugations, slides and exchange moves only.
Transcript slide_trivial_loop(const BraidWord& w, int loop_position,
                              int crossing_position, long budget = 20000);

// sigma_1^P sigma_2^Q sigma_1^R sigma_2^{sign} -> sigma_1^P sigma_2^{sign}
// sigma_1^R sigma_2^Q on 3 strands.
BraidWord flype3(const BraidWord& w, int sign);

// The iterated wrapped-strand family: k+1 closed n-braid words sharing
// strands, exponent sum and closure type.
std::vector<BraidWord> family_generator(const BraidWord& R, const BraidWord& S,
                                        int k);

// beta after each move; throws on a multi-component intermediate closure.
std::vector<int> beta_ledger(const Transcript& t);

}  // namespace braidlab
