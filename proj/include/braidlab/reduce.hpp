#pragma once
// Bounded best-first reduction of closed braids toward minimal braid index
// using conjugation, exchange moves and +-destabilization, plus the
// negative-destabilizations-last transcript reordering.
#include "braidlab/moves.hpp"

namespace braidlab {

struct ReduceResult {
  BraidWord word;        // lowest-strand word found
  Transcript transcript; // replay-verified witness
  bool budget_exhausted = false;
  long budget_used = 0;
};

ReduceResult reduce(const BraidWord& w, long budget = 20000);

struct UnlinkResult {
  bool reducible = false;  // false means "not found within budget"
  Transcript transcript;
};

UnlinkResult is_unlink_reducible(const BraidWord& w, long budget = 20000);

struct ReorderResult {
  Transcript transcript;
  bool reordered = false;  // false: witness not found, original retained
};

// Push every negative destabilization after every transversal move; the end
// closure stays conjugate to the original end.
ReorderResult reorder_transcript(const Transcript& t, long budget = 20000);

}  // namespace braidlab
