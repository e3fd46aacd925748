#pragma once
// Garside left normal form and super-summit-set conjugacy for B_n.
// Permutation-braid factors are stored as permutations (0-indexed images);
// word composition uv means "do u, then v".
#include <optional>
#include <vector>

#include "braidlab/braid.hpp"

namespace braidlab {

Perm compose(const Perm& a, const Perm& b);  // (uv): apply a first, then b
Perm perm_inverse(const Perm& a);
Perm identity_perm(int n);
Perm delta_perm(int n);          // half twist: i -> n-1-i
Perm letter_perm(int n, int i);  // sigma_i as transposition (1-indexed i)

struct NormalForm {
  int strands = 1;
  int inf = 0;
  std::vector<Perm> factors;  // left-weighted, none identity or delta

  bool operator==(const NormalForm&) const = default;
  bool operator<(const NormalForm& o) const;
  int sup() const { return inf + static_cast<int>(factors.size()); }
};

NormalForm normal_form(const BraidWord& w);
bool equal_as_braids(const BraidWord& w1, const BraidWord& w2);

// Positive word spelling a permutation braid (bubble-sort order).
std::vector<int> perm_word(const Perm& p);
// Canonical word of a normal form: Delta^inf spelled out, then factors.
BraidWord nf_word(const NormalForm& nf);

// Cycling/decycling; each returns the new form and the conjugator g
// (as letters) with result = g^-1 * old * g.
std::pair<NormalForm, std::vector<int>> cycle(const NormalForm& nf);
std::pair<NormalForm, std::vector<int>> decycle(const NormalForm& nf);

// Cycle/decycle to a super summit representative (maximal inf, then minimal
// sup); returns the representative and the accumulated conjugator.
std::pair<NormalForm, std::vector<int>> summit(const NormalForm& nf);

enum class ConjVerdict { yes, no, budget_exhausted };
struct ConjugacyResult {
  ConjVerdict verdict;
  std::vector<int> witness;  // g with w2 = g^-1 w1 g when verdict == yes
};

ConjugacyResult conjugate_closed(const BraidWord& w1, const BraidWord& w2,
                                 long budget = 10000);

}  // namespace braidlab
