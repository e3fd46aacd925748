#pragma once
// Braid words on n strands in Artin generators, and the elementary closure
// invariants (exponent sum, component count, Bennequin numbers).
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidlab {

// A letter k (nonzero, |k| <= strands-1) means sigma_|k| with sign(k).
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

using Perm = std::vector<int>;  // 0-indexed images: p[i] = image of slot i

struct BadWord : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void validate(const BraidWord& w);  // throws BadWord

BraidWord parse_word(const std::string& text, int strands);
std::string print_word(const BraidWord& w);

Perm permutation(const BraidWord& w);
int component_count(const BraidWord& w);
int exponent_sum(const BraidWord& w);

// beta = e - n; requires a 1-component closure.
int bennequin(const BraidWord& w);

// Per-component Bennequin numbers, stored as twice their (half-integer)
// values. Components are indexed by smallest strand slot, ascending.
struct LinkBennequin {
  std::vector<int> twice;  // 2 * beta_c per component
};
LinkBennequin link_bennequin(const BraidWord& w);

// Free reduction (cancel adjacent sigma_i sigma_i^-1) plus cyclic reduction.
BraidWord free_reduce(const BraidWord& w);
BraidWord free_cyclic_reduce(const BraidWord& w);

// g^-1 w g, freely and cyclically reduced (replay semantics of conjugate).
BraidWord conjugate(const BraidWord& w, const std::vector<int>& g);

std::vector<int> inverse_letters(const std::vector<int>& g);

}  // namespace braidlab
