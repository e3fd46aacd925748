#pragma once
// Iterated torus knots: cabled braid-word generation and the closed-form
// invariants (braid index, a_r / b_r / d / chi / beta_max recursions).
#include <string>
#include <vector>

#include "braidlab/braid.hpp"

namespace braidlab {

struct CableStage {
  int e;  // +1 or -1
  int p;  // > 0
  int q;  // > 0, coprime to p
};

struct CableSpec {
  std::vector<CableStage> stages;
};

// text format: stages joined by ';', each "+(p,q)" or "-(p,q)"
CableSpec parse_cable_spec(const std::string& text);
std::string print_cable_spec(const CableSpec& spec);
void validate(const CableSpec& spec);

struct CableInvariants {
  int a_r;       // algebraic crossing number of the standard word
  int b_r;       // letter (band) count
  int d;         // negative-stage defect
  int chi;       // Euler characteristic of the Bennequin surface
  int beta_max;  // a_r - p_1...p_r = -chi - d
};

// (sigma_1 ... sigma_{p-1})^{eq} on p strands
BraidWord torus_braid(int e, int p, int q);

// One cabling stage: block-expand the base word, insert -a_prev framing
// twists on the first block, append the (p,q) pattern on that block.
BraidWord cable_word(const BraidWord& base, int a_prev, int e, int p, int q);

// Standard word for the full iterated torus knot; strands = prod p_i,
// exponent sum = a_r, letter count = b_r, 1-component closure.
BraidWord iterated_word(const CableSpec& spec);

int braid_index(const CableSpec& spec);
CableInvariants invariants(const CableSpec& spec);

struct CableReport {
  bool strands_ok, e_ok, letters_ok, bennequin_ok, components_ok;
  std::string detail;  // failing quantities, empty when all pass
  bool all_ok() const {
    return strands_ok && e_ok && letters_ok && bennequin_ok && components_ok;
  }
};

// Cross-check iterated_word against the closed forms; envelope
// prod p_i <= 12 and b_r <= 64.
CableReport verify_spec(const CableSpec& spec);

}  // namespace braidlab
