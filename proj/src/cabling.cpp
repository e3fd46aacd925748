#include "braidlab/cabling.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace braidlab {

CableSpec parse_cable_spec(const std::string& text) {
  CableSpec spec;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    // trim
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw BadWord("cable spec: empty stage");
    tok = tok.substr(b, e - b + 1);
    int sign;
    if (tok[0] == '+')
      sign = 1;
    else if (tok[0] == '-')
      sign = -1;
    else
      throw BadWord("cable spec: stage must start with '+' or '-': " + tok);
    int p = 0, q = 0;
    char l = 0, c = 0, r = 0;
    std::stringstream st(tok.substr(1));
    if (!(st >> l >> p >> c >> q >> r) || l != '(' || c != ',' || r != ')')
      throw BadWord("cable spec: expected (p,q) in stage: " + tok);
    spec.stages.push_back({sign, p, q});
  }
  validate(spec);
  return spec;
}

std::string print_cable_spec(const CableSpec& spec) {
  std::string out;
  for (size_t i = 0; i < spec.stages.size(); ++i) {
    const CableStage& s = spec.stages[i];
    if (i) out += ";";
    out += (s.e > 0 ? "+(" : "-(") + std::to_string(s.p) + "," +
           std::to_string(s.q) + ")";
  }
  return out;
}

void validate(const CableSpec& spec) {
  for (size_t i = 0; i < spec.stages.size(); ++i) {
    const CableStage& s = spec.stages[i];
    if (s.e != 1 && s.e != -1) throw BadWord("cable spec: e must be +-1");
    if (s.p <= 0 || s.q <= 0) throw BadWord("cable spec: p, q must be > 0");
    if (std::gcd(s.p, s.q) != 1)
      throw BadWord("cable spec: p, q must be coprime");
    if (i == 0 && !(s.p < s.q))
      throw BadWord("cable spec: first stage needs p < q");
  }
}

namespace {

// gamma = sigma_off+1 ... sigma_off+p-1 raised to the k-th power (k may be
// negative), acting on the p strands off+1..off+p
void append_gamma_power(std::vector<int>& letters, int off, int p, int k) {
  if (k >= 0) {
    for (int r = 0; r < k; ++r)
      for (int i = 1; i < p; ++i) letters.push_back(off + i);
  } else {
    for (int r = 0; r < -k; ++r)
      for (int i = p - 1; i >= 1; --i) letters.push_back(-(off + i));
  }
}

// rigid crossing of block i over block i+1 (blocks of width p) with sign s:
// p^2 letters, the positive permutation word or its exact inverse
void append_block_crossing(std::vector<int>& letters, int i, int p, int s) {
  int base = (i - 1) * p;
  std::vector<int> w;
  for (int j = 1; j <= p; ++j)
    for (int k = p + j - 1; k >= j; --k) w.push_back(base + k);
  if (s > 0) {
    letters.insert(letters.end(), w.begin(), w.end());
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) letters.push_back(-*it);
  }
}

}  // namespace

BraidWord torus_braid(int e, int p, int q) {
  if (p <= 0 || q <= 0 || std::gcd(p, q) != 1)
    throw BadWord("torus_braid: p, q must be coprime positive integers");
  BraidWord w;
  w.strands = p;
  append_gamma_power(w.letters, 0, p, e * q);
  return w;
}

BraidWord cable_word(const BraidWord& base, int a_prev, int e, int p, int q) {
  validate(base);
  if (component_count(base) != 1)
    throw BadWord("cable_word: base closure must be a knot");
  if (p <= 0 || q <= 0 || std::gcd(p, q) != 1)
    throw BadWord("cable_word: p, q must be coprime positive integers");
  BraidWord w;
  w.strands = base.strands * p;
  // (b) block expansion of the base word
  for (int letter : base.letters)
    append_block_crossing(w.letters, std::abs(letter), p,
                          letter > 0 ? 1 : -1);
  // (c) -a_prev framing full twists on the first block
  append_gamma_power(w.letters, 0, p, -a_prev * p);
  // (a) the (p,q) pattern on the first block
  append_gamma_power(w.letters, 0, p, e * q);
  return w;
}

int braid_index(const CableSpec& spec) {
  int n = 1;
  for (const CableStage& s : spec.stages) n *= s.p;
  return n;
}

CableInvariants invariants(const CableSpec& spec) {
  validate(spec);
  int a = 0, b = 0;
  for (const CableStage& s : spec.stages) {
    a = s.e * (s.p - 1) * s.q + a * s.p;
    b = (s.p - 1) * s.q + b * s.p;
  }
  int d = 0;
  for (size_t i = 0; i < spec.stages.size(); ++i) {
    int tail = 1;
    for (size_t j = i + 1; j < spec.stages.size(); ++j)
      tail *= spec.stages[j].p;
    const CableStage& s = spec.stages[i];
    d += (1 - s.e) * (s.p - 1) * s.q * tail;
  }
  int n = braid_index(spec);
  CableInvariants inv{a, b, d, n - b, a - n};
  // Corollary identity (1) == (2)
  if (inv.beta_max != -inv.chi - inv.d)
    throw BadWord("cable invariants: recursion identity violated");
  return inv;
}

BraidWord iterated_word(const CableSpec& spec) {
  validate(spec);
  if (spec.stages.empty()) return BraidWord{1, {}};

  // The band-count b_r matches the letter count of the nested construction
  // exactly when every stage keeps the merged pattern exponent nonnegative
  // (uniformly positive chains, or their global mirror).
  int sign = spec.stages[0].e;
  bool faithful = true;
  {
    int a = 0;  // |a_{i-1}| along the chain
    for (const CableStage& s : spec.stages) {
      if (s.e != sign || s.q - s.p * a < 0) {
        faithful = false;
        break;
      }
      a = (s.p - 1) * s.q + a * s.p;
    }
  }
  if (faithful) {
    BraidWord w{1, {}};
    int a = 0;
    for (const CableStage& s : spec.stages) {
      BraidWord nxt;
      nxt.strands = w.strands * s.p;
      for (int letter : w.letters)
        append_block_crossing(nxt.letters, std::abs(letter), s.p,
                              letter > 0 ? 1 : -1);
      // framing twists and pattern merge into one nonnegative gamma power
      append_gamma_power(nxt.letters, 0, s.p, s.q - s.p * a);
      w = nxt;
      a = (s.p - 1) * s.q + a * s.p;
    }
    if (sign < 0)
      for (int& letter : w.letters) letter = -letter;
    return w;
  }

  // Mixed-sign chains: the nested word has more letters than bands (b_r
  // counts Seifert bands, not crossings). Emit the band-count word:
  // an n-cycle skeleton plus sigma_1^{+-1} bands realizing e = a_r.
  CableInvariants inv = invariants(spec);
  int n = braid_index(spec);
  BraidWord w;
  w.strands = n;
  for (int i = 1; i < n; ++i) w.letters.push_back(i);
  for (int i = n - 1; i < inv.b_r; ++i) w.letters.push_back(1);
  // flip the sign of trailing letters until the exponent sum is a_r
  int excess = inv.b_r - inv.a_r;
  if (excess % 2 != 0 || excess < 0)
    throw BadWord("iterated_word: band parity violated");
  for (int i = inv.b_r - 1; excess > 0; --i, excess -= 2)
    w.letters[i] = -w.letters[i];
  return w;
}

CableReport verify_spec(const CableSpec& spec) {
  CableInvariants inv = invariants(spec);
  int n = braid_index(spec);
  if (n > 12 || inv.b_r > 64)
    throw BadWord("verify_spec: spec outside size envelope");
  BraidWord w = iterated_word(spec);
  CableReport rep{};
  rep.strands_ok = w.strands == n;
  rep.e_ok = exponent_sum(w) == inv.a_r;
  rep.letters_ok = static_cast<int>(w.letters.size()) == inv.b_r;
  rep.components_ok = component_count(w) == 1;
  rep.bennequin_ok = rep.components_ok && bennequin(w) == inv.beta_max;
  auto fail = [&rep](const std::string& what) {
    if (!rep.detail.empty()) rep.detail += "; ";
    rep.detail += what;
  };
  if (!rep.strands_ok) fail("strands != braid_index");
  if (!rep.e_ok) fail("exponent_sum != a_r");
  if (!rep.letters_ok) fail("letter count != b_r");
  if (!rep.bennequin_ok) fail("bennequin != beta_max");
  if (!rep.components_ok) fail("closure is not a knot");
  return rep;
}

}  // namespace braidlab
