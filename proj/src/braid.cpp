#include "braidlab/braid.hpp"

#include <numeric>
#include <sstream>

namespace braidlab {

void validate(const BraidWord& w) {
  if (w.strands < 1) throw BadWord("strands must be >= 1");
  for (int k : w.letters) {
    if (k == 0) throw BadWord("zero letter");
    if (std::abs(k) > w.strands - 1)
      throw BadWord("letter index " + std::to_string(std::abs(k)) +
                    " out of range for " + std::to_string(w.strands) +
                    " strands");
  }
}

BraidWord parse_word(const std::string& text, int strands) {
  if (strands < 1) throw BadWord("strands must be >= 1");
  BraidWord w;
  w.strands = strands;
  std::istringstream in(text);
  std::string tok;
  int pos = 0;
  while (in >> tok) {
    ++pos;
    size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw BadWord("malformed token '" + tok + "' at position " +
                    std::to_string(pos));
    }
    if (used != tok.size())
      throw BadWord("malformed token '" + tok + "' at position " +
                    std::to_string(pos));
    if (k == 0)
      throw BadWord("zero token at position " + std::to_string(pos));
    if (std::abs(k) > strands - 1)
      throw BadWord("index " + std::to_string(std::abs(k)) +
                    " out of range for " + std::to_string(strands) +
                    " strands (token position " + std::to_string(pos) + ")");
    w.letters.push_back(k);
  }
  return w;
}

std::string print_word(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

Perm permutation(const BraidWord& w) {
  Perm p(w.strands);
  std::iota(p.begin(), p.end(), 0);
  // p[i] = where slot i's strand ends up; apply transpositions left to right
  for (int k : w.letters) {
    int i = std::abs(k) - 1;
    // strands currently ending at slots i, i+1 swap targets: track inverse
    // style — easier to track slot contents.
    std::swap(p[i], p[i + 1]);
  }
  // p as built maps final-slot -> initial-strand; invert to initial -> final
  Perm q(w.strands);
  for (int i = 0; i < w.strands; ++i) q[p[i]] = i;
  return q;
}

int component_count(const BraidWord& w) {
  Perm p = permutation(w);
  std::vector<char> seen(w.strands, 0);
  int c = 0;
  for (int i = 0; i < w.strands; ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return c;
}

int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (int k : w.letters) e += k > 0 ? 1 : -1;
  return e;
}

int bennequin(const BraidWord& w) {
  if (component_count(w) != 1)
    throw BadWord("closure is a link, not a knot; use link_bennequin");
  return exponent_sum(w) - w.strands;
}

LinkBennequin link_bennequin(const BraidWord& w) {
  Perm p = permutation(w);
  // component id per starting slot, ordered by smallest slot
  std::vector<int> comp(w.strands, -1);
  int nc = 0;
  for (int i = 0; i < w.strands; ++i) {
    if (comp[i] >= 0) continue;
    for (int j = i; comp[j] < 0; j = p[j]) comp[j] = nc;
    ++nc;
  }
  std::vector<int> twice(nc, 0);
  // trace slot contents through the word, attributing crossings
  std::vector<int> slot(w.strands);
  std::iota(slot.begin(), slot.end(), 0);
  for (int k : w.letters) {
    int i = std::abs(k) - 1;
    int s = k > 0 ? 1 : -1;
    int ca = comp[slot[i]], cb = comp[slot[i + 1]];
    if (ca == cb) {
      twice[ca] += 2 * s;  // self-crossing: +-1 to e_c
    } else {
      twice[ca] += s;  // mixed: +-1/2 to each side
      twice[cb] += s;
    }
    std::swap(slot[i], slot[i + 1]);
  }
  // minus n_c strands per component
  for (int i = 0; i < w.strands; ++i) twice[comp[i]] -= 2;
  return LinkBennequin{twice};
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord r;
  r.strands = w.strands;
  for (int k : w.letters) {
    if (!r.letters.empty() && r.letters.back() == -k)
      r.letters.pop_back();
    else
      r.letters.push_back(k);
  }
  return r;
}

BraidWord free_cyclic_reduce(const BraidWord& w) {
  BraidWord r = free_reduce(w);
  while (r.letters.size() >= 2 && r.letters.front() == -r.letters.back()) {
    r.letters.erase(r.letters.begin());
    r.letters.pop_back();
    r = free_reduce(r);
  }
  return r;
}

std::vector<int> inverse_letters(const std::vector<int>& g) {
  std::vector<int> inv(g.rbegin(), g.rend());
  for (int& k : inv) k = -k;
  return inv;
}

BraidWord conjugate(const BraidWord& w, const std::vector<int>& g) {
  BraidWord r;
  r.strands = w.strands;
  std::vector<int> gi = inverse_letters(g);
  r.letters.reserve(w.letters.size() + 2 * g.size());
  r.letters.insert(r.letters.end(), gi.begin(), gi.end());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
  r.letters.insert(r.letters.end(), g.begin(), g.end());
  validate(r);
  return free_cyclic_reduce(r);
}

}  // namespace braidlab
