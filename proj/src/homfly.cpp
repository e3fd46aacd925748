#include "braidlab/homfly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "braidlab/canonical.hpp"

namespace braidlab {

void HomflyPoly::add_term(int ae, int ze, long long c) {
  if (!c) return;
  auto key = std::make_pair(ae, ze);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, c);
  } else if (!(it->second += c)) {
    terms.erase(it);
  }
}

HomflyPoly& HomflyPoly::operator+=(const HomflyPoly& o) {
  for (const auto& [k, c] : o.terms) add_term(k.first, k.second, c);
  return *this;
}

HomflyPoly HomflyPoly::shifted(int ae, int ze, long long c) const {
  HomflyPoly r;
  for (const auto& [k, v] : terms)
    r.add_term(k.first + ae, k.second + ze, v * c);
  return r;
}

HomflyPoly HomflyPoly::operator*(const HomflyPoly& o) const {
  HomflyPoly r;
  for (const auto& [k, v] : terms)
    for (const auto& [k2, v2] : o.terms)
      r.add_term(k.first + k2.first, k.second + k2.second, v * v2);
  return r;
}

HomflyPoly HomflyPoly::one() {
  HomflyPoly r;
  r.add_term(0, 0, 1);
  return r;
}

std::vector<std::array<long long, 3>> HomflyPoly::triples() const {
  std::vector<std::array<long long, 3>> out;
  for (const auto& [k, c] : terms)
    out.push_back({static_cast<long long>(k.first),
                   static_cast<long long>(k.second), c});
  return out;  // map iteration is already lexicographic
}

std::string HomflyPoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    long long m = std::abs(c);
    bool named = k.first || k.second;
    if (m != 1 || !named) os << m;
    if (k.first) os << " a^" << k.first;
    if (k.second) os << " z^" << k.second;
  }
  return os.str();
}

namespace {

// First bad crossing of the totally descending traversal, or -1 if the
// diagram is descending; also reports the closure component count.
int first_bad_crossing(const BraidWord& w, int* components) {
  const int n = w.strands;
  const int L = static_cast<int>(w.letters.size());
  std::vector<char> crossing_seen(L, 0);
  std::vector<char> slot_seen(n, 0);
  int comp = 0;
  for (int start = 0; start < n; ++start) {
    if (slot_seen[start]) continue;
    ++comp;
    int slot = start;
    do {
      slot_seen[slot] = 1;
      for (int k = 0; k < L; ++k) {
        int i = std::abs(w.letters[k]) - 1;  // 0-based left slot
        if (slot != i && slot != i + 1) continue;
        bool over = (w.letters[k] > 0) ? (slot == i) : (slot == i + 1);
        if (!crossing_seen[k]) {
          crossing_seen[k] = 1;
          if (!over) {
            if (components) *components = 0;
            return k;
          }
        }
        slot = (slot == i) ? i + 1 : i;
      }
    } while (slot != start);
  }
  if (components) *components = comp;
  return -1;
}

HomflyPoly eval(const BraidWord& w0,
                std::map<NormalForm, HomflyPoly>& memo) {
  BraidWord w = free_reduce(w0);
  NormalForm key = normal_form(w);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  HomflyPoly out;
  int comp = 0;
  int bad = first_bad_crossing(w, &comp);
  if (bad < 0) {
    // descending closure = unlink on comp components
    // delta = (a - a^-1) z^-1; result delta^(comp-1)
    HomflyPoly delta;
    delta.add_term(1, -1, 1);
    delta.add_term(-1, -1, -1);
    out = HomflyPoly::one();
    for (int i = 1; i < comp; ++i) out = out * delta;
  } else {
    BraidWord switched = w;
    switched.letters[bad] = -switched.letters[bad];
    BraidWord smoothed = w;
    smoothed.letters.erase(smoothed.letters.begin() + bad);
    HomflyPoly ps = eval(switched, memo);
    HomflyPoly p0 = eval(smoothed, memo);
    if (w.letters[bad] > 0) {
      // P+ = a^-2 P- + a^-1 z P0
      out = ps.shifted(-2, 0, 1);
      out += p0.shifted(-1, 1, 1);
    } else {
      // P- = a^2 P+ - a z P0
      out = ps.shifted(2, 0, 1);
      out += p0.shifted(1, 1, -1);
    }
  }
  memo.emplace(std::move(key), out);
  return out;
}

}  // namespace

HomflyPoly homfly(const BraidWord& w, int budget) {
  validate(w);
  if (static_cast<int>(free_reduce(w).letters.size()) > budget)
    throw BadWord("homfly: word exceeds skein budget");
  std::map<NormalForm, HomflyPoly> memo;
  return eval(w, memo);
}

int mfw_bound(const HomflyPoly& p) {
  if (p.is_zero()) throw BadWord("mfw_bound: zero polynomial");
  int lo = p.terms.begin()->first.first;
  int hi = lo;
  for (const auto& [k, c] : p.terms) {
    lo = std::min(lo, k.first);
    hi = std::max(hi, k.first);
  }
  return (hi - lo) / 2 + 1;
}

}  // namespace braidlab
