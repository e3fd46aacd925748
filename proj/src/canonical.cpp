#include "braidlab/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace braidlab {

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = i;
  return r;
}

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm delta_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

Perm letter_perm(int n, int i) {
  Perm p = identity_perm(n);
  std::swap(p[i - 1], p[i]);
  return p;
}

bool NormalForm::operator<(const NormalForm& o) const {
  if (strands != o.strands) return strands < o.strands;
  if (inf != o.inf) return inf < o.inf;
  return factors < o.factors;
}

namespace {

// starts(p) = {i : sigma_i left-divides p} = descent set {i : p[i-1] > p[i]}
std::vector<int> starts(const Perm& p) {
  std::vector<int> s;
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i - 1] > p[i]) s.push_back(static_cast<int>(i));
  return s;
}

std::vector<int> finishes(const Perm& p) { return starts(perm_inverse(p)); }

Perm tau(const Perm& p) {
  Perm d = delta_perm(static_cast<int>(p.size()));
  return compose(compose(d, p), d);
}

// Left-weight a factor list; returns additional delta power extracted.
int left_weight(int n, std::vector<Perm>& fs) {
  const Perm d = delta_perm(n);
  const Perm e = identity_perm(n);
  int extra = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      Perm A = fs[i], B = fs[i + 1];
      bool moved = false;
      while (true) {
        std::vector<int> sb = starts(B);
        std::vector<int> fa = finishes(A);
        int j = 0;
        for (int cand : sb) {
          if (!std::binary_search(fa.begin(), fa.end(), cand)) {
            j = cand;
            break;
          }
        }
        if (!j) break;
        Perm s = letter_perm(n, j);
        A = compose(A, s);  // A * sigma_j
        B = compose(s, B);  // sigma_j^-1 peeled off the front of B
        moved = true;
      }
      if (moved) {
        fs[i] = A;
        fs[i + 1] = B;
        changed = true;
      }
    }
    // drop identities
    auto it = std::remove(fs.begin(), fs.end(), e);
    if (it != fs.end()) {
      fs.erase(it, fs.end());
      changed = true;
    }
    // extract one delta to the front (tau the prefix), repeat via loop
    for (size_t idx = 0; idx < fs.size(); ++idx) {
      if (fs[idx] == d) {
        for (size_t k = 0; k < idx; ++k) fs[k] = tau(fs[k]);
        fs.erase(fs.begin() + static_cast<long>(idx));
        ++extra;
        changed = true;
        break;
      }
    }
  }
  return extra;
}

NormalForm make_nf(int n, int inf, std::vector<Perm> fs) {
  inf += left_weight(n, fs);
  return NormalForm{n, inf, std::move(fs)};
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
  validate(w);
  const int n = w.strands;
  const Perm d = delta_perm(n);
  int inf = 0;
  std::vector<Perm> fs;
  for (int k : w.letters) {
    int i = std::abs(k);
    if (k > 0) {
      fs.push_back(letter_perm(n, i));
    } else {
      // sigma_i^-1 = Delta^-1 * C,  perm(C) = compose(delta, s_i)
      Perm C = compose(d, letter_perm(n, i));
      --inf;
      for (Perm& f : fs) f = tau(f);
      fs.push_back(C);
    }
  }
  return make_nf(n, inf, std::move(fs));
}

bool equal_as_braids(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands != w2.strands) throw BadWord("strand count mismatch");
  return normal_form(w1) == normal_form(w2);
}

std::vector<int> perm_word(const Perm& p0) {
  Perm p = p0;
  std::vector<int> out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        out.push_back(static_cast<int>(i) + 1);
        std::swap(p[i], p[i + 1]);
        changed = true;
      }
    }
  }
  return out;
}

BraidWord nf_word(const NormalForm& nf) {
  BraidWord w;
  w.strands = nf.strands;
  std::vector<int> dword = perm_word(delta_perm(nf.strands));
  if (nf.inf >= 0) {
    for (int r = 0; r < nf.inf; ++r)
      w.letters.insert(w.letters.end(), dword.begin(), dword.end());
  } else {
    std::vector<int> dinv = inverse_letters(dword);
    for (int r = 0; r < -nf.inf; ++r)
      w.letters.insert(w.letters.end(), dinv.begin(), dinv.end());
  }
  for (const Perm& f : nf.factors) {
    std::vector<int> fw = perm_word(f);
    w.letters.insert(w.letters.end(), fw.begin(), fw.end());
  }
  return w;
}

std::pair<NormalForm, std::vector<int>> cycle(const NormalForm& nf) {
  if (nf.factors.empty()) return {nf, {}};
  Perm A = nf.factors.front();
  // tau^{-inf}(A); tau is an involution, so only the parity matters
  Perm Ac = (nf.inf % 2 != 0) ? tau(A) : A;
  std::vector<Perm> fs(nf.factors.begin() + 1, nf.factors.end());
  fs.push_back(Ac);
  return {make_nf(nf.strands, nf.inf, std::move(fs)), perm_word(Ac)};
}

std::pair<NormalForm, std::vector<int>> decycle(const NormalForm& nf) {
  if (nf.factors.empty()) return {nf, {}};
  Perm B = nf.factors.back();
  std::vector<Perm> fs;
  // Delta^p A1..Ar  ~Ar^-1~  Delta^p tau^p(Ar) A1..A_{r-1}
  fs.push_back((nf.inf % 2 != 0) ? tau(B) : B);
  fs.insert(fs.end(), nf.factors.begin(), nf.factors.end() - 1);
  return {make_nf(nf.strands, nf.inf, std::move(fs)),
          inverse_letters(perm_word(B))};
}

namespace {

// Iterate an operation until the measured quantity stops improving; a repeat
// of a previously seen form without improvement means the extreme is reached.
template <typename Op, typename Better>
std::pair<NormalForm, std::vector<int>> drive(const NormalForm& start, Op op,
                                              Better better) {
  std::vector<int> g;
  NormalForm best = start;
  while (true) {
    std::set<NormalForm> seen;
    NormalForm cur = best;
    std::vector<int> cg;
    bool improved = false;
    while (!seen.count(cur)) {
      seen.insert(cur);
      auto [nxt, c] = op(cur);
      cg.insert(cg.end(), c.begin(), c.end());
      cur = nxt;
      if (better(cur, best)) {
        best = cur;
        g.insert(g.end(), cg.begin(), cg.end());
        improved = true;
        break;
      }
    }
    if (!improved) return {best, g};
  }
}

}  // namespace

std::pair<NormalForm, std::vector<int>> summit(const NormalForm& nf) {
  // alternate cycling (raises inf) and decycling (lowers sup); each can
  // re-enable the other, so iterate to a joint fixpoint
  NormalForm cur = nf;
  std::vector<int> g;
  while (true) {
    auto [up, g1] = drive(
        cur, [](const NormalForm& x) { return cycle(x); },
        [](const NormalForm& a, const NormalForm& b) { return a.inf > b.inf; });
    g.insert(g.end(), g1.begin(), g1.end());
    auto [down, g2] = drive(
        up, [](const NormalForm& x) { return decycle(x); },
        [](const NormalForm& a, const NormalForm& b) {
          return a.inf > b.inf || (a.inf == b.inf && a.sup() < b.sup());
        });
    g.insert(g.end(), g2.begin(), g2.end());
    if (down == cur) return {down, g};
    cur = down;
  }
}

namespace {

std::vector<int> cycle_type(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> lens;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

NormalForm conj_by_simple(const NormalForm& v, const Perm& s) {
  // s^-1 * v * s as a normal form
  BraidWord w = nf_word(v);
  std::vector<int> sw = perm_word(s);
  BraidWord c;
  c.strands = v.strands;
  std::vector<int> si = inverse_letters(sw);
  c.letters.insert(c.letters.end(), si.begin(), si.end());
  c.letters.insert(c.letters.end(), w.letters.begin(), w.letters.end());
  c.letters.insert(c.letters.end(), sw.begin(), sw.end());
  return normal_form(c);
}

}  // namespace

ConjugacyResult conjugate_closed(const BraidWord& w1, const BraidWord& w2,
                                 long budget) {
  if (w1.strands != w2.strands) throw BadWord("strand count mismatch");
  const int n = w1.strands;
  if (exponent_sum(free_reduce(w1)) != exponent_sum(free_reduce(w2)))
    return {ConjVerdict::no, {}};
  if (cycle_type(permutation(w1)) != cycle_type(permutation(w2)))
    return {ConjVerdict::no, {}};

  auto [v1, c1] = summit(normal_form(w1));
  auto [v2, c2] = summit(normal_form(w2));
  if (v1.inf != v2.inf || v1.sup() != v2.sup()) return {ConjVerdict::no, {}};
  if (v1 == v2) {
    std::vector<int> g = c1;
    std::vector<int> c2i = inverse_letters(c2);
    g.insert(g.end(), c2i.begin(), c2i.end());
    return {ConjVerdict::yes, g};
  }

  // BFS over the super summit set, conjugating by all simple elements.
  std::vector<Perm> simples;
  {
    Perm p = identity_perm(n);
    while (std::next_permutation(p.begin(), p.end())) simples.push_back(p);
  }
  std::map<NormalForm, std::vector<int>> visited;  // form -> conjugator from v1
  visited.emplace(v1, std::vector<int>{});
  std::vector<NormalForm> frontier{v1};
  long count = 1;
  while (!frontier.empty()) {
    std::vector<NormalForm> next;
    for (const NormalForm& v : frontier) {
      const std::vector<int>& path = visited.at(v);
      for (const Perm& s : simples) {
        NormalForm u = conj_by_simple(v, s);
        if (u.inf != v1.inf || u.sup() != v1.sup()) continue;  // left the SSS
        if (visited.count(u)) continue;
        std::vector<int> g = path;
        std::vector<int> sw = perm_word(s);
        g.insert(g.end(), sw.begin(), sw.end());
        if (u == v2) {
          std::vector<int> full = c1;
          full.insert(full.end(), g.begin(), g.end());
          std::vector<int> c2i = inverse_letters(c2);
          full.insert(full.end(), c2i.begin(), c2i.end());
          return {ConjVerdict::yes, full};
        }
        visited.emplace(u, std::move(g));
        next.push_back(u);
        if (++count > budget) return {ConjVerdict::budget_exhausted, {}};
      }
    }
    frontier = std::move(next);
  }
  return {ConjVerdict::no, {}};
}

}  // namespace braidlab
