#include "braidlab/moves.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

namespace braidlab {

MoveRecord make_conjugate_record(std::vector<int> by) {
  MoveRecord r;
  r.kind = MoveKind::conjugate;
  r.by = std::move(by);
  return r;
}

MoveRecord make_stabilize_record(int sign) {
  MoveRecord r;
  r.kind = MoveKind::stabilize;
  r.sign = sign;
  r.delta_n = 1;
  r.delta_e = sign;
  r.delta_beta = sign - 1;
  r.transversal = sign > 0;
  return r;
}

MoveRecord make_destabilize_record(int sign, std::vector<int> pre_conj) {
  MoveRecord r;
  r.kind = MoveKind::destabilize;
  r.sign = sign;
  r.pre_conj = std::move(pre_conj);
  r.delta_n = -1;
  r.delta_e = -sign;
  r.delta_beta = 1 - sign;
  r.transversal = sign > 0;
  return r;
}

MoveRecord make_exchange_record(int i, int j) {
  MoveRecord r;
  r.kind = MoveKind::exchange;
  r.split_i = i;
  r.split_j = j;
  return r;
}

MoveRecord make_flype_record(int sign) {
  MoveRecord r;
  r.kind = MoveKind::flype;
  r.sign = sign;
  r.transversal = sign > 0;
  return r;
}

MoveRecord make_slide_record(SlideOp op, int pos, int ins_letter) {
  MoveRecord r;
  r.kind = MoveKind::slide_step;
  r.slide_op = op;
  r.pos = pos;
  r.ins_letter = ins_letter;
  return r;
}

BraidWord stabilize(const BraidWord& w, int sign) {
  BraidWord r;
  r.strands = w.strands + 1;
  r.letters = w.letters;
  r.letters.push_back(sign > 0 ? w.strands : -w.strands);
  return r;
}

namespace {

// sigma_i^a sigma_j^b sigma_i^c rewrites for |i-j| = 1; returns new triple
// or empty. Patterns: (+,+,+),(−,−,−) swap i/j; mixed c = −a variants.
std::optional<std::array<int, 3>> relation_rewrite(int a, int b, int c) {
  int i = std::abs(a), j = std::abs(b), k = std::abs(c);
  if (i != k || std::abs(i - j) != 1) return std::nullopt;
  int sa = a > 0 ? 1 : -1, sb = b > 0 ? 1 : -1, sc = c > 0 ? 1 : -1;
  if (sa == sb && sb == sc) return std::array<int, 3>{sa * j, sa * i, sa * j};
  if (sa == sb && sc == -sa)
    return std::array<int, 3>{-sa * j, sa * i, sa * j};
  if (sb == sc && sa == -sb)
    return std::array<int, 3>{sb * j, sb * i, -sb * j};
  return std::nullopt;  // alternating signs: no length-3 rewrite
}

}  // namespace

BraidWord apply_move(const BraidWord& w, const MoveRecord& r) {
  switch (r.kind) {
    case MoveKind::conjugate:
      return conjugate(w, r.by);
    case MoveKind::stabilize:
      return stabilize(w, r.sign);
    case MoveKind::destabilize: {
      if (w.strands < 2) throw BadWord("destabilize: needs >= 2 strands");
      BraidWord v = r.pre_conj.empty() ? w : conjugate(w, r.pre_conj);
      int want = r.sign > 0 ? v.strands - 1 : -(v.strands - 1);
      if (v.letters.empty() || v.letters.back() != want)
        throw BadWord("destabilize: word not in template form");
      for (size_t i = 0; i + 1 < v.letters.size(); ++i)
        if (std::abs(v.letters[i]) == v.strands - 1)
          throw BadWord("destabilize: extra top-generator letters");
      BraidWord u;
      u.strands = v.strands - 1;
      u.letters.assign(v.letters.begin(), v.letters.end() - 1);
      return u;
    }
    case MoveKind::exchange: {
      int i = r.split_i, j = r.split_j;
      int m = w.strands - 1;
      int len = static_cast<int>(w.letters.size());
      if (i < 0 || j != len - 1 || i >= j)
        throw BadWord("exchange: malformed split");
      if (std::abs(w.letters[i]) != m || w.letters[j] != -w.letters[i])
        throw BadWord("exchange: distinguished letters not sigma_{n-1}^{+-1}");
      for (int k = 0; k < len; ++k)
        if (k != i && k != j && std::abs(w.letters[k]) == m)
          throw BadWord("exchange: A or B touches sigma_{n-1}");
      BraidWord v = w;
      v.letters[i] = -v.letters[i];
      v.letters[j] = -v.letters[j];
      return v;
    }
    case MoveKind::flype:
      return flype3(w, r.sign);
    case MoveKind::slide_step: {
      BraidWord v = w;
      int len = static_cast<int>(v.letters.size());
      switch (r.slide_op) {
        case SlideOp::commute: {
          if (r.pos < 0 || r.pos + 1 >= len) throw BadWord("slide: bad pos");
          int a = v.letters[r.pos], b = v.letters[r.pos + 1];
          if (std::abs(std::abs(a) - std::abs(b)) < 2)
            throw BadWord("slide: letters do not commute");
          std::swap(v.letters[r.pos], v.letters[r.pos + 1]);
          return v;
        }
        case SlideOp::braid_relation: {
          if (r.pos < 0 || r.pos + 2 >= len) throw BadWord("slide: bad pos");
          auto out = relation_rewrite(v.letters[r.pos], v.letters[r.pos + 1],
                                      v.letters[r.pos + 2]);
          if (!out) throw BadWord("slide: no braid relation at position");
          v.letters[r.pos] = (*out)[0];
          v.letters[r.pos + 1] = (*out)[1];
          v.letters[r.pos + 2] = (*out)[2];
          return v;
        }
        case SlideOp::free_cancel: {
          if (r.pos < 0 || r.pos + 1 >= len) throw BadWord("slide: bad pos");
          if (v.letters[r.pos] != -v.letters[r.pos + 1])
            throw BadWord("slide: pair does not cancel");
          v.letters.erase(v.letters.begin() + r.pos,
                          v.letters.begin() + r.pos + 2);
          return v;
        }
        case SlideOp::free_insert: {
          if (r.pos < 0 || r.pos > len || r.ins_letter == 0 ||
              std::abs(r.ins_letter) > v.strands - 1)
            throw BadWord("slide: bad insert");
          v.letters.insert(v.letters.begin() + r.pos,
                           {r.ins_letter, -r.ins_letter});
          return v;
        }
      }
      throw BadWord("slide: unknown op");
    }
  }
  throw BadWord("unknown move kind");
}

BraidWord replay(const BraidWord& start, const std::vector<MoveRecord>& rs) {
  BraidWord w = start;
  for (const MoveRecord& r : rs) w = apply_move(w, r);
  return w;
}

bool transcript_valid(const Transcript& t) {
  try {
    return replay(t.start, t.records) == t.end;
  } catch (const BadWord&) {
    return false;
  }
}

std::optional<std::pair<BraidWord, Transcript>> destabilize(const BraidWord& w,
                                                            int sign,
                                                            long budget) {
  if (w.strands < 2) throw BadWord("destabilize: needs >= 2 strands");
  const int n = w.strands;
  Transcript t;
  t.start = w;

  auto try_template = [&](const BraidWord& v)
      -> std::optional<std::pair<std::vector<int>, BraidWord>> {
    // exactly one letter of index n-1, with the requested sign
    int idx = -1;
    for (size_t i = 0; i < v.letters.size(); ++i) {
      if (std::abs(v.letters[i]) == n - 1) {
        if (idx >= 0) return std::nullopt;
        idx = static_cast<int>(i);
      }
    }
    if (idx < 0) return std::nullopt;
    if ((v.letters[idx] > 0 ? 1 : -1) != sign) return std::nullopt;
    // rotate so the loop letter is last
    std::vector<int> pre(v.letters.begin(), v.letters.begin() + idx + 1);
    BraidWord u;
    u.strands = n - 1;
    BraidWord rot = conjugate(v, pre);
    if (rot.letters.empty() ||
        rot.letters.back() != (sign > 0 ? n - 1 : -(n - 1)))
      return std::nullopt;
    u.letters.assign(rot.letters.begin(), rot.letters.end() - 1);
    return std::make_pair(pre, u);
  };

  BraidWord start = free_cyclic_reduce(w);
  std::map<std::vector<int>, std::pair<std::vector<int>, int>>
      parent;  // letters -> (parent letters, conj letter; 0 for root)
  std::deque<std::vector<int>> queue;
  parent.emplace(start.letters, std::make_pair(std::vector<int>{}, 0));
  queue.push_back(start.letters);
  long count = 1;
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    BraidWord v{n, cur};
    if (auto hit = try_template(v)) {
      // assemble transcript: path conjugations, then the destabilization
      std::vector<int> path;
      for (std::vector<int> k = cur; ; ) {
        auto& pr = parent.at(k);
        if (pr.second == 0) break;
        path.push_back(pr.second);
        k = pr.first;
      }
      std::reverse(path.begin(), path.end());
      if (!(start == w))
        t.records.push_back(make_conjugate_record({}));  // initial reduction
      for (int g : path) t.records.push_back(make_conjugate_record({g}));
      t.records.push_back(make_destabilize_record(sign, hit->first));
      t.end = hit->second;
      if (!transcript_valid(t)) throw BadWord("destabilize: replay mismatch");
      return std::make_pair(hit->second, t);
    }
    for (int g = -(n - 1); g <= n - 1; ++g) {
      if (g == 0) continue;
      BraidWord nxt = conjugate(v, {g});
      if (parent.count(nxt.letters)) continue;
      if (count >= budget) continue;
      ++count;
      parent.emplace(nxt.letters, std::make_pair(cur, g));
      queue.push_back(nxt.letters);
    }
  }
  return std::nullopt;
}

BraidWord exchange(const BraidWord& w, int split_i, int split_j) {
  return apply_move(w, make_exchange_record(split_i, split_j));
}

namespace {

// Candidate single-step edges for the rewrite searches: one-letter
// conjugations plus slide steps (no inserts).
std::vector<MoveRecord> edge_records(const BraidWord& v) {
  std::vector<MoveRecord> out;
  const int n = v.strands;
  for (int g = -(n - 1); g <= n - 1; ++g)
    if (g != 0) out.push_back(make_conjugate_record({g}));
  int len = static_cast<int>(v.letters.size());
  for (int p = 0; p + 1 < len; ++p) {
    if (std::abs(std::abs(v.letters[p]) - std::abs(v.letters[p + 1])) >= 2)
      out.push_back(make_slide_record(SlideOp::commute, p));
    if (v.letters[p] == -v.letters[p + 1])
      out.push_back(make_slide_record(SlideOp::free_cancel, p));
  }
  for (int p = 0; p + 2 < len; ++p)
    if (relation_rewrite(v.letters[p], v.letters[p + 1], v.letters[p + 2]))
      out.push_back(make_slide_record(SlideOp::braid_relation, p));
  return out;
}

}  // namespace

Transcript exchange_as_stab_destab(const BraidWord& w, int split_i,
                                   int split_j, long budget) {
  BraidWord target = free_cyclic_reduce(exchange(w, split_i, split_j));
  Transcript t;
  t.start = w;
  MoveRecord stab = make_stabilize_record(+1);
  BraidWord w1 = apply_move(w, stab);
  const int n1 = w1.strands;  // n + 1

  struct Edge {
    std::vector<int> parent;
    MoveRecord rec;
  };
  std::map<std::vector<int>, Edge> parent;
  std::deque<std::vector<int>> queue;
  parent.emplace(w1.letters, Edge{{}, stab});
  queue.push_back(w1.letters);
  long count = 1;

  auto finish = [&](const std::vector<int>& cur, const std::vector<int>& pre,
                    const BraidWord& u) {
    std::vector<MoveRecord> path;
    for (std::vector<int> k = cur; !(k == w1.letters);) {
      const Edge& e = parent.at(k);
      path.push_back(e.rec);
      k = e.parent;
    }
    std::reverse(path.begin(), path.end());
    t.records.push_back(stab);
    for (auto& r : path) t.records.push_back(r);
    t.records.push_back(make_destabilize_record(+1, pre));
    t.end = u;
    if (!transcript_valid(t))
      throw BadWord("exchange_as_stab_destab: replay mismatch");
    return t;
  };

  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    BraidWord v{n1, cur};
    // goal: exactly one +sigma_n letter; prefix-free of sigma_n after
    // rotating it to the end; resulting u conjugate to the exchange target
    int idx = -1;
    bool ok = true;
    for (size_t i = 0; i < cur.size() && ok; ++i) {
      if (std::abs(cur[i]) == n1 - 1) {
        if (idx >= 0 || cur[i] < 0)
          ok = false;
        else
          idx = static_cast<int>(i);
      }
    }
    if (ok && idx >= 0) {
      std::vector<int> pre(cur.begin(), cur.begin() + idx + 1);
      BraidWord rot = conjugate(v, pre);
      if (!rot.letters.empty() && rot.letters.back() == n1 - 1) {
        BraidWord u;
        u.strands = n1 - 1;
        u.letters.assign(rot.letters.begin(), rot.letters.end() - 1);
        if (exponent_sum(free_reduce(u)) == exponent_sum(target) &&
            conjugate_closed(u, target, 4000).verdict == ConjVerdict::yes)
          return finish(cur, pre, u);
      }
    }
    for (const MoveRecord& r : edge_records(v)) {
      BraidWord nxt;
      try {
        nxt = apply_move(v, r);
      } catch (const BadWord&) {
        continue;
      }
      if (parent.count(nxt.letters)) continue;
      if (count >= budget) continue;
      ++count;
      parent.emplace(nxt.letters, Edge{cur, r});
      queue.push_back(nxt.letters);
    }
  }
  throw BadWord("exchange_as_stab_destab: budget exhausted");
}

Transcript slide_trivial_loop(const BraidWord& w, int loop_position,
                              int crossing_position, long /*budget*/) {
  const int n = w.strands;
  int len = static_cast<int>(w.letters.size());
  if (loop_position < 0 || loop_position >= len || crossing_position < 0 ||
      crossing_position >= len || loop_position == crossing_position)
    throw BadWord("slide_trivial_loop: bad positions");
  if (std::abs(w.letters[loop_position]) != n - 1)
    throw BadWord("slide_trivial_loop: no trivial loop at position");
  for (int i = 0; i < len; ++i)
    if (i != loop_position && std::abs(w.letters[i]) == n - 1)
      throw BadWord("slide_trivial_loop: loop strand is used elsewhere");

  Transcript t;
  t.start = w;
  t.end = w;
  // Loop before the crossing slides to after it, and vice versa. If the
  // letters in between all commute with the loop, use commute steps;
  // otherwise carry the loop around the closure by conjugation.
  bool loop_first = loop_position < crossing_position;
  int lo = std::min(loop_position, crossing_position);
  int hi = std::max(loop_position, crossing_position);
  bool commutes = true;
  for (int i = lo; i <= hi; ++i)
    if (i != loop_position && std::abs(std::abs(w.letters[i]) - (n - 1)) < 2)
      commutes = false;
  BraidWord cur = w;
  if (commutes) {
    if (loop_first) {
      for (int p = loop_position; p < hi; ++p) {
        MoveRecord r = make_slide_record(SlideOp::commute, p);
        cur = apply_move(cur, r);
        t.records.push_back(r);
      }
    } else {
      for (int p = loop_position; p > lo; --p) {
        MoveRecord r = make_slide_record(SlideOp::commute, p - 1);
        cur = apply_move(cur, r);
        t.records.push_back(r);
      }
    }
  } else {
    // rotate so the loop ends up on the other side of the crossing
    int rotations = loop_first ? loop_position + 1 : loop_position;
    for (int s = 0; s < rotations; ++s) {
      if (cur.letters.empty()) break;
      MoveRecord r = make_conjugate_record({cur.letters.front()});
      cur = apply_move(cur, r);
      t.records.push_back(r);
    }
  }
  t.end = cur;
  if (!transcript_valid(t)) throw BadWord("slide_trivial_loop: replay bug");
  return t;
}

BraidWord flype3(const BraidWord& w, int sign) {
  if (w.strands != 3) throw BadWord("flype3: needs 3 strands");
  // template sigma_1^P sigma_2^Q sigma_1^R sigma_2^{sign}
  int len = static_cast<int>(w.letters.size());
  if (len == 0 || std::abs(w.letters[len - 1]) != 2 ||
      (w.letters[len - 1] > 0 ? 1 : -1) != sign)
    throw BadWord("flype3: no trailing sigma_2^{sign} letter");
  int i = 0;
  auto run = [&](int index) {
    int s = 0;
    while (i < len - 1 && std::abs(w.letters[i]) == index &&
           (s == 0 || (w.letters[i] > 0) == (s > 0))) {
      s += w.letters[i] > 0 ? 1 : -1;
      ++i;
    }
    return s;
  };
  int P = run(1), Q = run(2), R = run(1);
  if (i != len - 1) throw BadWord("flype3: word does not match template");
  BraidWord v;
  v.strands = 3;
  auto emit = [&](int index, int count) {
    int s = count > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(count); ++k) v.letters.push_back(s * index);
  };
  emit(1, P);
  v.letters.push_back(sign > 0 ? 2 : -2);
  emit(1, R);
  emit(2, Q);
  return v;
}

std::vector<BraidWord> family_generator(const BraidWord& R, const BraidWord& S,
                                        int k) {
  if (R.strands != S.strands) throw BadWord("family_generator: R/S mismatch");
  const int n = R.strands + 1;
  for (int x : R.letters)
    if (std::abs(x) > n - 2) throw BadWord("family_generator: R too wide");
  for (int x : S.letters)
    if (std::abs(x) > n - 2) throw BadWord("family_generator: S too wide");
  // half twist on strands 1..n-1
  std::vector<int> half = perm_word(delta_perm(n - 1));
  std::vector<BraidWord> out;
  for (int i = 0; i <= k; ++i) {
    BraidWord w;
    w.strands = n;
    for (int r = 0; r < 2 * i; ++r)
      w.letters.insert(w.letters.end(), half.begin(), half.end());
    w.letters.insert(w.letters.end(), R.letters.begin(), R.letters.end());
    std::vector<int> hirev = inverse_letters(half);
    for (int r = 0; r < 2 * i; ++r)
      w.letters.insert(w.letters.end(), hirev.begin(), hirev.end());
    w.letters.push_back(n - 1);
    w.letters.insert(w.letters.end(), S.letters.begin(), S.letters.end());
    w.letters.push_back(-(n - 1));
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<int> beta_ledger(const Transcript& t) {
  std::vector<int> out;
  BraidWord w = t.start;
  out.push_back(bennequin(w));
  for (const MoveRecord& r : t.records) {
    w = apply_move(w, r);
    out.push_back(bennequin(w));
  }
  return out;
}

}  // namespace braidlab
