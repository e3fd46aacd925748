#include "braidlab/reduce.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "braidlab/canonical.hpp"

namespace braidlab {

namespace {

using Key = std::pair<int, std::vector<int>>;  // strands, min rotation

Key canon_key(const BraidWord& w) {
  if (w.letters.empty()) return {w.strands, {}};
  std::vector<int> best = w.letters;
  std::vector<int> rot = w.letters;
  for (size_t r = 1; r < w.letters.size(); ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return {w.strands, best};
}

struct Neighbor {
  std::vector<MoveRecord> via;
  BraidWord word;
};

// ensure the neighbor word is freely cyclically reduced for keying
void reduce_tail(Neighbor& nb) {
  BraidWord r = free_cyclic_reduce(nb.word);
  if (!(r == nb.word)) {
    nb.via.push_back(make_conjugate_record({}));
    nb.word = r;
  }
}

struct ExpandOpts {
  bool negative_destabs = true;
  bool slides = false;   // relation/commute/insert word rewrites
  size_t max_len = 512;  // cap on word growth when inserting
};

std::vector<Neighbor> expand(const BraidWord& w, const ExpandOpts& opts) {
  std::vector<Neighbor> out;
  if (w.strands >= 2) {
    for (int sign : {+1, -1}) {
      if (sign < 0 && !opts.negative_destabs) continue;
      if (auto d = destabilize(w, sign, 4000)) {
        Neighbor nb{d->second.records, d->first};
        reduce_tail(nb);
        out.push_back(std::move(nb));
      }
    }
  }
  const int n = w.strands;
  const int len = static_cast<int>(w.letters.size());
  for (int r = 0; r < len; ++r) {
    std::vector<int> prefix(w.letters.begin(), w.letters.begin() + r);
    BraidWord v = r ? conjugate(w, prefix) : w;
    if (static_cast<int>(v.letters.size()) != len) continue;  // degenerate

    auto try_slide = [&](MoveRecord rec) {
      Neighbor nb;
      if (r) nb.via.push_back(make_conjugate_record(prefix));
      nb.via.push_back(rec);
      try {
        nb.word = apply_move(v, rec);
      } catch (const BadWord&) {
        return;
      }
      reduce_tail(nb);
      out.push_back(std::move(nb));
    };

    // exchange template: exactly two opposite sigma_{n-1} letters, one last
    int i = -1, j = -1, extra = 0;
    for (int k = 0; k < len; ++k) {
      if (std::abs(v.letters[k]) != n - 1) continue;
      if (i < 0)
        i = k;
      else if (j < 0)
        j = k;
      else
        ++extra;
    }
    if (!extra && j == len - 1 && i >= 0 && v.letters[i] == -v.letters[j])
      try_slide(make_exchange_record(i, j));

    if (!opts.slides) continue;
    for (int p = 0; p + 1 < len; ++p) {
      int a = v.letters[p], b = v.letters[p + 1];
      if (std::abs(std::abs(a) - std::abs(b)) >= 2)
        try_slide(make_slide_record(SlideOp::commute, p));
      if (p + 2 < len)
        try_slide(make_slide_record(SlideOp::braid_relation, p));
    }
    // a bare insertion cancels under free reduction, so pair each insert
    // with a braid relation consuming one of the inserted letters
    if (w.letters.size() + 2 <= opts.max_len) {
      for (int p = 0; p <= len; ++p) {
        for (int g = 1; g < n; ++g) {
          for (int s : {+1, -1}) {
            MoveRecord ins = make_slide_record(SlideOp::free_insert, p, s * g);
            BraidWord u;
            try {
              u = apply_move(v, ins);
            } catch (const BadWord&) {
              continue;
            }
            int qmax = std::min(p + 1, static_cast<int>(u.letters.size()) - 3);
            for (int q = std::max(0, p - 2); q <= qmax; ++q) {
              MoveRecord rel = make_slide_record(SlideOp::braid_relation, q);
              Neighbor nb;
              if (r) nb.via.push_back(make_conjugate_record(prefix));
              nb.via.push_back(ins);
              nb.via.push_back(rel);
              try {
                nb.word = apply_move(u, rel);
              } catch (const BadWord&) {
                continue;
              }
              reduce_tail(nb);
              out.push_back(std::move(nb));
            }
          }
        }
      }
    }
  }
  return out;
}

struct Node {
  BraidWord word;
  Key parent;
  std::vector<MoveRecord> via;
  bool root = false;
};

struct Search {
  std::map<Key, Node> nodes;
  long visited = 0;
  bool exhausted = false;

  // best-first on (strands, length, key); goal stops the search early
  std::optional<Key> run(const BraidWord& start, long budget,
                         const ExpandOpts& opts,
                         const std::function<bool(const BraidWord&)>& goal) {
    auto cmp = [](const std::pair<Key, size_t>& a,
                  const std::pair<Key, size_t>& b) {
      if (a.first.first != b.first.first) return a.first.first > b.first.first;
      if (a.second != b.second) return a.second > b.second;
      return a.first.second > b.first.second;
    };
    std::priority_queue<std::pair<Key, size_t>,
                        std::vector<std::pair<Key, size_t>>, decltype(cmp)>
        queue(cmp);
    BraidWord w0 = free_cyclic_reduce(start);
    Key k0 = canon_key(w0);
    Node root{w0, {}, {}, true};
    if (!(w0 == start)) root.via.push_back(make_conjugate_record({}));
    nodes.emplace(k0, std::move(root));
    queue.push({k0, w0.letters.size()});
    visited = 1;
    while (!queue.empty()) {
      Key cur = queue.top().first;
      queue.pop();
      BraidWord w = nodes.at(cur).word;
      if (goal && goal(w)) return cur;
      for (Neighbor& nb : expand(w, opts)) {
        Key k = canon_key(nb.word);
        if (nodes.count(k)) continue;
        if (visited >= budget) {
          exhausted = true;
          return std::nullopt;
        }
        ++visited;
        nodes.emplace(k, Node{nb.word, cur, nb.via, false});
        queue.push({k, nb.word.letters.size()});
      }
    }
    return std::nullopt;
  }

  std::vector<MoveRecord> path_to(const Key& k) const {
    std::vector<std::vector<MoveRecord>> segs;
    Key cur = k;
    while (true) {
      const Node& nd = nodes.at(cur);
      segs.push_back(nd.via);
      if (nd.root) break;
      cur = nd.parent;
    }
    std::vector<MoveRecord> out;
    for (auto it = segs.rbegin(); it != segs.rend(); ++it)
      out.insert(out.end(), it->begin(), it->end());
    return out;
  }
};

}  // namespace

ReduceResult reduce(const BraidWord& w, long budget) {
  validate(w);
  Search search;
  search.run(w, budget, ExpandOpts{}, nullptr);
  const Key* best = nullptr;
  for (const auto& [k, nd] : search.nodes) {
    if (!best || k.first < best->first ||
        (k.first == best->first && k.second.size() < best->second.size()) ||
        (k.first == best->first && k.second.size() == best->second.size() &&
         k.second < best->second))
      best = &k;
  }
  ReduceResult res;
  res.transcript.start = w;
  res.transcript.records = search.path_to(*best);
  res.transcript.end = search.nodes.at(*best).word;
  res.word = res.transcript.end;
  res.budget_exhausted = search.exhausted;
  res.budget_used = search.visited;
  if (!transcript_valid(res.transcript))
    throw BadWord("reduce: transcript replay mismatch");
  return res;
}

UnlinkResult is_unlink_reducible(const BraidWord& w, long budget) {
  int m = component_count(w);
  ReduceResult r = reduce(w, budget);
  if (r.word.strands == m && r.word.letters.empty())
    return {true, r.transcript};
  return {false, r.transcript};
}

ReorderResult reorder_transcript(const Transcript& t, long budget) {
  if (!transcript_valid(t)) throw BadWord("reorder: transcript does not replay");
  long p = 0;
  for (const MoveRecord& r : t.records) {
    if (r.kind == MoveKind::stabilize)
      throw BadWord("reorder: stabilizations unsupported");
    if (r.kind == MoveKind::destabilize && r.sign < 0) ++p;
  }
  // already ordered? (no other move after the first negative destab)
  bool tail = true, ordered = true;
  for (auto it = t.records.rbegin(); it != t.records.rend(); ++it) {
    bool neg = it->kind == MoveKind::destabilize && it->sign < 0;
    if (neg && !tail) {
      ordered = false;
      break;
    }
    if (!neg) tail = false;
  }
  if (ordered) return {t, true};

  // search transversal moves (conjugation, slides, exchange, destab(+))
  // from the start; goal: p trailing negative destabs land conjugate to
  // the original end
  ExpandOpts opts;
  opts.negative_destabs = false;
  opts.slides = true;
  opts.max_len = t.start.letters.size() + 8;
  std::vector<MoveRecord> neg_records;
  BraidWord final_word{1, {}};
  auto goal = [&](const BraidWord& x) {
    if (x.strands != t.end.strands + p) return false;
    if (exponent_sum(x) != exponent_sum(t.end) - p) return false;
    BraidWord cur = x;
    std::vector<MoveRecord> neg;
    for (long i = 0; i < p; ++i) {
      auto d = destabilize(cur, -1, 4000);
      if (!d) return false;
      neg.insert(neg.end(), d->second.records.begin(),
                 d->second.records.end());
      cur = d->first;
    }
    if (conjugate_closed(cur, t.end, 4000).verdict != ConjVerdict::yes)
      return false;
    neg_records = std::move(neg);
    final_word = cur;
    return true;
  };
  Search search;
  std::optional<Key> hit = search.run(t.start, budget, opts, goal);
  if (!hit) return {t, false};
  ReorderResult res;
  res.transcript.start = t.start;
  res.transcript.records = search.path_to(*hit);
  res.transcript.records.insert(res.transcript.records.end(),
                                neg_records.begin(), neg_records.end());
  res.transcript.end = final_word;
  res.reordered = true;
  if (!transcript_valid(res.transcript))
    throw BadWord("reorder: transcript replay mismatch");
  return res;
}

}  // namespace braidlab
