// braidlab: closed-braid engine CLI. Words are signed-integer letters
// ("1 -2 1"), specs are "+(p,q);-(p,q)…"; all output is sorted-key JSON.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidlab/braid.hpp"
#include "braidlab/cabling.hpp"
#include "braidlab/canonical.hpp"
#include "braidlab/homfly.hpp"
#include "braidlab/json_io.hpp"
#include "braidlab/moves.hpp"
#include "braidlab/reduce.hpp"

using nlohmann::json;
using namespace braidlab;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitBudget = 2;

struct WordArgs {
  int strands = 0;
  std::string word;
  std::string in;

  BraidWord get(const char* which = "word") const {
    if (!in.empty()) {
      std::ifstream f(in);
      if (!f) throw BadWord("cannot open " + in);
      json j;
      f >> j;
      if (j.contains(which)) return word_from_json(j.at(which));
      return word_from_json(j);
    }
    if (strands <= 0) throw BadWord("--strands required");
    return parse_word(word, strands);
  }
};

long default_budget(long fallback) {
  if (const char* env = std::getenv("BRAIDLAB_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json summary_of(const BraidWord& w) {
  return json{{"n", w.strands},
              {"e", exponent_sum(w)},
              {"beta", exponent_sum(w) - w.strands}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-braid word engine"};
  app.require_subcommand(1);

  WordArgs wa;
  std::string word2, spec_text, move_json;
  long budget = 0;
  unsigned seed = 0;

  auto add_word_flags = [&](CLI::App* sub, bool with_in = true) {
    sub->add_option("--strands", wa.strands, "strand count");
    sub->add_option("--word", wa.word, "letters, e.g. \"1 -2 1\"");
    if (with_in) sub->add_option("--in", wa.in, "JSON input file");
    sub->add_option("--seed", seed, "search tie-break seed");
    sub->add_option("--budget", budget, "search budget override");
  };

  auto* c_inv = app.add_subcommand("invariants", "n, e, beta, components");
  add_word_flags(c_inv);
  auto* c_eq = app.add_subcommand("eq", "equality as braid group elements");
  add_word_flags(c_eq);
  c_eq->add_option("--word2", word2, "second word")->required();
  auto* c_conj = app.add_subcommand("conj", "conjugacy of closures");
  add_word_flags(c_conj);
  c_conj->add_option("--word2", word2, "second word")->required();
  auto* c_move = app.add_subcommand("move", "apply one move record");
  add_word_flags(c_move);
  c_move->add_option("--move", move_json, "move record JSON")->required();
  auto* c_replay = app.add_subcommand("replay", "replay a transcript");
  c_replay->add_option("--in", wa.in, "transcript JSON file")->required();
  auto* c_cable = app.add_subcommand("cable", "iterated torus braid word");
  c_cable->add_option("--spec", spec_text, "cable spec")->required();
  auto* c_vcable = app.add_subcommand("verify-cable", "check closed forms");
  c_vcable->add_option("--spec", spec_text, "cable spec")->required();
  auto* c_homfly = app.add_subcommand("homfly", "HOMFLY polynomial");
  add_word_flags(c_homfly);
  auto* c_mfw = app.add_subcommand("mfw", "Morton-Franks-Williams bound");
  add_word_flags(c_mfw);
  auto* c_reduce = app.add_subcommand("reduce", "destabilization search");
  add_word_flags(c_reduce);
  auto* c_reorder = app.add_subcommand("reorder", "negative destabs last");
  c_reorder->add_option("--in", wa.in, "transcript JSON file")->required();
  c_reorder->add_option("--budget", budget, "search budget override");
  auto* c_family = app.add_subcommand("family", "wrapped-strand word family");
  add_word_flags(c_family);
  int family_k = 3;
  std::string family_s;
  c_family->add_option("--word2", family_s, "braid S (same strands)")
      ->required();
  c_family->add_option("--count", family_k, "number of extra words");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_inv->parsed()) {
      BraidWord w = wa.get();
      json out{{"n", w.strands},
               {"e", exponent_sum(w)},
               {"components", component_count(w)}};
      if (component_count(w) == 1) out["beta"] = bennequin(w);
      json twice = json::array();
      for (int t : link_bennequin(w).twice) twice.push_back(t);
      out["beta2_components"] = twice;
      emit(out);
    } else if (c_eq->parsed()) {
      BraidWord w = wa.get();
      emit(json{{"equal", equal_as_braids(w, parse_word(word2, w.strands))}});
    } else if (c_conj->parsed()) {
      BraidWord w = wa.get();
      long b = budget ? budget : default_budget(4000);
      ConjugacyResult r = conjugate_closed(w, parse_word(word2, w.strands), b);
      const char* verdict = r.verdict == ConjVerdict::yes      ? "yes"
                            : r.verdict == ConjVerdict::no     ? "no"
                                                               : "budget_exhausted";
      json out{{"verdict", verdict}};
      if (r.verdict == ConjVerdict::yes) out["witness"] = r.witness;
      emit(out);
      if (r.verdict == ConjVerdict::budget_exhausted) return kExitBudget;
    } else if (c_move->parsed()) {
      BraidWord w = wa.get();
      MoveRecord r = record_from_json(json::parse(move_json));
      emit(json{{"word", word_to_json(apply_move(w, r))}});
    } else if (c_replay->parsed()) {
      std::ifstream f(wa.in);
      if (!f) throw BadWord("cannot open " + wa.in);
      json j;
      f >> j;
      Transcript t = transcript_from_json(j);
      BraidWord end = replay(t.start, t.records);
      emit(json{{"valid", end == t.end}, {"end", word_to_json(end)}});
      if (!(end == t.end)) return kExitDomain;
    } else if (c_cable->parsed()) {
      CableSpec spec = parse_cable_spec(spec_text);
      BraidWord w = iterated_word(spec);
      CableInvariants inv = invariants(spec);
      emit(json{{"word", word_to_json(w)},
                {"invariants",
                 json{{"a_r", inv.a_r},
                      {"b_r", inv.b_r},
                      {"d", inv.d},
                      {"chi", inv.chi},
                      {"beta_max", inv.beta_max}}}});
    } else if (c_vcable->parsed()) {
      CableSpec spec = parse_cable_spec(spec_text);
      CableReport rep = verify_spec(spec);
      CableInvariants inv = invariants(spec);
      emit(json{{"all_ok", rep.all_ok()},
                {"strands_ok", rep.strands_ok},
                {"e_ok", rep.e_ok},
                {"letters_ok", rep.letters_ok},
                {"bennequin_ok", rep.bennequin_ok},
                {"components_ok", rep.components_ok},
                {"beta_max", inv.beta_max},
                {"detail", rep.detail}});
      if (!rep.all_ok()) return kExitDomain;
    } else if (c_homfly->parsed() || c_mfw->parsed()) {
      BraidWord w = wa.get();
      int b = static_cast<int>(budget ? budget : default_budget(24));
      HomflyPoly p = homfly(w, b);
      if (c_homfly->parsed())
        emit(json{{"poly", poly_to_json(p)}, {"mfw", mfw_bound(p)}});
      else
        emit(json{{"mfw", mfw_bound(p)}});
    } else if (c_reduce->parsed()) {
      BraidWord w = wa.get();
      long b = budget ? budget : default_budget(20000);
      ReduceResult r = reduce(w, b);
      long neg = 0;
      for (const MoveRecord& rec : r.transcript.records)
        if (rec.kind == MoveKind::destabilize && rec.sign < 0) ++neg;
      emit(json{{"transcript", transcript_to_json(r.transcript)},
                {"summary", json{{"initial", summary_of(w)},
                                 {"final", summary_of(r.word)},
                                 {"neg_destabs", neg},
                                 {"budget_used", r.budget_used}}}});
      if (r.budget_exhausted) return kExitBudget;
    } else if (c_reorder->parsed()) {
      std::ifstream f(wa.in);
      if (!f) throw BadWord("cannot open " + wa.in);
      json j;
      f >> j;
      Transcript t = transcript_from_json(j);
      long b = budget ? budget : default_budget(20000);
      ReorderResult r = reorder_transcript(t, b);
      emit(json{{"reordered", r.reordered},
                {"transcript", transcript_to_json(r.transcript)}});
      if (!r.reordered) return kExitBudget;
    } else if (c_family->parsed()) {
      BraidWord r = wa.get();
      BraidWord s = parse_word(family_s, r.strands);
      json words = json::array();
      for (const BraidWord& w : family_generator(r, s, family_k))
        words.push_back(word_to_json(w));
      emit(json{{"words", words}});
    }
  } catch (const BadWord& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::string what = e.what();
    return what.find("budget") != std::string::npos ? kExitBudget
                                                    : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
