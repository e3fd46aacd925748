#include "braidlab/json_io.hpp"

#include <stdexcept>

namespace braidlab {

namespace {

using nlohmann::json;

const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::conjugate: return "conjugate";
    case MoveKind::stabilize: return "stabilize";
    case MoveKind::destabilize: return "destabilize";
    case MoveKind::exchange: return "exchange";
    case MoveKind::flype: return "flype";
    case MoveKind::slide_step: return "slide_step";
  }
  throw BadWord("unknown move kind");
}

const char* slide_name(SlideOp op) {
  switch (op) {
    case SlideOp::commute: return "commute";
    case SlideOp::braid_relation: return "braid_relation";
    case SlideOp::free_cancel: return "free_cancel";
    case SlideOp::free_insert: return "free_insert";
  }
  throw BadWord("unknown slide op");
}

SlideOp slide_from_name(const std::string& s) {
  if (s == "commute") return SlideOp::commute;
  if (s == "braid_relation") return SlideOp::braid_relation;
  if (s == "free_cancel") return SlideOp::free_cancel;
  if (s == "free_insert") return SlideOp::free_insert;
  throw BadWord("bad slide op: " + s);
}

}  // namespace

json word_to_json(const BraidWord& w) {
  return json{{"strands", w.strands}, {"letters", w.letters}};
}

BraidWord word_from_json(const json& j) {
  BraidWord w;
  w.strands = j.at("strands").get<int>();
  w.letters = j.at("letters").get<std::vector<int>>();
  validate(w);
  return w;
}

json record_to_json(const MoveRecord& r) {
  json args = json::object();
  switch (r.kind) {
    case MoveKind::conjugate:
      args["by"] = r.by;
      break;
    case MoveKind::stabilize:
    case MoveKind::flype:
      args["sign"] = r.sign;
      break;
    case MoveKind::destabilize:
      args["sign"] = r.sign;
      args["pre_conj"] = r.pre_conj;
      break;
    case MoveKind::exchange:
      args["i"] = r.split_i;
      args["j"] = r.split_j;
      break;
    case MoveKind::slide_step:
      args["op"] = slide_name(r.slide_op);
      args["pos"] = r.pos;
      if (r.slide_op == SlideOp::free_insert) args["letter"] = r.ins_letter;
      break;
  }
  return json{{"kind", kind_name(r.kind)}, {"args", args}};
}

MoveRecord record_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const json& a = j.at("args");
  if (kind == "conjugate")
    return make_conjugate_record(a.at("by").get<std::vector<int>>());
  if (kind == "stabilize") return make_stabilize_record(a.at("sign").get<int>());
  if (kind == "destabilize")
    return make_destabilize_record(
        a.at("sign").get<int>(),
        a.value("pre_conj", std::vector<int>{}));
  if (kind == "exchange")
    return make_exchange_record(a.at("i").get<int>(), a.at("j").get<int>());
  if (kind == "flype") return make_flype_record(a.at("sign").get<int>());
  if (kind == "slide_step")
    return make_slide_record(slide_from_name(a.at("op").get<std::string>()),
                             a.at("pos").get<int>(), a.value("letter", 0));
  throw BadWord("bad move kind: " + kind);
}

json transcript_to_json(const Transcript& t) {
  json moves = json::array();
  for (const MoveRecord& r : t.records) moves.push_back(record_to_json(r));
  return json{{"start", word_to_json(t.start)},
              {"moves", moves},
              {"end", word_to_json(t.end)}};
}

Transcript transcript_from_json(const json& j) {
  Transcript t;
  t.start = word_from_json(j.at("start"));
  for (const json& m : j.at("moves")) t.records.push_back(record_from_json(m));
  t.end = word_from_json(j.at("end"));
  return t;
}

json spec_to_json(const CableSpec& spec) {
  json stages = json::array();
  for (const CableStage& s : spec.stages)
    stages.push_back(json{{"e", s.e}, {"p", s.p}, {"q", s.q}});
  return json{{"stages", stages}};
}

CableSpec spec_from_json(const json& j) {
  CableSpec spec;
  for (const json& s : j.at("stages"))
    spec.stages.push_back({s.at("e").get<int>(), s.at("p").get<int>(),
                           s.at("q").get<int>()});
  validate(spec);
  return spec;
}

json poly_to_json(const HomflyPoly& p) {
  json out = json::array();
  for (const auto& t : p.triples()) out.push_back(json{t[0], t[1], t[2]});
  return out;
}

}  // namespace braidlab
