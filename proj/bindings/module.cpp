// Thin python bindings over the braid engine; transcripts cross the
// boundary as JSON strings (same schema as the CLI).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidlab/braid.hpp"
#include "braidlab/cabling.hpp"
#include "braidlab/canonical.hpp"
#include "braidlab/homfly.hpp"
#include "braidlab/json_io.hpp"
#include "braidlab/moves.hpp"
#include "braidlab/reduce.hpp"

namespace py = pybind11;
using namespace braidlab;

namespace {

const char* verdict_name(ConjVerdict v) {
  switch (v) {
    case ConjVerdict::yes: return "yes";
    case ConjVerdict::no: return "no";
    case ConjVerdict::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "closed-braid word engine";

  py::register_exception<BadWord>(m, "BadWord");

  py::class_<BraidWord>(m, "BraidWord")
      .def(py::init([](int strands, std::vector<int> letters) {
             BraidWord w{strands, std::move(letters)};
             validate(w);
             return w;
           }),
           py::arg("strands"), py::arg("letters"))
      .def_readonly("strands", &BraidWord::strands)
      .def_readonly("letters", &BraidWord::letters)
      .def("__eq__", [](const BraidWord& a, const BraidWord& b) {
        return a == b;
      })
      .def("__repr__", [](const BraidWord& w) {
        return "BraidWord(" + std::to_string(w.strands) + ", \"" +
               print_word(w) + "\")";
      });

  m.def("parse_word", &parse_word, py::arg("text"), py::arg("strands"));
  m.def("print_word", &print_word);
  m.def("exponent_sum", &exponent_sum);
  m.def("component_count", &component_count);
  m.def("bennequin", &bennequin);
  m.def("link_bennequin",
        [](const BraidWord& w) { return link_bennequin(w).twice; },
        "2*beta per component");
  m.def("free_cyclic_reduce", &free_cyclic_reduce);
  m.def("conjugate", &conjugate);

  m.def("equal_as_braids", &equal_as_braids);
  m.def("conjugate_closed",
        [](const BraidWord& a, const BraidWord& b, long budget) {
          ConjugacyResult r = conjugate_closed(a, b, budget);
          return py::make_tuple(verdict_name(r.verdict), r.witness);
        },
        py::arg("w1"), py::arg("w2"), py::arg("budget") = 4000);

  m.def("homfly",
        [](const BraidWord& w, int budget) {
          return homfly(w, budget).triples();
        },
        py::arg("w"), py::arg("budget") = 24,
        "sorted (a_exp, z_exp, coeff) triples");
  m.def("mfw",
        [](const BraidWord& w, int budget) {
          return mfw_bound(homfly(w, budget));
        },
        py::arg("w"), py::arg("budget") = 24);

  m.def("iterated_word", [](const std::string& spec) {
    return iterated_word(parse_cable_spec(spec));
  });
  m.def("torus_braid", &torus_braid, py::arg("e"), py::arg("p"), py::arg("q"));
  m.def("cable_invariants", [](const std::string& spec) {
    CableInvariants v = invariants(parse_cable_spec(spec));
    py::dict d;
    d["a_r"] = v.a_r;
    d["b_r"] = v.b_r;
    d["d"] = v.d;
    d["chi"] = v.chi;
    d["beta_max"] = v.beta_max;
    return d;
  });
  m.def("verify_cable", [](const std::string& spec) {
    CableReport r = verify_spec(parse_cable_spec(spec));
    py::dict d;
    d["all_ok"] = r.all_ok();
    d["detail"] = r.detail;
    return d;
  });

  m.def("reduce",
        [](const BraidWord& w, long budget) {
          ReduceResult r = reduce(w, budget);
          py::dict d;
          d["word"] = r.word;
          d["transcript"] = transcript_to_json(r.transcript).dump();
          d["budget_exhausted"] = r.budget_exhausted;
          d["budget_used"] = r.budget_used;
          return d;
        },
        py::arg("w"), py::arg("budget") = 20000);
  m.def("is_unlink_reducible",
        [](const BraidWord& w, long budget) {
          UnlinkResult r = is_unlink_reducible(w, budget);
          return py::make_tuple(r.reducible,
                                transcript_to_json(r.transcript).dump());
        },
        py::arg("w"), py::arg("budget") = 20000);
  m.def("replay_transcript",
        [](const std::string& transcript_json) {
          Transcript t =
              transcript_from_json(nlohmann::json::parse(transcript_json));
          return py::make_tuple(transcript_valid(t),
                                replay(t.start, t.records));
        },
        "replay a CLI-format transcript; returns (valid, end word)");
}
