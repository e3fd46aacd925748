#pragma once
// JSON (de)serialization for words, moves, transcripts, cable specs and
// HOMFLY polynomials. Keys are emitted sorted so output is byte-stable.

#include <string>

#include "json.hpp"

#include "braidlab/braid.hpp"
#include "braidlab/cabling.hpp"
#include "braidlab/homfly.hpp"
#include "braidlab/moves.hpp"

namespace braidlab {

nlohmann::json word_to_json(const BraidWord& w);
BraidWord word_from_json(const nlohmann::json& j);

nlohmann::json record_to_json(const MoveRecord& r);
MoveRecord record_from_json(const nlohmann::json& j);

nlohmann::json transcript_to_json(const Transcript& t);
Transcript transcript_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const CableSpec& spec);
CableSpec spec_from_json(const nlohmann::json& j);

// sorted [a_exp, z_exp, coeff] triples
nlohmann::json poly_to_json(const HomflyPoly& p);

}  // namespace braidlab
