#pragma once

#include <string>
#include <string_view>

#include "stellar/complex.hpp"
#include "stellar/inducedness.hpp"
#include "stellar/move_search.hpp"
#include "stellar/pair_engine.hpp"

namespace stellar {

/// {"facets": [[label, ...], ...], "name": string}
struct ComplexDocument {
  std::string name;
  SimplicialComplex complex;
};

/// Throws MalformedInput with a line/column or field path on schema errors.
ComplexDocument parse_complex_document(std::string_view text);

/// Canonical form: sorted keys, facets sorted and one per line, two-space
/// indent, trailing newline. Serializing a parsed canonical document
/// reproduces it byte for byte.
std::string serialize_complex(const SimplicialComplex& complex, std::string_view name = "");

/// {"moves": [{"op": "subdivide"|"contract", "edge": [a, b],
///             "new_label"?: l, "survivor"?: l}, ...],
///  "target_map"?: {from: to, ...}}
MoveScript parse_script(std::string_view text);
std::string serialize_script(const MoveScript& script);

std::string serialize_report(const PipelineReport& report);
std::string serialize_witness(const InducednessWitness& witness);

/// Splits "a,b{c,d}@0" at top-level commas and interns each token.
Simplex parse_simplex_arg(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace stellar
