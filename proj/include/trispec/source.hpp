#pragma once

// Family sources for the command line: a file path, "-" for stdin, or a
// construction name:
//   kn:N         all triples on {1..N}
//   gcb:C,B      T_{C,B}
//   frob:A,N     three-block family with N triangles at level A
//   phi-lb:T     growth family with T triangles (T >= 81)
//   intro:K      the four-vertex families K = 1..4

#include <istream>
#include <string>

#include "trispec/family.hpp"

namespace trispec {

struct FamilySource {
    std::string spec;   // as given
    std::string text;   // family text; the hash input for manifests
    TriangleFamily family;
};

/// True when `spec` uses the construction-name syntax.
bool is_construction_name(const std::string& spec);

/// Builds a named construction. Throws std::invalid_argument for unknown or
/// malformed names and std::domain_error for out-of-range parameters.
TriangleFamily construct(const std::string& name);

/// The four-vertex families {123}, {123,124}, {123,124,134}, all four triples.
TriangleFamily intro_family(int k);

/// Resolves a name, "-" (reads `stdin_stream`), or a file path. Parse errors
/// propagate as ParseError; unreadable files throw std::ios_base::failure.
FamilySource load_source(const std::string& spec, std::istream& stdin_stream);

}  // namespace trispec
