#pragma once

// Semigroup and ideal files.
//
// Two encodings are accepted, detected by the first non-blank character:
//
//   structured:  {"ambient_dim": 3, "generators": [[0,1,0], [1,3,0], ...]}
//   plain text:  first line "n s", then s lines of n integers.
//
// Both list one generator per row. A generator matrix whose columns are the
// generators is therefore written transposed in the plain format. Ideal
// files use the key "exponents" instead of "generators". Lines starting
// with '#' are ignored in the plain format.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "affsemi/exactlin.hpp"
#include "affsemi/fsing.hpp"
#include "affsemi/semigroup.hpp"

namespace affsemi {

struct VectorFile {
  std::size_t ambient_dim = 0;
  std::vector<IntVec> rows;
};

/// Strict parse: ragged rows and non-integers raise ParseError.
VectorFile parse_vector_file(std::istream& in, const std::string& key);

/// Parses and minimalizes a semigroup. Negative entries raise ParseError;
/// zero generators and redundant generators are dropped with a warning.
AffineSemigroup parse_semigroup(std::istream& in, std::ostream& warnings);
AffineSemigroup load_semigroup(const std::filesystem::path& path, std::ostream& warnings);

/// Exponents must lie in A (PreconditionError otherwise).
MonomialIdeal parse_ideal(std::istream& in, const AffineSemigroup& A);
MonomialIdeal load_ideal(const std::filesystem::path& path, const AffineSemigroup& A);

/// Structured encoding of a semigroup, re-readable by parse_semigroup.
std::string semigroup_to_json(const AffineSemigroup& A);

}  // namespace affsemi
