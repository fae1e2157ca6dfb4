#pragma once

#include <filesystem>
#include <string>

#include "swlink/braid.hpp"
#include "swlink/laurent.hpp"

namespace swlink {

/// Canonical polynomial wire format, shared by every CLI command:
///
///   {"vars":["x","t"],"terms":[{"exp":[0,0],"coeff":"1"},{"exp":[1,3],"coeff":"1"}]}
///
/// Terms are sorted ascending-lexicographically by exponent vector, zero
/// coefficients never appear, and coefficients are decimal strings so
/// arbitrary precision survives. The encoding is bit-exact: equal
/// polynomials serialize to identical bytes. No trailing newline.
std::string to_canonical_json(const LaurentPolynomial& p);

/// Inverse of to_canonical_json. Input is canonicalized on read (duplicate
/// exponent vectors merge, zero coefficients drop); structural problems
/// (missing keys, arity mismatches, malformed coefficients) throw
/// std::runtime_error with the reason.
LaurentPolynomial polynomial_from_json(const std::string& text);

/// Reads one polynomial from a file in the canonical format.
LaurentPolynomial load_polynomial(const std::filesystem::path& path);

/// Braid word wire format: {"strands": q, "letters": [[i, sign], ...]}.
std::string to_json(const BraidWord& word);
BraidWord braid_word_from_json(const std::string& text);

}  // namespace swlink
