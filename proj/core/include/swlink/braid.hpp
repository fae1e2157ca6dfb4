#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "swlink/laurent.hpp"

namespace swlink {

/// One crossing: generator index i in [1, strands-1], sign +1 or -1.
struct BraidLetter {
    int index = 1;
    int sign = +1;

    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A word in the braid group on `strands` strands, as a finite sequence of
/// signed generator letters. Indices are validated on construction.
class BraidWord {
public:
    BraidWord(int strands, std::vector<BraidLetter> letters);

    int strands() const { return strands_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<BraidLetter> letters_;
};

/// The integer tuple (p, q, n, r): p and q select the braid/link family, n
/// and r the elliptic-surface multiplicities. Each operation documents the
/// sub-range it accepts; the struct itself stores anything.
struct FamilyParams {
    int p = 1;
    int q = 2;
    int n = 1;
    int r = 1;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Square matrix over a shared Laurent ring. Entries are kept in one
/// variable list; mixed-ring assignment is rejected by the arithmetic.
class PolyMatrix {
public:
    /// Zero matrix. size must be >= 1.
    PolyMatrix(std::size_t size, std::vector<std::string> variables);
    static PolyMatrix identity(std::size_t size, std::vector<std::string> variables);

    std::size_t size() const { return size_; }
    const std::vector<std::string>& variables() const { return vars_; }

    const LaurentPolynomial& at(std::size_t row, std::size_t col) const;
    LaurentPolynomial& at(std::size_t row, std::size_t col);

    PolyMatrix operator*(const PolyMatrix& other) const;

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

private:
    std::size_t size_;
    std::vector<std::string> vars_;
    std::vector<LaurentPolynomial> entries_;  // row-major
};

/// Variable list of the braid-matrix ring: {"t"}.
const std::vector<std::string>& burau_vars();

/// The (strands-1)x(strands-1) matrix representing generator `index` over
/// Z[t^±1]: for sign +1 it is the identity except in row `index`, where
/// (index, index-1) = t, (index, index) = -t, (index, index+1) = 1 (1-based,
/// out-of-range columns truncated). For sign -1 it is the exact inverse,
/// with entries in t^-1.
PolyMatrix burau_generator(int strands, int index, int sign);

/// Left-to-right product of generator matrices in the order the letters
/// appear in the word; the empty word gives the identity. This order
/// convention is the library-wide contract.
PolyMatrix braid_matrix(const BraidWord& word);

/// The q-strand word sigma_{q-1} sigma_{q-2} ... sigma_2 sigma_1^{2p-1}
/// (all positive), of length (q-2) + (2p-1). Requires p >= 1, q >= 2.
BraidWord torus_family_braid(int p, int q);

/// Exact determinant over the Laurent ring, computed division-free by
/// expansion along rows with memoization over column subsets
/// (O(2^m * m) ring operations). Agrees with cofactor expansion wherever
/// that is feasible. Supported up to size 25.
LaurentPolynomial determinant(const PolyMatrix& m);

}  // namespace swlink
