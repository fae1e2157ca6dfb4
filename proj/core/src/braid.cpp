#include "swlink/braid.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace swlink {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 2)
        throw std::domain_error("braid word requires strands >= 2, got " +
                                std::to_string(strands_));
    for (const auto& letter : letters_) {
        if (letter.index < 1 || letter.index > strands_ - 1)
            throw std::out_of_range("generator index " + std::to_string(letter.index) +
                                    " outside [1, " + std::to_string(strands_ - 1) + "]");
        if (letter.sign != 1 && letter.sign != -1)
            throw std::invalid_argument("generator sign must be +1 or -1");
    }
}

PolyMatrix::PolyMatrix(std::size_t size, std::vector<std::string> variables)
    : size_(size), vars_(std::move(variables)) {
    if (size_ < 1) throw std::domain_error("matrix size must be >= 1");
    entries_.assign(size_ * size_, LaurentPolynomial(vars_));
}

PolyMatrix PolyMatrix::identity(std::size_t size, std::vector<std::string> variables) {
    PolyMatrix m(size, std::move(variables));
    for (std::size_t i = 0; i < size; ++i)
        m.at(i, i) = LaurentPolynomial::constant(m.vars_, 1);
    return m;
}

const LaurentPolynomial& PolyMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= size_ || col >= size_) throw std::out_of_range("matrix index out of range");
    return entries_[row * size_ + col];
}

LaurentPolynomial& PolyMatrix::at(std::size_t row, std::size_t col) {
    if (row >= size_ || col >= size_) throw std::out_of_range("matrix index out of range");
    return entries_[row * size_ + col];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& other) const {
    if (size_ != other.size_)
        throw std::invalid_argument("matrix sizes differ: " + std::to_string(size_) +
                                    " vs " + std::to_string(other.size_));
    if (vars_ != other.vars_)
        throw std::invalid_argument("matrix variable lists differ");
    PolyMatrix out(size_, vars_);
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t k = 0; k < size_; ++k) {
            const LaurentPolynomial& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < size_; ++j) {
                const LaurentPolynomial& bkj = other.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) = out.at(i, j) + aik * bkj;
            }
        }
    }
    return out;
}

const std::vector<std::string>& burau_vars() {
    static const std::vector<std::string> vars{"t"};
    return vars;
}

PolyMatrix burau_generator(int strands, int index, int sign) {
    if (strands < 2)
        throw std::domain_error("burau_generator requires strands >= 2");
    if (index < 1 || index > strands - 1)
        throw std::out_of_range("generator index " + std::to_string(index) +
                                " outside [1, " + std::to_string(strands - 1) + "]");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("generator sign must be +1 or -1");

    const std::size_t m = static_cast<std::size_t>(strands - 1);
    PolyMatrix mat = PolyMatrix::identity(m, burau_vars());
    const std::size_t row = static_cast<std::size_t>(index - 1);
    auto t_pow = [](int e, Int c) {
        return LaurentPolynomial::monomial(burau_vars(), {e}, std::move(c));
    };
    if (sign == 1) {
        // row `index`: (i, i-1) = t, (i, i) = -t, (i, i+1) = 1, truncated at
        // the matrix boundary
        if (index >= 2) mat.at(row, row - 1) = t_pow(1, 1);
        mat.at(row, row) = t_pow(1, -1);
        if (index <= strands - 2) mat.at(row, row + 1) = t_pow(0, 1);
    } else {
        // inverse: (i, i-1) = 1, (i, i) = -t^-1, (i, i+1) = t^-1
        if (index >= 2) mat.at(row, row - 1) = t_pow(0, 1);
        mat.at(row, row) = t_pow(-1, -1);
        if (index <= strands - 2) mat.at(row, row + 1) = t_pow(-1, 1);
    }
    return mat;
}

PolyMatrix braid_matrix(const BraidWord& word) {
    const std::size_t m = static_cast<std::size_t>(word.strands() - 1);
    PolyMatrix product = PolyMatrix::identity(m, burau_vars());
    for (const auto& letter : word.letters())
        product = product * burau_generator(word.strands(), letter.index, letter.sign);
    return product;
}

BraidWord torus_family_braid(int p, int q) {
    if (p < 1) throw std::domain_error("torus_family_braid requires p >= 1, got " +
                                       std::to_string(p));
    if (q < 2) throw std::domain_error("torus_family_braid requires q >= 2, got " +
                                       std::to_string(q));
    std::vector<BraidLetter> letters;
    letters.reserve(static_cast<std::size_t>(q - 2) + static_cast<std::size_t>(2 * p - 1));
    for (int i = q - 1; i >= 2; --i) letters.push_back({i, +1});
    for (int k = 0; k < 2 * p - 1; ++k) letters.push_back({1, +1});
    return BraidWord(q, std::move(letters));
}

namespace {

// det of the minor on rows [n - popcount(mask), n) and the column set
// `mask`, expanded along the topmost remaining row.
LaurentPolynomial minor_det(const PolyMatrix& m, std::uint32_t mask,
                            std::unordered_map<std::uint32_t, LaurentPolynomial>& memo) {
    if (mask == 0) return LaurentPolynomial::constant(m.variables(), 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    const std::size_t n = m.size();
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    LaurentPolynomial sum(m.variables());
    int position = 0;
    for (std::size_t col = 0; col < n; ++col) {
        const std::uint32_t bit = std::uint32_t{1} << col;
        if (!(mask & bit)) continue;
        const LaurentPolynomial& entry = m.at(row, col);
        if (!entry.is_zero()) {
            LaurentPolynomial contribution = entry * minor_det(m, mask & ~bit, memo);
            sum = (position % 2 == 0) ? sum + contribution : sum - contribution;
        }
        ++position;
    }
    memo.emplace(mask, sum);
    return sum;
}

}  // namespace

LaurentPolynomial determinant(const PolyMatrix& m) {
    if (m.size() > 25)
        throw std::domain_error("determinant supports size <= 25, got " +
                                std::to_string(m.size()));
    std::unordered_map<std::uint32_t, LaurentPolynomial> memo;
    const std::uint32_t full =
        (m.size() == 32) ? ~std::uint32_t{0}
                         : ((std::uint32_t{1} << m.size()) - 1);
    return minor_det(m, full, memo);
}

}  // namespace swlink
