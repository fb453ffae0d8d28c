#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace triortho {

/// Dense bit vector over GF(2), packed into 64-bit words.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVector from_string(std::string_view s);
    static BitVector from_support(std::size_t len, const std::vector<std::size_t>& support);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask;
        else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    bool operator==(const BitVector& other) const = default;

    std::size_t weight() const;
    bool any() const;
    /// Inner product mod 2.
    int dot(const BitVector& other) const;

    std::vector<std::size_t> support() const;
    std::string to_string() const;

    /// Support-lexicographic order: compare sorted support tuples, so a vector
    /// whose first set bit comes earlier is smaller. This is the tie-break
    /// order used for canonical representatives throughout.
    static bool support_less(const BitVector& a, const BitVector& b);

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense GF(2) matrix, row-major, one BitVector per row.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix from_strings(const std::vector<std::string>& rows);
    static BitMatrix from_rows(std::vector<BitVector> rows);
    static BitMatrix identity(std::size_t n);
    /// 0 x cols matrix (useful as a trivial subspace).
    static BitMatrix empty(std::size_t cols) { return BitMatrix(0, cols); }

    std::size_t num_rows() const { return rows_.size(); }
    std::size_t num_cols() const { return cols_; }

    const BitVector& row(std::size_t i) const { return rows_[i]; }
    BitVector& row(std::size_t i) { return rows_[i]; }
    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }

    void append_row(BitVector v);
    /// Rows of `this` followed by rows of `other`.
    BitMatrix vstack(const BitMatrix& other) const;

    bool operator==(const BitMatrix& other) const = default;

    std::string to_string() const;

  private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    BitMatrix reduced;                 ///< full row count preserved; zero rows at the bottom
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;   ///< strictly increasing pivot columns
};

RrefResult rref(const BitMatrix& m);

/// Reduced-row-echelon span with membership queries; the workhorse for
/// coset enumeration and span comparisons.
class Span {
  public:
    Span() = default;
    explicit Span(const BitMatrix& m);

    std::size_t rank() const { return rows_.num_rows(); }
    std::size_t num_cols() const { return rows_.num_cols(); }
    const BitMatrix& basis() const { return rows_; }

    bool contains(const BitVector& v) const;
    bool contains_rows(const BitMatrix& m) const;
    /// v reduced modulo the span (zero iff contained).
    BitVector reduce(BitVector v) const;

  private:
    BitMatrix rows_;                   // RREF basis, no zero rows
    std::vector<std::size_t> pivots_;
};

std::size_t gf2_rank(const BitMatrix& m);
bool spans_equal(const BitMatrix& a, const BitMatrix& b);

/// product a . b^T over GF(2) (rows(a) x rows(b)).
BitMatrix gf2_gram(const BitMatrix& a, const BitMatrix& b);
/// Solve x . m = v for x given m full rank in its row space; returns (found, x).
std::pair<bool, BitVector> solve_row_combination(const BitMatrix& m, const BitVector& v);
/// Inverse of a square, invertible GF(2) matrix.
BitMatrix gf2_inverse(const BitMatrix& m);

/// Full-rank basis of { v : m . v^T = 0 }, in RREF. Row count = cols - rank(m).
BitMatrix dual_basis(const BitMatrix& m);

/// true iff m . m^T = 0 (all pairwise and self inner products vanish).
bool is_self_orthogonal(const BitMatrix& m);

/// Rows extending a basis of span(d) to a basis of span(c).
/// Throws SubspaceViolation unless span(d) is contained in span(c).
BitMatrix quotient_basis(const BitMatrix& c, const BitMatrix& d);

/// Search for r x n full-rank matrices B with [g0; B] self-orthogonal and
/// rank(g0) + r = rank([g0; B]). B rows are GF(2) combinations of `candidates`
/// rows; combinations are enumerated as masks in increasing order and r-tuples
/// of masks in lexicographic order, so results are deterministic.
/// Throws NoExtension when no extension of size r exists within the budget.
std::vector<BitMatrix> find_self_orthogonal_extensions(const BitMatrix& g0,
                                                       const BitMatrix& candidates,
                                                       std::size_t r,
                                                       std::size_t limit,
                                                       std::uint64_t tuple_budget = std::uint64_t(1) << 26);

/// Matrix text format: one '0'/'1' line per row; blank lines and '#' comments
/// ignored. Used by every CLI subcommand.
BitMatrix read_matrix_text(std::istream& in);
BitMatrix read_matrix_file(const std::string& path);
void write_matrix_text(std::ostream& out, const BitMatrix& m);

}  // namespace triortho
