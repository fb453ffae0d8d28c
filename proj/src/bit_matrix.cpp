#include "triortho/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "triortho/errors.hpp"

namespace triortho {

BitVector BitVector::from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') v.set(i, true);
        else if (s[i] != '0') throw ParseError("bit vector may contain only '0'/'1', got '" + std::string(1, s[i]) + "'");
    }
    return v;
}

BitVector BitVector::from_support(std::size_t len, const std::vector<std::size_t>& support) {
    BitVector v(len);
    for (std::size_t i : support) v.set(i, true);
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

std::size_t BitVector::weight() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
}

bool BitVector::any() const {
    for (std::uint64_t w : words_)
        if (w) return true;
    return false;
}

int BitVector::dot(const BitVector& other) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

bool BitVector::support_less(const BitVector& a, const BitVector& b) {
    // Word-wise: the first differing bit decides; the vector owning it is smaller.
    const std::size_t n = std::min(a.words_.size(), b.words_.size());
    for (std::size_t w = 0; w < n; ++w) {
        const std::uint64_t diff = a.words_[w] ^ b.words_[w];
        if (diff) {
            const int bit = std::countr_zero(diff);
            return (a.words_[w] >> bit) & 1;
        }
    }
    if (a.words_.size() != b.words_.size()) {
        const auto& longer = a.words_.size() > b.words_.size() ? a : b;
        for (std::size_t w = n; w < longer.words_.size(); ++w)
            if (longer.words_[w]) return &longer == &a;
    }
    return false;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    BitMatrix m;
    for (const auto& r : rows) m.append_row(BitVector::from_string(r));
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows) {
    BitMatrix m;
    for (auto& r : rows) m.append_row(std::move(r));
    return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::append_row(BitVector v) {
    if (rows_.empty() && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw DimensionMismatch("row length does not match matrix width");
    rows_.push_back(std::move(v));
}

BitMatrix BitMatrix::vstack(const BitMatrix& other) const {
    BitMatrix m = *this;
    if (m.num_rows() == 0 && m.cols_ == 0) m.cols_ = other.cols_;
    for (std::size_t i = 0; i < other.num_rows(); ++i) m.append_row(other.row(i));
    return m;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (const auto& r : rows_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res;
    res.reduced = m;
    const std::size_t rows = m.num_rows(), cols = m.num_cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (res.reduced.get(i, c)) { pivot = i; break; }
        }
        if (pivot == rows) continue;
        std::swap(res.reduced.row(r), res.reduced.row(pivot));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && res.reduced.get(i, c)) res.reduced.row(i) ^= res.reduced.row(r);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

Span::Span(const BitMatrix& m) {
    RrefResult rr = rref(m);
    rows_ = BitMatrix(0, m.num_cols());
    for (std::size_t i = 0; i < rr.rank; ++i) rows_.append_row(rr.reduced.row(i));
    pivots_ = std::move(rr.pivots);
}

BitVector Span::reduce(BitVector v) const {
    for (std::size_t i = 0; i < rows_.num_rows(); ++i)
        if (v.get(pivots_[i])) v ^= rows_.row(i);
    return v;
}

bool Span::contains(const BitVector& v) const { return !reduce(v).any(); }

bool Span::contains_rows(const BitMatrix& m) const {
    for (std::size_t i = 0; i < m.num_rows(); ++i)
        if (!contains(m.row(i))) return false;
    return true;
}

std::size_t gf2_rank(const BitMatrix& m) { return rref(m).rank; }

bool spans_equal(const BitMatrix& a, const BitMatrix& b) {
    Span sa(a), sb(b);
    return sa.rank() == sb.rank() && sa.contains_rows(b);
}

BitMatrix gf2_gram(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix g(a.num_rows(), b.num_rows());
    for (std::size_t i = 0; i < a.num_rows(); ++i)
        for (std::size_t j = 0; j < b.num_rows(); ++j)
            g.set(i, j, a.row(i).dot(b.row(j)));
    return g;
}

std::pair<bool, BitVector> solve_row_combination(const BitMatrix& m, const BitVector& v) {
    // Gaussian elimination on [m | I] tracking the combination.
    const std::size_t rows = m.num_rows();
    std::vector<BitVector> work, comb;
    for (std::size_t i = 0; i < rows; ++i) {
        work.push_back(m.row(i));
        BitVector c(rows);
        c.set(i, true);
        comb.push_back(c);
    }
    BitVector target = v, tcomb(rows);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.num_cols() && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (work[i].get(c)) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(work[r], work[pivot]);
        std::swap(comb[r], comb[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && work[i].get(c)) { work[i] ^= work[r]; comb[i] ^= comb[r]; }
        }
        if (target.get(c)) { target ^= work[r]; tcomb ^= comb[r]; }
        ++r;
    }
    if (target.any()) return {false, BitVector(rows)};
    return {true, tcomb};
}

BitMatrix gf2_inverse(const BitMatrix& m) {
    const std::size_t n = m.num_rows();
    if (n != m.num_cols()) throw DimensionMismatch("inverse of non-square matrix");
    std::vector<BitVector> work, inv;
    for (std::size_t i = 0; i < n; ++i) {
        work.push_back(m.row(i));
        BitVector e(n);
        e.set(i, true);
        inv.push_back(e);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i)
            if (work[i].get(c)) { pivot = i; break; }
        if (pivot == n) throw RankDeficient("matrix is singular over GF(2)");
        std::swap(work[c], work[pivot]);
        std::swap(inv[c], inv[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != c && work[i].get(c)) { work[i] ^= work[c]; inv[i] ^= inv[c]; }
        }
    }
    return BitMatrix::from_rows(std::move(inv));
}

BitMatrix dual_basis(const BitMatrix& m) {
    const std::size_t cols = m.num_cols();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    BitMatrix out(0, cols);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        BitVector v(cols);
        v.set(f, true);
        for (std::size_t i = 0; i < rr.rank; ++i)
            if (rr.reduced.get(i, f)) v.set(rr.pivots[i], true);
        out.append_row(std::move(v));
    }
    return rref(out).reduced;  // already full rank; normalize presentation
}

bool is_self_orthogonal(const BitMatrix& m) {
    for (std::size_t i = 0; i < m.num_rows(); ++i)
        for (std::size_t j = i; j < m.num_rows(); ++j)
            if (m.row(i).dot(m.row(j))) return false;
    return true;
}

BitMatrix quotient_basis(const BitMatrix& c, const BitMatrix& d) {
    Span span_c(c);
    if (!span_c.contains_rows(d))
        throw SubspaceViolation("d is not contained in the row space of c");
    Span cur(d);
    BitMatrix out(0, c.num_cols());
    const BitMatrix& cb = span_c.basis();
    BitMatrix acc = cur.basis();
    for (std::size_t i = 0; i < cb.num_rows(); ++i) {
        if (!Span(acc).contains(cb.row(i))) {
            out.append_row(cb.row(i));
            acc.append_row(cb.row(i));
        }
    }
    return out;
}

namespace {

// GF(2) reduction of a mask against an echelon basis (descending leading bits).
std::uint64_t reduce_mask(std::uint64_t x, const std::vector<std::uint64_t>& basis) {
    for (std::uint64_t b : basis)
        if ((x ^ b) < x) x ^= b;
    return x;
}

}  // namespace

std::vector<BitMatrix> find_self_orthogonal_extensions(const BitMatrix& g0,
                                                       const BitMatrix& candidates,
                                                       std::size_t r,
                                                       std::size_t limit,
                                                       std::uint64_t tuple_budget) {
    const std::size_t n = candidates.num_cols();
    if (r == 0) return {BitMatrix(0, g0.num_cols())};
    const std::size_t c = candidates.num_rows();
    if (c >= 26) throw TooLarge("extension search over more than 2^26 combinations");
    const std::uint64_t ncombo = (std::uint64_t(1) << c) - 1;
    if (ncombo == 0) throw NoExtension("empty candidate space");
    if (!is_self_orthogonal(g0))
        throw SubspaceViolation("g0 must be self-orthogonal");
    if (gf2_rank(g0.vstack(candidates)) != gf2_rank(g0) + c)
        throw SubspaceViolation("candidate rows must be independent modulo span(g0)");

    // All nonzero combinations of candidate rows, indexed by mask.
    std::vector<BitVector> vec(ncombo + 1, BitVector(n));
    for (std::uint64_t mask = 1; mask <= ncombo; ++mask) {
        const int low = std::countr_zero(mask);
        vec[mask] = vec[mask & (mask - 1)] ^ candidates.row(std::size_t(low));
    }
    std::vector<bool> ok(ncombo + 1, false);
    for (std::uint64_t mask = 1; mask <= ncombo; ++mask) {
        const BitVector& v = vec[mask];
        bool good = v.weight() % 2 == 0;
        for (std::size_t i = 0; good && i < g0.num_rows(); ++i)
            if (v.dot(g0.row(i))) good = false;
        ok[mask] = good;
    }

    std::vector<BitMatrix> results;
    std::vector<std::uint64_t> stack, mask_basis;
    std::uint64_t visited = 0;
    bool out_of_budget = false;

    // Depth-first over mask tuples m1 < m2 < ... < mr in lexicographic order.
    // Mask independence equals vector independence because candidate rows
    // are assumed independent (they form a basis of the search space).
    auto dfs = [&](auto&& self, std::uint64_t start) -> void {
        if (stack.size() == r) {
            BitMatrix b(0, n);
            for (std::uint64_t m : stack) b.append_row(vec[m]);
            results.push_back(std::move(b));
            return;
        }
        for (std::uint64_t mask = start; mask <= ncombo; ++mask) {
            if (results.size() >= limit || out_of_budget) return;
            if (!ok[mask]) continue;
            if (++visited > tuple_budget) { out_of_budget = true; return; }
            const std::uint64_t red = reduce_mask(mask, mask_basis);
            if (red == 0) continue;
            bool good = true;
            for (std::uint64_t prev : stack)
                if (vec[prev].dot(vec[mask])) { good = false; break; }
            if (!good) continue;
            stack.push_back(mask);
            mask_basis.push_back(red);
            std::sort(mask_basis.begin(), mask_basis.end(), std::greater<>());
            self(self, mask + 1);
            stack.pop_back();
            mask_basis.clear();
            for (std::uint64_t s : stack) {
                const std::uint64_t y = reduce_mask(s, mask_basis);
                mask_basis.push_back(y);
                std::sort(mask_basis.begin(), mask_basis.end(), std::greater<>());
            }
        }
    };
    dfs(dfs, 1);

    if (results.empty() && !out_of_budget)
        throw NoExtension("no self-orthogonal extension of size " + std::to_string(r) + " exists");
    if (results.empty())
        throw NoExtension("extension search exhausted its combination budget");
    return results;
}

BitMatrix read_matrix_text(std::istream& in) {
    BitMatrix m;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && (line[start] == ' ' || line[start] == '\t')) ++start;
        line.erase(0, start);
        if (line.empty()) continue;
        m.append_row(BitVector::from_string(line));
    }
    if (m.num_rows() == 0) throw ParseError("matrix file contains no rows");
    return m;
}

BitMatrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open matrix file: " + path);
    return read_matrix_text(f);
}

void write_matrix_text(std::ostream& out, const BitMatrix& m) {
    for (std::size_t i = 0; i < m.num_rows(); ++i) out << m.row(i).to_string() << '\n';
}

}  // namespace triortho
