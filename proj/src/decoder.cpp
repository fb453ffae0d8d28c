#include "triortho/decoder.hpp"

#include <algorithm>

#include "triortho/errors.hpp"

namespace triortho {

namespace {

/// Advances `comb` to the next lexicographic w-combination out of n.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t w = comb.size();
    std::size_t i = w;
    while (i > 0) {
        --i;
        if (comb[i] + (w - i) < n) {
            ++comb[i];
            for (std::size_t j = i + 1; j < w; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

template <typename Fn>
void for_each_combination(std::size_t n, std::size_t w, Fn&& fn) {
    std::vector<std::size_t> comb(w);
    for (std::size_t i = 0; i < w; ++i) comb[i] = i;
    while (true) {
        if (!fn(comb)) return;
        if (w == 0 || !next_combination(comb, n)) return;
    }
}

}  // namespace

std::uint64_t LookupDecoder::syndrome_of(const BitVector& e) const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < checks_.num_rows(); ++i)
        s |= std::uint64_t(checks_.row(i).dot(e)) << i;
    return s;
}

BitVector LookupDecoder::decode(std::uint64_t syndrome) const {
    if (syndrome >= table_.size() || !table_[syndrome])
        throw UndecodableSyndrome("syndrome outside the lookup table");
    return *table_[syndrome];
}

bool LookupDecoder::decodable(std::uint64_t syndrome) const {
    return syndrome < table_.size() && table_[syndrome].has_value();
}

LookupDecoder build_decoder(const CssCode& code, PauliKind pauli, std::size_t max_weight) {
    LookupDecoder d;
    d.pauli_ = pauli;
    d.checks_ = (pauli == PauliKind::X) ? code.hz : code.hx;
    const std::size_t nchecks = d.checks_.num_rows();
    if (nchecks > 24) throw TooLarge("syndrome space beyond 2^24");
    d.table_.assign(std::size_t(1) << nchecks, std::nullopt);

    const std::size_t n = code.n;
    std::size_t filled = 0;
    // Weight-ascending, lexicographic within each weight: the first error
    // reaching a syndrome is the minimum-weight lex-least correction.
    for (std::size_t w = 0; w <= std::min(n, max_weight) && filled < d.table_.size(); ++w) {
        for_each_combination(n, w, [&](const std::vector<std::size_t>& comb) {
            BitVector e(n);
            for (std::size_t i : comb) e.set(i, true);
            const std::uint64_t s = d.syndrome_of(e);
            if (!d.table_[s]) {
                d.table_[s] = std::move(e);
                ++filled;
            }
            return filled < d.table_.size();
        });
    }

    // Certify: largest w with every weight-<=w error decoded exactly.
    std::size_t certified = 0;
    for (std::size_t w = 1; w <= n; ++w) {
        bool exact = true;
        for_each_combination(n, w, [&](const std::vector<std::size_t>& comb) {
            BitVector e(n);
            for (std::size_t i : comb) e.set(i, true);
            const std::uint64_t s = d.syndrome_of(e);
            if (!d.table_[s] || !(*d.table_[s] == e)) exact = false;
            return exact;
        });
        if (!exact) break;
        certified = w;
    }
    d.certified_weight_ = certified;
    return d;
}

ReadoutResult logical_readout(const BitVector& word, const CssCode& code, char basis,
                              const LookupDecoder& decoder) {
    if (word.size() != code.n) throw DimensionMismatch("word length != n");
    const bool xbasis = basis == 'X';
    if (!xbasis && basis != 'Z') throw InvalidLabel("basis must be X or Z");
    // X-basis words live in C2 and are corrupted by Z errors (decoder kind Z,
    // checks hx); Z-basis words live in C1, corrupted by X errors.
    if ((xbasis && decoder.pauli() != PauliKind::Z) ||
        (!xbasis && decoder.pauli() != PauliKind::X))
        throw DimensionMismatch("decoder kind does not match measurement basis");

    ReadoutResult r;
    r.syndrome = decoder.syndrome_of(word);
    r.correction = decoder.decode(r.syndrome);
    r.corrected_word = word ^ r.correction;
    r.logical = BitVector(code.k);
    const BitMatrix& logical = xbasis ? code.logical_x : code.logical_z;
    for (std::size_t i = 0; i < code.k; ++i)
        r.logical.set(i, logical.row(i).dot(r.corrected_word));
    return r;
}

}  // namespace triortho
