#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "triortho/css_code.hpp"

namespace triortho {

enum class PauliKind { X, Z };

/// Syndrome-indexed table of minimum-weight corrections (lexicographic
/// tie-break on support). For PauliKind::X the syndromes come from the Z
/// checks (hz) and vice versa.
class LookupDecoder {
  public:
    LookupDecoder() = default;

    const BitMatrix& checks() const { return checks_; }
    std::size_t num_checks() const { return checks_.num_rows(); }
    PauliKind pauli() const { return pauli_; }
    /// Largest w such that every error of weight <= w decodes to itself.
    std::size_t certified_weight() const { return certified_weight_; }

    std::uint64_t syndrome_of(const BitVector& error_or_word) const;
    /// Throws UndecodableSyndrome when the syndrome is outside the table
    /// (possible only for truncated tables).
    BitVector decode(std::uint64_t syndrome) const;
    bool decodable(std::uint64_t syndrome) const;

    friend LookupDecoder build_decoder(const CssCode&, PauliKind, std::size_t);

  private:
    PauliKind pauli_ = PauliKind::X;
    BitMatrix checks_;
    std::size_t certified_weight_ = 0;
    std::vector<std::optional<BitVector>> table_;
};

/// Builds the lookup table by enumerating errors in order of increasing
/// weight (combinations in lexicographic order). `max_weight` truncates the
/// table to syndromes reachable by errors up to that weight; the default
/// keeps enumerating until every syndrome is covered.
LookupDecoder build_decoder(const CssCode& code, PauliKind pauli,
                            std::size_t max_weight = SIZE_MAX);

struct ReadoutResult {
    BitVector logical;      // one bit per logical qubit
    std::uint64_t syndrome = 0;
    BitVector correction;
    BitVector corrected_word;
};

/// Decodes a full-block measured word: computes the syndrome against the
/// appropriate checks, applies the lookup correction, projects back onto the
/// code, and returns logical-operator parities. `basis` is the measurement
/// basis of the block ('X' or 'Z'); the decoder must match (Z-basis words are
/// corrupted by X errors and vice versa).
ReadoutResult logical_readout(const BitVector& word, const CssCode& code, char basis,
                              const LookupDecoder& decoder);

}  // namespace triortho
