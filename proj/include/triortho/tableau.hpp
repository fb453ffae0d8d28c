#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "triortho/css_code.hpp"
#include "triortho/pauli.hpp"

namespace triortho {

enum class GateKind { H, S, X, Y, Z, CNOT, CZ };

GateKind gate_kind_from_name(const std::string& name);
std::string gate_kind_name(GateKind g);
bool gate_is_two_qubit(GateKind g);

/// Outcome policy for a single measurement.
struct OutcomePolicy {
    static OutcomePolicy random() { return {}; }
    static OutcomePolicy forced(int bit) { return {true, bit != 0}; }
    bool is_forced = false;
    bool forced_bit = false;
};

struct MeasureResult {
    int outcome = 0;
    bool deterministic = false;
};

using Rng = std::mt19937_64;

/// Generator-based stabilizer state: n stabilizer generators plus their
/// symplectic destabilizer partners, with exact sign tracking.
class StabilizerTableau {
  public:
    StabilizerTableau() = default;

    static StabilizerTableau zero_state(std::size_t n);
    /// Builds the tableau stabilized by the given n independent commuting
    /// signed generators; destabilizers come from symplectic Gram-Schmidt.
    static StabilizerTableau from_stabilizers(std::size_t n,
                                              const std::vector<PauliOperator>& gens);
    /// Tensor product (qubits of `other` appended after `this`).
    StabilizerTableau tensor(const StabilizerTableau& other) const;

    std::size_t num_qubits() const { return n_; }

    void apply_h(std::size_t q);
    void apply_s(std::size_t q);
    void apply_x(std::size_t q);
    void apply_y(std::size_t q);
    void apply_z(std::size_t q);
    void apply_cnot(std::size_t control, std::size_t target);
    void apply_cz(std::size_t a, std::size_t b);
    void apply_gate(GateKind g, std::size_t q1, std::size_t q2 = SIZE_MAX);

    /// Multiplies stabilizer signs by commutation with p (error injection and
    /// classically controlled corrections).
    void apply_pauli(const PauliOperator& p);

    MeasureResult measure(std::size_t q, char basis, OutcomePolicy policy, Rng& rng);
    /// General Pauli measurement; p must be Hermitian.
    MeasureResult measure_pauli(const PauliOperator& p, OutcomePolicy policy, Rng& rng);

    /// +1 / -1 when +-p is in the stabilizer group, std::nullopt otherwise.
    std::optional<int> stabilizer_sign(const PauliOperator& p) const;
    bool is_stabilized(const PauliOperator& p) const {
        auto s = stabilizer_sign(p);
        return s && *s == (p.sign_bit() ? -1 : +1);
    }

    /// Unique canonical generator list (symplectic RREF with X columns before
    /// Z columns), suitable for group equality tests.
    std::vector<PauliOperator> canonical_stabilizers() const;
    bool same_state(const StabilizerTableau& other) const;

    /// Canonical generators supported inside [offset, offset+len), re-indexed
    /// to a len-qubit register. Requires the rest of the register to be in a
    /// measured/product state so exactly len generators survive.
    StabilizerTableau extract_block(std::size_t offset, std::size_t len) const;

    const std::vector<PauliOperator>& stabilizers() const { return stab_; }
    const std::vector<PauliOperator>& destabilizers() const { return destab_; }

    /// One "+XIZ..." line per stabilizer generator.
    std::string dump() const;

    /// Debug invariant: full pairwise symplectic structure.
    bool check_invariants() const;

  private:
    std::size_t n_ = 0;
    std::vector<PauliOperator> stab_, destab_;
};

/// Tableau for an encoded logical basis state. `labels` has one character per
/// logical qubit from {0,1,+,-}.
StabilizerTableau encode_logical(const CssCode& code, const std::string& labels);

}  // namespace triortho
