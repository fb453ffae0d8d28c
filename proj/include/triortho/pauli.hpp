#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "triortho/bit_matrix.hpp"

namespace triortho {

/// n-qubit Pauli stored as i^phase * D(x,z) with D(x,z) the qubit-wise
/// X^x Z^z product. Composition tracks the phase exactly mod 4; Hermitian
/// operators satisfy phase = x.z (mod 2), so stabilizer rows only ever carry
/// the signs +1/-1 relative to the Y-canonical form E(x,z) = i^{x.z} D(x,z).
struct PauliOperator {
    BitVector x;        // X part (vector a)
    BitVector z;        // Z part (vector b)
    std::uint8_t phase = 0;  // power of i, mod 4

    PauliOperator() = default;
    explicit PauliOperator(std::size_t n) : x(n), z(n) {}

    static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
    /// Single-qubit X, Y or Z embedded at position q.
    static PauliOperator single(std::size_t n, std::size_t q, char kind);
    /// Parse "+XIZ.." / "-IYX.." (sign optional).
    static PauliOperator from_string(std::string_view s);
    /// X-type operator supported on v.
    static PauliOperator x_type(const BitVector& v);
    static PauliOperator z_type(const BitVector& v);

    std::size_t num_qubits() const { return x.size(); }
    std::size_t weight() const;
    bool is_identity() const { return !x.any() && !z.any() && phase == 0; }

    /// this <- this * other, with exact phase tracking.
    void mul(const PauliOperator& other);
    bool commutes(const PauliOperator& other) const;

    /// Sign relative to the Hermitian form E(x,z): 0 for +, 1 for -.
    /// Only meaningful when the operator is Hermitian.
    int sign_bit() const;
    void set_sign_bit(int s);

    bool operator==(const PauliOperator& other) const = default;

    /// "+XIZY..." using the E(x,z) sign convention.
    std::string to_string() const;

    /// Embed into a larger register at the given qubit offset.
    PauliOperator embedded(std::size_t total, std::size_t offset) const;
};

}  // namespace triortho
