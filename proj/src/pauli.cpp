#include "triortho/pauli.hpp"

#include "triortho/errors.hpp"

namespace triortho {

PauliOperator PauliOperator::single(std::size_t n, std::size_t q, char kind) {
    PauliOperator p(n);
    switch (kind) {
        case 'X': p.x.set(q, true); break;
        case 'Z': p.z.set(q, true); break;
        case 'Y':
            p.x.set(q, true);
            p.z.set(q, true);
            p.phase = 1;  // Y = i XZ
            break;
        default: throw InvalidLabel("Pauli kind must be X, Y or Z");
    }
    return p;
}

PauliOperator PauliOperator::from_string(std::string_view s) {
    int sign = 0;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        sign = s.front() == '-' ? 1 : 0;
        s.remove_prefix(1);
    }
    PauliOperator p(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case 'I': case '_': break;
            case 'X': p.x.set(i, true); break;
            case 'Z': p.z.set(i, true); break;
            case 'Y':
                p.x.set(i, true);
                p.z.set(i, true);
                p.phase = (p.phase + 1) & 3;
                break;
            default: throw ParseError("invalid Pauli character");
        }
    }
    p.phase = (p.phase + 2 * sign) & 3;
    return p;
}

PauliOperator PauliOperator::x_type(const BitVector& v) {
    PauliOperator p(v.size());
    p.x = v;
    return p;
}

PauliOperator PauliOperator::z_type(const BitVector& v) {
    PauliOperator p(v.size());
    p.z = v;
    return p;
}

std::size_t PauliOperator::weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < x.words().size(); ++i) {
        std::uint64_t occupied = x.words()[i] | z.words()[i];
        for (; occupied; occupied &= occupied - 1) ++w;
    }
    return w;
}

void PauliOperator::mul(const PauliOperator& other) {
    // (i^p D(a,b))(i^q D(c,d)) = i^{p+q+2(b.c)} D(a^c, b^d)
    phase = std::uint8_t((phase + other.phase + 2 * z.dot(other.x)) & 3);
    x ^= other.x;
    z ^= other.z;
}

bool PauliOperator::commutes(const PauliOperator& other) const {
    return ((x.dot(other.z) + z.dot(other.x)) & 1) == 0;
}

int PauliOperator::sign_bit() const {
    // operator = i^phase D = i^{phase - x.z} E(x,z); Hermitian => exponent even
    const int e = (int(phase) - x.dot(z)) & 3;
    return e >> 1;
}

void PauliOperator::set_sign_bit(int s) {
    phase = std::uint8_t((x.dot(z) + 2 * (s & 1)) & 3);
}

std::string PauliOperator::to_string() const {
    std::string out;
    out += sign_bit() ? '-' : '+';
    for (std::size_t i = 0; i < num_qubits(); ++i) {
        const bool xi = x.get(i), zi = z.get(i);
        out += xi ? (zi ? 'Y' : 'X') : (zi ? 'Z' : 'I');
    }
    return out;
}

PauliOperator PauliOperator::embedded(std::size_t total, std::size_t offset) const {
    PauliOperator p(total);
    for (std::size_t i = 0; i < num_qubits(); ++i) {
        if (x.get(i)) p.x.set(offset + i, true);
        if (z.get(i)) p.z.set(offset + i, true);
    }
    p.phase = phase;
    return p;
}

}  // namespace triortho
