#include "triortho/tableau.hpp"

#include <algorithm>

#include "triortho/errors.hpp"

namespace triortho {

GateKind gate_kind_from_name(const std::string& name) {
    if (name == "H") return GateKind::H;
    if (name == "S") return GateKind::S;
    if (name == "X") return GateKind::X;
    if (name == "Y") return GateKind::Y;
    if (name == "Z") return GateKind::Z;
    if (name == "CNOT" || name == "CX") return GateKind::CNOT;
    if (name == "CZ") return GateKind::CZ;
    throw ParseError("unknown gate: " + name);
}

std::string gate_kind_name(GateKind g) {
    switch (g) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
    }
    return "?";
}

bool gate_is_two_qubit(GateKind g) { return g == GateKind::CNOT || g == GateKind::CZ; }

StabilizerTableau StabilizerTableau::zero_state(std::size_t n) {
    StabilizerTableau t;
    t.n_ = n;
    for (std::size_t i = 0; i < n; ++i) {
        t.stab_.push_back(PauliOperator::single(n, i, 'Z'));
        t.destab_.push_back(PauliOperator::single(n, i, 'X'));
    }
    return t;
}

StabilizerTableau StabilizerTableau::from_stabilizers(std::size_t n,
                                                      const std::vector<PauliOperator>& gens) {
    if (gens.size() != n) throw DimensionMismatch("need exactly n stabilizer generators");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!gens[i].commutes(gens[j]))
                throw SubspaceViolation("stabilizer generators must commute");

    // Symplectic Gram-Schmidt: pull destabilizer partners out of the
    // single-qubit Pauli pool, then orthogonalize the remaining pool.
    std::vector<PauliOperator> pool;
    pool.reserve(2 * n);
    for (std::size_t q = 0; q < n; ++q) pool.push_back(PauliOperator::single(n, q, 'X'));
    for (std::size_t q = 0; q < n; ++q) pool.push_back(PauliOperator::single(n, q, 'Z'));

    StabilizerTableau t;
    t.n_ = n;
    t.stab_ = gens;
    t.destab_.assign(n, PauliOperator(n));
    for (std::size_t i = 0; i < n; ++i) {
        const PauliOperator& s = t.stab_[i];
        std::size_t partner = pool.size();
        for (std::size_t p = 0; p < pool.size(); ++p)
            if (!pool[p].commutes(s)) { partner = p; break; }
        if (partner == pool.size())
            throw RankDeficient("generators are dependent: no destabilizer partner found");
        PauliOperator d = pool[partner];
        pool.erase(pool.begin() + partner);
        for (auto& p : pool) {
            if (!p.commutes(s)) p.mul(d);
            if (!p.commutes(d)) p.mul(s);
        }
        // Later stabilizers commute with s already; make them commute with d.
        for (std::size_t j = i + 1; j < n; ++j)
            if (!t.stab_[j].commutes(d)) t.stab_[j].mul(s);
        // Earlier destabilizers must stay symplectic: d itself may
        // anticommute with them; fix d by absorbing earlier stabilizers.
        for (std::size_t j = 0; j < i; ++j) {
            if (!d.commutes(t.stab_[j])) d.mul(t.destab_[j]);
            if (!d.commutes(t.destab_[j])) d.mul(t.stab_[j]);
        }
        t.destab_[i] = d;
    }
    return t;
}

StabilizerTableau StabilizerTableau::tensor(const StabilizerTableau& other) const {
    StabilizerTableau t;
    t.n_ = n_ + other.n_;
    for (const auto& p : stab_) t.stab_.push_back(p.embedded(t.n_, 0));
    for (const auto& p : other.stab_) t.stab_.push_back(p.embedded(t.n_, n_));
    for (const auto& p : destab_) t.destab_.push_back(p.embedded(t.n_, 0));
    for (const auto& p : other.destab_) t.destab_.push_back(p.embedded(t.n_, n_));
    return t;
}

namespace {

inline void check_index(std::size_t q, std::size_t n) {
    if (q >= n) throw IndexOutOfRange("qubit index " + std::to_string(q));
}

}  // namespace

void StabilizerTableau::apply_h(std::size_t q) {
    check_index(q, n_);
    auto update = [q](PauliOperator& p) {
        const bool xi = p.x.get(q), zi = p.z.get(q);
        if (xi && zi) p.phase = std::uint8_t((p.phase + 2) & 3);  // XZ -> ZX = -XZ
        p.x.set(q, zi);
        p.z.set(q, xi);
    };
    for (auto& p : stab_) update(p);
    for (auto& p : destab_) update(p);
}

void StabilizerTableau::apply_s(std::size_t q) {
    check_index(q, n_);
    auto update = [q](PauliOperator& p) {
        if (p.x.get(q)) {
            p.phase = std::uint8_t((p.phase + 1) & 3);  // X -> iXZ, XZ -> iX
            p.z.flip(q);
        }
    };
    for (auto& p : stab_) update(p);
    for (auto& p : destab_) update(p);
}

void StabilizerTableau::apply_x(std::size_t q) {
    check_index(q, n_);
    for (auto& p : stab_)
        if (p.z.get(q)) p.phase = std::uint8_t((p.phase + 2) & 3);
    for (auto& p : destab_)
        if (p.z.get(q)) p.phase = std::uint8_t((p.phase + 2) & 3);
}

void StabilizerTableau::apply_z(std::size_t q) {
    check_index(q, n_);
    for (auto& p : stab_)
        if (p.x.get(q)) p.phase = std::uint8_t((p.phase + 2) & 3);
    for (auto& p : destab_)
        if (p.x.get(q)) p.phase = std::uint8_t((p.phase + 2) & 3);
}

void StabilizerTableau::apply_y(std::size_t q) {
    apply_x(q);
    apply_z(q);
}

void StabilizerTableau::apply_cnot(std::size_t control, std::size_t target) {
    check_index(control, n_);
    check_index(target, n_);
    if (control == target) throw IndexOutOfRange("CNOT needs distinct qubits");
    auto update = [control, target](PauliOperator& p) {
        if (p.x.get(control)) p.x.flip(target);
        if (p.z.get(target)) p.z.flip(control);
    };
    for (auto& p : stab_) update(p);
    for (auto& p : destab_) update(p);
}

void StabilizerTableau::apply_cz(std::size_t a, std::size_t b) {
    check_index(a, n_);
    check_index(b, n_);
    if (a == b) throw IndexOutOfRange("CZ needs distinct qubits");
    auto update = [a, b](PauliOperator& p) {
        const bool xa = p.x.get(a), xb = p.x.get(b);
        if (xa && xb) p.phase = std::uint8_t((p.phase + 2) & 3);
        if (xa) p.z.flip(b);
        if (xb) p.z.flip(a);
    };
    for (auto& p : stab_) update(p);
    for (auto& p : destab_) update(p);
}

void StabilizerTableau::apply_gate(GateKind g, std::size_t q1, std::size_t q2) {
    switch (g) {
        case GateKind::H: apply_h(q1); return;
        case GateKind::S: apply_s(q1); return;
        case GateKind::X: apply_x(q1); return;
        case GateKind::Y: apply_y(q1); return;
        case GateKind::Z: apply_z(q1); return;
        case GateKind::CNOT: apply_cnot(q1, q2); return;
        case GateKind::CZ: apply_cz(q1, q2); return;
    }
}

void StabilizerTableau::apply_pauli(const PauliOperator& p) {
    for (auto& s : stab_)
        if (!s.commutes(p)) s.phase = std::uint8_t((s.phase + 2) & 3);
    for (auto& d : destab_)
        if (!d.commutes(p)) d.phase = std::uint8_t((d.phase + 2) & 3);
}

MeasureResult StabilizerTableau::measure(std::size_t q, char basis, OutcomePolicy policy,
                                         Rng& rng) {
    check_index(q, n_);
    if (basis != 'Z' && basis != 'X') throw InvalidLabel("measurement basis must be X or Z");
    return measure_pauli(PauliOperator::single(n_, q, basis), policy, rng);
}

MeasureResult StabilizerTableau::measure_pauli(const PauliOperator& p, OutcomePolicy policy,
                                               Rng& rng) {
    std::size_t pivot = n_;
    for (std::size_t i = 0; i < n_; ++i)
        if (!stab_[i].commutes(p)) { pivot = i; break; }

    if (pivot == n_) {
        // Deterministic: p (up to sign) lies in the stabilizer group.
        auto sign = stabilizer_sign(p);
        if (!sign) throw SubspaceViolation("operator commutes with the group but is not in it");
        const int outcome = (*sign == (p.sign_bit() ? -1 : +1)) ? 0 : 1;
        if (policy.is_forced && int(policy.forced_bit) != outcome)
            throw ForcedContradiction("cannot force a deterministic outcome to its negation");
        return {outcome, true};
    }

    const int outcome = policy.is_forced ? int(policy.forced_bit) : int(rng() & 1);
    const PauliOperator old = stab_[pivot];
    for (std::size_t i = 0; i < n_; ++i) {
        if (i != pivot && !stab_[i].commutes(p)) stab_[i].mul(old);
        if (!destab_[i].commutes(p)) destab_[i].mul(old);
    }
    destab_[pivot] = old;
    stab_[pivot] = p;
    stab_[pivot].set_sign_bit(p.sign_bit() ^ outcome);
    return {outcome, false};
}

std::optional<int> StabilizerTableau::stabilizer_sign(const PauliOperator& p) const {
    PauliOperator acc = PauliOperator::identity(n_);
    for (std::size_t i = 0; i < n_; ++i)
        if (!destab_[i].commutes(p)) acc.mul(stab_[i]);
    if (acc.x != p.x || acc.z != p.z) return std::nullopt;
    const int diff = (int(acc.phase) - int(p.phase)) & 3;
    if (diff == 0) return p.sign_bit() ? -1 : +1;
    if (diff == 2) return p.sign_bit() ? +1 : -1;
    return std::nullopt;  // i-phase mismatch: non-Hermitian comparison
}

std::vector<PauliOperator> StabilizerTableau::canonical_stabilizers() const {
    std::vector<PauliOperator> rows = stab_;
    std::size_t r = 0;
    auto eliminate = [&](auto getter) {
        for (std::size_t c = 0; c < n_ && r < rows.size(); ++c) {
            std::size_t pivot = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (getter(rows[i], c)) { pivot = i; break; }
            if (pivot == rows.size()) continue;
            std::swap(rows[r], rows[pivot]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != r && getter(rows[i], c)) rows[i].mul(rows[r]);
            ++r;
        }
    };
    eliminate([](const PauliOperator& p, std::size_t c) { return p.x.get(c); });
    eliminate([](const PauliOperator& p, std::size_t c) { return p.z.get(c); });
    return rows;
}

bool StabilizerTableau::same_state(const StabilizerTableau& other) const {
    if (n_ != other.n_) return false;
    return canonical_stabilizers() == other.canonical_stabilizers();
}

StabilizerTableau StabilizerTableau::extract_block(std::size_t offset, std::size_t len) const {
    const auto canon = canonical_stabilizers();
    std::vector<PauliOperator> inside;
    for (const auto& p : canon) {
        bool local = true;
        for (std::size_t q = 0; q < n_ && local; ++q) {
            if (q >= offset && q < offset + len) continue;
            if (p.x.get(q) || p.z.get(q)) local = false;
        }
        if (!local) continue;
        PauliOperator small(len);
        for (std::size_t q = 0; q < len; ++q) {
            if (p.x.get(offset + q)) small.x.set(q, true);
            if (p.z.get(offset + q)) small.z.set(q, true);
        }
        small.phase = p.phase;
        inside.push_back(std::move(small));
    }
    if (inside.size() != len)
        throw SubspaceViolation("block is still entangled with the rest of the register");
    return from_stabilizers(len, inside);
}

std::string StabilizerTableau::dump() const {
    std::string out;
    for (const auto& p : stab_) {
        out += p.to_string();
        out += '\n';
    }
    return out;
}

bool StabilizerTableau::check_invariants() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (!stab_[i].commutes(stab_[j])) return false;
            if (!destab_[i].commutes(destab_[j])) return false;
            const bool anti = !stab_[i].commutes(destab_[j]);
            if (anti != (i == j)) return false;
        }
        const int e = (int(stab_[i].phase) - stab_[i].x.dot(stab_[i].z)) & 1;
        if (e) return false;  // stabilizer rows must be Hermitian
    }
    return true;
}

StabilizerTableau encode_logical(const CssCode& code, const std::string& labels) {
    if (labels.size() != code.k)
        throw InvalidLabel("need one label per logical qubit");
    std::vector<PauliOperator> gens;
    for (std::size_t i = 0; i < code.hx.num_rows(); ++i)
        gens.push_back(PauliOperator::x_type(code.hx.row(i)));
    for (std::size_t i = 0; i < code.hz.num_rows(); ++i)
        gens.push_back(PauliOperator::z_type(code.hz.row(i)));
    for (std::size_t i = 0; i < code.k; ++i) {
        PauliOperator l(code.n);
        switch (labels[i]) {
            case '0': l = PauliOperator::z_type(code.logical_z.row(i)); break;
            case '1':
                l = PauliOperator::z_type(code.logical_z.row(i));
                l.set_sign_bit(1);
                break;
            case '+': l = PauliOperator::x_type(code.logical_x.row(i)); break;
            case '-':
                l = PauliOperator::x_type(code.logical_x.row(i));
                l.set_sign_bit(1);
                break;
            default: throw InvalidLabel("logical label must be one of 0,1,+,-");
        }
        gens.push_back(std::move(l));
    }
    return StabilizerTableau::from_stabilizers(code.n, gens);
}

}  // namespace triortho
