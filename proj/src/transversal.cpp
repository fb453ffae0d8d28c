#include "triortho/transversal.hpp"

#include <bit>

#include "triortho/errors.hpp"

namespace triortho {

namespace {

using Witnesses = std::vector<std::pair<std::string, std::string>>;

void add_witness(Witnesses* w, const std::string& name, const BitVector& v) {
    if (w) w->emplace_back(name, v.to_string());
}

void require_compatible(const CssCode& a, const CssCode& b) {
    if (a.n != b.n || a.k != b.k)
        throw DimensionMismatch("codes must share n and k");
}

/// All elements of span(m), including zero. Only for small ranks.
std::vector<BitVector> span_elements(const BitMatrix& m) {
    Span s(m);
    if (s.rank() > 20) throw TooLarge("span enumeration beyond 2^20");
    std::vector<BitVector> out;
    out.reserve(std::size_t(1) << s.rank());
    BitVector cur(m.num_cols());
    out.push_back(cur);
    const std::uint64_t total = std::uint64_t(1) << s.rank();
    for (std::uint64_t i = 1; i < total; ++i) {
        const std::uint64_t g = i ^ (i >> 1), pg = (i - 1) ^ ((i - 1) >> 1);
        cur ^= s.basis().row(std::size_t(std::countr_zero(g ^ pg)));
        out.push_back(cur);
    }
    return out;
}

}  // namespace

bool check_cnot(const CssCode& control, const CssCode& target, Witnesses* witnesses) {
    require_compatible(control, target);
    bool ok = true;

    // C2perp(control) = span(control.hx) must embed in C4perp(target) = span(target.hx).
    Span target_hx(target.hx);
    for (std::size_t i = 0; i < control.hx.num_rows(); ++i) {
        if (!target_hx.contains(control.hx.row(i))) {
            add_witness(witnesses, "c2perp_not_in_c4perp", control.hx.row(i));
            ok = false;
        }
    }

    // Index-wise quotient map: control mapping row i must lie in C3(target)
    // and agree with target mapping row i modulo C4perp(target).
    Span target_c3(dual_basis(target.hz));
    for (std::size_t i = 0; i < control.k; ++i) {
        if (!target_c3.contains(control.mapping_a.row(i))) {
            add_witness(witnesses, "mapping_row_outside_c3", control.mapping_a.row(i));
            ok = false;
            continue;
        }
        const BitVector diff = control.mapping_a.row(i) ^ target.mapping_a.row(i);
        if (!target_hx.contains(diff)) {
            add_witness(witnesses, "mapping_coset_mismatch", diff);
            ok = false;
        }
    }
    return ok;
}

bool check_cz_sufficient(const CssCode& a, const CssCode& b, Witnesses* witnesses) {
    require_compatible(a, b);
    bool ok = true;

    // mapping rows of a inside C4(b) = dual(b.hx)
    for (std::size_t i = 0; i < a.k; ++i) {
        for (std::size_t j = 0; j < b.hx.num_rows(); ++j) {
            if (a.mapping_a.row(i).dot(b.hx.row(j))) {
                add_witness(witnesses, "c1_quotient_not_in_c4", a.mapping_a.row(i));
                ok = false;
                break;
            }
        }
    }
    // C3(b) inside C2(a): equivalently span(a.hx) inside span(b.hz)
    Span b_hz(b.hz);
    for (std::size_t i = 0; i < a.hx.num_rows(); ++i) {
        if (!b_hz.contains(a.hx.row(i))) {
            add_witness(witnesses, "c3_not_in_c2", a.hx.row(i));
            ok = false;
        }
    }
    // A . B^T = I
    if (gf2_gram(a.mapping_a, b.mapping_a) != BitMatrix::identity(a.k)) {
        add_witness(witnesses, "ab_product_not_identity", BitVector(a.n));
        ok = false;
    }
    return ok;
}

bool check_cz_exact(const CssCode& a, const CssCode& b, bool exhaustive, Witnesses* witnesses) {
    require_compatible(a, b);
    bool ok = true;

    // x^A . z^T + y . (x^B + z)^T = 0 for all x^A in C1/C2perp(a),
    // x^B in C3/C4perp(b), y in C2perp(a), z in C4perp(b). Each summand is
    // bilinear in its varying pair, so generator checks settle it:
    //   (a) mapping rows of a orthogonal to C4perp(b) basis,
    //   (b) C2perp(a) basis orthogonal to mapping rows of b,
    //   (c) C2perp(a) basis orthogonal to C4perp(b) basis.
    for (std::size_t i = 0; i < a.k; ++i)
        for (std::size_t j = 0; j < b.hx.num_rows(); ++j)
            if (a.mapping_a.row(i).dot(b.hx.row(j))) {
                add_witness(witnesses, "xA_z_term", a.mapping_a.row(i));
                ok = false;
            }
    for (std::size_t i = 0; i < a.hx.num_rows(); ++i)
        for (std::size_t j = 0; j < b.k; ++j)
            if (a.hx.row(i).dot(b.mapping_a.row(j))) {
                add_witness(witnesses, "y_xB_term", a.hx.row(i));
                ok = false;
            }
    for (std::size_t i = 0; i < a.hx.num_rows(); ++i)
        for (std::size_t j = 0; j < b.hx.num_rows(); ++j)
            if (a.hx.row(i).dot(b.hx.row(j))) {
                add_witness(witnesses, "y_z_term", a.hx.row(i));
                ok = false;
            }
    if (gf2_gram(a.mapping_a, b.mapping_a) != BitMatrix::identity(a.k)) {
        add_witness(witnesses, "ab_product_not_identity", BitVector(a.n));
        ok = false;
    }

    if (exhaustive && ok) {
        // Guard the bilinearity argument by brute force over the full sets.
        const auto ys = span_elements(a.hx);
        const auto zs = span_elements(b.hx);
        for (std::size_t i = 0; i < a.k && ok; ++i) {
            for (std::size_t j = 0; j < b.k && ok; ++j) {
                const BitVector& xa = a.mapping_a.row(i);
                const BitVector& xb = b.mapping_a.row(j);
                for (const auto& y : ys) {
                    for (const auto& z : zs) {
                        const int lhs = (xa.dot(z) + y.dot(xb ^ z)) & 1;
                        if (lhs) {
                            add_witness(witnesses, "exhaustive_term", y);
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
        }
    }
    return ok;
}

PairReport make_pair_report(const CssCode& a, const CssCode& b, bool exact_cz) {
    PairReport report;
    report.cnot_forward = check_cnot(a, b, &report.witnesses);
    report.cnot_backward = check_cnot(b, a, &report.witnesses);
    report.cz = exact_cz ? check_cz_exact(a, b, /*exhaustive=*/false, &report.witnesses)
                         : check_cz_sufficient(a, b, &report.witnesses);
    return report;
}

}  // namespace triortho
