#pragma once

#include <string>
#include <utility>
#include <vector>

#include "triortho/css_code.hpp"

namespace triortho {

/// Transversality report for an ordered code pair. `witnesses` holds one
/// (condition-name, violating-vector) entry per failed condition.
struct PairReport {
    bool cnot_forward = false;
    bool cnot_backward = false;
    bool cz = false;
    std::vector<std::pair<std::string, std::string>> witnesses;
};

/// Transversal CNOT condition from control to target: C2perp(control)
/// contained in C4perp(target), and the index-wise map of mapping rows is a
/// well-defined quotient isomorphism (control row i lands in target's C3 and
/// reduces to target row i's coset).
bool check_cnot(const CssCode& control, const CssCode& target,
                std::vector<std::pair<std::string, std::string>>* witnesses = nullptr);

/// Sufficient CZ conditions: mapping rows of a lie in C4(b), C3(b) inside
/// C2(a), and A.B^T = I.
bool check_cz_sufficient(const CssCode& a, const CssCode& b,
                         std::vector<std::pair<std::string, std::string>>* witnesses = nullptr);

/// Exact CZ condition checked on generator bases (each summand is bilinear in
/// its varying arguments). `exhaustive` additionally enumerates the full
/// spans (only feasible for small codes) to guard the bilinearity argument.
bool check_cz_exact(const CssCode& a, const CssCode& b, bool exhaustive = false,
                    std::vector<std::pair<std::string, std::string>>* witnesses = nullptr);

PairReport make_pair_report(const CssCode& a, const CssCode& b, bool exact_cz = false);

}  // namespace triortho
