#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "triortho/bit_matrix.hpp"

namespace triortho {

/// An [[n,k]] CSS code. `hx` rows are the X-stabilizer generator supports
/// (a basis of C2-perp), `hz` rows the Z-stabilizer generator supports
/// (a basis of C1-perp); both are kept in RREF. `mapping_a` is the basis of
/// C1/C2-perp that fixes how logical information embeds in codewords; its
/// rows double as the stored logical-X representatives unless minimum-weight
/// reduction found lighter coset elements.
struct CssCode {
    std::size_t n = 0;
    std::size_t k = 0;
    BitMatrix hx;
    BitMatrix hz;
    BitMatrix logical_x;   // k x n
    BitMatrix logical_z;   // k x n
    BitMatrix mapping_a;   // k x n
    std::string name;      // optional id used by circuit serialization

    /// C1 = dual(hz), C2 = dual(hx) generator bases.
    BitMatrix c1_basis() const { return dual_basis(hz); }
    BitMatrix c2_basis() const { return dual_basis(hx); }
    bool symmetric() const { return spans_equal(hx, hz); }
};

struct TriorthogonalCode {
    CssCode base;
    BitMatrix g;    // the defining triorthogonal matrix (G1 rows then G0 rows)
    BitMatrix g1;   // odd-weight rows
    BitMatrix g0;   // even-weight rows
    std::size_t m = 0;  // rows of g0
};

struct CodeParameters {
    std::size_t n = 0, k = 0, d = 0, dx = 0, dz = 0;
};

/// Pairwise and triple overlap conditions on the rows of g.
bool is_triorthogonal(const BitMatrix& g);

/// Throws NotTriorthogonal / RankDeficient.
TriorthogonalCode build_triorthogonal_code(const BitMatrix& g);

/// True iff the all-ones vector lies in span(G) and carries coefficient 1 on
/// every odd-weight row, i.e. transversal physical X implements logical X on
/// every logical qubit.
bool is_x_transversal(const TriorthogonalCode& code);

/// Companion symmetric codes CSS(C,C) with C = span([G;B]), C1 < C < C2,
/// deduplicated by row span and ordered canonically (support-lex RREF
/// signature); the first entry is the canonical choice.
/// Throws OddDeficiency when n-k is odd; NoExtension when the search fails.
std::vector<CssCode> generate_symmetric_codes(const TriorthogonalCode& qt, std::size_t limit);

/// Minimum Hamming weight over span(space) \ span(subspace), exhaustively.
/// Throws SubspaceViolation / TooLarge (rank(space) capped at 24).
std::size_t min_coset_weight(const BitMatrix& space, const BitMatrix& subspace);
/// Serial reference implementation (kept for tests and benchmarks).
std::size_t min_coset_weight_serial(const BitMatrix& space, const BitMatrix& subspace);

CodeParameters code_parameters(const CssCode& code);

/// Checks every CssCode invariant (commutation, symplectic pairing, rank
/// accounting); throws on violation. Used by construction paths and tests.
void validate_css(const CssCode& code);

/// Minimum-weight, support-lex-least representative of v + span(s).
BitVector min_weight_coset_rep(const BitVector& v, const BitMatrix& s);

/// Builds a CssCode from stabilizer check matrices; logical operators are
/// minimum-weight coset representatives paired symplectically.
CssCode make_css_code(const BitMatrix& hx, const BitMatrix& hz, std::string name = "");

/// Code bundle text format: matrix blocks labeled [G] or [HX]/[HZ] with
/// optional [LX]/[LZ] overrides.
CssCode load_code_bundle(std::istream& in, std::string name = "");
CssCode load_code_bundle_file(const std::string& path);
void save_code_bundle(std::ostream& out, const CssCode& code);

/// The 15-qubit distance-3 triorthogonal code (punctured Reed-Muller family)
/// and its canonical symmetric companion; the defaults for CLI protocols.
const TriorthogonalCode& builtin_qt15();
const CssCode& builtin_sym15();
BitMatrix builtin_g15();

}  // namespace triortho
