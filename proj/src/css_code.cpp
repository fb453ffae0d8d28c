#include "triortho/css_code.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "triortho/errors.hpp"
#include "triortho/transversal.hpp"

namespace triortho {

bool is_triorthogonal(const BitMatrix& g) {
    const std::size_t m = g.num_rows();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (g.row(a).dot(g.row(b))) return false;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c) {
                std::uint64_t acc = 0;
                const auto& wa = g.row(a).words();
                const auto& wb = g.row(b).words();
                const auto& wc = g.row(c).words();
                for (std::size_t w = 0; w < wa.size(); ++w) acc ^= wa[w] & wb[w] & wc[w];
                std::size_t bits = 0;
                for (std::uint64_t x = acc; x; x &= x - 1) ++bits;
                if (bits & 1) return false;
            }
    return true;
}

BitVector min_weight_coset_rep(const BitVector& v, const BitMatrix& s) {
    Span span(s);
    const std::size_t r = span.rank();
    if (r > 24) throw TooLarge("coset enumeration beyond 2^24 elements");
    BitVector best = v;
    BitVector cur = v;
    const BitMatrix& basis = span.basis();
    const std::uint64_t total = std::uint64_t(1) << r;
    // Gray-code walk over the coset.
    for (std::uint64_t i = 1; i < total; ++i) {
        const int bit = std::countr_zero(i);
        cur ^= basis.row(std::size_t(bit));
        if (cur.weight() < best.weight() ||
            (cur.weight() == best.weight() && BitVector::support_less(cur, best)))
            best = cur;
    }
    return best;
}

namespace {

/// Symplectically paired logical-Z basis for given mapping rows:
/// returns W with W . A^T = I, each row then minimized over its own coset.
BitMatrix paired_logical_z(const BitMatrix& mapping_a, const BitMatrix& hx,
                           const BitMatrix& hz) {
    // Logical Z lives in the quotient C2 / C1-perp = dual(hx) / span(hz).
    const BitMatrix c2 = dual_basis(hx);
    BitMatrix w0 = quotient_basis(c2, hz);
    const BitMatrix gram = gf2_gram(w0, mapping_a);
    const BitMatrix inv = gf2_inverse(gram);
    BitMatrix w(0, mapping_a.num_cols());
    for (std::size_t i = 0; i < inv.num_rows(); ++i) {
        BitVector row(mapping_a.num_cols());
        for (std::size_t j = 0; j < inv.num_cols(); ++j)
            if (inv.get(i, j)) row ^= w0.row(j);
        w.append_row(std::move(row));
    }
    // Weight-minimize within the stabilizer coset; adding span(hz) elements
    // preserves every symplectic pairing.
    if (Span(hz).rank() <= 20) {
        for (std::size_t i = 0; i < w.num_rows(); ++i)
            w.row(i) = min_weight_coset_rep(w.row(i), hz);
    }
    return w;
}

}  // namespace

void validate_css(const CssCode& code) {
    if (code.hx.num_rows() && code.hx.num_cols() != code.n)
        throw DimensionMismatch("hx width != n");
    if (code.hz.num_rows() && code.hz.num_cols() != code.n)
        throw DimensionMismatch("hz width != n");
    for (std::size_t i = 0; i < code.hx.num_rows(); ++i)
        for (std::size_t j = 0; j < code.hz.num_rows(); ++j)
            if (code.hx.row(i).dot(code.hz.row(j)))
                throw SubspaceViolation("hx and hz stabilizers do not commute");
    if (gf2_rank(code.hx) + gf2_rank(code.hz) != code.n - code.k)
        throw RankDeficient("rank(hx) + rank(hz) != n - k");
    const BitMatrix gram_xz = gf2_gram(code.logical_x, code.logical_z);
    if (gram_xz != BitMatrix::identity(code.k))
        throw SubspaceViolation("logical X/Z pairing is not symplectic-diagonal");
    for (std::size_t i = 0; i < code.k; ++i) {
        for (std::size_t j = 0; j < code.hz.num_rows(); ++j)
            if (code.logical_x.row(i).dot(code.hz.row(j)))
                throw SubspaceViolation("logical X anticommutes with a Z stabilizer");
        for (std::size_t j = 0; j < code.hx.num_rows(); ++j)
            if (code.logical_z.row(i).dot(code.hx.row(j)))
                throw SubspaceViolation("logical Z anticommutes with an X stabilizer");
    }
}

TriorthogonalCode build_triorthogonal_code(const BitMatrix& g) {
    if (!is_triorthogonal(g)) throw NotTriorthogonal("input matrix fails the overlap conditions");
    if (gf2_rank(g) != g.num_rows()) throw RankDeficient("G must have independent rows");

    TriorthogonalCode code;
    code.g = g;
    BitMatrix g1(0, g.num_cols()), g0(0, g.num_cols());
    for (std::size_t i = 0; i < g.num_rows(); ++i) {
        if (g.row(i).weight() % 2) g1.append_row(g.row(i));
        else g0.append_row(g.row(i));
    }
    code.g1 = g1;
    code.g0 = g0;
    code.m = g0.num_rows();

    CssCode& base = code.base;
    base.n = g.num_cols();
    base.k = g1.num_rows();
    base.hx = Span(g0).basis();
    base.hz = dual_basis(g);
    base.logical_x = g1;
    base.mapping_a = g1;
    base.logical_z = paired_logical_z(g1, base.hx, base.hz);
    validate_css(base);
    return code;
}

bool is_x_transversal(const TriorthogonalCode& code) {
    BitVector ones(code.base.n);
    for (std::size_t i = 0; i < code.base.n; ++i) ones.set(i, true);
    auto [found, coeff] = solve_row_combination(code.g, ones);
    if (!found) return false;
    // Row order inside `g` is arbitrary; demand coefficient 1 on every
    // odd-weight row so the transversal X acts as logical X everywhere.
    for (std::size_t i = 0; i < code.g.num_rows(); ++i) {
        const bool odd = code.g.row(i).weight() % 2;
        if (odd && !coeff.get(i)) return false;
    }
    return true;
}

namespace {

/// Canonical key for a code: concatenated support-lex comparison of RREF rows.
bool signature_less(const BitMatrix& a, const BitMatrix& b) {
    const std::size_t n = std::min(a.num_rows(), b.num_rows());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.row(i) == b.row(i)) continue;
        return BitVector::support_less(a.row(i), b.row(i));
    }
    return a.num_rows() < b.num_rows();
}

}  // namespace

std::vector<CssCode> generate_symmetric_codes(const TriorthogonalCode& qt, std::size_t limit) {
    const std::size_t n = qt.base.n, k = qt.base.k, m = qt.m;
    if ((n - k) % 2 != 0) throw OddDeficiency("n - k must be even");
    if (n < k + 2 * m) throw NoExtension("g0 is too large: n - k - 2m < 0");
    const std::size_t r = (n - k - 2 * m) / 2;

    // Candidate search space: a basis of G0-perp reduced modulo G1 (made
    // orthogonal to every odd row, using G1.G1^T = I) and modulo G0.
    BitMatrix cand = quotient_basis(dual_basis(qt.g0), qt.g);
    Span g0_span(qt.g0);
    for (std::size_t i = 0; i < cand.num_rows(); ++i) {
        for (std::size_t j = 0; j < qt.g1.num_rows(); ++j)
            if (cand.row(i).dot(qt.g1.row(j))) cand.row(i) ^= qt.g1.row(j);
        cand.row(i) = g0_span.reduce(cand.row(i));
    }

    std::vector<BitMatrix> extensions;
    if (r == 0) {
        extensions.push_back(BitMatrix(0, n));
    } else {
        extensions = find_self_orthogonal_extensions(qt.g0, cand, r,
                                                     std::numeric_limits<std::size_t>::max());
    }

    // Deduplicate by the row span of [G; B]; canonical order on signatures.
    std::vector<std::pair<BitMatrix, BitMatrix>> distinct;  // (rref signature, B)
    for (const auto& b : extensions) {
        BitMatrix sig = Span(qt.g.vstack(b)).basis();
        bool seen = false;
        for (const auto& [s, _] : distinct)
            if (s == sig) { seen = true; break; }
        if (!seen) distinct.emplace_back(std::move(sig), b);
    }
    std::stable_sort(distinct.begin(), distinct.end(),
                     [](const auto& a, const auto& b) { return signature_less(a.first, b.first); });

    std::vector<CssCode> out;
    for (const auto& [cgen, b] : distinct) {
        if (out.size() >= limit) break;
        CssCode code;
        code.n = n;
        code.k = k;
        code.hx = dual_basis(cgen);
        code.hz = code.hx;
        // Logical operators: the coset of each G1 row modulo C-perp, taken at
        // minimum weight; index-wise identification with the source logicals.
        BitMatrix logical(0, n);
        for (std::size_t i = 0; i < k; ++i)
            logical.append_row(min_weight_coset_rep(qt.g1.row(i), code.hx));
        code.logical_x = logical;
        code.logical_z = logical;
        code.mapping_a = logical;
        validate_css(code);
        // Belt and braces: the pair must satisfy both the CNOT and the
        // sufficient CZ conditions before we hand it out.
        if (!check_cnot(qt.base, code) || !check_cz_sufficient(qt.base, code) ||
            !check_cz_sufficient(code, qt.base))
            continue;
        out.push_back(std::move(code));
    }
    if (out.empty()) throw NoExtension("no symmetric companion satisfied the pair conditions");
    return out;
}

namespace {

std::size_t min_coset_weight_impl(const BitMatrix& space, const BitMatrix& subspace,
                                  bool parallel) {
    Span sp(space), sub(subspace);
    if (sp.rank() > 24) throw TooLarge("span enumeration beyond 2^24");
    if (sub.rank() > 0 && !sp.contains_rows(sub.basis()))
        throw SubspaceViolation("subspace not contained in space");
    if (sp.rank() == sub.rank()) throw SubspaceViolation("quotient is trivial");

    const std::size_t rank = sp.rank();
    const BitMatrix& basis = sp.basis();
    const std::uint64_t total = std::uint64_t(1) << rank;
    std::size_t best = space.num_cols() + 1;

    auto scan_range = [&](std::uint64_t lo, std::uint64_t hi) {
        // Gray-code order within [lo, hi): element i is XOR of basis rows in
        // the gray code of i, so results never depend on the partition.
        std::size_t local = space.num_cols() + 1;
        BitVector cur(space.num_cols());
        std::uint64_t gray = lo ^ (lo >> 1);
        for (std::uint64_t b = 0; b < rank; ++b)
            if ((gray >> b) & 1) cur ^= basis.row(std::size_t(b));
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (i != lo) {
                const std::uint64_t g = i ^ (i >> 1), pg = (i - 1) ^ ((i - 1) >> 1);
                cur ^= basis.row(std::size_t(std::countr_zero(g ^ pg)));
            }
            if (!cur.any()) continue;
            const std::size_t w = cur.weight();
            if (w < local && !sub.contains(cur)) local = w;
        }
        return local;
    };

#ifdef _OPENMP
    if (parallel && total >= 4096) {
        const int nthreads = omp_get_max_threads();
        const std::uint64_t chunk = (total + nthreads - 1) / nthreads;
        std::size_t global_best = best;
#pragma omp parallel for reduction(min : global_best)
        for (int t = 0; t < nthreads; ++t) {
            const std::uint64_t lo = std::min<std::uint64_t>(t * chunk, total);
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
            const std::size_t local = scan_range(lo, hi);
            global_best = std::min(global_best, local);
        }
        best = global_best;
    } else
#endif
    {
        (void)parallel;
        best = scan_range(0, total);
    }
    if (best > space.num_cols()) throw SubspaceViolation("space \\ subspace is empty");
    return best;
}

}  // namespace

std::size_t min_coset_weight(const BitMatrix& space, const BitMatrix& subspace) {
    return min_coset_weight_impl(space, subspace, true);
}

std::size_t min_coset_weight_serial(const BitMatrix& space, const BitMatrix& subspace) {
    return min_coset_weight_impl(space, subspace, false);
}

CodeParameters code_parameters(const CssCode& code) {
    CodeParameters p;
    p.n = code.n;
    p.k = code.k;
    p.dx = min_coset_weight(code.c1_basis(), code.hx);
    p.dz = min_coset_weight(code.c2_basis(), code.hz);
    p.d = std::min(p.dx, p.dz);
    return p;
}

CssCode make_css_code(const BitMatrix& hx, const BitMatrix& hz, std::string name) {
    CssCode code;
    code.n = hx.num_cols() ? hx.num_cols() : hz.num_cols();
    code.hx = Span(hx).basis();
    code.hz = Span(hz).basis();
    const std::size_t rx = code.hx.num_rows(), rz = code.hz.num_rows();
    if (rx + rz > code.n) throw RankDeficient("stabilizer ranks exceed qubit count");
    code.k = code.n - rx - rz;
    code.name = std::move(name);

    BitMatrix a = quotient_basis(dual_basis(code.hz), code.hx);
    if (a.num_rows() != code.k) throw RankDeficient("logical X quotient has wrong dimension");
    if (Span(code.hx).rank() <= 20)
        for (std::size_t i = 0; i < a.num_rows(); ++i)
            a.row(i) = min_weight_coset_rep(a.row(i), code.hx);
    code.mapping_a = a;
    code.logical_x = a;
    code.logical_z = paired_logical_z(a, code.hx, code.hz);
    validate_css(code);
    return code;
}

CssCode load_code_bundle(std::istream& in, std::string name) {
    std::map<std::string, std::vector<std::string>> blocks;
    std::string line, current;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        std::size_t s = 0;
        while (s < line.size() && line[s] == ' ') ++s;
        line.erase(0, s);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            current = line.substr(1, line.size() - 2);
            if (current != "G" && current != "HX" && current != "HZ" && current != "LX" && current != "LZ")
                throw ParseError("unknown bundle block [" + current + "]");
            continue;
        }
        if (current.empty()) throw ParseError("matrix row outside any [..] block");
        blocks[current].push_back(line);
    }

    if (blocks.count("G")) {
        TriorthogonalCode t = build_triorthogonal_code(BitMatrix::from_strings(blocks["G"]));
        t.base.name = std::move(name);
        return t.base;
    }
    if (!blocks.count("HX") || !blocks.count("HZ"))
        throw ParseError("bundle needs either [G] or both [HX] and [HZ]");
    CssCode code = make_css_code(BitMatrix::from_strings(blocks["HX"]),
                                 BitMatrix::from_strings(blocks["HZ"]), std::move(name));
    if (blocks.count("LX")) code.logical_x = BitMatrix::from_strings(blocks["LX"]);
    if (blocks.count("LZ")) code.logical_z = BitMatrix::from_strings(blocks["LZ"]);
    if (blocks.count("LX")) code.mapping_a = code.logical_x;
    if (blocks.count("LX") || blocks.count("LZ")) validate_css(code);
    return code;
}

CssCode load_code_bundle_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open bundle file: " + path);
    return load_code_bundle(f, path);
}

void save_code_bundle(std::ostream& out, const CssCode& code) {
    out << "[HX]\n";
    write_matrix_text(out, code.hx);
    out << "[HZ]\n";
    write_matrix_text(out, code.hz);
    out << "[LX]\n";
    write_matrix_text(out, code.logical_x);
    out << "[LZ]\n";
    write_matrix_text(out, code.logical_z);
}

BitMatrix builtin_g15() {
    return BitMatrix::from_strings({
        "111111110000000",
        "111100001111000",
        "110011001100110",
        "101010101010101",
        "100101100110100",
    });
}

const TriorthogonalCode& builtin_qt15() {
    static const TriorthogonalCode code = [] {
        TriorthogonalCode c = build_triorthogonal_code(builtin_g15());
        c.base.name = "qt15";
        return c;
    }();
    return code;
}

const CssCode& builtin_sym15() {
    static const CssCode code = [] {
        CssCode c = generate_symmetric_codes(builtin_qt15(), 1).at(0);
        c.name = "sym15";
        return c;
    }();
    return code;
}

}  // namespace triortho
