#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "triortho/css_code.hpp"
#include "triortho/decoder.hpp"
#include "triortho/tableau.hpp"

namespace triortho {

/// Physical qubit inside a named block.
struct QubitRef {
    std::string block;
    std::size_t index = 0;
};

/// One circuit instruction. Serialized one per line, e.g.
///   H data[0]
///   CNOT data[0] data[4]
///   TCZ data anc
///   TH data
///   MEASX data -> m0
///   MEASZ ver[2] -> v2
///   CPAULI (m0) X_L anc
///   CORRECT (s0) X anc2 USING anc2
///   VERIFY (v0|v1|v2) DISCARD
///   RESET anc 0
struct Instruction {
    enum class Kind {
        Gate,               ///< fixed-arity gate on explicit qubits
        TransversalGate,    ///< qubit-i-to-qubit-i layer between two blocks (or one, for H)
        MeasureBlock,       ///< full block in one basis, labeled
        MeasureQubit,       ///< single qubit, labeled
        ConditionalPauli,   ///< logical Pauli on a block, gated by a parity expression
        DecodedCorrection,  ///< physical Pauli pattern decoded from a measured word
        VerifyDiscard,      ///< post-selection: discard when the OR-expression is 1
        ResetBlock,         ///< re-prepare a block in a logical label state
    };

    Kind kind = Kind::Gate;
    GateKind gate = GateKind::H;      // Gate / TransversalGate
    std::vector<QubitRef> targets;    // Gate / MeasureQubit (single entry)
    std::string block_a, block_b;     // TransversalGate; MeasureBlock/Reset use block_a
    char basis = 'Z';                 // MeasureBlock / MeasureQubit
    std::string label;                // measurement label
    std::string condition;            // ConditionalPauli: parity expr "m0" / "m0^m1";
                                      // VerifyDiscard: OR expr "v0|v1"
    char pauli = 'X';                 // ConditionalPauli: logical kind; DecodedCorrection: applied kind
    std::string source_label;         // DecodedCorrection: measured word to decode
    std::string decode_block;         // DecodedCorrection: block whose code supplies the lookup
    std::string target_block;         // ConditionalPauli / DecodedCorrection target
    std::string reset_label;          // ResetBlock
    std::string phase_tag;            // "prep" / "switch" / "ec" (resource breakdown)
};

struct BlockDecl {
    std::string name;
    std::shared_ptr<const CssCode> code;  // null for raw qubit registers
    std::size_t raw_size = 0;
    std::string init;                     // logical labels, or "" for raw |0..0>
    // State-preparation cost attached to the block. `source` is "paper" when
    // the numbers are published constants, "computed" when they come from the
    // artifact's own synthesis; empty when the block carries no prep cost.
    std::size_t prep_extra_qubits = 0;
    std::size_t prep_two_qubit_gates = 0;
    std::string prep_source;

    std::size_t size() const { return code ? code->n : raw_size; }
};

struct Circuit {
    std::string kind_name;
    std::vector<BlockDecl> blocks;
    std::vector<Instruction> instructions;
    std::string output_block;
    std::string data_block = "data";
    std::map<std::string, std::string> metadata;

    const BlockDecl& block(const std::string& name) const;
    bool has_block(const std::string& name) const;
    std::size_t total_qubits() const;
};

enum class ProtocolKind {
    SteaneEC,
    HadamardCZ,
    TeleportTtoSym,
    TeleportSymToT,
    HadamardSteaneMerged,
    TeleportTtoSymEC,
    TeleportSymToTEC,
    PrepPlusQTVerified,
    PrepZeroSym,
};

std::string protocol_kind_name(ProtocolKind k);
ProtocolKind protocol_kind_from_name(const std::string& name);
bool protocol_needs_sym(ProtocolKind k);

/// Builds the protocol circuit for the given code (pair). Kinds involving the
/// symmetric companion require the pair to pass the CNOT and sufficient-CZ
/// checks (PairNotTransversal otherwise).
Circuit build_protocol(ProtocolKind kind, const TriorthogonalCode& qt,
                       const CssCode* sym = nullptr);

/// H/CNOT(/X/Z) circuit preparing the encoded label state from |0...0>.
/// Metadata carries the gate counts.
Circuit synthesize_encoding_circuit(const CssCode& code, const std::string& labels);

/// --- execution ---

struct BlockMeasurement {
    std::string block;
    char basis = 'Z';
    BitVector word;                   // physical outcomes
    std::vector<bool> deterministic;  // per qubit
    BitVector logical;                // decoded logical bits (coded blocks)
    std::uint64_t syndrome = 0;
    bool has_logical = false;
};

struct MeasurementRecord {
    std::vector<std::pair<std::string, BlockMeasurement>> entries;  // label -> data
    const BlockMeasurement* find(const std::string& label) const;
    /// Value of a label inside a classical condition: logical bit 0 for block
    /// measurements, the raw bit for qubit measurements.
    int bit(const std::string& label) const;
};

struct Injection {
    std::size_t position = 0;  // applied before instruction [position]
    std::string block;
    PauliOperator pauli;       // block-local
};

struct RunOptions {
    std::uint64_t seed = 0;
    std::vector<Injection> injections;
    /// Force the logical outcome of a labeled block measurement (the logical
    /// operator is measured first with the forced result, then the qubits).
    std::map<std::string, int> forced_logical;
};

struct ProtocolOutcome {
    bool accepted = true;
    StabilizerTableau tableau;  // full register, post-run
    MeasurementRecord record;
    std::vector<std::string> feedback_applied;
    std::map<std::string, std::size_t> block_offsets;
    std::size_t instructions_executed = 0;

    /// Block-local state, canonicalized (requires disentanglement).
    StabilizerTableau block_state(const std::string& block, std::size_t size) const;
};

ProtocolOutcome run(const Circuit& circuit, const RunOptions& options = {});

/// Line-oriented circuit text (see Instruction). Blocks serialize as
/// `BLOCK <name> <code-name|raw:N> <init|->` header lines.
std::string serialize_circuit(const Circuit& circuit);
/// Parses the text form; codes are resolved by name through the registry
/// (builtin codes plus any supplied bundles).
Circuit parse_circuit(const std::string& text,
                      const std::map<std::string, std::shared_ptr<const CssCode>>& codes);

}  // namespace triortho
