#pragma once

/** \file
 * Strategy-based compilation of logical circuits onto interaction graphs,
 * resource accounting against the per-strategy bounds, and statevector
 * verification of compiled schedules.
 */

#include <optional>
#include <string>

#include "mg/circuit.hpp"
#include "mg/gadgets.hpp"
#include "mg/graph.hpp"
#include "mg/sequence.hpp"
#include "mg/state.hpp"

namespace mg {

enum class Strategy {
    HairCombHGadget,
    HairCombFswapEncoded,
    CycleRotation,
    ChainCenterShuttle,
    ChainPendantEncoded,
    StarHub,
    BinaryTreeLeaves,
    WheelHub,
    AncillaSet,
    Auto,
};

std::string strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& name);

enum class Encoding { None, TwoToOne };

struct PhysicalSchedule {
    InteractionGraph graph;  // roles populated by the strategy
    Strategy strategy = Strategy::Auto;
    Encoding encoding = Encoding::None;
    int logical_qubits = 0;
    std::vector<int> initial_host;                   // logical -> vertex
    std::vector<std::pair<int, int>> blocks;         // encoded block pairs (initial)
    std::vector<int> final_host;                     // logical -> vertex
    std::vector<std::pair<int, int>> final_blocks;   // encoded block pairs (final)
    GateSequence seq;
};

struct StrategyBound {
    std::string description = "none";
    bool applicable = false;
    double observed = 0;
    double limit = 0;
    bool pass = true;
};

struct ResourceReport {
    int total_gates = 0;
    int fswap_count = 0;
    int physical_qubits_used = 0;  // role-assigned vertices
    int logical_gate_count = 0;
    int nn_model_gate_count = 0;  // RZ, H and backbone-adjacent MG gates
    std::vector<int> fswaps_per_gate;
    int max_fswaps_per_h = 0;
    int max_fswaps_per_two_qubit = 0;
    StrategyBound bound;

    std::string to_text() const;
};

struct CompileResult {
    PhysicalSchedule schedule;
    ResourceReport report;
};

/// Compiles the circuit onto the graph with the named strategy (Auto tries
/// each in declaration order). Throws CompileError when no strategy applies
/// or the circuit does not fit.
CompileResult compile(const LogicalCircuit& circuit, const InteractionGraph& graph,
                      Strategy strategy);

/// Exact recount from the schedule, attributing f-SWAPs to logical gates
/// through the provenance tags.
ResourceReport count_resources(const PhysicalSchedule& schedule, const LogicalCircuit& circuit);

/// The Eq.(3) instantiation for a next-nearest-neighbor pair on a comb-like
/// graph: locates the middle vertex and its pendant, then defers to
/// fswap_gadget. Exactly 4 f-SWAPs plus one target gate.
GateSequence simulate_nnn_gate(const InteractionGraph& g, int i, int j,
                               const TwoQubitGate& target);

struct VerifyReport {
    bool verified = false;  // false when the register exceeds the cap
    double worst_fidelity = 0;
    double phase_spread = 0;
    double worst_ancilla_deviation = 0;
    bool layout_restored = false;
    bool pass = false;

    std::string to_text() const;
};

/// Runs schedule and reference circuit over the spanning set of logical
/// product inputs; reports worst fidelity, common-phase consistency,
/// ancilla restoration and layout restoration.
VerifyReport verify(const LogicalCircuit& circuit, const PhysicalSchedule& schedule, double tol,
                    int cap = kDefaultQubitCap);

// --- structure detection (shared with the analyzer) ---

struct CombStructure {
    std::vector<int> backbone;
    std::vector<int> tooth;  // tooth[i] hangs off backbone[i]
};
std::optional<CombStructure> detect_hair_comb(const InteractionGraph& g);

struct CycleSiteStructure {
    std::vector<int> cycle;  // cycle order; cycle[0] is adjacent to site
    int site;                // off-cycle H-gadget vertex
};
std::optional<CycleSiteStructure> detect_cycle_with_site(const InteractionGraph& g, int min_len,
                                                         long long budget = 2'000'000);

struct PathTapsStructure {
    std::vector<int> path;  // simple path; alpha and beta neighbor path[0]
    int alpha;
    int beta;
};
std::optional<PathTapsStructure> detect_path_with_two_taps(const InteractionGraph& g,
                                                           int needed_len,
                                                           long long budget = 2'000'000);

struct ChainPendantStructure {
    std::vector<int> chain;  // full chain order
    int attach_index;        // pendant hangs off chain[attach_index]
    int pendant;
};
/// Candidate readings of an exact chain-with-pendant shape (two when the
/// pendant sits next to a chain end).
std::vector<ChainPendantStructure> detect_chain_with_pendant(const InteractionGraph& g);

struct StarStructure {
    int hub;
    std::vector<int> leaves;
};
std::optional<StarStructure> detect_star(const InteractionGraph& g);

struct TreeStructure {
    int root;
    int depth;
    std::vector<int> internal;  // all non-leaf vertices
    std::vector<int> leaves;
};
std::optional<TreeStructure> detect_complete_binary_tree(const InteractionGraph& g);

struct WheelStructure {
    int hub;
    std::vector<int> rim;  // rim cycle order
};
std::optional<WheelStructure> detect_wheel(const InteractionGraph& g);

struct PoolStructure {
    std::vector<int> pool;   // connected |0> routing pool
    std::vector<int> sites;  // pool-adjacent computational candidates
    int plus_site;           // |+> vertex adjacent to the pool
};
std::optional<PoolStructure> detect_ancilla_pool(const InteractionGraph& g, int k);

}  // namespace mg
