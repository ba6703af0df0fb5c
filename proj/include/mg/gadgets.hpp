#pragma once

/** \file
 * Gadget constructors: f-SWAP gadget, H-gadget, hole routing, 2-to-1
 * encoding helpers, the matchgate+H SWAP template and the appendix CZ
 * procedure. Every constructor returns a left-to-right GateSequence and
 * validates edges against the host graph at attachment time.
 */

#include <functional>
#include <set>
#include <utility>

#include "mg/gates.hpp"
#include "mg/graph.hpp"
#include "mg/sequence.hpp"

namespace mg {

/// Five-gate sequence F[a,i] F[i,i-1] G[i,i+1] F[i,i-1] F[a,i] (program
/// order) realizing G between next-nearest neighbors i_prev and i_next on
/// the subspace where the T-structure ancilla is clamped to |0>.
GateSequence fswap_gadget(const InteractionGraph& g, int i_prev, int i, int i_next, int ancilla,
                          const TwoQubitGate& target);

/// Extension of the f-SWAP gadget hiding two chain qubits in their
/// pendants to interact third neighbors: 8 f-SWAPs plus one target gate.
GateSequence third_neighbor_gadget(const InteractionGraph& g, int i_prev, int i, int i_next,
                                   int i_far, int ancilla_i, int ancilla_next,
                                   const TwoQubitGate& target);

/// Single G(H,H) on oriented pair (i, ancilla); acts as H on qubit i with
/// the ancilla clamped to |+>.
GateSequence h_gadget(const InteractionGraph& g, int i, int ancilla);

struct HoleRouteResult {
    GateSequence seq;
    int final_hole;
};

/// One f-SWAP per path edge, each moving the |0> hole one step; the
/// traversed states shift one step toward the path start with no phase.
HoleRouteResult hole_route(const InteractionGraph& g, int hole_at, const std::vector<int>& path);

/// Hosts of routable states plus the |0> vertices available as holes.
struct RoutingLayout {
    std::map<int, int> host;  // logical id -> vertex
    std::set<int> holes;      // vertices currently holding |0>
};

struct BringAdjacentResult {
    GateSequence seq;
    GateSequence restore;  // inverse routing
    RoutingLayout layout;  // updated layout
};

/// Hole-route moves making the states of qubit_a and qubit_b adjacent;
/// qubit_a walks through holes toward qubit_b. Throws RoutingError when no
/// all-hole walk exists.
BringAdjacentResult bring_adjacent(const InteractionGraph& g, const RoutingLayout& layout,
                                   int qubit_a, int qubit_b);

/// Walk one hosted state through holes to any vertex satisfying `accept`.
/// Returns the updated layout; gates are appended to `out`.
RoutingLayout walk_state_via_holes(const InteractionGraph& g, const RoutingLayout& layout,
                                   int logical, const std::function<bool(int)>& accept,
                                   GateSequence& out, int provenance = -1);

/// Block initialization for the 2-to-1 encoding: |1>_L blocks get G(X,X).
GateSequence encode_logical_bits(const InteractionGraph& g,
                                 const std::vector<std::pair<int, int>>& blocks,
                                 const std::vector<bool>& bits);

/// Logical single-qubit gate A = G(A,A) on the oriented block pair.
GateSequence encoded_single_qubit_gate(const InteractionGraph& g, std::pair<int, int> block,
                                       const Matrix2& a);

/// F[psi,b1] F[b2... the two-f-SWAP pattern moving an arbitrary state
/// through an encoded block: |psi>|phi>_L -> |phi>_L|psi>.
GateSequence logical_swap_through(const InteractionGraph& g, int psi_vertex,
                                  std::pair<int, int> block);

/// One step of a matchgate program with H insertions marked; an H slot
/// stands for literal H on both operands of the pair it decorates.
struct TemplateItem {
    bool is_h_slot = false;
    TwoQubitGate gate;  // valid when !is_h_slot
};

/// Matchgates plus marked H-slots whose product equals SWAP up to a global
/// phase: program [HH, exp(i pi/4 XX), HH, Rz(pi/2)x2, f-SWAP].
std::vector<TemplateItem> swap_via_matchgates_and_h();

/// CZ up to global phase on a plain pair: [HH, exp(i pi/4 XX), HH, Rz(pi/2)x2].
std::vector<TemplateItem> cz_via_matchgates_and_h();

/// G(H,H) G(X,X) SWAP G(H,H) with the SWAP expanded: logical CZ between two
/// encoded blocks when run on the interface pair.
std::vector<TemplateItem> encoded_cz_template();

/// 4x4 product of a template program with literal H (x) H substituted into
/// the slots (test/oracle helper).
Matrix4 template_matrix(const std::vector<TemplateItem>& items);

/// Appends gates realizing H on the state currently at `vertex`.
using HProvider = std::function<void(int vertex, GateSequence&)>;

/// Eq.-controlZ interface sequence on the pair (u, v) with every H routed
/// through the provider. Blocks (.,u) and (v,.) must already be adjacent.
GateSequence encoded_cz_sequence(const InteractionGraph& g, std::pair<int, int> block1,
                                 std::pair<int, int> block2, const HProvider& h_provider);

/// Positions of the two encoded blocks for the appendix procedure, in
/// chain order; positions[0] is the vertex adjacent to both ancillas.
struct AppendixLayout {
    std::array<int, 4> positions;
};

/// The appendix procedure: swap-through to interleave blocks, hole-assisted
/// shuttling of the |+> ancilla, the interface CZ template, and the return
/// of all states to their initial positions. alpha holds |+>, beta holds |0>.
GateSequence appendix_cz_procedure(const InteractionGraph& g, const AppendixLayout& layout,
                                   int alpha, int beta);

}  // namespace mg
