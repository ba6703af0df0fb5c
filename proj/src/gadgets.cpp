#include "mg/gadgets.hpp"

#include <algorithm>
#include <deque>

#include "mg/errors.hpp"

namespace mg {

namespace {

void require_edge(const InteractionGraph& g, int u, int v, const char* what) {
    if (!g.has_edge(u, v))
        throw TopologyError(std::string(what) + ": missing edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "}");
}

}  // namespace

GateSequence fswap_gadget(const InteractionGraph& g, int i_prev, int i, int i_next, int ancilla,
                          const TwoQubitGate& target) {
    require_edge(g, ancilla, i, "fswap_gadget");
    require_edge(g, i, i_prev, "fswap_gadget");
    require_edge(g, i, i_next, "fswap_gadget");
    if (!is_matchgate(target)) throw ValidationError("fswap_gadget: target is not a matchgate");
    const TwoQubitGate f = gate::fswap();
    GateSequence seq;
    seq.clamps[ancilla] = Clamp::Zero;
    seq.push(f, ancilla, i);
    seq.push(f, i, i_prev);
    seq.push(target, i, i_next);
    seq.push(f, i, i_prev);
    seq.push(f, ancilla, i);
    return seq;
}

GateSequence third_neighbor_gadget(const InteractionGraph& g, int i_prev, int i, int i_next,
                                   int i_far, int ancilla_i, int ancilla_next,
                                   const TwoQubitGate& target) {
    require_edge(g, ancilla_i, i, "third_neighbor_gadget");
    require_edge(g, ancilla_next, i_next, "third_neighbor_gadget");
    require_edge(g, i, i_prev, "third_neighbor_gadget");
    require_edge(g, i, i_next, "third_neighbor_gadget");
    require_edge(g, i_next, i_far, "third_neighbor_gadget");
    if (!is_matchgate(target))
        throw ValidationError("third_neighbor_gadget: target is not a matchgate");
    const TwoQubitGate f = gate::fswap();
    GateSequence seq;
    seq.clamps[ancilla_i] = Clamp::Zero;
    seq.clamps[ancilla_next] = Clamp::Zero;
    seq.push(f, ancilla_i, i);             // hide qubit i
    seq.push(f, ancilla_next, i_next);     // hide qubit i+1
    seq.push(f, i, i_prev);                // walk the i-1 state forward...
    seq.push(f, i_next, i);
    seq.push(target, i_next, i_far);       // ...interact with the third neighbor
    seq.push(f, i_next, i);                // and walk it back
    seq.push(f, i, i_prev);
    seq.push(f, ancilla_next, i_next);
    seq.push(f, ancilla_i, i);
    return seq;
}

GateSequence h_gadget(const InteractionGraph& g, int i, int ancilla) {
    require_edge(g, i, ancilla, "h_gadget");
    GateSequence seq;
    seq.clamps[ancilla] = Clamp::Plus;
    seq.push(gate::ghh(), i, ancilla);
    return seq;
}

HoleRouteResult hole_route(const InteractionGraph& g, int hole_at, const std::vector<int>& path) {
    if (path.empty() || path.front() != hole_at)
        throw ValidationError("hole_route: path must start at the hole");
    const TwoQubitGate f = gate::fswap();
    HoleRouteResult out;
    out.seq.clamps[hole_at] = Clamp::Zero;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        require_edge(g, path[k], path[k + 1], "hole_route");
        out.seq.push(f, path[k], path[k + 1]);
    }
    out.final_hole = path.back();
    return out;
}

RoutingLayout walk_state_via_holes(const InteractionGraph& g, const RoutingLayout& layout,
                                   int logical, const std::function<bool(int)>& accept,
                                   GateSequence& out, int provenance) {
    RoutingLayout lay = layout;
    auto it = lay.host.find(logical);
    if (it == lay.host.end()) throw RoutingError("walk_state_via_holes: unknown logical id");
    const int start = it->second;
    if (accept(start)) return lay;

    // BFS from the state's host through hole vertices only.
    std::vector<int> parent(g.vertex_count(), -2);
    parent[start] = -1;
    std::deque<int> queue{start};
    int goal = -1;
    while (!queue.empty() && goal < 0) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (parent[w] != -2 || !lay.holes.count(w)) continue;
            parent[w] = v;
            if (accept(w)) {
                goal = w;
                break;
            }
            queue.push_back(w);
        }
    }
    if (goal < 0)
        throw RoutingError("no all-hole walk from vertex " + std::to_string(start) +
                           " reaches an acceptable site");
    std::vector<int> path;
    for (int v = goal; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());

    const TwoQubitGate f = gate::fswap();
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        out.push(f, path[k + 1], path[k], provenance);  // hole at path[k+1] absorbs the state
        lay.holes.erase(path[k + 1]);
        lay.holes.insert(path[k]);
    }
    lay.host[logical] = path.back();
    return lay;
}

BringAdjacentResult bring_adjacent(const InteractionGraph& g, const RoutingLayout& layout,
                                   int qubit_a, int qubit_b) {
    const int host_b = layout.host.at(qubit_b);
    BringAdjacentResult out;
    out.layout = layout;
    if (g.has_edge(layout.host.at(qubit_a), host_b)) return out;  // already adjacent
    out.layout = walk_state_via_holes(
        g, layout, qubit_a, [&](int v) { return g.has_edge(v, host_b); }, out.seq);
    out.restore = out.seq.inverse();
    return out;
}

GateSequence encode_logical_bits(const InteractionGraph& g,
                                 const std::vector<std::pair<int, int>>& blocks,
                                 const std::vector<bool>& bits) {
    if (blocks.size() != bits.size())
        throw ValidationError("encode_logical_bits: block/bit count mismatch");
    GateSequence seq;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        require_edge(g, blocks[i].first, blocks[i].second, "encode_logical_bits");
        if (bits[i]) seq.push(gate::gxx(), blocks[i].first, blocks[i].second);
    }
    return seq;
}

GateSequence encoded_single_qubit_gate(const InteractionGraph& g, std::pair<int, int> block,
                                       const Matrix2& a) {
    require_edge(g, block.first, block.second, "encoded_single_qubit_gate");
    GateSequence seq;
    seq.push(make_gate(a, a), block.first, block.second);
    return seq;
}

GateSequence logical_swap_through(const InteractionGraph& g, int psi_vertex,
                                  std::pair<int, int> block) {
    require_edge(g, psi_vertex, block.first, "logical_swap_through");
    require_edge(g, block.first, block.second, "logical_swap_through");
    const TwoQubitGate f = gate::fswap();
    GateSequence seq;
    seq.push(f, psi_vertex, block.first);
    seq.push(f, block.first, block.second);
    return seq;
}

std::vector<TemplateItem> swap_via_matchgates_and_h() {
    return {{true, {}},
            {false, gate::xx90()},
            {true, {}},
            {false, gate::rzrz90()},
            {false, gate::fswap()}};
}

std::vector<TemplateItem> cz_via_matchgates_and_h() {
    return {{true, {}}, {false, gate::xx90()}, {true, {}}, {false, gate::rzrz90()}};
}

std::vector<TemplateItem> encoded_cz_template() {
    std::vector<TemplateItem> items{{false, gate::ghh()}};
    for (auto& item : swap_via_matchgates_and_h()) items.push_back(item);
    items.push_back({false, gate::gxx()});
    items.push_back({false, gate::ghh()});
    return items;
}

Matrix4 template_matrix(const std::vector<TemplateItem>& items) {
    const Matrix2 h = gate::h();
    Matrix4 hh;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) hh.block<2, 2>(2 * r, 2 * c) = h(r, c) * h;
    Matrix4 product = Matrix4::Identity();
    for (const auto& item : items) product = (item.is_h_slot ? hh : item.gate.matrix) * product;
    return product;
}

GateSequence encoded_cz_sequence(const InteractionGraph& g, std::pair<int, int> block1,
                                 std::pair<int, int> block2, const HProvider& h_provider) {
    require_edge(g, block1.first, block1.second, "encoded_cz_sequence");
    require_edge(g, block2.first, block2.second, "encoded_cz_sequence");
    const int u = block1.second, v = block2.first;  // interface pair
    require_edge(g, u, v, "encoded_cz_sequence");
    GateSequence seq;
    for (const auto& item : encoded_cz_template()) {
        if (item.is_h_slot) {
            h_provider(u, seq);
            h_provider(v, seq);
        } else {
            seq.push(item.gate, u, v);
        }
    }
    return seq;
}

GateSequence appendix_cz_procedure(const InteractionGraph& g, const AppendixLayout& layout,
                                   int alpha, int beta) {
    const auto& p = layout.positions;
    {
        std::set<int> distinct(p.begin(), p.end());
        distinct.insert(alpha);
        distinct.insert(beta);
        if (distinct.size() != 6)
            throw ValidationError("appendix_cz_procedure: positions and ancillas must be distinct");
    }
    for (int k = 0; k < 3; ++k) require_edge(g, p[k], p[k + 1], "appendix_cz_procedure");
    if (!g.has_edge(alpha, p[0]) || !g.has_edge(beta, p[0]))
        throw ValidationError(
            "appendix_cz_procedure: both ancillas must neighbor the first block position");

    const TwoQubitGate f = gate::fswap();
    GateSequence seq;
    seq.clamps[alpha] = Clamp::Plus;
    seq.clamps[beta] = Clamp::Zero;

    // H on the state at p[0]: the |+> ancilla is already adjacent.
    auto h_near = [&](GateSequence& out) { out.push(gate::ghh(), p[0], alpha, -1); };
    // H on the state at p[1]: park p[0]'s state on the hole, pull |+> in,
    // apply, then undo.
    auto h_far = [&](GateSequence& out) {
        out.push(f, beta, p[0], -1);
        out.push(f, p[0], alpha, -1);
        out.push(gate::ghh(), p[1], p[0], -1);
        out.push(f, p[0], alpha, -1);
        out.push(f, beta, p[0], -1);
    };

    // Swap the first component of block 2 across block 1.
    seq.push(f, p[2], p[1]);
    seq.push(f, p[1], p[0]);

    for (const auto& item : encoded_cz_template()) {
        if (item.is_h_slot) {
            h_near(seq);
            h_far(seq);
        } else {
            seq.push(item.gate, p[0], p[1]);
        }
    }

    // Return the relocated component; block 1 slides back to (p0, p1).
    seq.push(f, p[0], p[1]);
    seq.push(f, p[1], p[2]);
    return seq;
}

}  // namespace mg
