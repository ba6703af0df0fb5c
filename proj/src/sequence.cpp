#include "mg/sequence.hpp"

#include "mg/errors.hpp"

namespace mg {

void GateSequence::push(const TwoQubitGate& g, int u, int v, int provenance) {
    if (u == v) throw ValidationError("gate applied to a single vertex twice");
    if (!is_matchgate(g)) throw ValidationError("sequence accepts matchgates only");
    items.push_back({g, u, v, provenance});
}

void GateSequence::append(const GateSequence& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
    for (const auto& [v, c] : other.clamps) clamps.emplace(v, c);
}

GateSequence GateSequence::inverse() const {
    GateSequence inv;
    inv.clamps = clamps;
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
        TwoQubitGate g;
        g.matrix = it->gate.matrix.adjoint();
        if (it->gate.blocks)
            g.blocks = {it->gate.blocks->first.adjoint(), it->gate.blocks->second.adjoint()};
        g.matchgate = it->gate.matchgate;
        inv.items.push_back({g, it->u, it->v, it->provenance});
    }
    return inv;
}

}  // namespace mg
