#pragma once

/** \file
 * Oriented-edge gate applications and the gate-sequence program type
 * shared by gadgets, the compiler, and the statevector engine.
 */

#include <map>
#include <vector>

#include "mg/gates.hpp"

namespace mg {

/// One gate on an ordered vertex pair; u is the left tensor factor.
/// `provenance` is the index of the logical gate that triggered the
/// application (-1 while unattributed).
struct GateApplication {
    TwoQubitGate gate;
    int u = 0;
    int v = 0;
    int provenance = -1;
};

enum class Clamp { Zero, Plus };

/// A left-to-right program of matchgate applications plus the ancilla
/// clamps under which its defining identity holds.
struct GateSequence {
    std::vector<GateApplication> items;
    std::map<int, Clamp> clamps;

    void push(const TwoQubitGate& g, int u, int v, int provenance = -1);
    void append(const GateSequence& other);
    std::size_t size() const { return items.size(); }

    /// Adjoint program: reversed order, each gate conjugate-transposed.
    GateSequence inverse() const;
};

}  // namespace mg
