#pragma once

/** \file
 * Logical circuits over {RZ, H, CZ, MG} and the synthesis helpers that
 * reduce arbitrary matchgates to one-qubit gates plus CZs.
 */

#include <vector>

#include "mg/gates.hpp"
#include "mg/state.hpp"

namespace mg {

enum class GateKind { RZ, H, CZ, MG };

struct LogicalGate {
    GateKind kind;
    int q1 = 0;
    int q2 = 0;        // CZ / MG only
    double theta = 0;  // RZ only
    Matrix2 a, b;      // MG blocks
};

LogicalGate rz_gate(int q, double theta);
LogicalGate h_gate(int q);
LogicalGate cz_gate(int q1, int q2);
LogicalGate mg_gate(int q1, int q2, const Matrix2& a, const Matrix2& b);

struct LogicalCircuit {
    int qubit_count = 0;
    std::vector<LogicalGate> gates;

    /// Throws ValidationError on out-of-range indices or non-matchgate MG entries.
    void validate() const;
};

/// Applies the circuit's reference unitary to a k-qubit state (oracle side;
/// CZ and MG go in as raw matrices).
void apply_reference(const LogicalCircuit& circuit, QuantumState& state);

/// U = exp(i alpha) Rz(z1) Rx(x) Rz(z2).
struct EulerZXZ {
    double alpha, z1, x, z2;
};
EulerZXZ euler_zxz(const Matrix2& u);

/// Circuit-level helper: an arbitrary single-qubit gate as alternating
/// Rz / H gates (program order), equal to u up to global phase.
std::vector<LogicalGate> euler_gates(const Matrix2& u, int q);

/// M = phase * (Rz(a1) (x) Rz(b1)) . exp(i (tx XX + ty YY)) . (Rz(a2) (x) Rz(b2)).
struct MatchgateKak {
    double a1, b1, tx, ty, a2, b2;
    Complex phase;
};
MatchgateKak decompose_matchgate(const Matrix4& m);

/// One step of a synthesized two-qubit program: a single-qubit unitary on
/// relative qubit 0/1, or a CZ on the pair.
struct SynthOp {
    bool is_cz = false;
    int q = 0;  // relative (0 = first operand)
    Matrix2 u;
};

/// Reduces a two-qubit matchgate to single-qubit unitaries and 4 CZs,
/// equal to m up to global phase. Consecutive one-qubit ops are fused.
std::vector<SynthOp> synthesize_matchgate(const Matrix4& m);

/// 4x4 product of a synthesized program (test/oracle helper).
Matrix4 synth_matrix(const std::vector<SynthOp>& ops);

}  // namespace mg
