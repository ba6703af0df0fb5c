#pragma once

/** \file
 * Dense n-qubit statevector engine; the ground-truth oracle for every
 * gadget and compilation. Qubit i maps to bit i of the basis index
 * (little-endian).
 */

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "mg/gates.hpp"
#include "mg/sequence.hpp"

namespace mg {

/// Default cap on register width; override per call site or via the CLI.
inline constexpr int kDefaultQubitCap = 20;

using Amplitude = std::complex<double>;
using Vector2 = Eigen::Vector2cd;

class QuantumState {
  public:
    /// All-|0> register of n qubits.
    explicit QuantumState(int n, int cap = kDefaultQubitCap);

    int qubit_count() const { return n_; }
    std::size_t size() const { return amps_.size(); }
    Amplitude amp(std::size_t index) const { return amps_[index]; }
    void set_amp(std::size_t index, Amplitude a) { amps_[index] = a; }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }

    double norm() const;
    void normalize();

    /// Applies the 4x4 matrix to qubits (u, v), u as left tensor factor.
    void apply(const Matrix4& gate, int u, int v);
    void apply(const GateApplication& app);
    void apply(const GateSequence& seq);

    /// Applies a 2x2 matrix to one qubit (oracle-side helper).
    void apply1(const Matrix2& gate, int q);

  private:
    int n_;
    std::vector<Amplitude> amps_;
};

/// Product state with each vertex in its assigned single-qubit state
/// (default |0>). Throws ResourceError when n exceeds the cap.
QuantumState init_state(int n, const std::map<int, Vector2>& assignments,
                        int cap = kDefaultQubitCap);

/// Convenience single-qubit states.
Vector2 ket0();
Vector2 ket1();
Vector2 ket_plus();
Vector2 ket_plus_i();

/// |<s1|s2>| in [0, 1].
double fidelity(const QuantumState& s1, const QuantumState& s2);
/// <s1|s2> (phase-sensitive).
Amplitude overlap(const QuantumState& s1, const QuantumState& s2);

struct AncillaCheck {
    double deviation;  // 1 - <expected|rho|expected>
    double purity;     // tr(rho^2)
    bool entangled;    // purity < 1 - 1e-10
};

/// Overlap of the vertex's reduced density matrix with an expected pure
/// state, plus an entanglement flag.
AncillaCheck ancilla_intact(const QuantumState& state, int vertex, const Vector2& expected);

/// Reduced 2x2 density matrix of one qubit.
Matrix2 reduced_density(const QuantumState& state, int vertex);

struct SubspaceCheckResult {
    bool equal = false;
    double worst_deviation = 0.0;  // max-norm deviation after common-phase alignment
};

/// Checks that two gate sequences act identically (up to one common global
/// phase) on the subspace where `clamped` vertices hold their fixed states;
/// free vertices range over the spanning set {|0>,|1>,|+>,|+i>}.
SubspaceCheckResult operators_equal_on_subspace(const std::vector<GateApplication>& seq_a,
                                                const std::vector<GateApplication>& seq_b,
                                                const std::map<int, Vector2>& clamped, int n,
                                                double tol, int cap = kDefaultQubitCap);

}  // namespace mg
