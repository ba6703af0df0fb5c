#include "mg/state.hpp"

#include <cmath>

#include "mg/errors.hpp"

namespace mg {

QuantumState::QuantumState(int n, int cap) : n_(n) {
    if (n < 1) throw ValidationError("state needs at least one qubit");
    if (n > cap)
        throw ResourceError("register of " + std::to_string(n) + " qubits exceeds cap " +
                            std::to_string(cap));
    amps_.assign(std::size_t(1) << n, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

double QuantumState::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void QuantumState::normalize() {
    const double nn = norm();
    if (nn == 0.0) return;
    for (auto& a : amps_) a /= nn;
}

void QuantumState::apply(const Matrix4& gate, int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
        throw ValidationError("apply: invalid vertex pair (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
    const std::size_t mu = std::size_t(1) << u;
    const std::size_t mv = std::size_t(1) << v;
    const int lo = std::min(u, v), hi = std::max(u, v);
    const std::size_t lo_mask = (std::size_t(1) << lo) - 1;
    const std::size_t mid_mask = ((std::size_t(1) << (hi - 1)) - 1) & ~lo_mask;
    const std::size_t groups = std::size_t(1) << (n_ - 2);
    Amplitude m[4][4];
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m[r][c] = gate(r, c);
    Amplitude* a = amps_.data();
    for (std::size_t i = 0; i < groups; ++i) {
        // scatter i into the n-2 free bit positions
        std::size_t base = (i & lo_mask) | ((i & mid_mask) << 1) | ((i & ~(lo_mask | mid_mask)) << 2);
        // local index: bit of u is the MSB (u is the left tensor factor)
        const std::size_t i00 = base;
        const std::size_t i01 = base | mv;
        const std::size_t i10 = base | mu;
        const std::size_t i11 = base | mu | mv;
        const Amplitude a0 = a[i00], a1 = a[i01], a2 = a[i10], a3 = a[i11];
        a[i00] = m[0][0] * a0 + m[0][1] * a1 + m[0][2] * a2 + m[0][3] * a3;
        a[i01] = m[1][0] * a0 + m[1][1] * a1 + m[1][2] * a2 + m[1][3] * a3;
        a[i10] = m[2][0] * a0 + m[2][1] * a1 + m[2][2] * a2 + m[2][3] * a3;
        a[i11] = m[3][0] * a0 + m[3][1] * a1 + m[3][2] * a2 + m[3][3] * a3;
    }
}

void QuantumState::apply(const GateApplication& app) { apply(app.gate.matrix, app.u, app.v); }

void QuantumState::apply(const GateSequence& seq) {
    for (const auto& item : seq.items) apply(item);
}

void QuantumState::apply1(const Matrix2& gate, int q) {
    if (q < 0 || q >= n_) throw ValidationError("apply1: invalid vertex");
    const std::size_t mq = std::size_t(1) << q;
    const std::size_t lo_mask = mq - 1;
    const std::size_t groups = std::size_t(1) << (n_ - 1);
    Amplitude* a = amps_.data();
    for (std::size_t i = 0; i < groups; ++i) {
        const std::size_t base = (i & lo_mask) | ((i & ~lo_mask) << 1);
        const Amplitude a0 = a[base], a1 = a[base | mq];
        a[base] = gate(0, 0) * a0 + gate(0, 1) * a1;
        a[base | mq] = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
}

QuantumState init_state(int n, const std::map<int, Vector2>& assignments, int cap) {
    QuantumState s(n, cap);
    for (const auto& [vertex, ket] : assignments) {
        if (vertex < 0 || vertex >= n) throw ValidationError("init_state: vertex out of range");
        Matrix2 prep;  // unitary sending |0> to the assigned state
        const double nn = ket.norm();
        if (std::abs(nn - 1.0) > 1e-9) throw ValidationError("init_state: state not normalized");
        prep << ket(0), -std::conj(ket(1)), ket(1), std::conj(ket(0));
        s.apply1(prep, vertex);
    }
    return s;
}

Vector2 ket0() { return Vector2{1.0, 0.0}; }
Vector2 ket1() { return Vector2{0.0, 1.0}; }
Vector2 ket_plus() { return Vector2{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}; }
Vector2 ket_plus_i() { return Vector2{1.0 / std::sqrt(2.0), Amplitude(0.0, 1.0 / std::sqrt(2.0))}; }

Amplitude overlap(const QuantumState& s1, const QuantumState& s2) {
    if (s1.qubit_count() != s2.qubit_count()) throw ValidationError("overlap: size mismatch");
    Amplitude acc{0.0, 0.0};
    for (std::size_t i = 0; i < s1.size(); ++i) acc += std::conj(s1.amp(i)) * s2.amp(i);
    return acc;
}

double fidelity(const QuantumState& s1, const QuantumState& s2) { return std::abs(overlap(s1, s2)); }

Matrix2 reduced_density(const QuantumState& state, int vertex) {
    const std::size_t mq = std::size_t(1) << vertex;
    const std::size_t lo_mask = mq - 1;
    const std::size_t groups = std::size_t(1) << (state.qubit_count() - 1);
    Matrix2 rho = Matrix2::Zero();
    for (std::size_t i = 0; i < groups; ++i) {
        const std::size_t base = (i & lo_mask) | ((i & ~lo_mask) << 1);
        const Amplitude a0 = state.amp(base), a1 = state.amp(base | mq);
        rho(0, 0) += a0 * std::conj(a0);
        rho(0, 1) += a0 * std::conj(a1);
        rho(1, 0) += a1 * std::conj(a0);
        rho(1, 1) += a1 * std::conj(a1);
    }
    return rho;
}

AncillaCheck ancilla_intact(const QuantumState& state, int vertex, const Vector2& expected) {
    const Matrix2 rho = reduced_density(state, vertex);
    AncillaCheck out{};
    out.deviation = 1.0 - std::real((expected.adjoint() * rho * expected)(0, 0));
    out.purity = std::real((rho * rho).trace());
    out.entangled = out.purity < 1.0 - 1e-10;
    return out;
}

SubspaceCheckResult operators_equal_on_subspace(const std::vector<GateApplication>& seq_a,
                                                const std::vector<GateApplication>& seq_b,
                                                const std::map<int, Vector2>& clamped, int n,
                                                double tol, int cap) {
    if (n > cap) throw ResourceError("operators_equal_on_subspace: register exceeds cap");
    std::vector<int> free_vertices;
    for (int v = 0; v < n; ++v)
        if (!clamped.count(v)) free_vertices.push_back(v);
    const std::array<Vector2, 4> span = {ket0(), ket1(), ket_plus(), ket_plus_i()};

    SubspaceCheckResult result;
    result.equal = true;
    Amplitude common_phase{0.0, 0.0};
    std::size_t inputs = 1;
    for (std::size_t i = 0; i < free_vertices.size(); ++i) inputs *= span.size();

    for (std::size_t code = 0; code < inputs; ++code) {
        std::map<int, Vector2> assignment = clamped;
        std::size_t rem = code;
        for (int v : free_vertices) {
            assignment[v] = span[rem % span.size()];
            rem /= span.size();
        }
        QuantumState sa = init_state(n, assignment, cap);
        QuantumState sb = sa;
        for (const auto& g : seq_a) sa.apply(g);
        for (const auto& g : seq_b) sb.apply(g);
        if (std::abs(common_phase) == 0.0) {
            const Amplitude p = overlap(sb, sa);
            common_phase = std::abs(p) > 1e-6 ? p / std::abs(p) : Amplitude{1.0, 0.0};
        }
        double dev = 0.0;
        for (std::size_t i = 0; i < sa.size(); ++i)
            dev = std::max(dev, std::abs(sa.amp(i) - common_phase * sb.amp(i)));
        result.worst_deviation = std::max(result.worst_deviation, dev);
        if (dev > tol) result.equal = false;
    }
    return result;
}

}  // namespace mg
