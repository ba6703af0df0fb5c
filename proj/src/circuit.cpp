#include "mg/circuit.hpp"

#include <cmath>

#include "mg/errors.hpp"

namespace mg {

LogicalGate rz_gate(int q, double theta) {
    LogicalGate g;
    g.kind = GateKind::RZ;
    g.q1 = q;
    g.theta = theta;
    return g;
}

LogicalGate h_gate(int q) {
    LogicalGate g;
    g.kind = GateKind::H;
    g.q1 = q;
    return g;
}

LogicalGate cz_gate(int q1, int q2) {
    LogicalGate g;
    g.kind = GateKind::CZ;
    g.q1 = q1;
    g.q2 = q2;
    return g;
}

LogicalGate mg_gate(int q1, int q2, const Matrix2& a, const Matrix2& b) {
    LogicalGate g;
    g.kind = GateKind::MG;
    g.q1 = q1;
    g.q2 = q2;
    g.a = a;
    g.b = b;
    return g;
}

void LogicalCircuit::validate() const {
    if (qubit_count < 1) throw ValidationError("circuit needs at least one logical qubit");
    for (const auto& g : gates) {
        if (g.q1 < 0 || g.q1 >= qubit_count)
            throw ValidationError("gate qubit index out of range");
        if (g.kind == GateKind::CZ || g.kind == GateKind::MG) {
            if (g.q2 < 0 || g.q2 >= qubit_count || g.q2 == g.q1)
                throw ValidationError("two-qubit gate needs two distinct in-range qubits");
        }
        if (g.kind == GateKind::MG && !is_matchgate(make_gate(g.a, g.b)))
            throw ValidationError("MG entry fails the matchgate determinant condition");
    }
}

void apply_reference(const LogicalCircuit& circuit, QuantumState& state) {
    Matrix4 cz = Matrix4::Identity();
    cz(3, 3) = -1;
    for (const auto& g : circuit.gates) {
        switch (g.kind) {
            case GateKind::RZ: state.apply1(gate::rz(g.theta), g.q1); break;
            case GateKind::H: state.apply1(gate::h(), g.q1); break;
            case GateKind::CZ: state.apply(cz, g.q1, g.q2); break;
            case GateKind::MG: state.apply(make_gate(g.a, g.b).matrix, g.q1, g.q2); break;
        }
    }
}

EulerZXZ euler_zxz(const Matrix2& u) {
    if (!is_unitary(u, 1e-9)) throw ValidationError("euler_zxz: input is not unitary");
    EulerZXZ e{};
    const Complex det = u.determinant();
    e.alpha = std::arg(det) / 2.0;
    const Matrix2 v = std::exp(Complex(0, -e.alpha)) * u;
    const double c = std::abs(v(0, 0)), s = std::abs(v(0, 1));
    e.x = 2.0 * std::atan2(s, c);
    if (s < 1e-12) {  // diagonal: fold everything into z1
        e.z1 = -2.0 * std::arg(v(0, 0));
        e.z2 = 0.0;
    } else if (c < 1e-12) {  // antidiagonal
        e.z1 = -2.0 * (std::arg(v(0, 1)) + M_PI / 2);
        e.z2 = 0.0;
    } else {
        const double sum = -2.0 * std::arg(v(0, 0));
        const double diff = -2.0 * std::arg(v(0, 1)) - M_PI;
        e.z1 = (sum + diff) / 2.0;
        e.z2 = (sum - diff) / 2.0;
    }
    return e;
}

std::vector<LogicalGate> euler_gates(const Matrix2& u, int q) {
    const EulerZXZ e = euler_zxz(u);
    // U ~ Rz(z1) Rx(x) Rz(z2) and Rx(x) = H Rz(x) H, program order right to left
    return {rz_gate(q, e.z2), h_gate(q), rz_gate(q, e.x), h_gate(q), rz_gate(q, e.z1)};
}

MatchgateKak decompose_matchgate(const Matrix4& m) {
    auto blocks = parity_blocks(m, 1e-9);
    if (!blocks || !is_matchgate(m, 1e-8))
        throw ValidationError("decompose_matchgate: input is not a matchgate");
    const Complex det = blocks->first.determinant();
    const double delta = std::arg(det) / 2.0;
    const Matrix2 a = std::exp(Complex(0, -delta)) * blocks->first;
    const Matrix2 b = std::exp(Complex(0, -delta)) * blocks->second;

    EulerZXZ ea = euler_zxz(a);
    EulerZXZ eb = euler_zxz(b);
    // det-1 inputs can still report alpha = pi; fold the sign into the Rx
    // angle (Rx(x + 2 pi) = -Rx(x)).
    auto fold = [](EulerZXZ& e) {
        if (std::abs(std::remainder(e.alpha, 2 * M_PI)) > M_PI / 2) e.x += 2 * M_PI;
    };
    fold(ea);
    fold(eb);

    MatchgateKak k{};
    k.a1 = (ea.z1 + eb.z1) / 2.0;
    k.b1 = (ea.z1 - eb.z1) / 2.0;
    k.a2 = (ea.z2 + eb.z2) / 2.0;
    k.b2 = (ea.z2 - eb.z2) / 2.0;
    // G(Rx(u), Rx(v)) = exp(i(tx XX + ty YY)) with tx = -(u+v)/4, ty = (u-v)/4
    k.tx = -(ea.x + eb.x) / 4.0;
    k.ty = (ea.x - eb.x) / 4.0;
    k.phase = std::exp(Complex(0, delta));
    return k;
}

namespace {

// program: H(1), CZ, H(1), Rz(-2t)(1), H(1), CZ, H(1)  ==  exp(i t ZZ) up to phase
void push_zz_rotation(std::vector<SynthOp>& ops, double t) {
    const Matrix2 h = gate::h();
    ops.push_back({false, 1, h});
    ops.push_back({true, 0, {}});
    ops.push_back({false, 1, h});
    ops.push_back({false, 1, gate::rz(-2.0 * t)});
    ops.push_back({false, 1, h});
    ops.push_back({true, 0, {}});
    ops.push_back({false, 1, h});
}

void push_1q_both(std::vector<SynthOp>& ops, const Matrix2& u) {
    ops.push_back({false, 0, u});
    ops.push_back({false, 1, u});
}

std::vector<SynthOp> fuse(const std::vector<SynthOp>& ops) {
    std::vector<SynthOp> out;
    Matrix2 pending[2] = {gate::id2(), gate::id2()};
    bool dirty[2] = {false, false};
    auto flush = [&](int q) {
        if (!dirty[q]) return;
        out.push_back({false, q, pending[q]});
        pending[q] = gate::id2();
        dirty[q] = false;
    };
    for (const auto& op : ops) {
        if (op.is_cz) {
            flush(0);
            flush(1);
            out.push_back(op);
        } else {
            pending[op.q] = op.u * pending[op.q];
            dirty[op.q] = true;
        }
    }
    flush(0);
    flush(1);
    return out;
}

}  // namespace

std::vector<SynthOp> synthesize_matchgate(const Matrix4& m) {
    const MatchgateKak k = decompose_matchgate(m);
    const Matrix2 h = gate::h();
    Matrix2 s;
    s << 1, 0, 0, Complex(0, 1);
    const Matrix2 v = s * h;  // maps Z to Y under conjugation

    std::vector<SynthOp> ops;
    ops.push_back({false, 0, gate::rz(k.a2)});
    ops.push_back({false, 1, gate::rz(k.b2)});
    // YY rotation = (V (x) V) ZZrot (V (x) V)^dagger
    push_1q_both(ops, v.adjoint());
    push_zz_rotation(ops, k.ty);
    push_1q_both(ops, v);
    // XX rotation = (H (x) H) ZZrot (H (x) H)
    push_1q_both(ops, h);
    push_zz_rotation(ops, k.tx);
    push_1q_both(ops, h);
    ops.push_back({false, 0, gate::rz(k.a1)});
    ops.push_back({false, 1, gate::rz(k.b1)});
    return fuse(ops);
}

Matrix4 synth_matrix(const std::vector<SynthOp>& ops) {
    Matrix4 cz = Matrix4::Identity();
    cz(3, 3) = -1;
    Matrix4 product = Matrix4::Identity();
    for (const auto& op : ops) {
        Matrix4 step;
        if (op.is_cz) {
            step = cz;
        } else {
            const Matrix2 u = op.u, id = gate::id2();
            const Matrix2& left = op.q == 0 ? u : id;
            const Matrix2& right = op.q == 0 ? id : u;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) step.block<2, 2>(2 * r, 2 * c) = left(r, c) * right;
        }
        product = step * product;
    }
    return product;
}

}  // namespace mg
