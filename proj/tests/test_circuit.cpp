#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mg/circuit.hpp"
#include "mg/errors.hpp"
#include "test_util.hpp"

using namespace mg;
using mgtest::kron2;
using mgtest::matrix_exp_series;

namespace {

Matrix2 reassemble_zxz(const EulerZXZ& e) {
    return std::exp(Complex(0, e.alpha)) * gate::rz(e.z1) * gate::rx(e.x) * gate::rz(e.z2);
}

Matrix4 reassemble_kak(const MatchgateKak& k) {
    Matrix4 core = matrix_exp_series(
        Complex(0, 1) * (k.tx * kron2(gate::x(), gate::x()) + k.ty * kron2(gate::y(), gate::y())));
    return k.phase * kron2(gate::rz(k.a1), gate::rz(k.b1)) * core *
           kron2(gate::rz(k.a2), gate::rz(k.b2));
}

}  // namespace

TEST_CASE("circuit validation") {
    LogicalCircuit c;
    c.qubit_count = 2;
    c.gates = {h_gate(0), rz_gate(1, 0.3), cz_gate(0, 1)};
    CHECK_NOTHROW(c.validate());

    c.gates.push_back(h_gate(2));
    CHECK_THROWS_AS(c.validate(), ValidationError);
    c.gates.pop_back();
    c.gates.push_back(mg_gate(0, 1, gate::id2(), gate::x()));  // SWAP: not a matchgate
    CHECK_THROWS_AS(c.validate(), ValidationError);
}

TEST_CASE("euler_zxz reassembles arbitrary unitaries") {
    const Matrix2 cases[] = {gate::id2(), gate::x(),      gate::y(),
                             gate::z(),   gate::h(),      gate::rz(0.7),
                             gate::rx(1.2), -gate::id2()};
    for (const auto& u : cases) {
        EulerZXZ e = euler_zxz(u);
        CHECK((reassemble_zxz(e) - u).cwiseAbs().maxCoeff() < 1e-12);
    }
    for (int trial = 0; trial < 200; ++trial) {
        Matrix2 u = mgtest::random_unitary2();
        EulerZXZ e = euler_zxz(u);
        CHECK((reassemble_zxz(e) - u).cwiseAbs().maxCoeff() < 1e-11);
    }
    Matrix2 junk = 3.0 * gate::x();
    CHECK_THROWS_AS(euler_zxz(junk), ValidationError);
}

TEST_CASE("euler_gates express a unitary through Rz and H only") {
    for (int trial = 0; trial < 50; ++trial) {
        Matrix2 u = mgtest::random_unitary2();
        auto gates = euler_gates(u, 0);
        Matrix2 product = gate::id2();
        for (const auto& g : gates) {
            REQUIRE((g.kind == GateKind::RZ || g.kind == GateKind::H));
            product = (g.kind == GateKind::RZ ? gate::rz(g.theta) : gate::h()) * product;
        }
        CHECK(equal_up_to_global_phase(product, u, 1e-10));
    }
}

TEST_CASE("decompose_matchgate reassembles canonical and random matchgates") {
    const TwoQubitGate canon[] = {gate::identity(), gate::fswap(), gate::ghh(), gate::gxx(),
                                  gate::grz(0.9),   gate::xx90(),  gate::rzrz90()};
    for (const auto& g : canon) {
        MatchgateKak k = decompose_matchgate(g.matrix);
        CHECK((reassemble_kak(k) - g.matrix).cwiseAbs().maxCoeff() < 1e-10);
    }
    for (int trial = 0; trial < 200; ++trial) {
        TwoQubitGate g = mgtest::random_matchgate();
        MatchgateKak k = decompose_matchgate(g.matrix);
        CHECK((reassemble_kak(k) - g.matrix).cwiseAbs().maxCoeff() < 1e-9);
    }
    CHECK_THROWS_AS(decompose_matchgate(gate::swap().matrix), ValidationError);
}

TEST_CASE("synthesize_matchgate: one-qubit gates plus four CZs reproduce the gate") {
    const TwoQubitGate canon[] = {gate::identity(), gate::fswap(), gate::ghh(), gate::gxx(),
                                  gate::grz(0.9),   gate::xx90(),  gate::rzrz90()};
    for (const auto& g : canon) {
        auto ops = synthesize_matchgate(g.matrix);
        CHECK(equal_up_to_global_phase(synth_matrix(ops), g.matrix, 1e-9));
    }
    for (int trial = 0; trial < 100; ++trial) {
        TwoQubitGate g = mgtest::random_matchgate();
        auto ops = synthesize_matchgate(g.matrix);
        int czs = 0;
        for (const auto& op : ops)
            if (op.is_cz) ++czs;
        CHECK(czs == 4);
        CHECK(equal_up_to_global_phase(synth_matrix(ops), g.matrix, 1e-9));
    }
}

TEST_CASE("apply_reference matches direct matrix application") {
    LogicalCircuit c;
    c.qubit_count = 3;
    c.gates = {h_gate(0), rz_gate(2, 1.1), cz_gate(0, 2),
               mg_gate(1, 2, gate::h(), gate::h()), h_gate(1)};
    c.validate();
    QuantumState s = init_state(3, {{0, ket_plus_i()}});
    QuantumState expect = s;
    apply_reference(c, s);

    expect.apply1(gate::h(), 0);
    expect.apply1(gate::rz(1.1), 2);
    Matrix4 cz = Matrix4::Identity();
    cz(3, 3) = -1;
    expect.apply(cz, 0, 2);
    expect.apply(gate::ghh().matrix, 1, 2);
    expect.apply1(gate::h(), 1);
    CHECK(std::abs(overlap(expect, s) - 1.0) < 1e-12);
}
