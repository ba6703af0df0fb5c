#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mg/errors.hpp"
#include "mg/state.hpp"
#include "test_util.hpp"

using namespace mg;

TEST_CASE("init_state product states under the little-endian convention") {
    QuantumState s0 = init_state(2, {});
    CHECK(std::abs(s0.amp(0) - 1.0) < 1e-15);

    QuantumState plus = init_state(1, {{0, ket_plus()}});
    CHECK(std::abs(plus.amp(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(plus.amp(1) - 1.0 / std::sqrt(2.0)) < 1e-15);

    // vertex 2 in |+>: equal amplitudes at indices 0 and 4
    QuantumState s = init_state(3, {{2, ket_plus()}});
    CHECK(std::abs(s.amp(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(s.amp(4) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(s.amp(1)) == 0.0);

    CHECK_THROWS_AS(init_state(25, {}, 20), ResourceError);
}

TEST_CASE("f-SWAP row mapping on two qubits") {
    // |01> in |q0 q1> notation is index 2 (qubit 1 set)
    QuantumState s = init_state(2, {{1, ket1()}});
    s.apply(gate::fswap().matrix, 0, 1);
    CHECK(std::abs(s.amp(1) - 1.0) < 1e-15);  // now |10>: qubit 0 set
    CHECK(std::abs(s.amp(2)) < 1e-15);

    QuantumState s11 = init_state(2, {{0, ket1()}, {1, ket1()}});
    s11.apply(gate::fswap().matrix, 0, 1);
    CHECK(std::abs(s11.amp(3) + 1.0) < 1e-15);  // -|11>

    QuantumState u = init_state(2, {{0, ket_plus_i()}});
    QuantumState v = u;
    v.apply(gate::identity().matrix, 0, 1);
    CHECK(fidelity(u, v) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fidelity basics") {
    QuantumState a = init_state(1, {});
    CHECK(fidelity(a, a) == doctest::Approx(1.0));
    QuantumState b = init_state(1, {{0, ket1()}});
    CHECK(fidelity(a, b) == doctest::Approx(0.0));
    QuantumState p = init_state(1, {{0, ket_plus()}});
    CHECK(fidelity(a, p) == doctest::Approx(1.0 / std::sqrt(2.0)));
    QuantumState wrong = init_state(2, {});
    CHECK_THROWS_AS(fidelity(a, wrong), ValidationError);
}

TEST_CASE("ancilla_intact") {
    QuantumState fresh = init_state(2, {{1, ket_plus()}});
    auto check = ancilla_intact(fresh, 1, ket_plus());
    CHECK(check.deviation < 1e-14);
    CHECK_FALSE(check.entangled);

    // Bell pair via G(H,I): |00> -> (|00>+|11>)/sqrt(2); reduced state is I/2
    QuantumState bell = init_state(2, {});
    bell.apply(make_gate(gate::h(), gate::id2()).matrix, 0, 1);
    auto b = ancilla_intact(bell, 0, ket_plus());
    CHECK(b.entangled);
    CHECK(b.purity == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("orientation convention: apply(g,(u,v)) == apply(exchange_conjugate(g),(v,u))") {
    for (int trial = 0; trial < 100; ++trial) {
        TwoQubitGate g = mgtest::random_matchgate();
        QuantumState s = init_state(3, {{0, ket_plus()}, {1, ket_plus_i()}, {2, ket1()}});
        // entangle a little first
        s.apply(gate::fswap().matrix, 0, 2);
        s.apply(gate::ghh().matrix, 1, 0);
        QuantumState a = s, b = s;
        a.apply(g.matrix, 0, 2);
        b.apply(exchange_conjugate(g).matrix, 2, 0);
        CHECK(fidelity(a, b) == doctest::Approx(1.0).epsilon(1e-12));
        REQUIRE(std::abs(overlap(a, b) - 1.0) < 1e-10);
    }
}

TEST_CASE("f-SWAP against a clean |0> acts as SWAP even on entangled registers") {
    for (int trial = 0; trial < 20; ++trial) {
        // random entangled state on qubits {0,1,2}, qubit 3 clean |0>
        QuantumState s = init_state(4, {{0, ket_plus()}, {1, ket_plus_i()}});
        for (int k = 0; k < 6; ++k) {
            TwoQubitGate g = mgtest::random_matchgate();
            s.apply(g.matrix, k % 3, (k + 1) % 3);
        }
        QuantumState a = s, b = s;
        a.apply(gate::fswap().matrix, 3, 1);
        b.apply(gate::swap().matrix, 3, 1);
        REQUIRE(std::abs(overlap(a, b) - 1.0) < 1e-10);
    }
}

TEST_CASE("norm is preserved across 10^4 random matchgates") {
    QuantumState s = init_state(6, {{0, ket_plus()}, {3, ket_plus_i()}});
    std::vector<TwoQubitGate> pool;
    for (int k = 0; k < 32; ++k) pool.push_back(mgtest::random_matchgate());
    for (int k = 0; k < 10000; ++k) {
        int u = k % 6, v = (k * 7 + 1) % 6;
        if (u == v) v = (v + 1) % 6;
        s.apply(pool[k % pool.size()].matrix, u, v);
    }
    CHECK(std::abs(s.norm() - 1.0) < 1e-9);
}

TEST_CASE("operators_equal_on_subspace basics") {
    // empty vs empty
    auto empty = operators_equal_on_subspace({}, {}, {}, 2, 1e-12);
    CHECK(empty.equal);

    // f-SWAP with one operand clamped |0> equals SWAP on the free qubit
    std::vector<GateApplication> fs{{gate::fswap(), 0, 1, -1}};
    std::vector<GateApplication> sw{{gate::swap(), 0, 1, -1}};
    auto clamped = operators_equal_on_subspace(fs, sw, {{0, ket0()}}, 2, 1e-12);
    CHECK(clamped.equal);
    auto free_run = operators_equal_on_subspace(fs, sw, {}, 2, 1e-9);
    CHECK_FALSE(free_run.equal);
}
