#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mg/errors.hpp"
#include "mg/gates.hpp"
#include "test_util.hpp"

using namespace mg;
using mgtest::kron2;
using mgtest::matrix_exp_series;

TEST_CASE("make_gate embeds blocks per the parity pattern") {
    // A=Z, B=X is the f-SWAP matrix: diagonal pattern with -1 at |11>.
    TwoQubitGate f = make_gate(gate::z(), gate::x());
    Matrix4 expected;
    expected << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, -1;
    CHECK((f.matrix - expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK(f.matchgate);

    TwoQubitGate id = make_gate(gate::id2(), gate::id2());
    CHECK((id.matrix - Matrix4::Identity()).cwiseAbs().maxCoeff() == 0.0);

    TwoQubitGate swap = make_gate(gate::id2(), gate::x());
    Matrix4 swap_expected;
    swap_expected << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
    CHECK((swap.matrix - swap_expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK_FALSE(swap.matchgate);
}

TEST_CASE("make_gate rejects non-unitary blocks naming the offender") {
    Matrix2 bad = 2.0 * gate::x();
    CHECK_THROWS_WITH_AS(make_gate(bad, gate::x()), doctest::Contains("block A"), ValidationError);
    CHECK_THROWS_WITH_AS(make_gate(gate::x(), bad), doctest::Contains("block B"), ValidationError);
}

TEST_CASE("is_matchgate verdicts on the canonical gates") {
    CHECK_FALSE(is_matchgate(gate::swap()));
    CHECK(is_matchgate(gate::fswap()));
    CHECK(is_matchgate(gate::ghh()));  // det H = det H = -1
    CHECK_FALSE(is_matchgate(Matrix4::Random()));
}

TEST_CASE("random det-matched pairs are matchgates; det perturbation flips the flag") {
    for (int trial = 0; trial < 500; ++trial) {
        auto [a, b] = mgtest::random_matchgate_blocks();
        CHECK(is_matchgate(make_gate(a, b)));
        // rotate det B away while staying unitary
        Matrix2 detshift = Matrix2::Identity();
        detshift(0, 0) = std::exp(Complex(0, 1e-3));
        CHECK_FALSE(is_matchgate(make_gate(a, b * detshift)));
    }
}

TEST_CASE("matchgates are closed under products") {
    const TwoQubitGate canon[] = {gate::identity(), gate::fswap(), gate::ghh(),
                                  gate::gxx(),      gate::grz(0.7), gate::xx90(),
                                  gate::rzrz90()};
    for (const auto& g1 : canon)
        for (const auto& g2 : canon) CHECK(is_matchgate(Matrix4(g1.matrix * g2.matrix)));
    for (int trial = 0; trial < 100; ++trial) {
        Matrix4 m = mgtest::random_matchgate().matrix * mgtest::random_matchgate().matrix;
        CHECK(is_matchgate(m));
    }
}

TEST_CASE("gate_from_generators: pi/4 (XX+YY) gives G(I, iX)") {
    GeneratorCoeffs c;
    c.c[0] = c.c[1] = M_PI / 4;
    TwoQubitGate g = gate_from_generators(c);
    // oracle: series exponential of the same Hamiltonian
    Matrix4 series = matrix_exp_series(Complex(0, 1) * generator_hamiltonian(c));
    CHECK((g.matrix - series).cwiseAbs().maxCoeff() < 1e-12);
    Matrix2 ix = Complex(0, 1) * gate::x();
    CHECK((g.matrix - make_gate(gate::id2(), ix).matrix).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(is_matchgate(g));
}

TEST_CASE("gate_from_generators: zero coefficients give the identity") {
    TwoQubitGate g = gate_from_generators(GeneratorCoeffs{});
    CHECK((g.matrix - Matrix4::Identity()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("the generator decomposition of f-SWAP carries global phase i") {
    GeneratorCoeffs zs, xy;
    zs.c[4] = zs.c[5] = M_PI / 4;  // IZ + ZI
    xy.c[0] = xy.c[1] = M_PI / 4;  // XX + YY
    Matrix4 product = gate_from_generators(zs).matrix * gate_from_generators(xy).matrix;
    // oracle: brute-force series product
    Matrix4 series = matrix_exp_series(Complex(0, 1) * generator_hamiltonian(zs)) *
                     matrix_exp_series(Complex(0, 1) * generator_hamiltonian(xy));
    CHECK((product - series).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(equal_up_to_global_phase(product, gate::fswap().matrix, 1e-10));
    // measured phase: i (not an identity match)
    Complex phase = relative_phase(product, gate::fswap().matrix);
    CHECK(std::abs(phase - Complex(0, 1)) < 1e-10);
    CHECK((product - Complex(0, 1) * gate::fswap().matrix).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("gate_from_generators output is parity-preserving for random coefficients") {
    for (int trial = 0; trial < 100; ++trial) {
        GeneratorCoeffs c;
        for (auto& v : c.c) v = mgtest::uniform(-2.0, 2.0);
        TwoQubitGate g = gate_from_generators(c);
        CHECK(std::abs(g.matrix(0, 1)) < 1e-12);
        CHECK(std::abs(g.matrix(0, 2)) < 1e-12);
        CHECK(std::abs(g.matrix(1, 0)) < 1e-12);
        CHECK(std::abs(g.matrix(1, 3)) < 1e-12);
        CHECK(std::abs(g.matrix(2, 0)) < 1e-12);
        CHECK(std::abs(g.matrix(2, 3)) < 1e-12);
        CHECK(std::abs(g.matrix(3, 1)) < 1e-12);
        CHECK(std::abs(g.matrix(3, 2)) < 1e-12);
        CHECK(is_matchgate(g));
    }
}

TEST_CASE("equal_up_to_global_phase") {
    Matrix4 f = gate::fswap().matrix;
    CHECK(equal_up_to_global_phase(Matrix4(Complex(0, 1) * f), f, 1e-12));
    CHECK_FALSE(equal_up_to_global_phase(gate::swap().matrix, f, 1e-6));
    CHECK(equal_up_to_global_phase(Matrix4::Identity(), Matrix4::Identity(), 0.0));
    Eigen::MatrixXcd wrong_shape(2, 2);
    CHECK_THROWS_AS(equal_up_to_global_phase(wrong_shape, f, 1e-9), ValidationError);
}

TEST_CASE("exchange_conjugate matches brute-force SWAP conjugation") {
    const Matrix4 s = gate::swap().matrix;
    // f-SWAP is exchange symmetric
    CHECK((exchange_conjugate(gate::fswap()).matrix - gate::fswap().matrix).cwiseAbs().maxCoeff() <
          1e-14);
    // G(Rz,Rz) = Rz (x) I maps to I (x) Rz
    TwoQubitGate grz = gate::grz(1.3);
    Matrix4 conj = s * grz.matrix * s;
    CHECK((exchange_conjugate(grz).matrix - conj).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((exchange_conjugate(grz).matrix - kron2(gate::id2(), gate::rz(1.3))).cwiseAbs().maxCoeff() <
          1e-14);
    CHECK((exchange_conjugate(gate::identity()).matrix - Matrix4::Identity()).cwiseAbs().maxCoeff() ==
          0.0);
    // involution on random matchgates
    for (int trial = 0; trial < 50; ++trial) {
        TwoQubitGate g = mgtest::random_matchgate();
        CHECK((exchange_conjugate(exchange_conjugate(g)).matrix - g.matrix).cwiseAbs().maxCoeff() <
              1e-12);
        CHECK((exchange_conjugate(g).matrix - s * g.matrix * s).cwiseAbs().maxCoeff() < 1e-12);
    }
    TwoQubitGate not_pp;
    not_pp.matrix = kron2(gate::h(), gate::h());
    CHECK_THROWS_AS(exchange_conjugate(not_pp), ValidationError);
}
