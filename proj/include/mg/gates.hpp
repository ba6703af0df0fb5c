#pragma once

/** \file
 * Matchgate algebra: parity-block construction G(A,B), recognition,
 * canonical gates and generator-Hamiltonian exponentials.
 */

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <optional>

namespace mg {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

/// Tolerance for algebraic identities built from exact constants.
inline constexpr double kAlgTol = 1e-10;

bool is_unitary(const Matrix2& m, double tol = kAlgTol);
bool is_unitary(const Matrix4& m, double tol = kAlgTol);

/// A validated 2x2 unitary block.
struct Unitary2 {
    Matrix2 m;
    /// Throws ValidationError naming `label` if m is not unitary within tol.
    explicit Unitary2(const Matrix2& mat, const char* label = "U", double tol = kAlgTol);
};

/// Two-qubit gate in the parity-block form
///
///     [ A11  0   0  A12 ]
///     [  0  B11 B12  0  ]
///     [  0  B21 B22  0  ]
///     [ A21  0   0  A22 ]
///
/// Basis order |00>,|01>,|10>,|11> with the first operand of an oriented
/// pair as the left tensor factor. The gate is a matchgate iff det A = det B.
struct TwoQubitGate {
    Matrix4 matrix;
    std::optional<std::pair<Matrix2, Matrix2>> blocks;  // (A, B) when built from blocks
    bool matchgate = false;

    const Matrix2& block_a() const { return blocks->first; }
    const Matrix2& block_b() const { return blocks->second; }
};

/// Hamiltonian weights for the generator set {XX, YY, XY, YX, IZ, ZI}.
struct GeneratorCoeffs {
    std::array<double, 6> c{};  // order: XX, YY, XY, YX, IZ, ZI
};

/// Embeds (A, B) per the block pattern above. Throws ValidationError if a
/// block is not unitary, naming the offending block.
TwoQubitGate make_gate(const Matrix2& a, const Matrix2& b);

/// Extracts the parity blocks of g. Fails (nullopt) if g has support
/// outside the block pattern beyond tol.
std::optional<std::pair<Matrix2, Matrix2>> parity_blocks(const Matrix4& g, double tol = kAlgTol);

/// True iff g is unitary, parity-preserving, and |det A - det B| <= tol.
/// Non-conforming matrices yield false, never an error.
bool is_matchgate(const Matrix4& g, double tol = kAlgTol);
bool is_matchgate(const TwoQubitGate& g, double tol = kAlgTol);

/// exp(i sum_k c_k P_k) by Hermitian eigendecomposition of the 4x4
/// generator. The result is always a matchgate.
TwoQubitGate gate_from_generators(const GeneratorCoeffs& c);

/// The 4x4 Hermitian generator sum_k c_k P_k itself.
Matrix4 generator_hamiltonian(const GeneratorCoeffs& c);

/// True iff u = exp(i phi) v entrywise within tol, phi fixed from the
/// largest-magnitude entry of v. Shapes must match (dynamic matrices).
bool equal_up_to_global_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                              double tol = kAlgTol);
/// The phase phi that best maps v onto u (from v's largest entry).
Complex relative_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

/// SWAP . g . SWAP, i.e. the same gate with its operands exchanged:
/// G(A,B) -> G(A, XBX). Throws ValidationError if g is not parity-preserving.
TwoQubitGate exchange_conjugate(const TwoQubitGate& g);

namespace gate {

Matrix2 id2();
Matrix2 x();
Matrix2 y();
Matrix2 z();
Matrix2 h();
/// det-1 Z rotation diag(exp(-i t/2), exp(i t/2)).
Matrix2 rz(double theta);
/// exp(-i t X / 2).
Matrix2 rx(double theta);

TwoQubitGate identity();
/// f-SWAP = G(Z,X): SWAP with a -1 phase on |11>.
TwoQubitGate fswap();
/// SWAP = G(I,X); parity-preserving but not a matchgate.
TwoQubitGate swap();
/// G(H,H), the H-gadget gate.
TwoQubitGate ghh();
/// G(X,X) = X (x) X.
TwoQubitGate gxx();
/// G(Rz(t),Rz(t)) = Rz(t) (x) I.
TwoQubitGate grz(double theta);
/// exp(i pi/4 XX) = G(V,V), V = exp(i pi/4 X).
TwoQubitGate xx90();
/// Rz(pi/2) (x) Rz(pi/2) = G(Rz(pi), I).
TwoQubitGate rzrz90();

bool is_fswap(const Matrix4& m, double tol = 1e-9);

}  // namespace gate

}  // namespace mg
