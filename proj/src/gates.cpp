#include "mg/gates.hpp"

#include <cmath>

#include "mg/errors.hpp"

namespace mg {

namespace {

constexpr Complex kI{0.0, 1.0};

// Indices of the even (|00>,|11>) and odd (|01>,|10>) parity subspaces.
constexpr int kEven[2] = {0, 3};
constexpr int kOdd[2] = {1, 2};

bool off_pattern_small(const Matrix4& g, double tol) {
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const bool r_even = (r == 0 || r == 3);
            const bool c_even = (c == 0 || c == 3);
            if (r_even != c_even && std::abs(g(r, c)) > tol) return false;
        }
    }
    return true;
}

}  // namespace

bool is_unitary(const Matrix2& m, double tol) {
    return (m.adjoint() * m - Matrix2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Matrix4& m, double tol) {
    return (m.adjoint() * m - Matrix4::Identity()).cwiseAbs().maxCoeff() <= tol;
}

Unitary2::Unitary2(const Matrix2& mat, const char* label, double tol) : m(mat) {
    if (!is_unitary(mat, tol))
        throw ValidationError(std::string("block ") + label + " is not unitary within tolerance");
}

TwoQubitGate make_gate(const Matrix2& a, const Matrix2& b) {
    Unitary2 ua(a, "A");
    Unitary2 ub(b, "B");
    TwoQubitGate g;
    g.matrix = Matrix4::Zero();
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            g.matrix(kEven[r], kEven[c]) = a(r, c);
            g.matrix(kOdd[r], kOdd[c]) = b(r, c);
        }
    }
    g.blocks = {a, b};
    g.matchgate = std::abs(a.determinant() - b.determinant()) <= kAlgTol;
    return g;
}

std::optional<std::pair<Matrix2, Matrix2>> parity_blocks(const Matrix4& g, double tol) {
    if (!off_pattern_small(g, tol)) return std::nullopt;
    Matrix2 a, b;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            a(r, c) = g(kEven[r], kEven[c]);
            b(r, c) = g(kOdd[r], kOdd[c]);
        }
    }
    return std::make_pair(a, b);
}

bool is_matchgate(const Matrix4& g, double tol) {
    if (!is_unitary(g, std::max(tol, 1e-12))) return false;
    auto blocks = parity_blocks(g, tol);
    if (!blocks) return false;
    return std::abs(blocks->first.determinant() - blocks->second.determinant()) <= tol;
}

bool is_matchgate(const TwoQubitGate& g, double tol) { return is_matchgate(g.matrix, tol); }

Matrix4 generator_hamiltonian(const GeneratorCoeffs& coeffs) {
    const Matrix2 x = gate::x(), y = gate::y(), z = gate::z(), id = gate::id2();
    auto kron = [](const Matrix2& p, const Matrix2& q) {
        Matrix4 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = p(r, c) * q;
        return out;
    };
    Matrix4 h = Matrix4::Zero();
    h += coeffs.c[0] * kron(x, x);
    h += coeffs.c[1] * kron(y, y);
    h += coeffs.c[2] * kron(x, y);
    h += coeffs.c[3] * kron(y, x);
    h += coeffs.c[4] * kron(id, z);
    h += coeffs.c[5] * kron(z, id);
    return h;
}

TwoQubitGate gate_from_generators(const GeneratorCoeffs& coeffs) {
    const Matrix4 h = generator_hamiltonian(coeffs);
    Eigen::SelfAdjointEigenSolver<Matrix4> es(h);
    Eigen::Vector4cd phases;
    for (int k = 0; k < 4; ++k) phases(k) = std::exp(kI * es.eigenvalues()(k));
    const Matrix4 u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    auto blocks = parity_blocks(u, 1e-12);
    if (!blocks) throw ValidationError("generator exponential left the parity-block pattern");
    TwoQubitGate g;
    g.matrix = u;
    g.blocks = blocks;
    g.matchgate = true;
    return g;
}

Complex relative_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
    Eigen::Index r = 0, c = 0;
    v.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(v(r, c)) == 0.0) return Complex{1.0, 0.0};
    Complex phase = u(r, c) / v(r, c);
    const double mag = std::abs(phase);
    return mag > 0 ? phase / mag : Complex{1.0, 0.0};
}

bool equal_up_to_global_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v, double tol) {
    if (u.rows() != v.rows() || u.cols() != v.cols())
        throw ValidationError("equal_up_to_global_phase: shape mismatch");
    const Complex phase = relative_phase(u, v);
    return (u - phase * v).cwiseAbs().maxCoeff() <= tol;
}

TwoQubitGate exchange_conjugate(const TwoQubitGate& g) {
    auto blocks = g.blocks ? g.blocks : parity_blocks(g.matrix, kAlgTol);
    if (!blocks) throw ValidationError("exchange_conjugate: gate is not parity-preserving");
    const Matrix2 x = gate::x();
    return make_gate(blocks->first, x * blocks->second * x);
}

namespace gate {

Matrix2 id2() { return Matrix2::Identity(); }

Matrix2 x() {
    Matrix2 m;
    m << 0, 1, 1, 0;
    return m;
}

Matrix2 y() {
    Matrix2 m;
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

Matrix2 z() {
    Matrix2 m;
    m << 1, 0, 0, -1;
    return m;
}

Matrix2 h() {
    Matrix2 m;
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

Matrix2 rz(double theta) {
    Matrix2 m = Matrix2::Zero();
    m(0, 0) = std::exp(-kI * (theta / 2));
    m(1, 1) = std::exp(kI * (theta / 2));
    return m;
}

Matrix2 rx(double theta) {
    Matrix2 m;
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    m << Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0);
    return m;
}

TwoQubitGate identity() { return make_gate(id2(), id2()); }
TwoQubitGate fswap() { return make_gate(z(), x()); }
TwoQubitGate swap() { return make_gate(id2(), x()); }
TwoQubitGate ghh() { return make_gate(h(), h()); }
TwoQubitGate gxx() { return make_gate(x(), x()); }
TwoQubitGate grz(double theta) { return make_gate(rz(theta), rz(theta)); }

TwoQubitGate xx90() {
    Matrix2 v;
    const double s = 1.0 / std::sqrt(2.0);
    v << Complex(s, 0), Complex(0, s), Complex(0, s), Complex(s, 0);
    return make_gate(v, v);
}

TwoQubitGate rzrz90() { return make_gate(rz(M_PI), id2()); }

bool is_fswap(const Matrix4& m, double tol) {
    static const Matrix4 f = fswap().matrix;
    return (m - f).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace gate

}  // namespace mg
