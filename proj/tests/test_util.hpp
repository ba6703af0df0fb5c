#pragma once

// Shared helpers for the unit tests: random unitaries/matchgates with a
// fixed-seed generator, and a series matrix exponential kept independent of
// the eigendecomposition route used by the library.

#include <complex>
#include <random>

#include "mg/gates.hpp"

namespace mgtest {

using mg::Complex;
using mg::Matrix2;
using mg::Matrix4;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eedULL);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

// Haar-like random U(2) from three angles and a phase.
inline Matrix2 random_unitary2() {
    const double t = std::acos(std::sqrt(uniform(0.0, 1.0)));
    const double a = uniform(0.0, 2 * M_PI), b = uniform(0.0, 2 * M_PI),
                 g = uniform(0.0, 2 * M_PI);
    const Complex i{0.0, 1.0};
    Matrix2 u;
    u << std::exp(i * a) * std::cos(t), std::exp(i * b) * std::sin(t),
        -std::exp(-i * b) * std::sin(t) * std::exp(i * g), std::exp(-i * a) * std::cos(t) * std::exp(i * g);
    return u;
}

inline Matrix2 random_su2() {
    Matrix2 u = random_unitary2();
    const Complex d = u.determinant();
    return u / std::sqrt(d);
}

// Random (A, B) with det A = det B.
inline std::pair<Matrix2, Matrix2> random_matchgate_blocks() {
    Matrix2 a = random_unitary2();
    Matrix2 b = random_su2() * std::sqrt(a.determinant());
    return {a, b};
}

inline mg::TwoQubitGate random_matchgate() {
    auto [a, b] = random_matchgate_blocks();
    return mg::make_gate(a, b);
}

// Scaling-and-squaring Taylor exponential, independent of the library's
// eigendecomposition path.
inline Matrix4 matrix_exp_series(const Matrix4& m) {
    int squarings = 0;
    Matrix4 scaled = m;
    while (scaled.cwiseAbs().maxCoeff() > 0.5) {
        scaled /= 2.0;
        ++squarings;
    }
    Matrix4 term = Matrix4::Identity();
    Matrix4 sum = Matrix4::Identity();
    for (int k = 1; k <= 24; ++k) {
        term = (term * scaled) / double(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

inline Matrix4 kron2(const Matrix2& p, const Matrix2& q) {
    Matrix4 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.block<2, 2>(2 * r, 2 * c) = p(r, c) * q;
    return out;
}

}  // namespace mgtest
