// Two-qubit operators: two-sided rotations, the twist variant, polarizer
// projectors on either subspace, basis-naming permutations, and the
// circular-basis expansion.
#pragma once

#include <cmath>
#include <numbers>

#include "bellsym/complex_matrix.hpp"

namespace bellsym {

struct Angle {
    double radians = 0.0;
};

inline constexpr Angle radians(double r) { return {r}; }
inline constexpr Angle degrees(double d) { return {d * std::numbers::pi / 180.0}; }

namespace detail {

// Single-qubit rotation [[cos t, sin t], [-sin t, cos t]].
inline ComplexMatrix2 rotation2(double t) {
    ComplexMatrix2 m;
    const double c = std::cos(t);
    const double s = std::sin(t);
    m(0, 0) = c;
    m(0, 1) = s;
    m(1, 0) = -s;
    m(1, 1) = c;
    return m;
}

// Single-qubit polarizer projector onto the direction at angle t.
inline ComplexMatrix2 polarizer2(double t) {
    ComplexMatrix2 m;
    const double c = std::cos(t);
    const double s = std::sin(t);
    m(0, 0) = c * c;
    m(0, 1) = c * s;
    m(1, 0) = c * s;
    m(1, 1) = s * s;
    return m;
}

}  // namespace detail

// Rotation by theta in the A subspace and phi in the B subspace.
inline ComplexMatrix4 rotation(Angle theta, Angle phi) {
    return kron(detail::rotation2(theta.radians), detail::rotation2(phi.radians));
}

// Equal-angle rotation of both subspaces (rotational invariance probe).
inline ComplexMatrix4 rotation_both(Angle theta) { return rotation(theta, theta); }

// Opposite-angle rotation of the two subspaces (twist invariance probe).
inline ComplexMatrix4 twist(Angle theta) { return rotation(theta, radians(-theta.radians)); }

// Polarizer at angle alpha acting on subspace A (rank-2 projector).
inline ComplexMatrix4 polarizer_a(Angle alpha) {
    return kron(detail::polarizer2(alpha.radians), ComplexMatrix2::identity());
}

// Polarizer at angle alpha acting on subspace B (rank-2 projector).
inline ComplexMatrix4 polarizer_b(Angle alpha) {
    return kron(ComplexMatrix2::identity(), detail::polarizer2(alpha.radians));
}

namespace detail {

inline ComplexMatrix4 permute_basis(const ComplexMatrix4& m, const std::array<int, 4>& sigma) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = m(sigma[i], sigma[j]);
    return r;
}

}  // namespace detail

// Relabel the parties a <-> b: exchanges |x_a y_b> and |y_a x_b>.
inline ComplexMatrix4 swap_parties(const ComplexMatrix4& m) {
    return detail::permute_basis(m, {0, 2, 1, 3});
}

// Relabel the polarization axes x <-> y on both parties.
inline ComplexMatrix4 swap_axes(const ComplexMatrix4& m) {
    return detail::permute_basis(m, {3, 2, 1, 0});
}

enum class CircularKind { lr_symmetric };

// Expands the symmetric circular-basis combination
// (1/sqrt2)(|L_a R_b> + |R_a L_b>) into the linear basis, with
// |L> = (|x> + i|y>)/sqrt2 and |R> = (|x> - i|y>)/sqrt2.
inline StateVector4 circular_basis_vector(CircularKind) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const ComplexScalar im(0.0, 1.0);
    const std::array<ComplexScalar, 2> left{inv_sqrt2, im * inv_sqrt2};
    const std::array<ComplexScalar, 2> right{inv_sqrt2, -im * inv_sqrt2};

    StateVector4 out;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            out.a[2 * i + k] = inv_sqrt2 * (left[i] * right[k] + right[i] * left[k]);
    return out;
}

}  // namespace bellsym
