// Parametric state families and the constraint-solving route to the Bell
// states: the general symmetric form rho_aux, its rotation-invariant and
// twist-invariant specializations, closed-form positivity bounds, the
// two-polarizer coincidence identity ("atomic" symmetry) in its four angle
// modes, and the solver that pins down each Bell state from it. Also hosts
// the CHSH correlation score used as a classical-limit check.
#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bellsym/complex_matrix.hpp"
#include "bellsym/constraints.hpp"
#include "bellsym/errors.hpp"
#include "bellsym/operators.hpp"

namespace bellsym {

inline constexpr int kDefaultAtomicGrid = 32;

// Real parameters {c, d, f, g} of the general party- and axis-symmetric
// two-qubit matrix.
struct ParamSet {
    double c = 0.0;
    double d = 0.0;
    double f = 0.0;
    double g = 0.0;
};

enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

enum class SymmetryFamily { rotational, twist };

// Angle substitution applied to the A-side polarizer in the coincidence
// (rhs) term of the atomic-symmetry identity.
enum class AtomicMode { parallel, crossed, twist, twist_crossed };

// Fixed binding: each Bell state belongs to one family and one mode.
inline constexpr SymmetryFamily family_of(BellKind k) {
    switch (k) {
        case BellKind::phi_plus:
        case BellKind::psi_minus:
            return SymmetryFamily::rotational;
        case BellKind::phi_minus:
        case BellKind::psi_plus:
            return SymmetryFamily::twist;
    }
    return SymmetryFamily::rotational;
}

inline constexpr AtomicMode mode_of(BellKind k) {
    switch (k) {
        case BellKind::phi_plus:
            return AtomicMode::parallel;
        case BellKind::psi_minus:
            return AtomicMode::crossed;
        case BellKind::phi_minus:
            return AtomicMode::twist;
        case BellKind::psi_plus:
            return AtomicMode::twist_crossed;
    }
    return AtomicMode::parallel;
}

// The map alpha -> {alpha, alpha+pi/2, -alpha, -alpha+pi/2} selected by mode.
inline double rhs_angle(AtomicMode mode, double alpha) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    switch (mode) {
        case AtomicMode::parallel:
            return alpha;
        case AtomicMode::crossed:
            return alpha + half_pi;
        case AtomicMode::twist:
            return -alpha;
        case AtomicMode::twist_crossed:
            return -alpha + half_pi;
    }
    return alpha;
}

// General form after the physical constraints and naming invariances:
// diagonal (d, 1/2-d, 1/2-d, d), anti-diagonal corners c, middle
// off-diagonal f, and +-ig on the remaining slots.
inline ComplexMatrix4 build_rho_aux(const ParamSet& p) {
    const ComplexScalar ig(0.0, p.g);
    const ComplexScalar neg_ig(0.0, 0.0 - p.g);  // keeps +0 when g == 0
    const double h = 0.5 - p.d;
    ComplexMatrix4 m;
    m(0, 0) = p.d;
    m(0, 1) = ig;
    m(0, 2) = ig;
    m(0, 3) = p.c;
    m(1, 0) = neg_ig;
    m(1, 1) = h;
    m(1, 2) = p.f;
    m(1, 3) = neg_ig;
    m(2, 0) = neg_ig;
    m(2, 1) = p.f;
    m(2, 2) = h;
    m(2, 3) = neg_ig;
    m(3, 0) = p.c;
    m(3, 1) = ig;
    m(3, 2) = ig;
    m(3, 3) = p.d;
    return m;
}

// Rotationally invariant family: g = 0 and f = 2d - c - 1/2.
inline ComplexMatrix4 build_rho_r(double c, double d) {
    return build_rho_aux({c, d, 2.0 * d - c - 0.5, 0.0});
}

// Twist-invariant family: g = 0 and f = 1/2 - 2d - c.
inline ComplexMatrix4 build_rho_t(double c, double d) {
    return build_rho_aux({c, d, 0.5 - 2.0 * d - c, 0.0});
}

// Closed-form positivity test. The family eigenvalues are {s (twice),
// 1/2 - s +- |2d - 1/2|} where s = d - c (rotational) or d + c (twist),
// so positivity is 0 <= s <= 1/2 +- |2d - 1/2|. Evaluated with the same
// eigenvalue tolerance the numeric validation clamps at, so boundary
// members (which have an exactly zero eigenvalue) stay feasible under
// round-off.
inline bool positivity_feasible(SymmetryFamily family, double c, double d) {
    const double s = family == SymmetryFamily::rotational ? d - c : d + c;
    const double band = std::abs(2.0 * d - 0.5);
    return s >= -kPsdTolerance && s <= 0.5 - band + kPsdTolerance &&
           s <= 0.5 + band + kPsdTolerance;
}

namespace detail {

// Both sides of the identity on a raw matrix; the solver probes family
// members that are not yet valid states.
inline double atomic_lhs_raw(const ComplexMatrix4& m, double alpha, double beta) {
    const ComplexMatrix4 qa_alpha = polarizer_a(radians(alpha));
    const ComplexMatrix4 qa_beta = polarizer_a(radians(beta));
    return trace(m * adjoint(qa_beta) * qa_alpha * qa_beta).real();
}

inline double atomic_rhs_raw(const ComplexMatrix4& m, double alpha, double beta,
                             AtomicMode mode) {
    const ComplexMatrix4 qa = polarizer_a(radians(rhs_angle(mode, alpha)));
    const ComplexMatrix4 qb = polarizer_b(radians(beta));
    return trace(m * qa * qb).real();
}

}  // namespace detail

// Probability of passage through two A-side polarizers at angles beta then
// alpha then beta: Tr[rho Q_A(beta)^dag Q_A(alpha) Q_A(beta)]. For a state
// whose A-side reduced matrix is I/2 this is Malus' law for unpolarized
// input, (1/2)cos^2(alpha - beta).
inline double atomic_lhs(const DensityMatrix& rho, Angle alpha, Angle beta) {
    return detail::atomic_lhs_raw(rho.matrix(), alpha.radians, beta.radians);
}

// Coincidence probability with one polarizer per side,
// Tr[rho Q_A(mode(alpha)) Q_B(beta)].
inline double atomic_rhs(const DensityMatrix& rho, Angle alpha, Angle beta, AtomicMode mode) {
    return detail::atomic_rhs_raw(rho.matrix(), alpha.radians, beta.radians, mode);
}

// Worst |lhs - rhs| over a uniform (alpha, beta) grid on [0, pi)^2.
inline double atomic_residual(const DensityMatrix& rho, AtomicMode mode,
                              int grid_size = kDefaultAtomicGrid) {
    if (grid_size < 8)
        throw std::invalid_argument("atomic residual grid must have at least 8 points, got " +
                                    std::to_string(grid_size));
    const ComplexMatrix4& m = rho.matrix();
    double worst = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        const double alpha = std::numbers::pi * i / grid_size;
        for (int j = 0; j < grid_size; ++j) {
            const double beta = std::numbers::pi * j / grid_size;
            const double gap = std::abs(detail::atomic_lhs_raw(m, alpha, beta) -
                                        detail::atomic_rhs_raw(m, alpha, beta, mode));
            worst = std::max(worst, gap);
        }
    }
    return worst;
}

struct AtomicSolution {
    double d;
    double c;
    DensityMatrix rho;
};

// Solves the atomic-symmetry identity over the kind's family. Within a
// family the identity gap at fixed angles is affine in d and independent
// of c, so two probe members recover the gap's affine coefficients
// exactly; requiring a zero gap at each sampled angle offset gives linear
// conditions whose consistent root is d. The positivity interval for
// s = d -+ c collapses to a point at that d, which pins c.
inline AtomicSolution solve_atomic(BellKind kind) {
    const SymmetryFamily family = family_of(kind);
    const AtomicMode mode = mode_of(kind);
    const auto build = family == SymmetryFamily::rotational ? build_rho_r : build_rho_t;

    const std::array<double, 3> offsets{0.0, std::numbers::pi / 8.0, std::numbers::pi / 4.0};
    std::array<double, 3> gap_at_zero{};
    std::array<double, 3> gap_slope{};
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        const double delta = offsets[i];
        const auto gap = [&](double d_probe) {
            const ComplexMatrix4 m = build(0.0, d_probe);
            return detail::atomic_lhs_raw(m, delta, 0.0) -
                   detail::atomic_rhs_raw(m, delta, 0.0, mode);
        };
        gap_at_zero[i] = gap(0.0);
        gap_slope[i] = gap(1.0) - gap(0.0);
    }

    std::size_t pivot = 0;
    for (std::size_t i = 1; i < offsets.size(); ++i)
        if (std::abs(gap_slope[i]) > std::abs(gap_slope[pivot])) pivot = i;
    if (std::abs(gap_slope[pivot]) < 1e-12)
        throw NoSolution("atomic identity does not constrain d for this family");

    const double d = -gap_at_zero[pivot] / gap_slope[pivot] + 0.0;  // +0.0 folds -0
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        const double residual = std::abs(gap_at_zero[i] + gap_slope[i] * d);
        if (residual > 1e-10)
            throw NoSolution("atomic identity conditions are inconsistent: residual " +
                             std::to_string(residual));
    }

    // Positivity: 0 <= s <= 1/2 - |2d - 1/2|. The solve is complete only
    // when the interval has zero width, forcing s = 0.
    const double width = 0.5 - std::abs(2.0 * d - 0.5);
    if (std::abs(width) > 1e-10)
        throw NoSolution("positivity bound does not pin c: interval width " +
                         std::to_string(width));
    const double c = (family == SymmetryFamily::rotational ? d : -d) + 0.0;

    return {d, c, validate_density(build(c, d))};
}

// Bell basis vectors in the linear polarization basis.
inline StateVector4 bell_state(BellKind kind) {
    const double s = 1.0 / std::numbers::sqrt2;
    StateVector4 v;
    switch (kind) {
        case BellKind::phi_plus:
            v.a = {s, 0.0, 0.0, s};
            break;
        case BellKind::phi_minus:
            v.a = {s, 0.0, 0.0, -s};
            break;
        case BellKind::psi_plus:
            v.a = {0.0, s, s, 0.0};
            break;
        case BellKind::psi_minus:
            v.a = {0.0, s, -s, 0.0};
            break;
    }
    return v;
}

// Orthonormal basis adapted to equal-angle rotations: the first two
// elements are fixed vectors of rotation_both, the last two pick up a
// unit-modulus phase only.
inline std::array<StateVector4, 4> rot_invariant_basis() {
    const double s = 1.0 / std::numbers::sqrt2;
    const ComplexScalar im(0.0, 1.0);
    const StateVector4 phi_minus = bell_state(BellKind::phi_minus);
    const StateVector4 psi_plus = bell_state(BellKind::psi_plus);

    StateVector4 mixed_minus;
    StateVector4 mixed_plus;
    for (int i = 0; i < 4; ++i) {
        mixed_minus.a[i] = s * (phi_minus.a[i] - im * psi_plus.a[i]);
        mixed_plus.a[i] = s * (phi_minus.a[i] + im * psi_plus.a[i]);
    }
    return {bell_state(BellKind::phi_plus), bell_state(BellKind::psi_minus), mixed_minus,
            mixed_plus};
}

// Uniform mixture of identically polarized photon pairs: correlated but
// separable. A member of the rotationally invariant family with d = 3/8,
// c = 1/8.
inline DensityMatrix semiclassical_state() {
    ComplexMatrix4 m;
    m(0, 0) = 3.0 / 8.0;
    m(0, 3) = 1.0 / 8.0;
    m(1, 1) = 1.0 / 8.0;
    m(1, 2) = 1.0 / 8.0;
    m(2, 1) = 1.0 / 8.0;
    m(2, 2) = 1.0 / 8.0;
    m(3, 0) = 1.0 / 8.0;
    m(3, 3) = 3.0 / 8.0;
    return validate_density(m);
}

struct ChshAngles {
    Angle a;
    Angle a_prime;
    Angle b;
    Angle b_prime;
};

// Optimal settings for the maximally entangled case.
inline constexpr ChshAngles standard_chsh_angles{radians(0.0),
                                                 radians(std::numbers::pi / 4.0),
                                                 radians(std::numbers::pi / 8.0),
                                                 radians(3.0 * std::numbers::pi / 8.0)};

namespace detail {

inline double coincidence(const ComplexMatrix4& m, double alpha, double beta) {
    return trace(m * polarizer_a(radians(alpha)) * polarizer_b(radians(beta))).real();
}

// E(alpha, beta) from the four polarizer coincidence rates.
inline double correlation(const ComplexMatrix4& m, double alpha, double beta) {
    constexpr double perp = std::numbers::pi / 2.0;
    return coincidence(m, alpha, beta) + coincidence(m, alpha + perp, beta + perp) -
           coincidence(m, alpha + perp, beta) - coincidence(m, alpha, beta + perp);
}

}  // namespace detail

// CHSH combination S = |E(a,b) - E(a,b') + E(a',b) + E(a',b')|.
// S <= 2 for any classically correlated state, up to 2*sqrt2 quantum.
inline double chsh_score(const DensityMatrix& rho, const ChshAngles& angles) {
    const ComplexMatrix4& m = rho.matrix();
    const double a = angles.a.radians;
    const double ap = angles.a_prime.radians;
    const double b = angles.b.radians;
    const double bp = angles.b_prime.radians;
    return std::abs(detail::correlation(m, a, b) - detail::correlation(m, a, bp) +
                    detail::correlation(m, ap, b) + detail::correlation(m, ap, bp));
}

}  // namespace bellsym
