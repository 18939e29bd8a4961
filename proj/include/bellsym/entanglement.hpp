// Concurrence and the epsilon-deformation family: quantifies entanglement
// via the spin-flip construction and exposes the scan that relates the
// atomic-symmetry defect to the concurrence defect.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "bellsym/complex_matrix.hpp"
#include "bellsym/constraints.hpp"
#include "bellsym/derivation.hpp"
#include "bellsym/eigen.hpp"
#include "bellsym/errors.hpp"

namespace bellsym {

namespace detail {

// sigma_y (x) sigma_y: real anti-diagonal (-1, 1, 1, -1).
inline const ComplexMatrix4& spin_flip_kernel() {
    static const ComplexMatrix4 f = [] {
        ComplexMatrix4 m;
        m(0, 3) = -1.0;
        m(1, 2) = 1.0;
        m(2, 1) = 1.0;
        m(3, 0) = -1.0;
        return m;
    }();
    return f;
}

}  // namespace detail

// Concurrence C in [0, 1]: 1 for maximally entangled states, 0 for
// separable ones. Computed from the spin-flipped state
// rho~ = (sy(x)sy) conj(rho) (sy(x)sy): the lambda_i are the square roots
// of the eigenvalues of rho rho~, obtained here as the Hermitian
// eigenvalues of sqrt(rho) rho~ sqrt(rho), and
// C = max(0, lambda_1 - lambda_2 - lambda_3 - lambda_4).
inline double concurrence(const DensityMatrix& rho) {
    const ComplexMatrix4& m = rho.matrix();
    const ComplexMatrix4& flip = detail::spin_flip_kernel();
    const ComplexMatrix4 tilde = flip * conj_entries(m) * flip;
    const ComplexMatrix4 root = hermitian_sqrt(m);
    const auto eigs = hermitian_eigenvalues(root * tilde * root);

    const double cut = psd_spectrum_cut(eigs[0]);
    std::array<double, 4> lambda{};
    for (int i = 0; i < 4; ++i) lambda[i] = std::sqrt(eigs[i] < cut ? 0.0 : eigs[i]);
    const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
    return std::clamp(c, 0.0, 1.0);
}

// Independent pure-state cross-check: C = 2|a d - b c| for amplitudes
// (a, b, c, d). Used by tests against the density-matrix path.
inline double concurrence_pure_oracle(const StateVector4& psi) {
    return 2.0 * std::abs(psi.a[0] * psi.a[3] - psi.a[1] * psi.a[2]);
}

// Picks c inside the positivity interval [1/2-3e, 1/2-e] for d = 1/2-e.
enum class CChoice { low, middle, high };

// Deformation of the fully symmetric Bell state by an atomic-symmetry
// defect epsilon: d = 1/2 - epsilon, c selected by c_choice.
struct EpsilonFamily {
    double epsilon = 0.0;
    CChoice c_choice = CChoice::middle;
};

inline constexpr double kEpsilonMax = 1.0 / 6.0;

namespace detail {

inline double epsilon_c_value(CChoice choice, double epsilon) {
    switch (choice) {
        case CChoice::low:
            return 0.5 - 3.0 * epsilon;
        case CChoice::middle:
            return 0.5 - 2.0 * epsilon;
        case CChoice::high:
            return 0.5 - epsilon;
    }
    return 0.5 - 2.0 * epsilon;
}

}  // namespace detail

inline DensityMatrix epsilon_state(const EpsilonFamily& fam) {
    if (!(fam.epsilon >= 0.0) || fam.epsilon > kEpsilonMax)
        throw InfeasibleEpsilon("epsilon must lie in [0, 1/6], got " +
                                std::to_string(fam.epsilon));
    const double d = 0.5 - fam.epsilon;
    const double c = detail::epsilon_c_value(fam.c_choice, fam.epsilon);
    if (!positivity_feasible(SymmetryFamily::rotational, c, d))
        throw InfeasibleEpsilon("epsilon-family parameters c = " + std::to_string(c) +
                                ", d = " + std::to_string(d) + " are not positive");
    return validate_density(build_rho_r(c, d));
}

struct SweepPoint {
    double epsilon;
    double concurrence;
    double atomic_residual;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    double slope;  // least-squares slope of concurrence vs epsilon
};

// Scans epsilon over a uniform grid in [0, eps_max] and fits the
// concurrence-vs-epsilon slope. The atomic residual column is evaluated
// in parallel mode and equals |1/2 - d| = epsilon for these states.
inline SweepResult linearity_scan(CChoice c_choice, double eps_max, int steps) {
    if (!(eps_max > 0.0) || eps_max > 0.125)
        throw InfeasibleEpsilon("eps_max must lie in (0, 1/8], got " + std::to_string(eps_max));
    if (steps < 2)
        throw InfeasibleEpsilon("sweep needs at least 2 steps, got " + std::to_string(steps));

    SweepResult result;
    result.points.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double eps = eps_max * i / (steps - 1);
        const DensityMatrix rho = epsilon_state({eps, c_choice});
        result.points.push_back(
            {eps, concurrence(rho), atomic_residual(rho, AtomicMode::parallel)});
    }

    double mean_eps = 0.0;
    double mean_con = 0.0;
    for (const auto& p : result.points) {
        mean_eps += p.epsilon;
        mean_con += p.concurrence;
    }
    mean_eps /= steps;
    mean_con /= steps;
    double cov = 0.0;
    double var = 0.0;
    for (const auto& p : result.points) {
        cov += (p.epsilon - mean_eps) * (p.concurrence - mean_con);
        var += (p.epsilon - mean_eps) * (p.epsilon - mean_eps);
    }
    result.slope = cov / var;
    return result;
}

}  // namespace bellsym
