// Density-matrix validation and scalar residuals for the physical
// constraints and classical symmetries: self-adjointness, unit trace,
// positivity, unpolarized reduced states, party/axis naming invariance,
// and rotational/twist invariance over an angle grid.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "bellsym/complex_matrix.hpp"
#include "bellsym/eigen.hpp"
#include "bellsym/errors.hpp"
#include "bellsym/operators.hpp"

namespace bellsym {

inline constexpr double kTraceTolerance = 1e-10;
inline constexpr int kDefaultAngleGrid = 32;

// A validated quantum state: Hermitian, trace one, positive semidefinite
// (each within 1e-10). Construct via validate_density.
class DensityMatrix {
  public:
    const ComplexMatrix4& matrix() const { return m_; }

  private:
    explicit DensityMatrix(const ComplexMatrix4& m) : m_(m) {}
    friend DensityMatrix validate_density(const ComplexMatrix4&);

    ComplexMatrix4 m_;
};

inline DensityMatrix validate_density(const ComplexMatrix4& m) {
    const double herm = frobenius_norm(m - adjoint(m));
    if (!(herm <= kHermitianTolerance))
        throw NotHermitian("density matrix must be self-adjoint: ||m - adjoint(m)||_F = " +
                           std::to_string(herm));

    const double trace_res = std::abs(trace(m) - ComplexScalar(1.0));
    if (!(trace_res <= kTraceTolerance))
        throw TraceNotOne("density matrix must have unit trace: |Tr(m) - 1| = " +
                          std::to_string(trace_res));

    const double min_eig = hermitian_eigenvalues(m)[3];
    if (min_eig < -kPsdTolerance)
        throw NotPositive("density matrix must be positive: min eigenvalue = " +
                          std::to_string(min_eig));

    return DensityMatrix(m);
}

// Reduced state of subspace A (B traced out).
inline ComplexMatrix2 partial_trace_a(const DensityMatrix& rho) {
    const ComplexMatrix4& m = rho.matrix();
    ComplexMatrix2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = m(2 * i + 0, 2 * j + 0) + m(2 * i + 1, 2 * j + 1);
    return r;
}

// Reduced state of subspace B (A traced out).
inline ComplexMatrix2 partial_trace_b(const DensityMatrix& rho) {
    const ComplexMatrix4& m = rho.matrix();
    ComplexMatrix2 r;
    for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(k, l) = m(0 + k, 0 + l) + m(2 + k, 2 + l);
    return r;
}

// Frobenius distance of each reduced state from the unpolarized I/2.
inline std::pair<double, double> reduced_residuals(const DensityMatrix& rho) {
    const ComplexMatrix2 half_identity = 0.5 * ComplexMatrix2::identity();
    return {frobenius_norm(partial_trace_a(rho) - half_identity),
            frobenius_norm(partial_trace_b(rho) - half_identity)};
}

enum class NamingTransform { swap_parties, swap_axes };

inline double invariance_residual(const DensityMatrix& rho, NamingTransform t) {
    const ComplexMatrix4& m = rho.matrix();
    const ComplexMatrix4 transformed =
        t == NamingTransform::swap_parties ? swap_parties(m) : swap_axes(m);
    return frobenius_norm(transformed - m);
}

namespace detail {

template <typename MakeUnitary>
double max_conjugation_residual(const ComplexMatrix4& m, int grid_size, MakeUnitary&& make) {
    if (grid_size < 4)
        throw std::invalid_argument("angle grid must have at least 4 points, got " +
                                    std::to_string(grid_size));
    double worst = 0.0;
    for (int k = 0; k < grid_size; ++k) {
        const double theta = std::numbers::pi * k / grid_size;
        const ComplexMatrix4 u = make(theta);
        worst = std::max(worst, frobenius_norm(conjugate_by_unitary(m, u) - m));
    }
    return worst;
}

}  // namespace detail

// Worst-case deviation from invariance under equal-angle rotation of both
// parties, over a uniform grid of angles in [0, pi).
inline double rotational_residual(const DensityMatrix& rho, int grid_size = kDefaultAngleGrid) {
    return detail::max_conjugation_residual(
        rho.matrix(), grid_size, [](double t) { return rotation_both(radians(t)); });
}

// Worst-case deviation from invariance under opposite-angle rotations.
inline double twist_residual(const DensityMatrix& rho, int grid_size = kDefaultAngleGrid) {
    return detail::max_conjugation_residual(rho.matrix(), grid_size,
                                            [](double t) { return twist(radians(t)); });
}

}  // namespace bellsym
