// Aggregated per-state diagnostics: one scalar residual per physical
// constraint and symmetry, plus the atomic residual in every mode and the
// concurrence.
#pragma once

#include <cmath>
#include <map>

#include "bellsym/complex_matrix.hpp"
#include "bellsym/constraints.hpp"
#include "bellsym/derivation.hpp"
#include "bellsym/eigen.hpp"
#include "bellsym/entanglement.hpp"

namespace bellsym {

struct ReportConfig {
    int angle_grid = kDefaultAngleGrid;    // rotational / twist residuals
    int atomic_grid = kDefaultAtomicGrid;  // atomic residual (per axis)
};

struct SymmetryReport {
    double hermiticity_residual;
    double trace_residual;
    double min_eigenvalue;
    double reduced_a_residual;
    double reduced_b_residual;
    double swap_parties_residual;
    double swap_axes_residual;
    double rotational_residual;
    double twist_residual;
    std::map<AtomicMode, double> atomic_residuals;
    double concurrence;
};

inline SymmetryReport full_report(const DensityMatrix& rho, const ReportConfig& cfg = {}) {
    const ComplexMatrix4& m = rho.matrix();
    SymmetryReport r;
    r.hermiticity_residual = frobenius_norm(m - adjoint(m));
    r.trace_residual = std::abs(trace(m) - ComplexScalar(1.0));
    r.min_eigenvalue = hermitian_eigenvalues(m)[3];
    const auto [ra, rb] = reduced_residuals(rho);
    r.reduced_a_residual = ra;
    r.reduced_b_residual = rb;
    r.swap_parties_residual = invariance_residual(rho, NamingTransform::swap_parties);
    r.swap_axes_residual = invariance_residual(rho, NamingTransform::swap_axes);
    r.rotational_residual = rotational_residual(rho, cfg.angle_grid);
    r.twist_residual = twist_residual(rho, cfg.angle_grid);
    for (AtomicMode mode : {AtomicMode::parallel, AtomicMode::crossed, AtomicMode::twist,
                            AtomicMode::twist_crossed})
        r.atomic_residuals[mode] = atomic_residual(rho, mode, cfg.atomic_grid);
    r.concurrence = concurrence(rho);
    return r;
}

}  // namespace bellsym
