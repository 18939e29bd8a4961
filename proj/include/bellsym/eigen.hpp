// Hermitian eigensolver and matrix square root for 4x4 complex matrices.
//
// The solver is a cyclic Jacobi iteration working directly in complex
// arithmetic: each pivot (p,q) is annihilated by a plane rotation whose
// phase absorbs arg(H_pq), so the scheme handles Hermitian (not merely
// real-symmetric) input. Convergence is quadratic; at 4x4 a handful of
// sweeps reaches machine precision.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "bellsym/complex_matrix.hpp"
#include "bellsym/errors.hpp"

namespace bellsym {

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-10;

namespace detail {

inline double offdiagonal_mass(const ComplexMatrix4& m) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

}  // namespace detail

// Eigenvalues in descending order; vectors(i,k) is component i of the
// eigenvector belonging to values[k] (columns are orthonormal).
struct EigenSystem {
    std::array<double, 4> values{};
    ComplexMatrix4 vectors;
};

inline EigenSystem hermitian_eigensystem(const ComplexMatrix4& m) {
    const double herm_res = frobenius_norm(m - adjoint(m));
    if (!(herm_res <= kHermitianTolerance))
        throw NotHermitian("matrix is not self-adjoint: ||m - adjoint(m)||_F = " +
                           std::to_string(herm_res));

    ComplexMatrix4 h = 0.5 * (m + adjoint(m));
    ComplexMatrix4 v = ComplexMatrix4::identity();

    const double floor = 1e-15 * std::max(1.0, frobenius_norm(h));
    for (int sweep = 0; sweep < 64; ++sweep) {
        const double off = detail::offdiagonal_mass(h);
        if (off < 1e-14 || off < floor) break;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const ComplexScalar alpha = h(p, q);
                const double r = std::abs(alpha);
                if (r == 0.0) continue;
                const ComplexScalar u = alpha / r;  // unit phase of the pivot
                const double theta =
                    0.5 * std::atan2(2.0 * r, h(p, p).real() - h(q, q).real());
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                // Plane rotation in the (p,q) plane with the pivot's phase
                // folded in; W^H H W zeroes H_pq.
                ComplexMatrix4 w = ComplexMatrix4::identity();
                w(p, p) = c;
                w(p, q) = -s * u;
                w(q, p) = s * std::conj(u);
                w(q, q) = c;
                h = adjoint(w) * h * w;
                v = v * w;
            }
        }
    }

    std::array<int, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h(a, a).real() > h(b, b).real(); });

    EigenSystem sys;
    for (int k = 0; k < 4; ++k) {
        sys.values[k] = h(order[k], order[k]).real();
        for (int i = 0; i < 4; ++i) sys.vectors(i, k) = v(i, order[k]);
    }
    return sys;
}

inline std::array<double, 4> hermitian_eigenvalues(const ComplexMatrix4& m) {
    return hermitian_eigensystem(m).values;
}

// Noise floor for spectra of rank-deficient PSD matrices: eigenvalues
// this far below the leading one are round-off images of exact zeros, and
// square-rooting them would turn ~1e-16 noise into ~1e-8 output.
inline double psd_spectrum_cut(double leading) {
    return std::max(1e-12 * std::max(leading, 0.0), 1e-13);
}

// Hermitian PSD square root. Eigenvalues in [-kPsdTolerance, 0) are
// treated as round-off and clamped to zero; anything lower is an error.
inline ComplexMatrix4 hermitian_sqrt(const ComplexMatrix4& m) {
    const EigenSystem sys = hermitian_eigensystem(m);
    for (double lambda : sys.values)
        if (lambda < -kPsdTolerance)
            throw NotPSD("matrix is not positive semidefinite: eigenvalue " +
                         std::to_string(lambda));

    const double cut = psd_spectrum_cut(sys.values[0]);
    ComplexMatrix4 root;
    for (int k = 0; k < 4; ++k) {
        const double lambda = sys.values[k] < cut ? 0.0 : sys.values[k];
        const double s = std::sqrt(lambda);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                root(i, j) += s * sys.vectors(i, k) * std::conj(sys.vectors(j, k));
    }
    return 0.5 * (root + adjoint(root));
}

}  // namespace bellsym
