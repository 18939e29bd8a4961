// Fixed-size complex linear algebra for two-qubit states: 4x4 and 2x2
// complex matrices, 4-component state vectors, and the handful of
// operations (products, adjoint, trace, norms, outer products) everything
// else is built from.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace bellsym {

using ComplexScalar = std::complex<double>;

// 4x4 complex matrix, row-major, over the two-qubit product basis
// {|x_a x_b>, |x_a y_b>, |y_a x_b>, |y_a y_b>} (index r = 2*a + b).
struct ComplexMatrix4 {
    std::array<ComplexScalar, 16> e{};

    ComplexScalar& operator()(int r, int c) { return e[4 * r + c]; }
    const ComplexScalar& operator()(int r, int c) const { return e[4 * r + c]; }

    static ComplexMatrix4 zero() { return {}; }

    static ComplexMatrix4 identity() {
        ComplexMatrix4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix4 diagonal(double a, double b, double c, double d) {
        ComplexMatrix4 m;
        m(0, 0) = a;
        m(1, 1) = b;
        m(2, 2) = c;
        m(3, 3) = d;
        return m;
    }
};

// 2x2 complex matrix, row-major; carries reduced (single-qubit) states.
struct ComplexMatrix2 {
    std::array<ComplexScalar, 4> e{};

    ComplexScalar& operator()(int r, int c) { return e[2 * r + c]; }
    const ComplexScalar& operator()(int r, int c) const { return e[2 * r + c]; }

    static ComplexMatrix2 zero() { return {}; }

    static ComplexMatrix2 identity() {
        ComplexMatrix2 m;
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
        return m;
    }
};

// Pure two-qubit state; amplitudes follow the ComplexMatrix4 basis order.
struct StateVector4 {
    std::array<ComplexScalar, 4> a{};

    double norm() const {
        double s = 0.0;
        for (const auto& x : a) s += std::norm(x);
        return std::sqrt(s);
    }
};

inline ComplexMatrix4 operator+(const ComplexMatrix4& x, const ComplexMatrix4& y) {
    ComplexMatrix4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = x.e[i] + y.e[i];
    return r;
}

inline ComplexMatrix4 operator-(const ComplexMatrix4& x, const ComplexMatrix4& y) {
    ComplexMatrix4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = x.e[i] - y.e[i];
    return r;
}

inline ComplexMatrix4 operator*(ComplexScalar s, const ComplexMatrix4& m) {
    ComplexMatrix4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = s * m.e[i];
    return r;
}

inline ComplexMatrix4 operator*(double s, const ComplexMatrix4& m) {
    return ComplexScalar(s) * m;
}

inline ComplexMatrix4 mat_mul(const ComplexMatrix4& x, const ComplexMatrix4& y) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            ComplexScalar s = 0.0;
            for (int k = 0; k < 4; ++k) s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}

inline ComplexMatrix4 operator*(const ComplexMatrix4& x, const ComplexMatrix4& y) {
    return mat_mul(x, y);
}

// Conjugate transpose.
inline ComplexMatrix4 adjoint(const ComplexMatrix4& m) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj(m(j, i));
    return r;
}

inline ComplexMatrix4 transpose(const ComplexMatrix4& m) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = m(j, i);
    return r;
}

inline ComplexMatrix4 conj_entries(const ComplexMatrix4& m) {
    ComplexMatrix4 r;
    for (std::size_t i = 0; i < 16; ++i) r.e[i] = std::conj(m.e[i]);
    return r;
}

inline ComplexScalar trace(const ComplexMatrix4& m) {
    return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3);
}

inline double frobenius_norm(const ComplexMatrix4& m) {
    double s = 0.0;
    for (const auto& x : m.e) s += std::norm(x);
    return std::sqrt(s);
}

inline double frobenius_norm(const ComplexMatrix2& m) {
    double s = 0.0;
    for (const auto& x : m.e) s += std::norm(x);
    return std::sqrt(s);
}

inline ComplexMatrix2 operator-(const ComplexMatrix2& x, const ComplexMatrix2& y) {
    ComplexMatrix2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = x.e[i] - y.e[i];
    return r;
}

inline ComplexMatrix2 operator*(double s, const ComplexMatrix2& m) {
    ComplexMatrix2 r;
    for (std::size_t i = 0; i < 4; ++i) r.e[i] = s * m.e[i];
    return r;
}

// Kronecker product; the left factor acts on subspace A (slow index).
inline ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b) {
    ComplexMatrix4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

// U^-1 M U for unitary U.
inline ComplexMatrix4 conjugate_by_unitary(const ComplexMatrix4& m, const ComplexMatrix4& u) {
    return adjoint(u) * m * u;
}

// |v><v|
inline ComplexMatrix4 projector(const StateVector4& v) {
    ComplexMatrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = v.a[i] * std::conj(v.a[j]);
    return r;
}

inline ComplexScalar inner(const StateVector4& x, const StateVector4& y) {
    ComplexScalar s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::conj(x.a[i]) * y.a[i];
    return s;
}

inline StateVector4 apply(const ComplexMatrix4& m, const StateVector4& v) {
    StateVector4 r;
    for (int i = 0; i < 4; ++i) {
        ComplexScalar s = 0.0;
        for (int j = 0; j < 4; ++j) s += m(i, j) * v.a[j];
        r.a[i] = s;
    }
    return r;
}

inline bool all_finite(const ComplexMatrix4& m) {
    for (const auto& x : m.e)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

}  // namespace bellsym
