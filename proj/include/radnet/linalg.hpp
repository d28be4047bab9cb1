#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "radnet/rng.hpp"

namespace radnet {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm() const;
};

/// Row-major 2x2 matrix.
struct Mat2 {
    std::array<std::array<double, 2>, 2> m{};

    static Mat2 identity();
    static Mat2 zero() { return {}; }
    static Mat2 diag(double a, double b);

    double& operator()(int r, int c) { return m[r][c]; }
    double operator()(int r, int c) const { return m[r][c]; }

    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator*(const Mat2& o) const;
    Mat2 operator*(double s) const;
    Vec2 operator*(const Vec2& v) const;
    Mat2 transpose() const;
    double trace() const { return m[0][0] + m[1][1]; }
    double det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    double max_abs() const;
};

/// Row-major 4x4 matrix.
struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    static Mat4 identity();
    static Mat4 zero() { return {}; }
    static Mat4 diag(double a, double b, double c, double d);

    double& operator()(int r, int c) { return m[r][c]; }
    double operator()(int r, int c) const { return m[r][c]; }

    Mat4 operator+(const Mat4& o) const;
    Mat4 operator-(const Mat4& o) const;
    Mat4 operator*(const Mat4& o) const;
    Mat4 operator*(double s) const;
    std::array<double, 4> operator*(const std::array<double, 4>& v) const;
    Mat4 transpose() const;
    double trace() const;
    double max_abs() const;
};

/// Result of the closed-form symmetric 2x2 eigendecomposition.
///
/// `angle` is the direction of the eigenvector belonging to `lambda_max`,
/// measured from the +x axis and wrapped to (-pi/2, pi/2]. A degenerate
/// pair (lambda_max == lambda_min) reports angle 0.
struct Eig2 {
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    double angle = 0.0;
};

/// Eigendecomposition of a symmetric 2x2 matrix.
/// Throws ContractError if the input is not symmetric within 1e-12
/// (relative to the largest entry).
Eig2 eig2_sym(const Mat2& m);

/// Rebuild the matrix U diag(l1, l2) U^T from an eigendecomposition,
/// U being the rotation by `angle`.
Mat2 from_eig2(double lambda_max, double lambda_min, double angle);

/// Lower-triangular Cholesky factor of a symmetric PSD 4x4 matrix.
/// Semidefinite inputs are handled by zeroing the affected column.
/// Throws NumericalError naming the failing pivot if the matrix is
/// indefinite beyond tolerance.
Mat4 cholesky4(const Mat4& m);

/// x solving m x = b for symmetric positive definite m, via cholesky4.
std::array<double, 4> solve4_spd(const Mat4& m, const std::array<double, 4>& b);

/// Inverse of a symmetric positive definite 4x4 matrix, via cholesky4.
Mat4 inverse4_spd(const Mat4& m);

/// Inverse of a 2x2 matrix. Throws NumericalError when singular relative
/// to its scale.
Mat2 inverse2(const Mat2& m);

/// Draw mean + L z with z ~ N(0, I), consuming n normal deviates.
/// `chol_lower` is the row-major lower-triangular factor (n x n).
/// Throws ContractError on dimension mismatch.
void sample_gaussian(std::span<const double> mean, std::span<const double> chol_lower,
                     SeededRng& rng, std::span<double> out);

/// Convenience overload for 4-dimensional states.
std::array<double, 4> sample_gaussian4(const std::array<double, 4>& mean, const Mat4& chol_lower,
                                       SeededRng& rng);

/// Wrap an angle to (-pi, pi].
double wrap_angle(double a);

}  // namespace radnet
