#include "radnet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radnet/errors.hpp"

namespace radnet {

double Vec2::norm() const { return std::hypot(x, y); }

Mat2 Mat2::identity() { return diag(1.0, 1.0); }

Mat2 Mat2::diag(double a, double b) {
    Mat2 r;
    r.m[0][0] = a;
    r.m[1][1] = b;
    return r;
}

Mat2 Mat2::operator+(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
}

Mat2 Mat2::operator-(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r.m[i][j] += m[i][k] * o.m[k][j];
    return r;
}

Mat2 Mat2::operator*(double s) const {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j] * s;
    return r;
}

Vec2 Mat2::operator*(const Vec2& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y};
}

Mat2 Mat2::transpose() const {
    Mat2 r = *this;
    std::swap(r.m[0][1], r.m[1][0]);
    return r;
}

double Mat2::max_abs() const {
    double v = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v = std::max(v, std::abs(m[i][j]));
    return v;
}

Mat4 Mat4::identity() { return diag(1.0, 1.0, 1.0, 1.0); }

Mat4 Mat4::diag(double a, double b, double c, double d) {
    Mat4 r;
    r.m[0][0] = a;
    r.m[1][1] = b;
    r.m[2][2] = c;
    r.m[3][3] = d;
    return r;
}

Mat4 Mat4::operator+(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] - o.m[i][j];
    return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Mat4 Mat4::operator*(double s) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j] * s;
    return r;
}

std::array<double, 4> Mat4::operator*(const std::array<double, 4>& v) const {
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
    return r;
}

Mat4 Mat4::transpose() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
}

double Mat4::trace() const { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }

double Mat4::max_abs() const {
    double v = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v = std::max(v, std::abs(m[i][j]));
    return v;
}

Eig2 eig2_sym(const Mat2& mat) {
    const double scale = std::max(mat.max_abs(), 1.0);
    if (std::abs(mat(0, 1) - mat(1, 0)) > 1e-12 * scale)
        throw ContractError("eig2_sym: matrix not symmetric");

    const double a = mat(0, 0);
    const double b = 0.5 * (mat(0, 1) + mat(1, 0));
    const double c = mat(1, 1);

    const double mean = 0.5 * (a + c);
    const double half_diff = 0.5 * (a - c);
    const double radius = std::hypot(half_diff, b);

    Eig2 out;
    out.lambda_max = mean + radius;
    out.lambda_min = mean - radius;

    if (radius <= 1e-15 * scale) {
        out.angle = 0.0;  // degenerate pair: fixed convention
        return out;
    }
    // Eigenvector of lambda_max, picking the algebraic form whose leading
    // component is radius + |half_diff| (no cancellation). Sign of the
    // vector is irrelevant; wrap to (-pi/2, pi/2].
    double angle = (half_diff >= 0.0) ? std::atan2(b, radius + half_diff)
                                      : std::atan2(radius - half_diff, b);
    if (angle > M_PI / 2.0) angle -= M_PI;
    if (angle <= -M_PI / 2.0) angle += M_PI;
    out.angle = angle;
    return out;
}

Mat2 from_eig2(double lambda_max, double lambda_min, double angle) {
    const double ca = std::cos(angle);
    const double sa = std::sin(angle);
    Mat2 r;
    r(0, 0) = lambda_max * ca * ca + lambda_min * sa * sa;
    r(0, 1) = (lambda_max - lambda_min) * ca * sa;
    r(1, 0) = r(0, 1);
    r(1, 1) = lambda_max * sa * sa + lambda_min * ca * ca;
    return r;
}

Mat4 cholesky4(const Mat4& mat) {
    const double scale = std::max(mat.max_abs(), 1.0);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(mat(i, j) - mat(j, i)) > 1e-10 * scale)
                throw ContractError("cholesky4: matrix not symmetric");

    Mat4 L;
    for (int j = 0; j < 4; ++j) {
        double d = mat(j, j);
        for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
        if (d < -1e-10 * scale)
            throw NumericalError("cholesky4: non-positive pivot at index " + std::to_string(j) +
                                 " (value " + std::to_string(d) + ")");
        if (d <= 0.0) {
            // Semidefinite direction: zero column.
            for (int i = j; i < 4; ++i) L(i, j) = 0.0;
            continue;
        }
        L(j, j) = std::sqrt(d);
        for (int i = j + 1; i < 4; ++i) {
            double s = mat(i, j);
            for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            L(i, j) = s / L(j, j);
        }
    }
    return L;
}

std::array<double, 4> solve4_spd(const Mat4& mat, const std::array<double, 4>& b) {
    const Mat4 L = cholesky4(mat);
    for (int i = 0; i < 4; ++i)
        if (L(i, i) == 0.0) throw NumericalError("solve4_spd: singular matrix");

    std::array<double, 4> y{};
    for (int i = 0; i < 4; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= L(i, k) * y[k];
        y[i] = s / L(i, i);
    }
    std::array<double, 4> x{};
    for (int i = 3; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < 4; ++k) s -= L(k, i) * x[k];
        x[i] = s / L(i, i);
    }
    return x;
}

Mat4 inverse4_spd(const Mat4& mat) {
    Mat4 inv;
    for (int col = 0; col < 4; ++col) {
        std::array<double, 4> e{};
        e[col] = 1.0;
        const auto x = solve4_spd(mat, e);
        for (int row = 0; row < 4; ++row) inv(row, col) = x[row];
    }
    // Symmetrize: the exact inverse of a symmetric matrix is symmetric.
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const double v = 0.5 * (inv(i, j) + inv(j, i));
            inv(i, j) = v;
            inv(j, i) = v;
        }
    return inv;
}

Mat2 inverse2(const Mat2& mat) {
    const double d = mat.det();
    const double scale = std::max(mat.max_abs(), 1e-300);
    if (std::abs(d) <= 1e-14 * scale * scale)
        throw NumericalError("inverse2: singular matrix");
    Mat2 r;
    r(0, 0) = mat(1, 1) / d;
    r(0, 1) = -mat(0, 1) / d;
    r(1, 0) = -mat(1, 0) / d;
    r(1, 1) = mat(0, 0) / d;
    return r;
}

void sample_gaussian(std::span<const double> mean, std::span<const double> chol_lower,
                     SeededRng& rng, std::span<double> out) {
    const std::size_t n = mean.size();
    if (chol_lower.size() != n * n || out.size() != n)
        throw ContractError("sample_gaussian: dimension mismatch");

    std::array<double, 16> z{};
    if (n > z.size()) throw ContractError("sample_gaussian: dimension too large");
    for (std::size_t i = 0; i < n; ++i) z[i] = rng.normal();
    for (std::size_t i = 0; i < n; ++i) {
        double s = mean[i];
        for (std::size_t k = 0; k <= i; ++k) s += chol_lower[i * n + k] * z[k];
        out[i] = s;
    }
}

std::array<double, 4> sample_gaussian4(const std::array<double, 4>& mean, const Mat4& chol_lower,
                                       SeededRng& rng) {
    std::array<double, 16> flat{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) flat[i * 4 + j] = chol_lower(i, j);
    std::array<double, 4> out{};
    sample_gaussian(std::span<const double>(mean.data(), 4), std::span<const double>(flat.data(), 16),
                    rng, std::span<double>(out.data(), 4));
    return out;
}

double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a > M_PI) a -= 2.0 * M_PI;
    if (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

}  // namespace radnet
