#pragma once

#include <functional>

#include "radnet/linalg.hpp"
#include "radnet/rng.hpp"

namespace radnet {

/// Planar kinematic state, ordered [x, vx, y, vy] (meters, meters/second).
struct TargetState {
    double x = 0.0;
    double vx = 0.0;
    double y = 0.0;
    double vy = 0.0;

    std::array<double, 4> to_array() const { return {x, vx, y, vy}; }
    static TargetState from_array(const std::array<double, 4>& a) {
        return {a[0], a[1], a[2], a[3]};
    }
    Vec2 position() const { return {x, y}; }
};

struct MotionConfig {
    double dt = 0.025;   // frame interval, seconds
    double kappa = 1.0;  // process noise intensity, m^2/s^3
};

/// State transition hook: general one-step map plus its Jacobian. The
/// constant-velocity instance is linear, so the Jacobian is state-free,
/// but trackers are written against this seam.
struct TransitionModel {
    std::function<TargetState(const TargetState&)> step;
    std::function<Mat4(const TargetState&)> jacobian;
    Mat4 process_noise;
};

/// Block [[1, dt], [0, 1]] per axis in [x, vx, y, vy] ordering.
Mat4 cv_transition_matrix(const MotionConfig& cfg);

/// Process noise [[dt^3/3, dt^2/2], [dt^2/2, dt]] * kappa per axis.
Mat4 process_noise_cov(const MotionConfig& cfg);

/// The constant-velocity instance of TransitionModel.
TransitionModel cv_model(const MotionConfig& cfg);

/// One noisy step of the true target: F x + w, w ~ N(0, Q).
TargetState propagate_truth(const TargetState& state, const MotionConfig& cfg, SeededRng& rng);

}  // namespace radnet
