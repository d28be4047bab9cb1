#include "radnet/dynamics.hpp"

#include "radnet/errors.hpp"

namespace radnet {

Mat4 cv_transition_matrix(const MotionConfig& cfg) {
    if (!(cfg.dt >= 0.0)) throw ContractError("cv_transition_matrix: dt must be >= 0");
    Mat4 f = Mat4::identity();
    f(0, 1) = cfg.dt;
    f(2, 3) = cfg.dt;
    return f;
}

Mat4 process_noise_cov(const MotionConfig& cfg) {
    if (!(cfg.dt >= 0.0) || !(cfg.kappa >= 0.0))
        throw ContractError("process_noise_cov: dt and kappa must be >= 0");
    const double dt = cfg.dt;
    const double q3 = dt * dt * dt / 3.0;
    const double q2 = dt * dt / 2.0;
    Mat4 q;
    // Per-axis blocks at index pairs (0,1) and (2,3).
    for (int base : {0, 2}) {
        q(base, base) = q3 * cfg.kappa;
        q(base, base + 1) = q2 * cfg.kappa;
        q(base + 1, base) = q2 * cfg.kappa;
        q(base + 1, base + 1) = dt * cfg.kappa;
    }
    return q;
}

TransitionModel cv_model(const MotionConfig& cfg) {
    const Mat4 f = cv_transition_matrix(cfg);
    TransitionModel model;
    model.step = [f](const TargetState& s) { return TargetState::from_array(f * s.to_array()); };
    model.jacobian = [f](const TargetState&) { return f; };
    model.process_noise = process_noise_cov(cfg);
    return model;
}

TargetState propagate_truth(const TargetState& state, const MotionConfig& cfg, SeededRng& rng) {
    const Mat4 f = cv_transition_matrix(cfg);
    const Mat4 chol_q = cholesky4(process_noise_cov(cfg));
    const auto next = sample_gaussian4(f * state.to_array(), chol_q, rng);
    return TargetState::from_array(next);
}

}  // namespace radnet
