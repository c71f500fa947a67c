#ifndef AUTORES_WKB_POST_HPP
#define AUTORES_WKB_POST_HPP

#include "autores/model.hpp"
#include "autores/ode.hpp"

namespace autores::wkb_post {

/// Parameters of the captured oscillation around the slow manifold.
struct PostCaptureParams {
    double A00 = 0.0;
    double phi00 = 0.0;  // radians
    int branch_j = 2;    // 2: positive real branch, 3: negative
};

/// Prefactor of the slow equilibrium in the captured leading term. The main
/// theorem prints (1/2) sqrt(1+theta) while the slow-manifold census gives
/// +-sqrt(1+theta); the measured post-capture slope of |phi|^2 settles it.
enum class EquilibriumVariant { FullRoot, HalfRoot };

/// Slowly varying solutions U0^(j): 0, +-sqrt(1+theta) (j=2,3, theta>-1),
/// +-i sqrt(theta-1) (j=4,5, theta>1).
model::Phi slow_manifold(double theta, int family);

/// Omega = 4/3 (theta+1)^(3/2); dOmega/dtheta = 2 sqrt(1+theta).
double omega_post(double theta);

/// The slow phase correction multiplying A00^2 in S:
/// 5/2 theta + 3/4 theta^2 + 1/6 (112 - 8 theta) sqrt(1+theta) + 3/2 ln(1+theta).
double slow_phase_correction(double theta);

/// Captured leading-order evaluation
/// (-1)^j [E(theta) + sqrt(eps) A00 ((1+theta)^(-1/4) cos S + i (1+theta)^(1/4) sin S)].
model::Phi eval(double theta, double eps, const PostCaptureParams& p, EquilibriumVariant ev);

struct Validity {
    double margin_left;   // eps^(-2/3) (1+theta); inside when >= 10
    double margin_right;  // eps^(4/5) theta;      inside when <= 0.1
};
Validity validity_margins(double theta, double eps);

struct PostFit {
    PostCaptureParams params;
    double rms_residual = 0.0;
    double phase_drift = 0.0;  // residual linear drift of S vs model, rad per theta
};

/// Fit (A00, phi00, j) from a captured trajectory of the primary equation on
/// [theta1, theta2]. The window must span >= 8 fast periods and the solution
/// must track the slow manifold there.
PostFit fit_post_capture(const ode::Trajectory& traj, double eps, double theta1, double theta2,
                         EquilibriumVariant ev);

} // namespace autores::wkb_post

#endif
