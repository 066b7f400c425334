#pragma once

// Ball automorphisms, the Koebe transform, the norm-order estimator for
// linear-invariant families, and the heuristic PH(alpha,k) membership check.

#include <random>

#include "pluriharm/mapping.hpp"
#include "pluriharm/report.hpp"

namespace pluriharm {

// The standard involutive automorphism of the unit ball with phi_a(0) = a,
// phi_a(a) = 0, built from the projection onto a and its complement.
struct BallAutomorphism {
    CVector a;
    CMatrix L;  // numerator linear part: phi(z) = (a + L z) / (1 - <z,a>)

    CVector value(const CVector& z) const;
    CMatrix jacobian(const CVector& z) const;
    // D^2 phi(z)(u,u), analytic
    CVector second(const CVector& z, const CVector& u) const;
    CMatrix jacobian0_inverse() const;
};

BallAutomorphism ball_automorphism(const CVector& a);

// Koebe transform T = [Dphi(0)]^-1 [Dh(phi(0))]^-1 (h(phi(z)) - h(phi(0))),
// normalized so T(0) = 0 and DT(0) = I. The second-derivative channel is
// assembled from the automorphism's analytic derivatives, which keeps the
// estimator usable with centers within 1e-9 of the sphere.
HoloFn koebe_transform(const HoloFn& h, const BallAutomorphism& phi);

struct OrderBudget {
    int center_dirs = 8;
    int theta_dirs = 16;
    int refine_iters = 48;
};

struct OrderEstimate {
    double value = 0.0;  // lower bound for the norm order by construction
    long samples_used = 0;
    CVector best_a;
    CVector best_theta;
};

// sup over sampled automorphism centers a (radial grid {0, 0.1, ..., 0.9}
// plus a probe at 1 - 1e-9, golden-section refinement per direction) and a
// direction search of (1/2) ||D^2 (Koebe_a h)(0)(theta,theta)||.
// Requires h(0) = 0 and Dh(0) = I within 1e-9.
OrderEstimate norm_order_estimate(const HoloFn& h, const OrderBudget& budget = {});

struct MembershipConfig {
    std::uint64_t seed = 0;
    std::vector<double> radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    int points_per_radius = 16;
    OrderBudget order_budget = {};
};

// Heuristic: a sampled, lower-bound check can refute membership but never
// certify it; the report says "refuted" / "not refuted" accordingly.
VerificationReport check_membership_PH(const MapModel& map, double alpha,
                                       double k, const MembershipConfig& cfg = {});

// Coefficient inequalities at z = 0 implied by the class constants.
VerificationReport coefficient_bounds_check(const MapModel& map, double k);

// [Dh(0)]^-1 (h(z) - h(0)) as a holomorphic model.
HoloFn normalize_holo(const HoloFn& h);

// Deterministic unit directions in C^n: roots of unity at n = 1, seeded
// normalized Gaussians otherwise. Prefix-stable in count.
std::vector<CVector> unit_directions(int n, int count, std::uint64_t seed);

}  // namespace pluriharm
