#pragma once

// Seeded sampling harness: checks each theorem's inequality on a concrete
// mapping and emits a deterministic structured report.

#include "pluriharm/bounds.hpp"
#include "pluriharm/lif.hpp"
#include "pluriharm/mapping.hpp"
#include "pluriharm/report.hpp"

namespace pluriharm {

struct SampleConfig {
    std::uint64_t seed = 0;
    std::vector<double> radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    int points_per_radius = 32;
    int directions_per_point = 8;
    bool membership_precheck = true;
    OrderBudget order_budget = {};
};

// Seeded sphere points at each radius (Gaussian directions, normalized),
// radius-major order; identical config + seed gives the identical list.
std::vector<CVector> sample_points(int n, const SampleConfig& cfg,
                                   double scale = 1.0);

// BoundParams populated from the map at z = 0.
BoundParams params_from_map(const MapModel& map, double alpha, double k);

// Throws MembershipRefuted when the heuristic PH(alpha,k) check fails.
void require_membership(const MapModel& map, double alpha, double k,
                        const SampleConfig& cfg);

VerificationReport verify_distortion(const MapModel& map, double alpha, double k,
                                     const SampleConfig& cfg = {});
VerificationReport verify_growth(const MapModel& map, double alpha, double k,
                                 const SampleConfig& cfg = {});
VerificationReport verify_jacobian_bound(const MapModel& map, double alpha,
                                         double k, const SampleConfig& cfg = {});
VerificationReport verify_det_factorization(const MapModel& map,
                                            const SampleConfig& cfg = {});

// Requires Dg(0) = 0 (PreconditionFailed otherwise); checks the Schwarz-type
// bound ||Dg(z)[Dh(z)]^-1|| <= ||z||.
VerificationReport verify_schwarz_dilatation(const MapModel& map,
                                             const SampleConfig& cfg = {});

// Conditional on the caller-declared fully-starlike hypothesis.
VerificationReport verify_starlike_hbound(const MapModel& map, double r,
                                          const SampleConfig& cfg = {});
VerificationReport verify_starlike_lower(const MapModel& map, double alpha,
                                         const SampleConfig& cfg = {});

// Sample supremum of Lambda_f(z)^(2n) / det J_f(z); >= 1 always.
double estimate_qr_constant(const MapModel& map, const SampleConfig& cfg = {});

VerificationReport verify_quasiregular_equivalence(const MapModel& map, double c,
                                           const SampleConfig& cfg = {});

}  // namespace pluriharm
