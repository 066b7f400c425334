#include "pluriharm/verify.hpp"

#include <cmath>
#include <sstream>

namespace pluriharm {

namespace {

using Cpx = std::complex<double>;

std::string point_label(const CVector& z) {
    std::ostringstream os;
    os.precision(6);
    os << "z=(";
    for (int i = 0; i < z.size(); ++i) {
        if (i) os << "; ";
        os << z(i).real() << (z(i).imag() < 0 ? "" : "+") << z(i).imag() << "i";
    }
    os << ")";
    return os.str();
}

}  // namespace

std::vector<CVector> sample_points(int n, const SampleConfig& cfg, double scale) {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<CVector> pts;
    pts.reserve(cfg.radii.size() * cfg.points_per_radius);
    for (double r : cfg.radii) {
        for (int j = 0; j < cfg.points_per_radius; ++j) {
            CVector z(n);
            for (int i = 0; i < n; ++i) z(i) = Cpx(gauss(rng), gauss(rng));
            z *= (r * scale) / z.norm();
            pts.push_back(std::move(z));
        }
    }
    return pts;
}

BoundParams params_from_map(const MapModel& map, double alpha, double k) {
    const CVector zero = CVector::Zero(map.n);
    const CMatrix dh0 = map.h.jacobian(zero);
    BoundParams p;
    p.n = map.n;
    p.alpha = alpha;
    p.k = k;
    p.normDh0 = operator_norm(dh0);
    p.normDh0inv = operator_norm(invert(dh0));
    p.detDh0 = std::abs(det(dh0));
    return p;
}

void require_membership(const MapModel& map, double alpha, double k,
                        const SampleConfig& cfg) {
    if (!cfg.membership_precheck) return;
    MembershipConfig mc;
    mc.seed = cfg.seed;
    mc.radii = cfg.radii;
    mc.points_per_radius = std::min(cfg.points_per_radius, 8);
    mc.order_budget = cfg.order_budget;
    const VerificationReport rep = check_membership_PH(map, alpha, k, mc);
    if (!rep.all_pass()) {
        throw MembershipRefuted("map refuted as a PH(alpha,k) member: " + map.id);
    }
}

VerificationReport verify_distortion(const MapModel& map, double alpha, double k,
                                     const SampleConfig& cfg) {
    require_membership(map, alpha, k, cfg);
    const BoundParams p = params_from_map(map, alpha, k);
    VerificationReport rep;
    rep.map_id = map.id;
    rep.suite = "distortion";
    for (const CVector& z : sample_points(map.n, cfg)) {
        const double lam = lambda_extremes(map, z).first;
        const double r = z.norm();
        rep.add("distortion_lower_le_Lambda", point_label(z), distortion_lower(r, p),
                lam);
        rep.add("Lambda_le_distortion_upper", point_label(z), lam,
                distortion_upper(r, p));
    }
    return rep;
}

VerificationReport verify_growth(const MapModel& map, double alpha, double k,
                                 const SampleConfig& cfg) {
    require_membership(map, alpha, k, cfg);
    const BoundParams p = params_from_map(map, alpha, k);
    VerificationReport rep;
    rep.map_id = map.id;
    rep.suite = "growth";
    for (const CVector& z : sample_points(map.n, cfg)) {
        rep.add("norm_f_le_growth_bound", point_label(z), evaluate(map, z).norm(),
                growth_bound(z.norm(), p));
    }
    return rep;
}

VerificationReport verify_jacobian_bound(const MapModel& map, double alpha,
                                         double k, const SampleConfig& cfg) {
    require_membership(map, alpha, k, cfg);
    const BoundParams p = params_from_map(map, alpha, k);
    VerificationReport rep;
    rep.map_id = map.id;
    rep.suite = "jacobian_bound";
    for (const CVector& z : sample_points(map.n, cfg)) {
        rep.add("jacobian_lower_le_detJ", point_label(z),
                jacobian_lower_bound(z.norm(), p), std::abs(det_jacobian(map, z)));
    }
    return rep;
}

VerificationReport verify_det_factorization(const MapModel& map,
                                            const SampleConfig& cfg) {
    VerificationReport rep;
    rep.map_id = map.id;
    rep.suite = "det_factorization";
    for (const CVector& z : sample_points(map.n, cfg)) {
        try {
            const double factored = det_jacobian(map, z);
            const double direct = det(real_jacobian(map, z));
            if (std::abs(direct) > 1e-8) {
                rep.add("det_factorization_rel_err", point_label(z),
                        std::abs(factored - direct) / std::abs(direct), 1e-9, 0.0);
            } else {
                CheckEntry& e = rep.add("det_factorization_rel_err", point_label(z),
                                        0.0, 1e-9, 0.0);
                e.note = "|det| below 1e-8, relative check skipped";
            }
        } catch (const SingularMatrix&) {
            CheckEntry& e =
                rep.add("det_factorization_rel_err", point_label(z), 0.0, 1e-9, 0.0);
            e.note = "Dh singular at sample, recorded";
        }
    }
    return rep;
}

VerificationReport verify_schwarz_dilatation(const MapModel& map,
                                             const SampleConfig& cfg) {
    const CVector zero = CVector::Zero(map.n);
    if (operator_norm(map.g.jacobian(zero)) > 1e-12) {
        throw PreconditionFailed("verify_schwarz_dilatation: Dg(0) != 0");
    }
    VerificationReport rep;
    rep.map_id = map.id;
    rep.suite = "schwarz_dilatation";
    for (const CVector& z : sample_points(map.n, cfg)) {
        rep.add("dilatation_le_normz", point_label(z), dilatation_norm(map, z),
                z.norm(), 1e-9);
    }
    return rep;
}

VerificationReport verify_starlike_hbound(const MapModel& map, double r,
                                          const SampleConfig& cfg) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("verify_starlike_hbound: r in (0,1)");
    VerificationReport rep;
    rep.map_id = map.id;
    rep.suite = "starlike_hbound";
    for (const CVector& z : sample_points(map.n, cfg, r)) {
        CheckEntry& e =
            rep.add("h_le_f_over_1mr", point_label(z), map.h.value(z).norm(),
                    evaluate(map, z).norm() / (1.0 - r));
        e.note = "conditional on declared fully-starlike hypothesis";
    }
    return rep;
}

VerificationReport verify_starlike_lower(const MapModel& map, double alpha,
                                         const SampleConfig& cfg) {
    const double r0 = starlike_r0(alpha);
    VerificationReport rep;
    rep.map_id = map.id;
    rep.suite = "starlike_lower";
    for (const CVector& z : sample_points(map.n, cfg, r0 * 0.999)) {
        const double fz = evaluate(map, z).norm();
        CheckEntry& e = rep.add("starlike_lower_le_f", point_label(z),
                                starlike_lower_bound(z.norm(), alpha), fz);
        e.note = "conditional on declared h in M_alpha, f fully starlike";
        rep.add("f_nonvanishing", point_label(z), 0.0, fz, 0.0);
    }
    return rep;
}

double estimate_qr_constant(const MapModel& map, const SampleConfig& cfg) {
    double khat = 1.0;
    for (const CVector& z : sample_points(map.n, cfg)) {
        const double detj = det(real_jacobian(map, z));
        if (!(detj > 0.0)) {
            throw DegenerateJacobian("estimate_qr_constant: det J_f <= 0 at " +
                                     point_label(z));
        }
        const double lam = lambda_extremes(map, z).first;
        khat = std::max(khat, std::pow(lam, 2.0 * map.n) / detj);
    }
    return khat;
}

VerificationReport verify_quasiregular_equivalence(const MapModel& map, double c,
                                           const SampleConfig& cfg) {
    if (!(c >= 0.0 && c < 1.0)) throw DomainError("verify_quasiregular_equivalence: c in [0,1)");
    const std::vector<CVector> pts = sample_points(map.n, cfg);

    // dilatation cap and the two sampled constants first
    double K_h = 1.0;
    double K1_hat = 1.0;
    for (const CVector& z : pts) {
        if (dilatation_norm(map, z) > c + 1e-9) {
            throw DilatationCapViolated("dilatation exceeds c at " + point_label(z));
        }
        const CMatrix dh = map.h.jacobian(z);
        const double det_dh = std::abs(det(dh));
        K_h = std::max(K_h, operator_norm(dh) / std::pow(det_dh, 1.0 / map.n));
        const double detj = det(real_jacobian(map, z));
        if (detj > 0.0) {
            K1_hat = std::max(K1_hat, lambda_extremes(map, z).first /
                                          std::pow(detj, 1.0 / (2.0 * map.n)));
        }
    }

    const double fwd = K_h * std::sqrt((1.0 + c) / (1.0 - c));
    const double bwd = K1_hat * std::sqrt(1.0 + c * c) / (1.0 - c);

    VerificationReport rep;
    rep.map_id = map.id;
    rep.suite = "quasiregular_equivalence";
    for (const CVector& z : pts) {
        const double detj = det(real_jacobian(map, z));
        const double lam = lambda_extremes(map, z).first;
        CheckEntry& ef = rep.add("forward_Lambda_le_K2_detJ", point_label(z), lam,
                                 fwd * std::pow(std::abs(detj), 1.0 / (2.0 * map.n)));
        ef.note = "K_h is a sampled supremum (lower bound of the true constant)";
        const CMatrix dh = map.h.jacobian(z);
        CheckEntry& eb = rep.add(
            "backward_Dh_le_K1_detDh", point_label(z), operator_norm(dh),
            bwd * std::pow(std::abs(det(dh)), 1.0 / map.n));
        eb.note = "K1 is a sampled supremum (lower bound of the true constant)";
    }
    return rep;
}

}  // namespace pluriharm
