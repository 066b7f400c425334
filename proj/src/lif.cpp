#include "pluriharm/lif.hpp"

#include <cmath>
#include <sstream>

namespace pluriharm {

namespace {

using Cpx = std::complex<double>;

Cpx herm(const CVector& z, const CVector& a) {
    // <z,a> = sum z_k conj(a_k)
    return (a.adjoint() * z)(0);
}

}  // namespace

CVector BallAutomorphism::value(const CVector& z) const {
    const Cpx d = 1.0 - herm(z, a);
    return (a + L * z) / d;
}

CMatrix BallAutomorphism::jacobian(const CVector& z) const {
    const Cpx d = 1.0 - herm(z, a);
    const CVector num = a + L * z;
    return (L * d + num * a.adjoint()) / (d * d);
}

CVector BallAutomorphism::second(const CVector& z, const CVector& u) const {
    const Cpx d = 1.0 - herm(z, a);
    const Cpx beta = herm(u, a);
    const CVector num = a + L * z;
    return (2.0 * beta / (d * d)) * (L * u + (beta / d) * num);
}

CMatrix BallAutomorphism::jacobian0_inverse() const {
    const int n = static_cast<int>(a.size());
    const double na2 = a.squaredNorm();
    const double s = std::sqrt(1.0 - na2);
    if (na2 == 0.0) return -CMatrix::Identity(n, n);
    const CMatrix P = a * a.adjoint() / na2;
    const CMatrix Q = CMatrix::Identity(n, n) - P;
    // Dphi(0) = -(s^2 P + s Q)
    return -(P / (s * s) + Q / s);
}

BallAutomorphism ball_automorphism(const CVector& a) {
    if (!a.allFinite() || a.norm() >= 1.0) {
        throw DomainError("ball_automorphism: center must satisfy ||a|| < 1");
    }
    const int n = static_cast<int>(a.size());
    const double na2 = a.squaredNorm();
    const double s = std::sqrt(1.0 - na2);
    BallAutomorphism phi;
    phi.a = a;
    if (na2 == 0.0) {
        phi.L = -CMatrix::Identity(n, n);
    } else {
        const CMatrix P = a * a.adjoint() / na2;
        const CMatrix Q = CMatrix::Identity(n, n) - P;
        phi.L = -(P + s * Q);
    }
    return phi;
}

HoloFn koebe_transform(const HoloFn& h, const BallAutomorphism& phi) {
    const CVector a = phi.a;
    const CMatrix dh_a_inv = invert(h.jacobian(a));
    const CMatrix M = phi.jacobian0_inverse() * dh_a_inv;
    const CVector h_a = h.value(a);

    HoloFn t;
    t.n = h.n;
    HoloFn base = h;
    t.value = [base, phi, M, h_a](const CVector& z) -> CVector {
        return M * (base.value(phi.value(z)) - h_a);
    };
    t.jacobian = [base, phi, M](const CVector& z) -> CMatrix {
        return M * base.jacobian(phi.value(z)) * phi.jacobian(z);
    };
    t.second = [base, phi, M](const CVector& z, const CVector& u) -> CVector {
        const CVector w = phi.value(z);
        const CVector v = phi.jacobian(z) * u;
        return M * (base.second_diag(w, v) + base.jacobian(w) * phi.second(z, u));
    };
    return t;
}

std::vector<CVector> unit_directions(int n, int count, std::uint64_t seed) {
    std::vector<CVector> dirs;
    dirs.reserve(count);
    if (n == 1) {
        const double two_pi = 2.0 * 3.14159265358979323846;
        for (int j = 0; j < count; ++j) {
            CVector v(1);
            v(0) = std::polar(1.0, two_pi * j / std::max(1, count));
            dirs.push_back(v);
        }
        return dirs;
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(dirs.size()) < count) {
        CVector v(n);
        for (int i = 0; i < n; ++i) v(i) = Cpx(gauss(rng), gauss(rng));
        const double norm = v.norm();
        if (norm < 1e-6) continue;
        dirs.push_back(v / norm);
    }
    return dirs;
}

namespace {

struct OrderSearch {
    const HoloFn* h;
    std::vector<CVector> thetas;
    long evals = 0;
    double best = 0.0;
    CVector best_a;
    CVector best_theta;

    // sup over theta of (1/2) ||D^2 (Koebe_a h)(0)(theta,theta)||; centers
    // where Dh underflows the singularity tolerance are skipped, which keeps
    // the estimate a lower bound
    double at_center(const CVector& a) {
        const BallAutomorphism phi = ball_automorphism(a);
        HoloFn t;
        try {
            t = koebe_transform(*h, phi);
        } catch (const SingularMatrix&) {
            return 0.0;
        }
        const CVector zero = CVector::Zero(h->n);
        double local = 0.0;
        CVector local_theta = thetas.front();
        std::vector<CVector> probe = thetas;
        // the radial direction is extremal for the automorphism-induced term
        if (a.norm() > 1e-12) probe.push_back(a / a.norm());
        for (const CVector& th : probe) {
            ++evals;
            const double v = 0.5 * t.second(zero, th).norm();
            if (v > local) {
                local = v;
                local_theta = th;
            }
        }
        if (local > best) {
            best = local;
            best_a = a;
            best_theta = local_theta;
        }
        return local;
    }
};

}  // namespace

HoloFn normalize_holo(const HoloFn& h) {
    const CVector zero = CVector::Zero(h.n);
    const CMatrix a0inv = invert(h.jacobian(zero));
    const CVector h0 = h.value(zero);
    HoloFn base = h;
    HoloFn out;
    out.n = h.n;
    out.value = [base, a0inv, h0](const CVector& z) -> CVector {
        return a0inv * (base.value(z) - h0);
    };
    out.jacobian = [base, a0inv](const CVector& z) -> CMatrix {
        return a0inv * base.jacobian(z);
    };
    out.second = [base, a0inv](const CVector& z, const CVector& u) -> CVector {
        return a0inv * base.second_diag(z, u);
    };
    return out;
}

OrderEstimate norm_order_estimate(const HoloFn& h, const OrderBudget& budget) {
    const CVector zero = CVector::Zero(h.n);
    if (h.value(zero).norm() > 1e-9 ||
        (h.jacobian(zero) - CMatrix::Identity(h.n, h.n)).cwiseAbs().maxCoeff() > 1e-9) {
        throw NotNormalized("norm_order_estimate: requires h(0)=0, Dh(0)=I");
    }

    OrderSearch search;
    search.h = &h;
    search.thetas = unit_directions(h.n, h.n == 1 ? 1 : budget.theta_dirs, 0xA5A5A5A5ull);
    search.best_a = zero;
    search.best_theta = search.thetas.front();

    const std::vector<CVector> centers =
        unit_directions(h.n, budget.center_dirs, 0x9E3779B9ull);
    constexpr double kEdge = 1.0 - 1e-9;
    std::vector<double> radial;
    for (int i = 0; i <= 9; ++i) radial.push_back(0.1 * i);
    radial.push_back(kEdge);  // boundary probe

    search.at_center(zero);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    for (const CVector& u : centers) {
        double best_r = 0.0;
        double best_v = -1.0;
        for (double r : radial) {
            const double v = search.at_center(r * u);
            if (v > best_v) {
                best_v = v;
                best_r = r;
            }
        }
        // golden-section refinement around the best radial cell
        double lo = std::max(0.0, best_r - 0.1);
        double hi = std::min(best_r + 0.1, kEdge);
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = search.at_center(x1 * u), f2 = search.at_center(x2 * u);
        for (int it = 0; it < budget.refine_iters; ++it) {
            if (f1 > f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = search.at_center(x1 * u);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = search.at_center(x2 * u);
            }
        }
    }

    OrderEstimate est;
    est.value = search.best;
    est.samples_used = search.evals;
    est.best_a = search.best_a;
    est.best_theta = search.best_theta;
    return est;
}

namespace {

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

VerificationReport check_membership_PH(const MapModel& map, double alpha,
                                       double k, const MembershipConfig& cfg) {
    if (!(alpha >= 1.0)) throw DomainError("check_membership_PH: alpha must be >= 1");
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("check_membership_PH: k in [0,1)");

    VerificationReport rep;
    rep.map_id = map.id;
    rep.suite = "membership_PH";

    const CVector zero = CVector::Zero(map.n);
    rep.add("h0_zero", "z=0", map.h.value(zero).norm(), 0.0, 1e-9);
    rep.add("g0_zero", "z=0", map.g.value(zero).norm(), 0.0, 1e-9);

    const CMatrix dh0 = map.h.jacobian(zero);
    const CMatrix dg0 = map.g.jacobian(zero);
    rep.add("normalization", "z=0",
            std::abs(operator_norm(CMatrix(dh0 + dg0.conjugate())) - 1.0), 0.0, 1e-9);

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (double r : cfg.radii) {
        for (int j = 0; j < cfg.points_per_radius; ++j) {
            CVector z(map.n);
            for (int i = 0; i < map.n; ++i) z(i) = Cpx(gauss(rng), gauss(rng));
            z *= r / z.norm();
            try {
                rep.add("dilatation_le_k", point_label(z), dilatation_norm(map, z), k,
                        1e-9);
            } catch (const SingularMatrix&) {
                CheckEntry& e = rep.add("dilatation_le_k", point_label(z), 1.0, 0.0, 0.0);
                e.note = "Dh singular at sample";
            }
        }
    }

    try {
        const OrderEstimate est =
            norm_order_estimate(normalize_holo(map.h), cfg.order_budget);
        CheckEntry& e = rep.add("norm_order_le_alpha", "family", est.value, alpha, 5e-3);
        e.note = "lower-bound estimator: can refute, never certify";
    } catch (const SingularMatrix&) {
        CheckEntry& e = rep.add("norm_order_le_alpha", "family", 1.0, 0.0, 0.0);
        e.note = "Dh singular along the automorphism grid";
    }

    return rep;
}

VerificationReport coefficient_bounds_check(const MapModel& map, double k) {
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("coefficient_bounds_check: k in [0,1)");
    VerificationReport rep;
    rep.map_id = map.id;
    rep.suite = "coefficient_bounds";

    const CVector zero = CVector::Zero(map.n);
    const CMatrix dh0 = map.h.jacobian(zero);
    const CMatrix dg0 = map.g.jacobian(zero);

    const double norm_sum = operator_norm(CMatrix(dh0 + dg0.conjugate()));
    CheckEntry& pre = rep.add("normalization_precondition", "z=0",
                              std::abs(norm_sum - 1.0), 0.0, 1e-9);
    if (!pre.pass) pre.note = "||Dh(0)+conj(Dg(0))|| != 1: PH normalization violated";

    rep.add("Dg0_upper", "z=0", operator_norm(dg0), k / (1.0 - k));
    rep.add("Dh0_upper", "z=0", operator_norm(dh0), 1.0 / (1.0 - k));
    rep.add("Dh0_lower", "z=0", 1.0 / (1.0 + k), operator_norm(dh0));
    return rep;
}

}  // namespace pluriharm
