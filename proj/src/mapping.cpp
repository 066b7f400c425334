#include "pluriharm/mapping.hpp"

#include <cmath>
#include <utility>

namespace pluriharm {

namespace {

using Cpx = std::complex<double>;

Cpx monomial(const CVector& z, const MultiIndex& beta) {
    Cpx p(1.0, 0.0);
    for (int i = 0; i < static_cast<int>(beta.size()); ++i) {
        for (int e = 0; e < beta[i]; ++e) p *= z(i);
    }
    return p;
}

int order(const MultiIndex& beta) {
    int s = 0;
    for (int b : beta) s += b;
    return s;
}

}  // namespace

CVector HoloFn::second_diag(const CVector& z, const CVector& u) const {
    if (second) return second(z, u);
    const double rho = 1e-5 * std::max(1.0, z.norm());
    const CMatrix jp = jacobian(z + rho * u);
    const CMatrix jm = jacobian(z - rho * u);
    return (jp - jm) * u / (2.0 * rho);
}

PolynomialModel::PolynomialModel(int dim, std::map<MultiIndex, CVector> coeffs)
    : n(dim), coefficients(std::move(coeffs)) {
    if (n < 1) throw BadSpec("PolynomialModel: dimension must be >= 1");
    for (const auto& [beta, c] : coefficients) {
        if (static_cast<int>(beta.size()) != n) {
            throw BadSpec("PolynomialModel: multi-index length != n");
        }
        for (int b : beta) {
            if (b < 0) throw BadSpec("PolynomialModel: negative multi-index entry");
        }
        if (order(beta) > kDegreeCap) {
            throw BadSpec("PolynomialModel: degree exceeds cap 16");
        }
        if (c.size() != n || !c.allFinite()) {
            throw BadSpec("PolynomialModel: bad coefficient vector");
        }
    }
}

CVector PolynomialModel::value(const CVector& z) const {
    CVector v = CVector::Zero(n);
    for (const auto& [beta, c] : coefficients) v += c * monomial(z, beta);
    return v;
}

CMatrix PolynomialModel::jacobian(const CVector& z) const {
    CMatrix j = CMatrix::Zero(n, n);
    for (const auto& [beta, c] : coefficients) {
        for (int m = 0; m < n; ++m) {
            if (beta[m] == 0) continue;
            MultiIndex b = beta;
            b[m] -= 1;
            j.col(m) += c * (static_cast<double>(beta[m]) * monomial(z, b));
        }
    }
    return j;
}

CVector PolynomialModel::second(const CVector& z, const CVector& u) const {
    CVector v = CVector::Zero(n);
    for (const auto& [beta, c] : coefficients) {
        if (order(beta) < 2) continue;
        for (int l = 0; l < n; ++l) {
            if (beta[l] == 0) continue;
            for (int m = 0; m < n; ++m) {
                const int factor = beta[m] - (l == m ? 1 : 0);
                if (m == l ? beta[l] < 2 : beta[m] == 0) continue;
                MultiIndex b = beta;
                b[l] -= 1;
                b[m] -= 1;
                v += c * (static_cast<double>(beta[l]) * static_cast<double>(factor) *
                          monomial(z, b) * u(l) * u(m));
            }
        }
    }
    return v;
}

HoloFn PolynomialModel::fn() const {
    HoloFn f;
    f.n = n;
    PolynomialModel self = *this;
    f.value = [self](const CVector& z) { return self.value(z); };
    f.jacobian = [self](const CVector& z) { return self.jacobian(z); };
    f.second = [self](const CVector& z, const CVector& u) { return self.second(z, u); };
    return f;
}

void require_in_ball(const CVector& z) {
    if (!z.allFinite() || z.norm() >= 1.0 - 1e-9) {
        throw DomainError("point outside the open unit ball");
    }
}

CVector evaluate(const MapModel& map, const CVector& z) {
    require_in_ball(z);
    return map.h.value(z) + map.g.value(z).conjugate();
}

PointDerivatives derivatives(const MapModel& map, const CVector& z) {
    require_in_ball(z);
    PointDerivatives d;
    d.z = z;
    d.f_value = map.h.value(z) + map.g.value(z).conjugate();
    d.Dh = map.h.jacobian(z);
    d.Dg = map.g.jacobian(z);
    return d;
}

CVector directional_derivative(const MapModel& map, const CVector& z,
                               const CVector& theta) {
    require_in_ball(z);
    if (std::abs(theta.norm() - 1.0) > 1e-12) {
        throw BadDirection("directional_derivative: ||theta|| != 1");
    }
    const PointDerivatives d = derivatives(map, z);
    return d.Dh * theta + (d.Dg * theta).conjugate();
}

double dilatation_norm(const MapModel& map, const CVector& z) {
    const PointDerivatives d = derivatives(map, z);
    return operator_norm(CMatrix(d.Dg * invert(d.Dh)));
}

RMatrix real_jacobian(const MapModel& map, const CVector& z) {
    const PointDerivatives d = derivatives(map, z);
    const int n = map.n;
    RMatrix j(2 * n, 2 * n);
    const std::complex<double> iu(0.0, 1.0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            // df_r/dx_c and df_r/dy_c from f_z = Dh, f_zbar = conj(Dg)
            const std::complex<double> p = d.Dh(r, c) + std::conj(d.Dg(r, c));
            const std::complex<double> q = iu * (d.Dh(r, c) - std::conj(d.Dg(r, c)));
            j(2 * r, 2 * c) = p.real();
            j(2 * r, 2 * c + 1) = q.real();
            j(2 * r + 1, 2 * c) = p.imag();
            j(2 * r + 1, 2 * c + 1) = q.imag();
        }
    }
    return j;
}

std::pair<double, double> lambda_extremes(const MapModel& map, const CVector& z) {
    const SingularSpectrum s = singular_spectrum(real_jacobian(map, z));
    return {s.max(), s.min()};
}

double det_jacobian(const MapModel& map, const CVector& z) {
    const PointDerivatives d = derivatives(map, z);
    const CMatrix w = d.Dg * invert(d.Dh);
    const CMatrix m = CMatrix::Identity(map.n, map.n) - w * w.conjugate();
    const double det_dh = std::abs(det(d.Dh));
    return det_dh * det_dh * det(m).real();
}

bool is_sense_preserving(const MapModel& map, const CVector& z, double k) {
    try {
        return dilatation_norm(map, z) <= k + 1e-12;
    } catch (const SingularMatrix&) {
        return false;
    }
}

std::function<CVector(const CVector&, const CVector&)>
second_derivative_at_zero(const HoloFn& h) {
    if (!h.second && !h.jacobian) {
        throw Unsupported("second_derivative_at_zero: model lacks evaluators");
    }
    HoloFn self = h;
    const CVector zero = CVector::Zero(h.n);
    return [self, zero](const CVector& theta, const CVector& eta) -> CVector {
        // polarization of the diagonal: B(t,e) = (Q(t+e) - Q(t-e))/4
        return (self.second_diag(zero, theta + eta) -
                self.second_diag(zero, theta - eta)) /
               4.0;
    };
}

double holo_self_check(const HoloFn& h, const std::vector<CVector>& points) {
    double worst = 0.0;
    for (const CVector& z : points) {
        const double rho = 1e-6 * std::max(1.0, z.norm());
        const CMatrix j = h.jacobian(z);
        CMatrix fd(h.n, h.n);
        for (int m = 0; m < h.n; ++m) {
            CVector e = CVector::Zero(h.n);
            e(m) = 1.0;
            fd.col(m) = (h.value(z + rho * e) - h.value(z - rho * e)) / (2.0 * rho);
        }
        worst = std::max(worst, (j - fd).cwiseAbs().maxCoeff());
    }
    return worst;
}

HoloFn zero_holo(int n) {
    HoloFn f;
    f.n = n;
    f.value = [n](const CVector&) { return CVector::Zero(n); };
    f.jacobian = [n](const CVector&) { return CMatrix::Zero(n, n); };
    f.second = [n](const CVector&, const CVector&) { return CVector::Zero(n); };
    return f;
}

MapModel identity_map(int n) {
    HoloFn h;
    h.n = n;
    h.value = [](const CVector& z) { return z; };
    h.jacobian = [n](const CVector&) { return CMatrix::Identity(n, n); };
    h.second = [n](const CVector&, const CVector&) { return CVector::Zero(n); };
    return MapModel{n, h, zero_holo(n), "identity"};
}

}  // namespace pluriharm
