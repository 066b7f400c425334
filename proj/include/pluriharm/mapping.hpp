#pragma once

// Pluriharmonic mappings f = h + conj(g) on the open unit ball of C^n,
// with h, g holomorphic. Models are immutable after construction and all
// evaluations are pure, so maps are safe to sample concurrently.

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pluriharm/errors.hpp"
#include "pluriharm/linalg.hpp"

namespace pluriharm {

using MultiIndex = std::vector<int>;

// A holomorphic map B^n -> C^n given by evaluators for the value and the
// complex Jacobian. `second` (D^2 h(z)(u,u)) is optional; when absent it is
// approximated by central differences of the Jacobian.
struct HoloFn {
    int n = 1;
    std::function<CVector(const CVector&)> value;
    std::function<CMatrix(const CVector&)> jacobian;
    std::function<CVector(const CVector&, const CVector&)> second;

    CVector second_diag(const CVector& z, const CVector& u) const;
};

// Taylor-coefficient model: h(z) = sum_beta c_beta z^beta, |beta| <= M.
struct PolynomialModel {
    int n = 1;
    std::map<MultiIndex, CVector> coefficients;

    static constexpr int kDegreeCap = 16;

    PolynomialModel() = default;
    PolynomialModel(int dim, std::map<MultiIndex, CVector> coeffs);

    CVector value(const CVector& z) const;
    CMatrix jacobian(const CVector& z) const;
    CVector second(const CVector& z, const CVector& u) const;

    HoloFn fn() const;
};

// Closed-form model: a named family with parameters and explicit evaluators.
struct ClosedFormModel {
    std::string family;
    std::map<std::string, double> params;
    HoloFn evaluators;
};

struct MapModel {
    int n = 1;
    HoloFn h;
    HoloFn g;
    std::string id;  // builtin family tag + parameters, or user file path
};

struct PointDerivatives {
    CVector z;
    CVector f_value;
    CMatrix Dh;
    CMatrix Dg;
};

// Rejects points with ||z|| >= 1 - 1e-9 (DomainError).
void require_in_ball(const CVector& z);

CVector evaluate(const MapModel& map, const CVector& z);
PointDerivatives derivatives(const MapModel& map, const CVector& z);

// d_theta f(z) = Dh(z) theta + conj(Dg(z) theta), ||theta|| = 1.
CVector directional_derivative(const MapModel& map, const CVector& z,
                               const CVector& theta);

// ||Dg(z) [Dh(z)]^-1||; SingularMatrix when h is not locally biholomorphic at z.
double dilatation_norm(const MapModel& map, const CVector& z);

// 2n x 2n matrix of partials, rows (u_1, v_1, ..., u_n, v_n) against
// columns (x_1, y_1, ..., x_n, y_n).
RMatrix real_jacobian(const MapModel& map, const CVector& z);

// (Lambda_f, lambda_f): extreme singular values of the real Jacobian.
std::pair<double, double> lambda_extremes(const MapModel& map, const CVector& z);

// |det Dh|^2 det(I - W conj(W)) with W = Dg [Dh]^-1.
double det_jacobian(const MapModel& map, const CVector& z);

bool is_sense_preserving(const MapModel& map, const CVector& z, double k);

// D^2 h(0) as a symmetric bilinear evaluator (theta, eta) -> vector,
// recovered from the diagonal by polarization.
std::function<CVector(const CVector&, const CVector&)>
second_derivative_at_zero(const HoloFn& h);

// Self-check mode for closed-form evaluators: largest deviation between the
// analytic Jacobian and a central-difference oracle over the given points.
double holo_self_check(const HoloFn& h, const std::vector<CVector>& points);

MapModel identity_map(int n);
HoloFn zero_holo(int n);

}  // namespace pluriharm
