#include "pluriharm/bounds.hpp"

#include <cmath>
#include <vector>

namespace pluriharm {

void BoundParams::validate() const {
    if (n < 1) throw DomainError("BoundParams: n must be >= 1");
    if (!(alpha >= 1.0)) throw DomainError("BoundParams: alpha must be >= 1");
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("BoundParams: k must be in [0,1)");
    if (!(normDh0inv > 0.0)) throw DomainError("BoundParams: ||[Dh(0)]^-1|| must be > 0");
    if (!(normDh0 > 0.0)) throw DomainError("BoundParams: ||Dh(0)|| must be > 0");
    if (!(detDh0 >= 0.0)) throw DomainError("BoundParams: |det Dh(0)| must be >= 0");
    if (!(c >= 0.0 && c < 1.0)) throw DomainError("BoundParams: c must be in [0,1)");
    if (!(K >= 1.0)) throw DomainError("BoundParams: K must be >= 1");
}

namespace {

struct GK15 {
    double value;
    double error;
};

// 15-point Kronrod rule with embedded 7-point Gauss rule on [a,b].
GK15 gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
    static const double node[8] = {
        0.0,
        0.207784955007898467600689403773245,
        0.405845151377397166906606412076961,
        0.586087235467691130294144838258730,
        0.741531185599394439863864773280788,
        0.864864423359769072789712788640926,
        0.949107912342758524526189684047851,
        0.991455371120812639206854697526329};
    static const double wk[8] = {
        0.209482141084727828012999174891714,
        0.204432940075298892414161999234649,
        0.190350578064785409913256402421014,
        0.169004726639267902826583426598550,
        0.140653259715525918745189590510238,
        0.104790010322250183839876322541518,
        0.063092092629978553290700663189204,
        0.022935322010529224963732008058970};
    static const double wg[4] = {
        0.417959183673469387755102040816327,
        0.381830050505118944950369775488975,
        0.279705391489276667901467771423780,
        0.129484966168869693270611432679082};

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f0 = f(mid);
    double k15 = wk[0] * f0;
    double g7 = wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * node[i];
        const double fs = f(mid + dx) + f(mid - dx);
        k15 += wk[i] * fs;
        if (i % 2 == 0) g7 += wg[i / 2] * fs;
    }
    k15 *= half;
    g7 *= half;
    return {k15, std::pow(200.0 * std::abs(k15 - g7), 1.5)};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
    if (a == b) return 0.0;
    struct Interval {
        double a, b;
        int depth;
    };
    const double total = std::abs(b - a);
    std::vector<Interval> stack{{a, b, 0}};
    double sum = 0.0;
    while (!stack.empty()) {
        const Interval iv = stack.back();
        stack.pop_back();
        const GK15 est = gauss_kronrod_15(f, iv.a, iv.b);
        if (est.error <= abs_tol * std::abs(iv.b - iv.a) / total || iv.depth >= 48) {
            sum += est.value;
        } else {
            const double mid = 0.5 * (iv.a + iv.b);
            stack.push_back({iv.a, mid, iv.depth + 1});
            stack.push_back({mid, iv.b, iv.depth + 1});
        }
    }
    return sum;
}

namespace {

void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must be in [0,1)");
}

}  // namespace

double distortion_upper(double r, const BoundParams& p) {
    require_radius(r);
    p.validate();
    return (1.0 + p.k) / (1.0 - p.k) * std::pow(1.0 + r, p.alpha - 1.0) /
           std::pow(1.0 - r, p.alpha + 1.0);
}

double distortion_lower(double r, const BoundParams& p) {
    require_radius(r);
    p.validate();
    return (1.0 - p.k) / p.normDh0inv * std::pow(1.0 - r, p.alpha - 1.0) /
           std::pow(1.0 + r, p.alpha + 1.0);
}

double growth_bound(double r, const BoundParams& p) {
    require_radius(r);
    p.validate();
    return (1.0 + p.k) / (2.0 * p.alpha * (1.0 - p.k)) *
           (std::pow((1.0 + r) / (1.0 - r), p.alpha) - 1.0);
}

double covering_radius(double r, const BoundParams& p) {
    if (!(r > 0.0 && r <= 1.0)) throw DomainError("covering_radius: r must be in (0,1]");
    p.validate();
    const double a_exp = (2.0 * p.n - 1.0) * p.alpha + (p.n - 3.0) / 2.0;
    const double b_exp = (2.0 * p.n - 1.0) * p.alpha - (p.n - 3.0) / 2.0;
    const double prefactor =
        (1.0 - p.k) * p.detDh0 / std::pow(p.normDh0, p.n - 1.0);
    const double integral = integrate(
        [a_exp, b_exp](double x) {
            return std::pow(1.0 - x, a_exp) / std::pow(1.0 + x, b_exp);
        },
        0.0, r);
    return prefactor * integral;
}

double covering_closed_n1(double r, double alpha, double k) {
    if (!(r > 0.0 && r <= 1.0)) throw DomainError("covering_closed_n1: r must be in (0,1]");
    if (!(alpha >= 1.0)) throw DomainError("covering_closed_n1: alpha must be >= 1");
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("covering_closed_n1: k must be in [0,1)");
    return (1.0 - k) * (1.0 - std::pow((1.0 - r) / (1.0 + r), alpha)) /
           (2.0 * alpha * (1.0 + k));
}

double jacobian_lower_bound(double r, const BoundParams& p) {
    require_radius(r);
    p.validate();
    if (!(p.detDh0 > 0.0)) throw DomainError("jacobian_lower_bound: detDh0 must be > 0");
    const double na = 2.0 * p.n * p.alpha;
    // (det [Dh(0)]^-1)^2 in the denominator evaluated as 1/detDh0^2
    return std::pow(1.0 - p.k * p.k, p.n) * p.detDh0 * p.detDh0 *
           std::pow(1.0 - r, na - p.n - 1.0) / std::pow(1.0 + r, na + p.n + 1.0);
}

double starlike_r0(double alpha) {
    if (!(alpha >= 1.0)) throw DomainError("starlike_r0: alpha must be >= 1");
    return 4.0 * alpha / (1.0 + 4.0 * alpha * alpha);
}

double starlike_lower_bound(double normz, double alpha) {
    const double r0 = starlike_r0(alpha);
    if (!(normz >= 0.0 && normz < r0)) {
        throw DomainError("starlike_lower_bound: ||z|| must be in [0, r0)");
    }
    return r0 * r0 * (1.0 - r0) * normz / ((r0 + normz) * (r0 + normz));
}

RootResult solve_kn(int n) {
    if (n < 1) throw DomainError("solve_kn: n must be >= 1");
    const auto F = [n](double k) {
        return -4.0 * n * std::log1p(-k) - (4.0 * n - 1.0) * k / (1.0 - k);
    };
    double lo = 1e-15;  // F > 0 near 0
    double hi = 1.0 - 1e-15;
    int iters = 0;
    while (hi - lo > 1e-15 && iters < 200) {
        const double mid = 0.5 * (lo + hi);
        if (F(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iters;
    }
    RootResult r;
    r.n = n;
    r.k_n = 0.5 * (lo + hi);
    r.residual = std::abs(F(r.k_n));
    r.iterations = iters;
    return r;
}

double qr_ball_radius(int n, double c, double K) {
    if (n < 1) throw DomainError("qr_ball_radius: n must be >= 1");
    if (!(c >= 0.0 && c < 1.0)) throw DomainError("qr_ball_radius: c must be in [0,1)");
    if (!(K >= 1.0)) throw DomainError("qr_ball_radius: K must be >= 1");
    const double m = 4.2;  // pinned constant
    const double kn = solve_kn(n).k_n;
    const double pi = 3.14159265358979323846;
    const double log_term = -std::log1p(-kn);  // log(1/(1-k_n))
    const double inner = kn * pi * std::sqrt(1.0 - c) /
                         (4.0 * K * std::sqrt(1.0 + c) * log_term);
    return kn * pi / (8.0 * m) * std::pow(inner, 4.0 * n - 1.0);
}

double qr_constant_forward(double K, double c, int n) {
    if (n < 1) throw DomainError("qr_constant_forward: n must be >= 1");
    if (!(K >= 1.0)) throw DomainError("qr_constant_forward: K must be >= 1");
    if (!(c >= 0.0 && c < 1.0)) throw DomainError("qr_constant_forward: c must be in [0,1)");
    return K * std::sqrt((1.0 + c) / (1.0 - c));
}

double qr_constant_backward(double K1, double c, int n) {
    if (n < 1) throw DomainError("qr_constant_backward: n must be >= 1");
    if (!(K1 >= 1.0)) throw DomainError("qr_constant_backward: K1 must be >= 1");
    if (!(c >= 0.0 && c < 1.0)) throw DomainError("qr_constant_backward: c must be in [0,1)");
    return K1 * std::sqrt(1.0 + c * c) / (1.0 - c);
}

}  // namespace pluriharm
