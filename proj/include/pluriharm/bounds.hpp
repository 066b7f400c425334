#pragma once

// Closed-form bound formulas, the covering-radius quadrature, and the
// transcendental root k_n with its quasiregular-ball radius.

#include <functional>

#include "pluriharm/errors.hpp"

namespace pluriharm {

struct BoundParams {
    int n = 1;             // dimension
    double alpha = 1.0;    // norm order, >= 1
    double k = 0.0;        // dilatation cap, in [0,1)
    double normDh0inv = 1.0;  // ||[Dh(0)]^-1||
    double normDh0 = 1.0;     // ||Dh(0)||
    double detDh0 = 1.0;      // |det Dh(0)|
    double c = 0.0;           // dilatation cap for the quasiregular theorems
    double K = 1.0;           // quasiregularity constant, >= 1

    void validate() const;
};

struct RootResult {
    int n = 0;
    double k_n = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

// Adaptive Gauss-Kronrod (G7/K15) quadrature with interval bisection.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

// (1+k)/(1-k) * (1+r)^(a-1)/(1-r)^(a+1)
double distortion_upper(double r, const BoundParams& p);

// (1-k)/||[Dh(0)]^-1|| * (1-r)^(a-1)/(1+r)^(a+1)
double distortion_lower(double r, const BoundParams& p);

// (1+k)/(2a(1-k)) * [((1+r)/(1-r))^a - 1]
double growth_bound(double r, const BoundParams& p);

// General integral form with explicit prefactor:
//   (1-k) |det Dh(0)| / ||Dh(0)||^(n-1)
//     * int_0^r (1-x)^((2n-1)a+(n-3)/2) / (1+x)^((2n-1)a-(n-3)/2) dx
double covering_radius(double r, const BoundParams& p);

// The n = 1 statement verbatim: (1-k)[1 - ((1-r)/(1+r))^a] / (2a(1+k)).
double covering_closed_n1(double r, double alpha, double k);

// (1-k^2)^n detDh0^2 * (1-r)^(2na-n-1)/(1+r)^(2na+n+1)
double jacobian_lower_bound(double r, const BoundParams& p);

// r0 = 4a/(1+4a^2), valid for a >= 1
double starlike_r0(double alpha);

// r0^2 (1-r0) ||z|| / (r0+||z||)^2 for ||z|| < r0
double starlike_lower_bound(double normz, double alpha);

// Unique root in (0,1) of -4n log(1-k) = (4n-1) k/(1-k), by bisection.
RootResult solve_kn(int n);

// Univalent-ball radius of the quasiregular covering statement, with the
// pinned constant m = 4.2.
double qr_ball_radius(int n, double c, double K);

// K2 = K sqrt((1+c)/(1-c))
double qr_constant_forward(double K, double c, int n);

// K1 sqrt(1+c^2)/(1-c)
double qr_constant_backward(double K1, double c, int n);

}  // namespace pluriharm
