#pragma once

// Dense small-matrix linear algebra for the complex derivative matrices
// Dh, Dg and the 2n x 2n real Jacobian. Everything here is a pure function
// of its arguments; matrices at desk scale (<= 16 x 16).

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "pluriharm/errors.hpp"

namespace pluriharm {

using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// Singular values sorted nonincreasing; length = dim.
struct SingularSpectrum {
    std::vector<double> values;

    double max() const { return values.front(); }
    double min() const { return values.back(); }
};

bool all_finite(const CMatrix& a);
bool all_finite(const RMatrix& a);

SingularSpectrum singular_spectrum(const CMatrix& a);
SingularSpectrum singular_spectrum(const RMatrix& a);

// Largest singular value: max of ||A theta|| over unit theta.
double operator_norm(const CMatrix& a);
double operator_norm(const RMatrix& a);

// Smallest singular value: min of ||A theta|| over unit theta.
double min_gain(const CMatrix& a);
double min_gain(const RMatrix& a);

std::complex<double> det(const CMatrix& a);
double det(const RMatrix& a);

// Tolerance below which a matrix is treated as singular, scale-relative.
inline double singularity_tolerance(double norm_a) {
    return 1e-12 * std::max(1.0, norm_a);
}

// Throws SingularMatrix when min_gain falls below the singularity tolerance;
// for Dh this signals that h is not locally biholomorphic at the queried point.
CMatrix invert(const CMatrix& a);

}  // namespace pluriharm
