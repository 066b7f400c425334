#include "pluriharm/linalg.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace pluriharm {

bool all_finite(const CMatrix& a) { return a.allFinite(); }
bool all_finite(const RMatrix& a) { return a.allFinite(); }

namespace {

template <typename Mat>
SingularSpectrum spectrum_of(const Mat& a) {
    if (a.rows() < 1 || a.rows() != a.cols()) {
        throw DomainError("singular_spectrum: matrix must be square, dim >= 1");
    }
    if (!a.allFinite()) {
        throw DomainError("singular_spectrum: non-finite entries");
    }
    Eigen::JacobiSVD<Mat> svd(a);
    const auto& sv = svd.singularValues();
    SingularSpectrum s;
    s.values.assign(sv.data(), sv.data() + sv.size());
    return s;
}

}  // namespace

SingularSpectrum singular_spectrum(const CMatrix& a) { return spectrum_of(a); }
SingularSpectrum singular_spectrum(const RMatrix& a) { return spectrum_of(a); }

double operator_norm(const CMatrix& a) { return singular_spectrum(a).max(); }
double operator_norm(const RMatrix& a) { return singular_spectrum(a).max(); }

double min_gain(const CMatrix& a) { return singular_spectrum(a).min(); }
double min_gain(const RMatrix& a) { return singular_spectrum(a).min(); }

std::complex<double> det(const CMatrix& a) { return a.determinant(); }
double det(const RMatrix& a) { return a.determinant(); }

CMatrix invert(const CMatrix& a) {
    const SingularSpectrum s = singular_spectrum(a);
    if (s.min() < singularity_tolerance(s.max())) {
        throw SingularMatrix("invert: matrix is numerically singular");
    }
    return a.inverse();
}

}  // namespace pluriharm
