#pragma once

// Closed-form n = 1 extremal families attaining the distortion and covering
// bounds, plus the Pommerenke-type generator of order alpha.

#include "pluriharm/bounds.hpp"
#include "pluriharm/mapping.hpp"

namespace pluriharm {

enum class ExtremalFamily {
    upper_extremal,     // f = h - k conj(h), attains the upper distortion bound
    lower_extremal,     // f = h* + k conj(h*), attains the lower bound
    covering_extremal,  // f = h + k conj(h) with ((1 +- iz)/(1 -+ iz))^alpha
    covering_extremal_literal,  // exponent fixed to 1, kept for comparison
    pommerenke,     // normalized generator with h'(0) = 1, |h''(0)|/2 = alpha
};

struct ExtremalSpec {
    ExtremalFamily family = ExtremalFamily::upper_extremal;
    double alpha = 1.0;
    double k = 0.0;
    double t = 0.0;  // rotation angle for the distortion families
    int sign = +1;   // +-1 for the covering family
};

MapModel build_extremal(const ExtremalSpec& spec);

// |Lambda_f(r e^{it}) - distortion_upper(r)| for the upper extremal.
double sharpness_gap_upper(double alpha, double k, double r, double t = 0.0);

// |lambda_f(r e^{it}) - distortion_lower(r)| for the lower extremal, with
// ||[Dh*(0)]^-1|| = 1 + k. The maximal stretch of f = h* + k conj(h*) sits
// strictly above the left bound when k > 0; the minimal stretch attains it.
double sharpness_gap_lower(double alpha, double k, double r, double t = 0.0);

struct CoveringSharpness {
    double boundary_distance = 0.0;  // min |f| over |z| = r, dense + refined
    double closed_form = 0.0;        // (1-k)[1 - ((1-r)/(1+r))^alpha]/(2alpha(1+k))
    double gap = 0.0;
};

CoveringSharpness covering_sharpness_check(double alpha, double k, double r,
                                           ExtremalFamily family =
                                               ExtremalFamily::covering_extremal);

const char* family_name(ExtremalFamily f);
ExtremalFamily family_from_name(const std::string& name);

}  // namespace pluriharm
