#include "pluriharm/extremal.hpp"

#include <cmath>
#include <sstream>

namespace pluriharm {

namespace {

using Cpx = std::complex<double>;

struct ScalarHolo {
    std::function<Cpx(Cpx)> value;
    std::function<Cpx(Cpx)> deriv;
    std::function<Cpx(Cpx)> deriv2;
};

HoloFn scalar_to_holo(const ScalarHolo& s, Cpx scale) {
    HoloFn f;
    f.n = 1;
    f.value = [s, scale](const CVector& z) {
        CVector v(1);
        v(0) = scale * s.value(z(0));
        return v;
    };
    f.jacobian = [s, scale](const CVector& z) {
        CMatrix j(1, 1);
        j(0, 0) = scale * s.deriv(z(0));
        return j;
    };
    f.second = [s, scale](const CVector& z, const CVector& u) {
        CVector v(1);
        v(0) = scale * s.deriv2(z(0)) * u(0) * u(0);
        return v;
    };
    return f;
}

// h(z) = e^{it}/(2a(1-k)) [((1+w)/(1-w))^a - 1], w = z e^{-it}
ScalarHolo upper_h(double alpha, double k, double t) {
    const Cpx eit = std::polar(1.0, t);
    const Cpx emt = std::polar(1.0, -t);
    const double a = alpha;
    const double c0 = 1.0 / (2.0 * a * (1.0 - k));
    const double c1 = 1.0 / (1.0 - k);
    ScalarHolo s;
    s.value = [=](Cpx z) {
        const Cpx w = z * emt;
        return eit * c0 * (std::pow((1.0 + w) / (1.0 - w), a) - 1.0);
    };
    s.deriv = [=](Cpx z) {
        const Cpx w = z * emt;
        return c1 * std::pow(1.0 + w, a - 1.0) / std::pow(1.0 - w, a + 1.0);
    };
    s.deriv2 = [=](Cpx z) {
        const Cpx w = z * emt;
        return c1 * emt *
               ((a - 1.0) * std::pow(1.0 + w, a - 2.0) / std::pow(1.0 - w, a + 1.0) +
                (a + 1.0) * std::pow(1.0 + w, a - 1.0) / std::pow(1.0 - w, a + 2.0));
    };
    return s;
}

// h*(z) = e^{it}/(2a(1+k)) [((1-w)/(1+w))^a - 1], w = z e^{-it}
ScalarHolo lower_h(double alpha, double k, double t) {
    const Cpx eit = std::polar(1.0, t);
    const Cpx emt = std::polar(1.0, -t);
    const double a = alpha;
    const double c0 = 1.0 / (2.0 * a * (1.0 + k));
    const double c1 = 1.0 / (1.0 + k);
    ScalarHolo s;
    s.value = [=](Cpx z) {
        const Cpx w = z * emt;
        return eit * c0 * (std::pow((1.0 - w) / (1.0 + w), a) - 1.0);
    };
    s.deriv = [=](Cpx z) {
        const Cpx w = z * emt;
        return -c1 * std::pow(1.0 - w, a - 1.0) / std::pow(1.0 + w, a + 1.0);
    };
    s.deriv2 = [=](Cpx z) {
        const Cpx w = z * emt;
        return c1 * emt *
               ((a - 1.0) * std::pow(1.0 - w, a - 2.0) / std::pow(1.0 + w, a + 1.0) +
                (a + 1.0) * std::pow(1.0 - w, a - 1.0) / std::pow(1.0 + w, a + 2.0));
    };
    return s;
}

// h(z) = s i/(2a(1+k)) [((1+siz)/(1-siz))^a - 1]; `exponent` lets the
// literal printed form (exponent 1) be evaluated alongside.
ScalarHolo covering_h(double alpha, double k, int sign, double exponent) {
    const double a = alpha;
    const double e = exponent;
    const Cpx si(0.0, static_cast<double>(sign));
    const double c0 = 1.0 / (2.0 * a * (1.0 + k));
    ScalarHolo s;
    s.value = [=](Cpx z) {
        const Cpx w = si * z;
        return si * c0 * (std::pow((1.0 + w) / (1.0 - w), e) - 1.0);
    };
    s.deriv = [=](Cpx z) {
        const Cpx w = si * z;
        // (si)^2 = -1
        return -(e / a) / (1.0 + k) * std::pow(1.0 + w, e - 1.0) /
               std::pow(1.0 - w, e + 1.0);
    };
    s.deriv2 = [=](Cpx z) {
        const Cpx w = si * z;
        return -(e / a) / (1.0 + k) * si *
               ((e - 1.0) * std::pow(1.0 + w, e - 2.0) / std::pow(1.0 - w, e + 1.0) +
                (e + 1.0) * std::pow(1.0 + w, e - 1.0) / std::pow(1.0 - w, e + 2.0));
    };
    return s;
}

// h(z) = 1/(2a) [((1+z)/(1-z))^a - 1]
ScalarHolo pommerenke_h(double alpha) {
    const double a = alpha;
    ScalarHolo s;
    s.value = [=](Cpx z) {
        return (std::pow((1.0 + z) / (1.0 - z), a) - 1.0) / (2.0 * a);
    };
    s.deriv = [=](Cpx z) {
        return std::pow(1.0 + z, a - 1.0) / std::pow(1.0 - z, a + 1.0);
    };
    s.deriv2 = [=](Cpx z) {
        return (a - 1.0) * std::pow(1.0 + z, a - 2.0) / std::pow(1.0 - z, a + 1.0) +
               (a + 1.0) * std::pow(1.0 + z, a - 1.0) / std::pow(1.0 - z, a + 2.0);
    };
    return s;
}

void check_spec(const ExtremalSpec& spec) {
    if (!(spec.alpha >= 1.0)) throw BadSpec("extremal: alpha must be >= 1");
    if (!(spec.k >= 0.0 && spec.k < 1.0)) throw BadSpec("extremal: k must be in [0,1)");
    if (spec.sign != 1 && spec.sign != -1) throw BadSpec("extremal: sign must be +-1");
    if (!std::isfinite(spec.t)) throw BadSpec("extremal: t must be finite");
}

std::string spec_id(const ExtremalSpec& spec) {
    std::ostringstream os;
    os << family_name(spec.family) << "?alpha=" << spec.alpha << "&k=" << spec.k;
    if (spec.family == ExtremalFamily::upper_extremal ||
        spec.family == ExtremalFamily::lower_extremal) {
        os << "&t=" << spec.t;
    }
    if (spec.family == ExtremalFamily::covering_extremal ||
        spec.family == ExtremalFamily::covering_extremal_literal) {
        os << "&sign=" << spec.sign;
    }
    return os.str();
}

}  // namespace

MapModel build_extremal(const ExtremalSpec& spec) {
    check_spec(spec);
    ScalarHolo h;
    double g_factor = 0.0;
    switch (spec.family) {
        case ExtremalFamily::upper_extremal:
            h = upper_h(spec.alpha, spec.k, spec.t);
            g_factor = -spec.k;  // f = h - k conj(h)
            break;
        case ExtremalFamily::lower_extremal:
            h = lower_h(spec.alpha, spec.k, spec.t);
            g_factor = spec.k;  // f = h* + k conj(h*)
            break;
        case ExtremalFamily::covering_extremal:
            h = covering_h(spec.alpha, spec.k, spec.sign, spec.alpha);
            g_factor = spec.k;  // f = h + k conj(h)
            break;
        case ExtremalFamily::covering_extremal_literal:
            h = covering_h(spec.alpha, spec.k, spec.sign, 1.0);
            g_factor = spec.k;
            break;
        case ExtremalFamily::pommerenke:
            h = pommerenke_h(spec.alpha);
            g_factor = 0.0;
            break;
    }
    MapModel m;
    m.n = 1;
    m.h = scalar_to_holo(h, 1.0);
    m.g = g_factor == 0.0 ? zero_holo(1) : scalar_to_holo(h, g_factor);
    m.id = spec_id(spec);
    return m;
}

double sharpness_gap_upper(double alpha, double k, double r, double t) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("sharpness_gap_upper: r in (0,1)");
    const MapModel f =
        build_extremal({ExtremalFamily::upper_extremal, alpha, k, t, +1});
    CVector z(1);
    z(0) = std::polar(r, t);
    const double lam = lambda_extremes(f, z).first;
    BoundParams p;
    p.alpha = alpha;
    p.k = k;
    return std::abs(lam - distortion_upper(r, p));
}

double sharpness_gap_lower(double alpha, double k, double r, double t) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("sharpness_gap_lower: r in (0,1)");
    const MapModel f =
        build_extremal({ExtremalFamily::lower_extremal, alpha, k, t, +1});
    CVector z(1);
    z(0) = std::polar(r, t);
    const double lam_min = lambda_extremes(f, z).second;
    BoundParams p;
    p.alpha = alpha;
    p.k = k;
    p.normDh0inv = 1.0 + k;
    return std::abs(lam_min - distortion_lower(r, p));
}

CoveringSharpness covering_sharpness_check(double alpha, double k, double r,
                                           ExtremalFamily family) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("covering_sharpness_check: r in (0,1)");
    if (family != ExtremalFamily::covering_extremal &&
        family != ExtremalFamily::covering_extremal_literal) {
        throw BadSpec("covering_sharpness_check: not a covering family");
    }
    const MapModel f = build_extremal({family, alpha, k, 0.0, +1});

    const auto modulus_at = [&](double phi) {
        CVector z(1);
        z(0) = std::polar(r, phi);
        return evaluate(f, z).norm();
    };

    // dense circle sampling, then golden-section refinement around the best angle
    const int samples = 4096;
    const double two_pi = 2.0 * 3.14159265358979323846;
    double best = modulus_at(0.0);
    double best_phi = 0.0;
    for (int i = 1; i < samples; ++i) {
        const double phi = two_pi * i / samples;
        const double v = modulus_at(phi);
        if (v < best) {
            best = v;
            best_phi = phi;
        }
    }
    double a = best_phi - two_pi / samples;
    double b = best_phi + two_pi / samples;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = modulus_at(x1), f2 = modulus_at(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = modulus_at(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = modulus_at(x2);
        }
    }
    best = std::min({best, f1, f2});

    CoveringSharpness out;
    out.boundary_distance = best;
    out.closed_form = covering_closed_n1(r, alpha, k);
    out.gap = std::abs(out.boundary_distance - out.closed_form);
    return out;
}

const char* family_name(ExtremalFamily f) {
    switch (f) {
        case ExtremalFamily::upper_extremal: return "upper_extremal";
        case ExtremalFamily::lower_extremal: return "lower_extremal";
        case ExtremalFamily::covering_extremal: return "covering_extremal";
        case ExtremalFamily::covering_extremal_literal: return "covering_extremal_literal";
        case ExtremalFamily::pommerenke: return "pommerenke";
    }
    throw BadSpec("unknown extremal family");
}

ExtremalFamily family_from_name(const std::string& name) {
    if (name == "upper_extremal") return ExtremalFamily::upper_extremal;
    if (name == "lower_extremal") return ExtremalFamily::lower_extremal;
    if (name == "covering_extremal") return ExtremalFamily::covering_extremal;
    if (name == "covering_extremal_literal") return ExtremalFamily::covering_extremal_literal;
    if (name == "pommerenke") return ExtremalFamily::pommerenke;
    throw BadSpec("unknown extremal family: " + name);
}

}  // namespace pluriharm
