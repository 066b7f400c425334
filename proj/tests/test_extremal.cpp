#include <doctest.h>

#include <cmath>

#include "pluriharm/extremal.hpp"

using namespace pluriharm;
using Cpx = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

Cpx h_at(const MapModel& m, Cpx z) {
    CVector v(1);
    v(0) = z;
    return m.h.value(v)(0);
}

Cpx hp_at(const MapModel& m, Cpx z) {
    CVector v(1);
    v(0) = z;
    return m.h.jacobian(v)(0, 0);
}

}  // namespace

TEST_CASE("upper family reduces to z/(1-z) at alpha = 1, k = 0") {
    const MapModel m = build_extremal({ExtremalFamily::upper_extremal, 1.0, 0.0, 0.0, +1});
    CHECK(std::abs(h_at(m, 0.5) - Cpx(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(h_at(m, Cpx(0.0, 0.0))) < 1e-14);
    CHECK(std::abs(hp_at(m, 0.0) - Cpx(1.0, 0.0)) < 1e-14);
    // g vanishes identically at k = 0
    CVector z(1);
    z(0) = 0.3;
    CHECK(m.g.value(z).norm() == 0.0);
}

TEST_CASE("upper family derivative scale at the origin is 1/(1-k)") {
    for (double k : {0.0, 0.25, 0.5}) {
        for (double t : {0.0, kPi / 4}) {
            const MapModel m =
                build_extremal({ExtremalFamily::upper_extremal, 2.0, k, t, +1});
            CHECK(std::abs(hp_at(m, 0.0)) ==
                  doctest::Approx(1.0 / (1.0 - k)).epsilon(1e-13));
        }
    }
}

TEST_CASE("lower family derivative scale at the origin is 1/(1+k)") {
    for (double k : {0.0, 0.25, 0.5}) {
        const MapModel m = build_extremal({ExtremalFamily::lower_extremal, 2.0, k, 0.0, +1});
        CHECK(std::abs(hp_at(m, 0.0)) ==
              doctest::Approx(1.0 / (1.0 + k)).epsilon(1e-13));
    }
}

TEST_CASE("upper family attains the upper distortion bound on its ray") {
    for (double alpha : {1.0, 2.0, 3.0}) {
        for (double k : {0.0, 0.25, 0.5}) {
            for (double t : {0.0, kPi / 4}) {
                for (int i = 1; i <= 9; ++i) {
                    const double r = 0.1 * i;
                    BoundParams p;
                    p.alpha = alpha;
                    p.k = k;
                    const double bound = distortion_upper(r, p);
                    CHECK(sharpness_gap_upper(alpha, k, r, t) <= 1e-9 * bound);
                }
            }
        }
    }
}

TEST_CASE("lower family attains the lower distortion bound on its ray") {
    for (double alpha : {1.0, 2.0, 3.0}) {
        for (double k : {0.0, 0.25, 0.5}) {
            for (double t : {0.0, kPi / 4}) {
                for (int i = 1; i <= 9; ++i) {
                    const double r = 0.1 * i;
                    BoundParams p;
                    p.alpha = alpha;
                    p.k = k;
                    p.normDh0inv = 1.0 + k;
                    const double bound = distortion_lower(r, p);
                    CHECK(sharpness_gap_lower(alpha, k, r, t) <=
                          1e-9 * std::max(1.0, bound));
                }
            }
        }
    }
}

TEST_CASE("covering family boundary distance matches the closed form") {
    // at alpha = 1, k = 0, r = 1/2 the image of the circle stays exactly
    // 1/3 away from the origin at its nearest point
    const CoveringSharpness cs = covering_sharpness_check(1.0, 0.0, 0.5);
    CHECK(cs.closed_form == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(cs.boundary_distance == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(cs.gap < 1e-10);
}

TEST_CASE("covering family stays sharp across parameters") {
    for (double alpha : {1.0, 2.0}) {
        for (double k : {0.0, 0.4}) {
            for (double r : {0.3, 0.6}) {
                const CoveringSharpness cs = covering_sharpness_check(alpha, k, r);
                CHECK(cs.gap <= 1e-8 * std::max(1.0, cs.closed_form));
            }
        }
    }
}

TEST_CASE("literal covering variant agrees at alpha = 1 and departs after") {
    const CoveringSharpness match =
        covering_sharpness_check(1.0, 0.2, 0.5, ExtremalFamily::covering_extremal_literal);
    CHECK(match.gap <= 1e-8);
    const CoveringSharpness depart =
        covering_sharpness_check(2.0, 0.2, 0.5, ExtremalFamily::covering_extremal_literal);
    CHECK(depart.gap > 1e-3);
}

TEST_CASE("pommerenke generator: unit derivative, half second derivative alpha") {
    for (double alpha : {1.0, 2.0, 3.0}) {
        const MapModel m = build_extremal({ExtremalFamily::pommerenke, alpha, 0.0, 0.0, +1});
        CHECK(std::abs(hp_at(m, 0.0) - Cpx(1.0, 0.0)) < 1e-13);
        CVector zero = CVector::Zero(1), u = CVector::Ones(1);
        CHECK(0.5 * m.h.second(zero, u).norm() ==
              doctest::Approx(alpha).epsilon(1e-13));
    }
}

TEST_CASE("family names round-trip and bad specs are rejected") {
    for (ExtremalFamily f :
         {ExtremalFamily::upper_extremal, ExtremalFamily::lower_extremal,
          ExtremalFamily::covering_extremal, ExtremalFamily::covering_extremal_literal,
          ExtremalFamily::pommerenke}) {
        CHECK(family_from_name(family_name(f)) == f);
    }
    CHECK_THROWS_AS((void)family_from_name("nope"), BadSpec);
    CHECK_THROWS_AS((void)build_extremal({ExtremalFamily::pommerenke, 0.5, 0.0, 0.0, +1}),
                    BadSpec);
    CHECK_THROWS_AS((void)build_extremal({ExtremalFamily::upper_extremal, 1.0, 1.0, 0.0, +1}),
                    BadSpec);
    CHECK_THROWS_AS((void)build_extremal({ExtremalFamily::covering_extremal, 1.0, 0.0, 0.0, 2}),
                    BadSpec);
    CHECK_THROWS_AS((void)sharpness_gap_upper(1.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(
        (void)covering_sharpness_check(1.0, 0.0, 0.5, ExtremalFamily::pommerenke),
        BadSpec);
}

TEST_CASE("map ids carry the family and parameters") {
    const MapModel m = build_extremal({ExtremalFamily::upper_extremal, 2.0, 0.5, 0.0, +1});
    CHECK(m.id.find("upper_extremal") == 0);
    CHECK(m.id.find("alpha=2") != std::string::npos);
    CHECK(m.id.find("k=0.5") != std::string::npos);
}
