#include <doctest.h>

#include <random>

#include "pluriharm/extremal.hpp"
#include "pluriharm/lif.hpp"

using namespace pluriharm;
using Cpx = std::complex<double>;

namespace {

CVector random_point(int n, double radius, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector z(n);
    for (int i = 0; i < n; ++i) z(i) = Cpx(gauss(rng), gauss(rng));
    return z * (radius / z.norm());
}

}  // namespace

TEST_CASE("ball automorphism is an involution swapping 0 and a") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const CVector a = random_point(n, 0.1 + 0.08 * trial, rng);
            const BallAutomorphism phi = ball_automorphism(a);
            CHECK((phi.value(CVector::Zero(n)) - a).norm() < 1e-13);
            CHECK(phi.value(a).norm() < 1e-13);
            for (int j = 0; j < 10; ++j) {
                const CVector z = random_point(n, 0.05 + 0.09 * j, rng);
                const CVector w = phi.value(z);
                CHECK(w.norm() < 1.0);
                CHECK((phi.value(w) - z).norm() < 1e-12);
            }
        }
    }
}

TEST_CASE("automorphism jacobian and second derivative match finite differences") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 3; ++n) {
        const CVector a = random_point(n, 0.4, rng);
        const BallAutomorphism phi = ball_automorphism(a);
        const CVector z = random_point(n, 0.3, rng);
        const double t = 1e-6;

        const CMatrix j = phi.jacobian(z);
        for (int c = 0; c < n; ++c) {
            CVector e = CVector::Zero(n);
            e(c) = 1.0;
            const CVector fd_re = (phi.value(z + t * e) - phi.value(z - t * e)) / (2.0 * t);
            CHECK((j.col(c) - fd_re).norm() < 1e-7);
            e(c) = Cpx(0.0, 1.0);
            const CVector fd_im = (phi.value(z + t * e) - phi.value(z - t * e)) / (2.0 * t);
            // holomorphy: d/d(iy) = i d/dx
            CHECK((Cpx(0.0, 1.0) * j.col(c) - fd_im).norm() < 1e-7);
        }

        const CVector u = random_point(n, 1.0, rng);
        const CVector fd2 = (phi.jacobian(z + t * u) - phi.jacobian(z - t * u)) * u / (2.0 * t);
        CHECK((phi.second(z, u) - fd2).norm() < 1e-6);
    }
}

TEST_CASE("jacobian0_inverse inverts the jacobian at the origin") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 3; ++n) {
        const CVector a = random_point(n, 0.6, rng);
        const BallAutomorphism phi = ball_automorphism(a);
        const CMatrix prod = phi.jacobian0_inverse() * phi.jacobian(CVector::Zero(n));
        CHECK((prod - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    }
    CVector bad(1);
    bad(0) = 1.0;
    CHECK_THROWS_AS((void)ball_automorphism(bad), DomainError);
}

TEST_CASE("koebe transform is normalized: T(0) = 0, DT(0) = I") {
    std::mt19937_64 rng(11);
    const HoloFn h = build_extremal({ExtremalFamily::pommerenke, 2.0, 0.0, 0.0, +1}).h;
    for (int trial = 0; trial < 10; ++trial) {
        const CVector a = random_point(1, 0.09 * (trial + 1), rng);
        const HoloFn t = koebe_transform(h, ball_automorphism(a));
        const CVector zero = CVector::Zero(1);
        CHECK(t.value(zero).norm() < 1e-9);
        CHECK((t.jacobian(zero) - CMatrix::Identity(1, 1)).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("koebe second-derivative channel matches finite differences") {
    std::mt19937_64 rng(13);
    const HoloFn h = build_extremal({ExtremalFamily::pommerenke, 2.0, 0.0, 0.0, +1}).h;
    const CVector a = random_point(1, 0.5, rng);
    const HoloFn t = koebe_transform(h, ball_automorphism(a));
    const CVector zero = CVector::Zero(1);
    const CVector u = CVector::Ones(1);
    const double rho = 1e-6;
    const CVector fd = (t.jacobian(rho * u) - t.jacobian(-rho * u)) * u / (2.0 * rho);
    CHECK((t.second(zero, u) - fd).norm() < 1e-6);
}

TEST_CASE("norm order of the identity is 1") {
    for (int n : {1, 2}) {
        const OrderEstimate est = norm_order_estimate(identity_map(n).h);
        CHECK(std::abs(est.value - 1.0) < 5e-3);
        CHECK(est.value >= 1.0 - 1e-6);
        CHECK(est.samples_used > 0);
    }
}

TEST_CASE("norm order of the pommerenke generator is alpha") {
    for (double alpha : {1.0, 2.0, 3.0}) {
        const HoloFn h = build_extremal({ExtremalFamily::pommerenke, alpha, 0.0, 0.0, +1}).h;
        const OrderEstimate est = norm_order_estimate(h);
        CHECK(std::abs(est.value - alpha) < 5e-3);
    }
}

TEST_CASE("order estimate grows monotonically with the search budget") {
    const HoloFn h = build_extremal({ExtremalFamily::pommerenke, 2.0, 0.0, 0.0, +1}).h;
    double prev = -1.0;
    for (int iters : {0, 4, 16, 48}) {
        OrderBudget b;
        b.refine_iters = iters;
        const double v = norm_order_estimate(h, b).value;
        CHECK(v >= prev);
        prev = v;
    }
    // more center directions can only help at n = 2
    const HoloFn id2 = identity_map(2).h;
    double prev2 = -1.0;
    for (int dirs : {1, 2, 4, 8}) {
        OrderBudget b;
        b.center_dirs = dirs;
        const double v = norm_order_estimate(id2, b).value;
        CHECK(v >= prev2);
        prev2 = v;
    }
}

TEST_CASE("order estimator rejects unnormalized input, normalize_holo repairs it") {
    const HoloFn h = build_extremal({ExtremalFamily::upper_extremal, 2.0, 0.5, 0.0, +1}).h;
    CHECK_THROWS_AS((void)norm_order_estimate(h), NotNormalized);
    const HoloFn fixed = normalize_holo(h);
    const OrderEstimate est = norm_order_estimate(fixed);
    CHECK(std::abs(est.value - 2.0) < 5e-3);
}

TEST_CASE("pommerenke generator saturates the classical envelope on the real axis") {
    // |h'(x)| = (1+x)^(a-1)/(1-x)^(a+1) for real x: the envelope with equality
    const double alpha = 2.0;
    const HoloFn h = build_extremal({ExtremalFamily::pommerenke, alpha, 0.0, 0.0, +1}).h;
    for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        CVector z(1);
        z(0) = x;
        const double envelope =
            std::pow(1.0 + x, alpha - 1.0) / std::pow(1.0 - x, alpha + 1.0);
        CHECK(std::abs(h.jacobian(z)(0, 0)) ==
              doctest::Approx(envelope).epsilon(1e-9));
    }
}

TEST_CASE("membership check accepts the extremal families at their own parameters") {
    for (ExtremalFamily fam :
         {ExtremalFamily::upper_extremal, ExtremalFamily::lower_extremal,
          ExtremalFamily::covering_extremal}) {
        const MapModel m = build_extremal({fam, 2.0, 0.5, 0.0, +1});
        const VerificationReport rep = check_membership_PH(m, 2.0, 0.5);
        CHECK(rep.all_pass());
    }
    const VerificationReport id_rep = check_membership_PH(identity_map(2), 1.0, 0.0);
    CHECK(id_rep.all_pass());
}

TEST_CASE("membership check refutes a dilatation violation") {
    // g'/h' is identically 0.5; declaring k = 0.3 must be refuted
    const MapModel m = build_extremal({ExtremalFamily::upper_extremal, 2.0, 0.5, 0.0, +1});
    const VerificationReport rep = check_membership_PH(m, 2.0, 0.3);
    CHECK_FALSE(rep.all_pass());
    bool dilatation_flagged = false;
    for (const CheckEntry& e : rep.entries) {
        if (e.check == "dilatation_le_k" && !e.pass) dilatation_flagged = true;
    }
    CHECK(dilatation_flagged);
}

TEST_CASE("membership check refutes an order violation") {
    // generator of order 3 declared as order <= 1.5
    MapModel m;
    m.n = 1;
    m.h = build_extremal({ExtremalFamily::pommerenke, 3.0, 0.0, 0.0, +1}).h;
    m.g = zero_holo(1);
    m.id = "pommerenke3";
    const VerificationReport rep = check_membership_PH(m, 1.5, 0.0);
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("coefficient bounds hold for members and flag the normalization") {
    const MapModel m = build_extremal({ExtremalFamily::upper_extremal, 2.0, 0.5, 0.0, +1});
    CHECK(coefficient_bounds_check(m, 0.5).all_pass());
    CHECK(coefficient_bounds_check(identity_map(2), 0.0).all_pass());
    // unnormalized map: h = 2z
    MapModel bad;
    bad.n = 1;
    HoloFn twice;
    twice.n = 1;
    twice.value = [](const CVector& z) { return CVector(2.0 * z); };
    twice.jacobian = [](const CVector&) { return CMatrix(2.0 * CMatrix::Identity(1, 1)); };
    bad.h = twice;
    bad.g = zero_holo(1);
    bad.id = "unnormalized";
    CHECK_FALSE(coefficient_bounds_check(bad, 0.0).all_pass());
}

TEST_CASE("unit directions are prefix-stable and unit length") {
    for (int n : {1, 3}) {
        const auto d8 = unit_directions(n, 8, 42);
        const auto d16 = unit_directions(n, 16, 42);
        REQUIRE(d8.size() == 8);
        REQUIRE(d16.size() == 16);
        for (size_t i = 0; i < d8.size(); ++i) {
            CHECK(std::abs(d8[i].norm() - 1.0) < 1e-12);
            if (n > 1) CHECK((d8[i] - d16[i]).norm() < 1e-15);
        }
    }
}
