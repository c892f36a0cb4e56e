#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "vopt/norms.hpp"

using namespace vopt;
using vt::cloud;
using vt::ids;
using vt::mat;
using vt::vec;

TEST_CASE("order unit norm closed form") {
    const OrderUnitNorm n(vt::orthant_poly(2), vec({1, 1}));
    CHECK(n(vec({3, -1})) == doctest::Approx(3.0));  // gauge of [-1,1]^2
    CHECK(n(vec({0, 0})) == 0.0);
    CHECK(n(vec({1, 1})) == doctest::Approx(1.0));  // the unit itself

    const OrderUnitNorm skew(vt::orthant_poly(2), vec({3, 1}));
    CHECK(skew(vec({3, 1})) == doctest::Approx(1.0));
    CHECK(skew(vec({3, -1})) == doctest::Approx(1.0));

    CHECK_THROWS_AS(OrderUnitNorm(vt::orthant_poly(2), vec({1, 0})), HypothesisError);
    CHECK_THROWS_AS(OrderUnitNorm(PolyhedralSet(mat({{1, 0}}), vec({0})), vec({1, 0})),
                    HypothesisError);  // not pointed
}

TEST_CASE("norm equals phi on a + C") {
    const OrderUnitNorm n(vt::orthant_poly(2), vec({1, 1}));
    auto rep = norm_phi_identity_check(n, vec({0, 0}), 256, 42);
    CHECK(rep.ok);
    CHECK(rep.max_deviation <= 1e-9);

    const OrderUnitNorm skew(vt::orthant_poly(2), vec({3, 1}));
    rep = norm_phi_identity_check(skew, vec({-2, 5}), 256, 43);
    CHECK(rep.ok);
}

TEST_CASE("norm axioms on samples") {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> lam(-3.0, 3.0);
    const auto cone = vt::random_orthant_cone(rng, 3);
    const OrderUnitNorm n(cone, vt::random_interior_direction(rng, cone));
    for (int s = 0; s < 256; ++s) {
        const Vector y1 = vec({u(rng), u(rng), u(rng)});
        const Vector y2 = vec({u(rng), u(rng), u(rng)});
        const double l = lam(rng);
        CHECK(n(Vector(l * y1)) == doctest::Approx(std::abs(l) * n(y1)).epsilon(1e-12));
        CHECK(n(Vector(y1 + y2)) <= n(y1) + n(y2) + 1e-9);
        if (n(y1) <= 1e-12) CHECK(y1.norm() <= 1e-9);
    }
    CHECK(n(Vector(Vector::Zero(3))) == 0.0);
}

TEST_CASE("norm scaling in the unit direction") {
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    const OrderUnitNorm base(vt::orthant_poly(2), vec({1, 2}));
    for (double lambda : {0.5, 2.0, 7.0}) {
        const OrderUnitNorm scaled(vt::orthant_poly(2), vec({lambda, 2 * lambda}));
        for (int s = 0; s < 64; ++s) {
            const Vector y = vec({u(rng), u(rng)});
            CHECK(scaled(y) == doctest::Approx(base(y) / lambda).epsilon(1e-12));
        }
    }
}

TEST_CASE("norm argmin scalarization") {
    const SetSpec orthspec = SetSpec::orthant(2);
    auto out = norm_scalarize_argmin(vt::f4(), vt::orthant_poly(2), vec({1, 1}), vec({0, 0}), orthspec);
    CHECK(out.psi == ids({1}));  // norms 3, 2, 3, 3
    CHECK(out.unique);
    CHECK(out.classification == ScalClass::CertifiedEfficient);

    out = norm_scalarize_argmin(cloud({{1, 1}, {2, 2}}), vt::orthant_poly(2), vec({1, 1}), vec({0, 0}),
                                orthspec);
    CHECK(out.psi == ids({0}));

    out = norm_scalarize_argmin(cloud({{2, 5}}), vt::orthant_poly(2), vec({1, 1}), vec({0, 0}), orthspec);
    CHECK(out.psi == ids({0}));
    CHECK(out.unique);

    CHECK_THROWS_AS(
        norm_scalarize_argmin(vt::f4(), vt::orthant_poly(2), vec({1, 1}), vec({2, 2}), orthspec),
        PreconditionError);
}

TEST_CASE("norm bounded scalarization") {
    const BoundedFrontResult r4 = norm_scalarize_bounded(vt::f4(), vt::orthant_poly(2), vec({0, 0}));
    CHECK(r4.eff_indices == ids({0, 1, 2}));
    CHECK(r4.certificates[0].k_used == vec({1, 3}));
    CHECK(r4.certificates[0].values[0].second.value() == doctest::Approx(1.0));  // the anchor
    CHECK(r4.certificates[0].values[1].second.value() == doctest::Approx(2.0));
    CHECK(r4.certificates[3].kind == CertKind::Refuted);

    // f5 shifted into the strict interior of the orthant
    PointCloud f5s;
    for (const auto& y : vt::f5()) f5s.push_back(Vector(y + vec({1, 1})));
    const BoundedFrontResult r5 = norm_scalarize_bounded(f5s, vt::orthant_poly(2), vec({0, 0}));
    CHECK(r5.eff_indices == ids({0, 1, 2}));
    CHECK(r5.weff_indices == ids({0, 1, 2, 3}));
    CHECK(r5.certificates[3].kind == CertKind::WeaklyEfficient);

    CHECK_THROWS_AS(norm_scalarize_bounded(vt::f4(), vt::orthant_poly(2), vec({1, 1})),
                    PreconditionError);
}

TEST_CASE("norm route agrees with the phi route and brute force") {
    std::mt19937_64 rng(46);
    for (int trial = 0; trial < 25; ++trial) {
        const Eigen::Index dim = 2 + trial % 3;
        const auto fx = vt::random_fixture(rng, dim, 4 + trial % 15);
        Vector lo = fx.F[0];
        for (const auto& y : fx.F) lo = lo.cwiseMin(y);
        const Vector a = lo - Vector::Ones(dim);

        const auto via_norm = norm_scalarize_bounded(fx.F, fx.cone, a);
        const auto via_phi = scalarize_lower_cone(fx.F, fx.cone, a);
        const SetSpec D = SetSpec::polyhedral(fx.cone);
        CHECK(via_norm.eff_indices == via_phi.efficient);
        CHECK(via_norm.eff_indices == eff(fx.F, D).efficient_indices);
        CHECK(via_norm.weff_indices == weff(fx.F, D).weakly_efficient_indices.value());
    }
}
