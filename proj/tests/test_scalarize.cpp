#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "testutil.hpp"
#include "vopt/scalarize.hpp"

using namespace vopt;
using vt::cloud;
using vt::ids;
using vt::mat;
using vt::vec;

TEST_CASE("certify efficient") {
    const SetSpec orth = SetSpec::orthant(2);
    const Vector k = vec({1, 1});

    const Certificate ok = certify_efficient(vt::f4(), 1, orth, k);
    CHECK(ok.kind == CertKind::Efficient);
    CHECK(ok.margin == doctest::Approx(1.0));
    CHECK(ok.values[0].second.value() == doctest::Approx(1.0));  // max(y1-2, y2-2) at (1,3)

    const Certificate bad = certify_efficient(vt::f4(), 3, orth, k);
    CHECK(bad.kind == CertKind::Refuted);
    REQUIRE(bad.witness.has_value());
    CHECK(*bad.witness == 1);
    CHECK(bad.values[1].second.value() == doctest::Approx(-1.0));

    const Certificate lone = certify_efficient(cloud({{5, 5}}), 0, orth, k);
    CHECK(lone.kind == CertKind::Efficient);
    CHECK(std::isinf(lone.margin));

    CHECK_THROWS_AS(certify_efficient(vt::f4(), 0, orth, vec({-1, 0})), HypothesisError);
    CHECK_THROWS_AS(certify_efficient(vt::f4(), 9, orth, k), std::out_of_range);
}

TEST_CASE("boundary ties yield indeterminate, not a wrong boolean") {
    // the competitor sits within the comparison band of the sublevel boundary
    const PointCloud F = cloud({{0, 0}, {5e-8, -5e-8}});
    const Certificate c = certify_efficient(F, 0, SetSpec::orthant(2), vec({1, 1}));
    CHECK(c.kind == CertKind::Indeterminate);
    // the weak test is closed, so the same tie is a clean positive
    CHECK(certify_weakly_efficient(F, 0, SetSpec::orthant(2), vec({1, 1})).kind ==
          CertKind::WeaklyEfficient);
}

TEST_CASE("certify weakly efficient") {
    const SetSpec orth = SetSpec::orthant(2);
    const Vector k = vec({1, 1});

    const Certificate weak = certify_weakly_efficient(vt::f5(), 3, orth, k);
    CHECK(weak.kind == CertKind::WeaklyEfficient);
    CHECK(weak.margin == doctest::Approx(0.0));

    const Certificate bad = certify_weakly_efficient(vt::f4(), 3, orth, k);
    CHECK(bad.kind == CertKind::Refuted);
    CHECK(*bad.witness == 1);

    CHECK(certify_weakly_efficient(cloud({{5, 5}}), 0, orth, k).kind == CertKind::WeaklyEfficient);

    // (H2) is a precondition for the weak certificate
    CHECK_THROWS_AS(certify_weakly_efficient(vt::f4(), 0, vt::halfplane_x1(), vec({0, 1})),
                    HypothesisError);
}

TEST_CASE("argmin scalarization on the corollary route") {
    const SetSpec orth = SetSpec::orthant(2);
    const Vector k = vec({1, 1});

    auto out = scalarize_argmin(vt::f4(), orth, k, vec({4, 4}), orth);
    CHECK(out.psi == ids({1}));
    CHECK(out.unique);
    CHECK(out.classification == ScalClass::CertifiedEfficient);
    CHECK(out.values[0].value() == doctest::Approx(-1.0));
    CHECK(out.values[1].value() == doctest::Approx(-2.0));

    out = scalarize_argmin(vt::f4(), orth, k, vec({3, 3}), orth);
    CHECK(out.psi == ids({1}));
    CHECK(out.classification == ScalClass::CertifiedEfficient);

    out = scalarize_argmin(vt::f5(), orth, vec({1, 2}), vec({3, 3}), orth);
    CHECK(out.psi == ids({1, 2, 3}));
    CHECK_FALSE(out.unique);
    CHECK(out.classification == ScalClass::SubsetOfWEff);
    CHECK(out.values[0].value() == doctest::Approx(-0.5));
}

TEST_CASE("argmin scalarization on a shifted domination set") {
    // H = D = R^2_+ + (1,1): not a cone, 0 not in D, yet H + D inside int H.
    const SetSpec shifted = SetSpec::shifted(SetSpec::orthant(2), vec({1, 1}));
    const auto out = scalarize_argmin(vt::f4(), shifted, vec({1, 1}), vec({6, 6}), shifted);
    CHECK(out.classification == ScalClass::SubsetOfEff);
    const auto effset = eff(vt::f4(), SetSpec::orthant(2)).efficient_indices;
    const std::set<size_t> es(effset.begin(), effset.end());
    for (size_t i : out.psi) CHECK(es.count(i));
}

TEST_CASE("argmin drops nu points") {
    // degenerate direction: points off the k-line are infeasible
    const SetSpec half = vt::halfplane_x1();
    const auto out = scalarize_argmin(cloud({{0, 0}, {1, 5}, {-2, 1}}), half, vec({0, 1}), vec({0, 0}),
                                      half);
    CHECK(out.dropped_nu == ids({1}));  // x1 = 1 > 0 unreachable from a - H + tk
    CHECK(out.values[0].is_neg_inf());
    CHECK(out.psi == ids({0, 2}));  // both -inf
}

TEST_CASE("bounded scalarization recovers the fronts") {
    const PolyhedralSet orth = vt::orthant_poly(2);

    const BoundedFrontResult up4 = scalarize_bounded(vt::f4(), orth, vec({4, 4}), BoundMode::Upper);
    CHECK(up4.eff_indices == ids({0, 1, 2}));
    CHECK(up4.weff_indices == ids({0, 1, 2}));
    CHECK(up4.certificates[0].k_used == vec({3, 1}));
    CHECK(up4.certificates[0].values[0].second.value() == doctest::Approx(-1.0));
    CHECK(up4.certificates[0].values[1].second.value() == doctest::Approx(-2.0 / 3.0));
    CHECK(up4.certificates[0].values[2].second.value() == doctest::Approx(-1.0 / 3.0));
    CHECK(up4.certificates[3].kind == CertKind::Refuted);

    const BoundedFrontResult up5 = scalarize_bounded(vt::f5(), orth, vec({3, 3}), BoundMode::Upper);
    CHECK(up5.eff_indices == ids({0, 1, 2}));
    CHECK(up5.weff_indices == ids({0, 1, 2, 3}));
    CHECK(up5.certificates[3].kind == CertKind::WeaklyEfficient);

    const BoundedFrontResult low4 = scalarize_bounded(vt::f4(), orth, vec({0, 0}), BoundMode::Lower);
    CHECK(low4.eff_indices == ids({0, 1, 2}));

    CHECK_THROWS_AS(scalarize_bounded(vt::f4(), orth, vec({4, 3}), BoundMode::Upper), PreconditionError);
    CHECK_THROWS_AS(scalarize_bounded(vt::f4(), orth, vec({3, 3}), BoundMode::Upper), PreconditionError);
}

TEST_CASE("upper cone scalarization") {
    const PolyhedralSet orth = vt::orthant_poly(2);
    const ConeFrontResult r4 = scalarize_upper_cone(vt::f4(), orth, vec({4, 4}));
    CHECK(r4.efficient == ids({0, 1, 2}));
    CHECK(r4.certificates[0].values[0].second.value() == doctest::Approx(-1.0));
    CHECK(r4.certificates[3].kind == CertKind::Refuted);

    const ConeFrontResult pair = scalarize_upper_cone(cloud({{1, 1}, {2, 2}}), orth, vec({4, 4}));
    CHECK(pair.efficient == ids({0}));
    CHECK(*pair.certificates[1].witness == 0);

    CHECK_THROWS_AS(scalarize_upper_cone(cloud({{1, 1}}), orth, vec({4, 4})), PreconditionError);
    CHECK_THROWS_AS(scalarize_upper_cone(vt::f4(), orth, vec({2, 2})), PreconditionError);
}

TEST_CASE("upper cone with a lineality hit falls back to the scan") {
    // D = halfplane {d1 >= 0}: k_i = a - y_i lies on the lineality line when
    // the first coordinates agree.
    const PolyhedralSet half(mat({{1, 0}}), vec({0}));
    const PointCloud F = cloud({{0, 0}, {0, 1}, {-1, 2}});
    const ConeFrontResult r = scalarize_upper_cone(F, half, vec({0, 3}));
    CHECK(r.lineality_skipped == ids({0, 1}));
    // brute force w.r.t. the halfplane: i=0 beats i=1 on x1? both x1=0:
    // (0,1)-(0,0) = (0,1) in D and nonzero -> each dominates the other.
    const auto effset = eff(F, SetSpec::polyhedral(half)).efficient_indices;
    CHECK(r.efficient == effset);
}

TEST_CASE("lower cone scalarization") {
    const PolyhedralSet orth = vt::orthant_poly(2);
    const ConeFrontResult r4 = scalarize_lower_cone(vt::f4(), orth, vec({0, 0}));
    CHECK(r4.efficient == ids({0, 1, 2}));
    CHECK(r4.certificates[0].values[0].second.value() == doctest::Approx(1.0));
    CHECK(r4.certificates[0].values[1].second.value() == doctest::Approx(2.0));

    // a in F pins the efficient set to a
    const ConeFrontResult withA = scalarize_lower_cone(cloud({{0, 0}, {1, 1}, {0, 2}}), orth, vec({0, 0}));
    CHECK(withA.efficient == ids({0}));
    CHECK(withA.certificates[1].kind == CertKind::Refuted);

    // pointedness failure reports the degenerate mechanism
    const PolyhedralSet half(mat({{1, 0}}), vec({0}));
    CHECK_THROWS_WITH_AS(scalarize_lower_cone(cloud({{0, 1}}), half, vec({0, 0})),
                         doctest::Contains("does not attain real values"), HypothesisError);

    CHECK_THROWS_AS(scalarize_lower_cone(vt::f4(), orth, vec({2, 0})), PreconditionError);
}

TEST_CASE("certification matches brute force on random fixtures") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index dim = 2 + trial % 3;
        const auto fx = vt::random_fixture(rng, dim, 5 + trial % 26);
        const SetSpec D = SetSpec::polyhedral(fx.cone);

        const auto effset = eff(fx.F, D).efficient_indices;
        const auto weffset = weff(fx.F, D).weakly_efficient_indices.value();

        std::vector<size_t> certified, certified_weak;
        int indeterminate = 0;
        for (size_t i = 0; i < fx.F.size(); ++i) {
            const Certificate c = certify_efficient(fx.F, i, D, fx.k);
            if (c.kind == CertKind::Efficient) certified.push_back(i);
            if (c.kind == CertKind::Indeterminate) ++indeterminate;
            if (certify_weakly_efficient(fx.F, i, D, fx.k).kind == CertKind::WeaklyEfficient)
                certified_weak.push_back(i);
        }
        CHECK(certified == effset);
        CHECK(certified_weak == weffset);
        CHECK(indeterminate == 0);  // continuous draws stay away from the band
    }
}

TEST_CASE("bounded and cone scalarizations equal brute force on random fixtures") {
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 25; ++trial) {
        const Eigen::Index dim = 2 + trial % 3;
        const auto fx = vt::random_fixture(rng, dim, 4 + trial % 15);
        const SetSpec D = SetSpec::polyhedral(fx.cone);
        const auto effset = eff(fx.F, D).efficient_indices;
        const auto weffset = weff(fx.F, D).weakly_efficient_indices.value();

        Vector hi = fx.F[0], lo = fx.F[0];
        for (const auto& y : fx.F) {
            hi = hi.cwiseMax(y);
            lo = lo.cwiseMin(y);
        }
        const Vector a_up = hi + Vector::Ones(dim);
        const Vector a_lo = lo - Vector::Ones(dim);

        const auto up = scalarize_bounded(fx.F, fx.cone, a_up, BoundMode::Upper);
        CHECK(up.eff_indices == effset);
        CHECK(up.weff_indices == weffset);

        const auto low = scalarize_bounded(fx.F, fx.cone, a_lo, BoundMode::Lower);
        CHECK(low.eff_indices == effset);
        CHECK(low.weff_indices == weffset);

        CHECK(scalarize_upper_cone(fx.F, fx.cone, a_up).efficient == effset);
        CHECK(scalarize_lower_cone(fx.F, fx.cone, a_lo).efficient == effset);
    }
}

TEST_CASE("argmin classification is sound") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index dim = 2 + trial % 3;
        const auto fx = vt::random_fixture(rng, dim, 4 + trial % 20);
        const SetSpec D = SetSpec::polyhedral(fx.cone);
        const Vector a = vt::random_cloud(rng, dim, 1, 6.0)[0];

        const auto out = scalarize_argmin(fx.F, D, fx.k, a, D);
        const auto effset = eff(fx.F, D).efficient_indices;
        const auto weffset = weff(fx.F, D).weakly_efficient_indices.value();
        const std::set<size_t> es(effset.begin(), effset.end());
        const std::set<size_t> ws(weffset.begin(), weffset.end());

        switch (out.classification) {
            case ScalClass::CertifiedEfficient:
                REQUIRE(out.psi.size() == 1);
                CHECK(es.count(out.psi.front()));
                break;
            case ScalClass::SubsetOfEff:
                for (size_t i : out.psi) CHECK(es.count(i));
                break;
            case ScalClass::SubsetOfWEff:
                for (size_t i : out.psi) CHECK(ws.count(i));
                break;
            default: break;
        }
    }
}

TEST_CASE("strictly monotone linear functionals select efficient points") {
    std::mt19937_64 rng(80);
    std::uniform_real_distribution<double> mu(0.1, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index dim = 2 + trial % 3;
        const auto fx = vt::random_fixture(rng, dim, 20);
        // coefficients strictly inside the dual cone: positive combinations of rows
        Vector lambda = Vector::Zero(dim);
        for (Eigen::Index r = 0; r < fx.cone.halfspaces(); ++r)
            lambda += mu(rng) * fx.cone.normals().row(r).transpose();

        size_t best = 0;
        for (size_t i = 1; i < fx.F.size(); ++i)
            if (lambda.dot(fx.F[i]) < lambda.dot(fx.F[best])) best = i;

        const auto effset = eff(fx.F, SetSpec::polyhedral(fx.cone)).efficient_indices;
        CHECK(std::find(effset.begin(), effset.end(), best) != effset.end());
    }
}
