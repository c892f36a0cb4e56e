#include "vopt/norms.hpp"

#include "vopt/functional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace vopt {

OrderUnitNorm::OrderUnitNorm(PolyhedralSet cone, Vector k) : cone_(std::move(cone)), k_(std::move(k)) {
    if (k_.size() != cone_.dim()) throw DimensionError("OrderUnitNorm: dimension mismatch");
    if (!is_cone(cone_)) throw HypothesisError("OrderUnitNorm: C must be a cone (zero offsets)");
    if (!is_pointed_cone(cone_)) throw HypothesisError("OrderUnitNorm: C must be pointed");
    wk_ = cone_.normals() * k_;
    for (Eigen::Index i = 0; i < wk_.size(); ++i)
        if (!(wk_[i] > tolerances().feas))
            throw HypothesisError("OrderUnitNorm: k in int C violated at row " + std::to_string(i));
}

double OrderUnitNorm::operator()(const Vector& y) const {
    if (y.size() != cone_.dim()) throw DimensionError("OrderUnitNorm: dimension mismatch");
    return ((cone_.normals() * y).cwiseAbs().array() / wk_.array()).maxCoeff();
}

IdentityCheckReport norm_phi_identity_check(const OrderUnitNorm& n, const Vector& a, int samples,
                                            std::uint64_t seed) {
    const Eigen::Index dim = n.cone().dim();
    if (a.size() != dim) throw DimensionError("norm_phi_identity_check: dimension mismatch");
    const SetSpec C = SetSpec::polyhedral(n.cone());
    const PhiInstance inst(C, n.unit(), a);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // Probe directions inside C: the unit k with random in-cone perturbations.
    std::vector<Vector> dirs{n.unit()};
    while (static_cast<int>(dirs.size()) < 6) {
        Vector d(dim);
        for (Eigen::Index i = 0; i < dim; ++i) d[i] = gauss(rng);
        d = n.unit() + 0.5 * d / std::max(d.norm(), 1e-12);
        if (member(n.cone(), d)) dirs.push_back(d);
    }

    IdentityCheckReport rep;
    rep.samples = samples;
    for (int s = 0; s < samples; ++s) {
        Vector y = a;
        for (const auto& d : dirs) y += (3.0 * unit(rng)) * d;
        const double lhs = n(Vector(y - a));
        const ExtValue rhs = eval_phi(inst, y);
        rep.max_deviation = std::max(rep.max_deviation, std::abs(lhs - rhs.value()));
    }
    rep.ok = rep.max_deviation <= 1e-9;
    return rep;
}

ScalarizationOutcome norm_scalarize_argmin(const PointCloud& F, const PolyhedralSet& C, const Vector& k,
                                           const Vector& a, const SetSpec& D) {
    if (F.empty()) throw std::invalid_argument("norm_scalarize_argmin: empty point cloud");
    const OrderUnitNorm n(C, k);
    for (size_t i = 0; i < F.size(); ++i)
        if (!member(C, Vector(F[i] - a)))
            throw PreconditionError("norm_scalarize_argmin: bound violated at index " + std::to_string(i) +
                                    " (F not inside a + C)");

    ScalarizationOutcome out;
    std::vector<ExtValue> vals;
    vals.reserve(F.size());
    for (const auto& y : F) vals.push_back(ExtValue::real(n(Vector(y - a))));
    out.values = vals;
    const ArgminResult am = argmin_scalar(vals, tolerances().cmp);
    out.psi = am.indices;
    out.unique = am.unique;

    // Same inclusion ladder as the phi route, with C in the role of H.
    out.classification = classify_scalarization(SetSpec::polyhedral(C), D, out.unique);
    return out;
}

BoundedFrontResult norm_scalarize_bounded(const PointCloud& F, const PolyhedralSet& D, const Vector& a) {
    if (F.empty()) throw std::invalid_argument("norm_scalarize_bounded: empty point cloud");
    if (a.size() != F.dim()) throw DimensionError("norm_scalarize_bounded: dimension mismatch");
    if (!is_cone(D) || !is_pointed_cone(D))
        throw HypothesisError("norm_scalarize_bounded: D must be a pointed cone");
    const double cmp = tolerances().cmp;

    for (size_t i = 0; i < F.size(); ++i) {
        if ((F[i] - a).isZero(0.0))
            throw PreconditionError("norm_scalarize_bounded: a is a cloud point (index " +
                                    std::to_string(i) + ")");
        if (!interior_member(D, Vector(F[i] - a)))
            throw PreconditionError("norm_scalarize_bounded: bound violated at index " +
                                    std::to_string(i) + " (F not inside a + int D)");
    }

    BoundedFrontResult out;
    out.certificates.reserve(F.size());
    for (size_t i = 0; i < F.size(); ++i) {
        const Vector k = F[i] - a;
        const OrderUnitNorm n(D, k);
        std::vector<ExtValue> values;
        values.reserve(F.size());
        for (const auto& y : F) values.push_back(ExtValue::real(n(Vector(y - a))));

        if (std::abs(values[i].value() - 1.0) > 1e-9)
            throw std::logic_error("norm_scalarize_bounded: anchor value 1 violated at index " +
                                   std::to_string(i));

        double min_v = std::numeric_limits<double>::infinity();
        for (const auto& v : values) min_v = std::min(min_v, v.value());
        const bool in_weff = values[i].value() <= min_v + cmp;
        bool in_eff = true;
        std::optional<size_t> witness;
        for (size_t j = 0; j < F.size() && in_eff; ++j) {
            if (j == i || (F[j] - F[i]).isZero(0.0)) continue;
            if (values[j].value() <= values[i].value() + cmp) in_eff = false;
        }
        if (in_eff) out.eff_indices.push_back(i);
        if (in_weff) out.weff_indices.push_back(i);
        const CertKind kind = in_eff  ? CertKind::Efficient
                              : in_weff ? CertKind::WeaklyEfficient
                                        : CertKind::Refuted;
        if (kind == CertKind::Refuted) {
            for (size_t j = 0; j < F.size() && !witness; ++j)
                if (values[j].value() <= min_v + cmp) witness = j;
        }
        Certificate c;
        c.point_index = i;
        c.kind = kind;
        c.k_used = k;
        c.witness = witness;
        double margin = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < F.size(); ++j) {
            c.values.emplace_back(j, values[j]);
            if (j != i && !(F[j] - F[i]).isZero(0.0))
                margin = std::min(margin, values[j].value() - values[i].value());
        }
        c.margin = margin;
        out.certificates.push_back(std::move(c));
    }
    return out;
}

}  // namespace vopt
