#include "vopt/efficiency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace vopt {

EffResult eff_where(const PointCloud& F, const std::function<bool(const Vector&)>& dominates,
                    const std::function<bool(const Vector&)>& strictly_dominates) {
    EffResult r;
    for (size_t i = 0; i < F.size(); ++i) {
        std::optional<size_t> witness, strict_witness;
        for (size_t j = 0; j < F.size() && !strict_witness; ++j) {
            if (j == i || (F[j] - F[i]).isZero(0.0)) continue;
            const Vector d = F[i] - F[j];
            if (!witness && dominates(d)) witness = j;
            if (strictly_dominates && strictly_dominates(d)) strict_witness = j;
        }
        if (witness)
            r.dominance_witness.emplace(i, strict_witness.value_or(*witness));
        else
            r.efficient_indices.push_back(i);
    }
    return r;
}

EffResult eff(const PointCloud& F, const SetSpec& D) {
    if (F.empty()) return {};
    if (F.dim() != D.dim()) throw DimensionError("eff: dimension mismatch");
    return eff_where(
        F, [&](const Vector& d) { return member(D, d); },
        [&](const Vector& d) { return member(D, d) && interior_member(D, d); });
}

EffResult weff(const PointCloud& F, const SetSpec& D) {
    if (F.empty()) return {};
    if (F.dim() != D.dim()) throw DimensionError("weff: dimension mismatch");
    EffResult r = eff_where(F, [&](const Vector& d) { return interior_member(D, d); });
    r.weakly_efficient_indices = std::move(r.efficient_indices);
    r.efficient_indices.clear();
    return r;
}

double phi_f_plus_d(const PointCloud& F, const PolyhedralSet& cone, const Vector& k, const Vector& z) {
    const Eigen::VectorXd wk = cone.normals() * k;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& y : F) {
        const Eigen::VectorXd num = cone.normals() * (y - z);
        best = std::min(best, (num.array() / wk.array()).maxCoeff());
    }
    return best;
}

namespace {

void require_interior_direction(const PolyhedralSet& cone, const Vector& k, const char* who) {
    if (k.size() != cone.dim()) throw DimensionError(std::string(who) + ": dimension mismatch");
    if (!is_cone(cone)) throw HypothesisError(std::string(who) + ": D must be a cone (zero offsets)");
    const Eigen::VectorXd wk = cone.normals() * k;
    for (Eigen::Index j = 0; j < wk.size(); ++j)
        if (!(wk[j] > tolerances().feas))
            throw HypothesisError(std::string(who) + ": (H2): H+R>k subset int H violated at row " +
                                  std::to_string(j));
}

}  // namespace

std::vector<size_t> weff_boundary(const PointCloud& F, const PolyhedralSet& cone, const Vector& k,
                                  double tol) {
    if (F.empty()) throw std::invalid_argument("weff_boundary: empty point cloud");
    require_interior_direction(cone, k, "weff_boundary");
    std::vector<size_t> out;
    for (size_t i = 0; i < F.size(); ++i)
        if (std::abs(phi_f_plus_d(F, cone, k, F[i])) <= tol) out.push_back(i);
    return out;
}

LocalizeReport localize_check(const PointCloud& F, const PolyhedralSet& cone, const Vector& k) {
    LocalizeReport rep;
    const std::vector<size_t> boundary = weff_boundary(F, cone, k);
    const std::set<size_t> bset(boundary.begin(), boundary.end());

    const SetSpec D = SetSpec::polyhedral(cone);
    for (size_t i : eff(F, D).efficient_indices)
        if (!bset.count(i)) rep.eff_violations.push_back(i);
    rep.eff_subset_of_boundary = rep.eff_violations.empty();

    const auto w = weff(F, D).weakly_efficient_indices.value();
    const std::set<size_t> wset(w.begin(), w.end());
    for (size_t i : w)
        if (!bset.count(i)) rep.weff_mismatches.push_back(i);
    for (size_t i : boundary)
        if (!wset.count(i)) rep.weff_mismatches.push_back(i);
    rep.weff_equals_boundary = rep.weff_mismatches.empty();
    return rep;
}

std::vector<size_t> exists_eff(const PointCloud& F, const PolyhedralSet& C, const Vector& k) {
    if (F.empty()) throw std::invalid_argument("exists_eff: empty point cloud");
    require_interior_direction(C, k, "exists_eff");
    std::vector<ExtValue> values;
    values.reserve(F.size());
    const Eigen::VectorXd wk = C.normals() * k;
    for (const auto& y : F) {
        const Eigen::VectorXd wy = C.normals() * y;
        values.push_back(ExtValue::real((wy.array() / wk.array()).maxCoeff()));
    }
    return argmin_scalar(values, tolerances().cmp).indices;
}

ExistsEffReport exists_eff_checked(const PointCloud& F, const PolyhedralSet& C, const Vector& k,
                                   const SetSpec& D) {
    ExistsEffReport rep;
    rep.indices = exists_eff(F, C, k);
    const auto effset = eff(F, D).efficient_indices;
    const std::set<size_t> es(effset.begin(), effset.end());
    rep.contained_in_eff = std::all_of(rep.indices.begin(), rep.indices.end(),
                                       [&](size_t i) { return es.count(i) > 0; });
    return rep;
}

ArgminResult argmin_scalar(const std::vector<ExtValue>& values, double tol) {
    if (values.empty()) throw std::invalid_argument("argmin_scalar: empty value list");
    ArgminResult r;
    for (const auto& v : values)
        if (v.is_nu()) throw std::invalid_argument("argmin_scalar: nu entries must be excluded by the caller");

    bool any_neg_inf = std::any_of(values.begin(), values.end(),
                                   [](const ExtValue& v) { return v.is_neg_inf(); });
    if (any_neg_inf) {
        for (size_t i = 0; i < values.size(); ++i)
            if (values[i].is_neg_inf()) r.indices.push_back(i);
    } else {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& v : values) best = std::min(best, v.value());
        for (size_t i = 0; i < values.size(); ++i)
            if (values[i].value() <= best + tol) r.indices.push_back(i);
    }
    r.unique = r.indices.size() == 1;
    return r;
}

}  // namespace vopt
