#include "vopt/scalarize.hpp"

#include "vopt/cones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vopt {

const char* to_string(CertKind k) {
    switch (k) {
        case CertKind::Efficient: return "Efficient";
        case CertKind::WeaklyEfficient: return "WeaklyEfficient";
        case CertKind::Refuted: return "Refuted";
        default: return "Indeterminate";
    }
}

const char* to_string(ScalClass c) {
    switch (c) {
        case ScalClass::CertifiedEfficient: return "CertifiedEfficient";
        case ScalClass::SubsetOfEff: return "SubsetOfEff";
        case ScalClass::SubsetOfWEff: return "SubsetOfWEff";
        default: return "NoClaim";
    }
}

namespace {

constexpr double kAnchorTol = 1e-9;

/// Other in-domain cloud points for candidate i: distinct as vectors, value
/// not nu.
bool counts_against(const PointCloud& F, size_t i, size_t j, const ExtValue& vj) {
    return j != i && !(F[j] - F[i]).isZero(0.0) && !vj.is_nu();
}

double margin_of(const PointCloud& F, size_t i, const std::vector<ExtValue>& values) {
    double m = std::numeric_limits<double>::infinity();
    if (!values[i].is_real()) return m;
    for (size_t j = 0; j < values.size(); ++j) {
        if (!counts_against(F, i, j, values[j])) continue;
        if (values[j].is_neg_inf()) return -std::numeric_limits<double>::infinity();
        m = std::min(m, values[j].value() - values[i].value());
    }
    return m;
}

Certificate make_certificate(const PointCloud& F, size_t i, const Vector& k,
                             std::vector<ExtValue> values, CertKind kind,
                             std::optional<size_t> witness) {
    Certificate c;
    c.point_index = i;
    c.kind = kind;
    c.k_used = k;
    c.witness = witness;
    c.margin = margin_of(F, i, values);
    c.values.reserve(values.size());
    for (size_t j = 0; j < values.size(); ++j) c.values.emplace_back(j, values[j]);
    return c;
}

std::vector<ExtValue> values_at_offsets(const PhiInstance& inst, const PointCloud& F, const Vector& base) {
    std::vector<ExtValue> v;
    v.reserve(F.size());
    for (const auto& y : F) v.push_back(eval_phi(inst, Vector(y - base)));
    return v;
}

}  // namespace

Certificate certify_efficient(const PointCloud& F, size_t i, const SetSpec& D, const Vector& k) {
    if (i >= F.size()) throw std::out_of_range("certify_efficient: index out of range");
    const double cmp = tolerances().cmp;
    // phi_{y_i - D, k}(y_j) = phi_{-D, k}(y_j - y_i).
    const PhiInstance inst(D, k, Vector::Zero(D.dim()));
    const std::vector<ExtValue> values = values_at_offsets(inst, F, F[i]);

    CertKind kind = CertKind::Efficient;
    std::optional<size_t> witness;
    for (size_t j = 0; j < F.size(); ++j) {
        if (!counts_against(F, i, j, values[j])) continue;
        if (values[j].is_neg_inf() || values[j].value() < -cmp) {
            kind = CertKind::Refuted;
            witness = j;
            break;
        }
        if (values[j].value() <= cmp) kind = CertKind::Indeterminate;
    }

    // phi at the candidate itself: <= 0 whenever 0 in D, and exactly 0 when
    // 0 lies on bd D under (H2).
    const Vector zero = Vector::Zero(D.dim());
    if (member(D, zero) && values[i].is_real()) {
        if (values[i].value() > cmp)
            throw std::logic_error("certify_efficient: phi(y0) <= 0 violated with 0 in D");
        if (!interior_member(D, zero) && inst.hypothesis().h2_ok && values[i].value() < -cmp)
            throw std::logic_error("certify_efficient: phi(y0) = 0 violated with 0 on bd D");
    }
    return make_certificate(F, i, k, values, kind, witness);
}

Certificate certify_weakly_efficient(const PointCloud& F, size_t i, const SetSpec& D, const Vector& k) {
    if (i >= F.size()) throw std::out_of_range("certify_weakly_efficient: index out of range");
    const double cmp = tolerances().cmp;
    const PhiInstance inst(D, k, Vector::Zero(D.dim()));
    if (!inst.hypothesis().h2_ok)
        throw HypothesisError("(H2): D+R>k subset int D required for weak certification");
    const std::vector<ExtValue> values = values_at_offsets(inst, F, F[i]);

    CertKind kind = CertKind::WeaklyEfficient;
    std::optional<size_t> witness;
    for (size_t j = 0; j < F.size(); ++j) {
        if (!counts_against(F, i, j, values[j])) continue;
        if (values[j].is_neg_inf() || values[j].value() < -cmp) {
            kind = CertKind::Refuted;
            witness = j;
            break;
        }
    }

    // With 0 on bd D the candidate's own value vanishes and weak efficiency
    // is equivalently the min form; cross-check the two readings.
    const Vector zero = Vector::Zero(D.dim());
    if (member(D, zero) && !interior_member(D, zero)) {
        if (!values[i].is_real() || std::abs(values[i].value()) > cmp)
            throw std::logic_error("certify_weakly_efficient: phi(y0) = 0 violated with 0 on bd D");
        double min_others = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < F.size(); ++j) {
            if (!counts_against(F, i, j, values[j])) continue;
            min_others = std::min(min_others, values[j].is_neg_inf()
                                                  ? -std::numeric_limits<double>::infinity()
                                                  : values[j].value());
        }
        const bool min_form = min_others >= -cmp;
        if (min_form != (kind != CertKind::Refuted))
            throw std::logic_error("certify_weakly_efficient: min-form disagreement");
    }
    return make_certificate(F, i, k, values, kind, witness);
}

ScalClass classify_scalarization(const SetSpec& H, const SetSpec& D, bool unique) {
    const auto hc = as_shifted_cone(H);
    const auto dc = as_shifted_cone(D);
    if (!hc || !dc) return ScalClass::NoClaim;
    const double eps = tolerances().feas;

    // H + D inside H  <=>  cone(D) inside recession cone of H and the shift
    // of D a recession direction of H.
    const Eigen::VectorXd ws = hc->normals * dc->shift;
    const bool contained = cone_contained(dc->normals, hc->normals) && (ws.array() >= -eps).all();
    if (!contained) return ScalClass::NoClaim;

    const bool zero_in_d = member(D, Vector::Zero(D.dim()));
    if (!zero_in_d && (ws.array() > eps).all()) return ScalClass::SubsetOfEff;
    if (unique) return ScalClass::CertifiedEfficient;
    return ScalClass::SubsetOfWEff;
}

ScalarizationOutcome scalarize_argmin(const PointCloud& F, const SetSpec& H, const Vector& k,
                                      const Vector& a, const SetSpec& D) {
    if (F.empty()) throw std::invalid_argument("scalarize_argmin: empty point cloud");
    const PhiInstance inst(H, k, a);
    ScalarizationOutcome out;
    out.values.reserve(F.size());
    for (const auto& y : F) out.values.push_back(eval_phi(inst, y));

    std::vector<ExtValue> in_domain;
    std::vector<size_t> remap;
    for (size_t j = 0; j < out.values.size(); ++j) {
        if (out.values[j].is_nu()) {
            out.dropped_nu.push_back(j);
        } else {
            in_domain.push_back(out.values[j]);
            remap.push_back(j);
        }
    }
    if (!in_domain.empty()) {
        const ArgminResult am = argmin_scalar(in_domain, tolerances().cmp);
        for (size_t idx : am.indices) out.psi.push_back(remap[idx]);
        out.unique = am.unique;
    }
    out.classification = out.psi.empty() ? ScalClass::NoClaim : classify_scalarization(H, D, out.unique);
    return out;
}

namespace {

void require_pointed(const PolyhedralSet& D, const char* who) {
    if (!is_cone(D)) throw HypothesisError(std::string(who) + ": D must be a cone (zero offsets)");
    if (!is_pointed_cone(D))
        throw HypothesisError(std::string(who) +
                              ": D not pointed; for k in D cap -D the functional "
                              "does not attain real values");
}

}  // namespace

BoundedFrontResult scalarize_bounded(const PointCloud& F, const PolyhedralSet& D, const Vector& a,
                                     BoundMode mode) {
    if (F.empty()) throw std::invalid_argument("scalarize_bounded: empty point cloud");
    if (a.size() != F.dim()) throw DimensionError("scalarize_bounded: dimension mismatch");
    require_pointed(D, "scalarize_bounded");
    const double cmp = tolerances().cmp;
    const double anchor = mode == BoundMode::Upper ? -1.0 : 1.0;

    for (size_t i = 0; i < F.size(); ++i) {
        if ((F[i] - a).isZero(0.0))
            throw PreconditionError("scalarize_bounded: a is a cloud point (index " + std::to_string(i) + ")");
        const Vector d = mode == BoundMode::Upper ? Vector(a - F[i]) : Vector(F[i] - a);
        if (!interior_member(D, d))
            throw PreconditionError("scalarize_bounded: bound violated at index " + std::to_string(i) +
                                    (mode == BoundMode::Upper ? " (F not inside a - int D)"
                                                              : " (F not inside a + int D)"));
    }

    const SetSpec Dspec = SetSpec::polyhedral(D);
    BoundedFrontResult out;
    out.certificates.reserve(F.size());
    for (size_t i = 0; i < F.size(); ++i) {
        const Vector k = mode == BoundMode::Upper ? Vector(a - F[i]) : Vector(F[i] - a);
        const PhiInstance inst(Dspec, k, a);
        std::vector<ExtValue> values;
        values.reserve(F.size());
        for (const auto& y : F) values.push_back(eval_phi(inst, y));

        if (std::abs(values[i].value() - anchor) > kAnchorTol)
            throw std::logic_error("scalarize_bounded: anchor value " + std::to_string(anchor) +
                                   " violated at index " + std::to_string(i));

        double min_v = std::numeric_limits<double>::infinity();
        for (const auto& v : values) min_v = std::min(min_v, v.value());
        const bool in_weff = values[i].value() <= min_v + cmp;
        bool in_eff = true;
        std::optional<size_t> witness;
        for (size_t j = 0; j < F.size() && in_eff; ++j) {
            if (j == i || (F[j] - F[i]).isZero(0.0)) continue;
            if (values[j].value() <= values[i].value() + cmp) {
                in_eff = false;
                if (values[j].value() < values[i].value() - cmp) witness = j;
            }
        }
        if (in_eff) out.eff_indices.push_back(i);
        if (in_weff) out.weff_indices.push_back(i);
        const CertKind kind = in_eff  ? CertKind::Efficient
                              : in_weff ? CertKind::WeaklyEfficient
                                        : CertKind::Refuted;
        if (kind == CertKind::Refuted && !witness) {
            for (size_t j = 0; j < F.size(); ++j)
                if (values[j].value() <= min_v + cmp) {
                    witness = j;
                    break;
                }
        }
        out.certificates.push_back(make_certificate(F, i, k, values, kind, witness));
    }
    return out;
}

namespace {

/// Pairwise fallback for candidates whose constructive k hits the lineality
/// of D; mirrors the brute-force efficiency test for that single index.
bool brute_force_efficient(const PointCloud& F, size_t i, const SetSpec& D, std::optional<size_t>& witness) {
    for (size_t j = 0; j < F.size(); ++j) {
        if (j == i || (F[j] - F[i]).isZero(0.0)) continue;
        if (member(D, Vector(F[i] - F[j]))) {
            witness = j;
            return false;
        }
    }
    return true;
}

}  // namespace

ConeFrontResult scalarize_upper_cone(const PointCloud& F, const PolyhedralSet& D, const Vector& a) {
    if (F.size() < 2) throw PreconditionError("scalarize_upper_cone: need more than one point");
    if (a.size() != F.dim()) throw DimensionError("scalarize_upper_cone: dimension mismatch");
    if (!is_cone(D)) throw HypothesisError("scalarize_upper_cone: D must be a cone (zero offsets)");
    const double cmp = tolerances().cmp;
    const SetSpec Dspec = SetSpec::polyhedral(D);

    for (size_t i = 0; i < F.size(); ++i)
        if (!member(D, Vector(a - F[i])))
            throw PreconditionError("scalarize_upper_cone: bound violated at index " + std::to_string(i) +
                                    " (F not inside a - D)");

    ConeFrontResult out;
    out.certificates.reserve(F.size());
    for (size_t i = 0; i < F.size(); ++i) {
        const Vector k = a - F[i];
        if (k.isZero(0.0) || member(D, Vector(-k))) {
            // k in D cap -D: the functional attains no real value for this
            // candidate; decide by the pairwise scan instead.
            std::optional<size_t> witness;
            const bool effective = brute_force_efficient(F, i, Dspec, witness);
            if (effective) out.efficient.push_back(i);
            out.lineality_skipped.push_back(i);
            out.certificates.push_back(
                make_certificate(F, i, k, std::vector<ExtValue>(F.size(), ExtValue::nu()),
                                 effective ? CertKind::Efficient : CertKind::Refuted, witness));
            continue;
        }
        const PhiInstance inst(Dspec, k, a);
        std::vector<ExtValue> values;
        values.reserve(F.size());
        for (const auto& y : F) values.push_back(eval_phi(inst, y));

        if (values[i].is_real() && values[i].value() > -1.0 + cmp)
            throw std::logic_error("scalarize_upper_cone: candidate value above -1 at index " +
                                   std::to_string(i));

        bool in_eff = values[i].is_real();
        std::optional<size_t> witness;
        for (size_t j = 0; j < F.size() && in_eff; ++j) {
            if (!counts_against(F, i, j, values[j])) continue;
            if (values[j].is_neg_inf() || values[j].value() <= values[i].value() + cmp) {
                in_eff = false;
                witness = j;
            }
        }
        if (in_eff) out.efficient.push_back(i);
        out.certificates.push_back(
            make_certificate(F, i, k, values, in_eff ? CertKind::Efficient : CertKind::Refuted, witness));
    }
    return out;
}

ConeFrontResult scalarize_lower_cone(const PointCloud& F, const PolyhedralSet& D, const Vector& a) {
    if (F.empty()) throw std::invalid_argument("scalarize_lower_cone: empty point cloud");
    if (a.size() != F.dim()) throw DimensionError("scalarize_lower_cone: dimension mismatch");
    require_pointed(D, "scalarize_lower_cone");
    const double cmp = tolerances().cmp;
    const SetSpec Dspec = SetSpec::polyhedral(D);

    for (size_t i = 0; i < F.size(); ++i)
        if (!member(D, Vector(F[i] - a)))
            throw PreconditionError("scalarize_lower_cone: bound violated at index " + std::to_string(i) +
                                    " (F not inside a + D)");

    ConeFrontResult out;
    std::vector<size_t> a_indices;
    for (size_t i = 0; i < F.size(); ++i)
        if ((F[i] - a).isZero(0.0)) a_indices.push_back(i);
    if (!a_indices.empty()) {
        // Eff(F, D) = {a} when a lies in F.
        out.efficient = a_indices;
        for (size_t i = 0; i < F.size(); ++i) {
            const bool is_a = (F[i] - a).isZero(0.0);
            out.certificates.push_back(make_certificate(
                F, i, Vector(F[i] - a), std::vector<ExtValue>(F.size(), ExtValue::nu()),
                is_a ? CertKind::Efficient : CertKind::Refuted,
                is_a ? std::nullopt : std::optional<size_t>(a_indices.front())));
        }
        return out;
    }

    out.certificates.reserve(F.size());
    for (size_t i = 0; i < F.size(); ++i) {
        const Vector k = F[i] - a;
        const PhiInstance inst(Dspec, k, a);
        std::vector<ExtValue> values;
        values.reserve(F.size());
        for (const auto& y : F) values.push_back(eval_phi(inst, y));

        if (!values[i].is_real() || values[i].value() > 1.0 + cmp)
            throw std::logic_error("scalarize_lower_cone: candidate value above +1 at index " +
                                   std::to_string(i));

        bool in_eff = true;
        std::optional<size_t> witness;
        for (size_t j = 0; j < F.size() && in_eff; ++j) {
            if (!counts_against(F, i, j, values[j])) continue;
            if (values[j].is_neg_inf() || values[j].value() <= values[i].value() + cmp) {
                in_eff = false;
                witness = j;
            }
        }
        if (in_eff) out.efficient.push_back(i);
        out.certificates.push_back(
            make_certificate(F, i, k, values, in_eff ? CertKind::Efficient : CertKind::Refuted, witness));
    }
    return out;
}

}  // namespace vopt
