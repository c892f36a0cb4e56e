#include "vopt/functional.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace vopt {

PhiInstance::PhiInstance(SetSpec H, Vector k, Vector a) : H_(std::move(H)), k_(std::move(k)), a_(std::move(a)) {
    if (k_.size() != H_.dim() || a_.size() != H_.dim())
        throw DimensionError("PhiInstance: dimension mismatch");
    hyp_ = validate_h1(H_, k_);
    if (!hyp_.h1_ok) {
        std::string msg = "(H1): k in recession(H) \\ {0} violated";
        for (const auto& m : hyp_.messages) msg += "; " + m;
        throw HypothesisError(msg);
    }
    if (auto bs = halfspace_branches(H_)) {
        std::vector<Branch> out;
        out.reserve(bs->size());
        for (auto& b : *bs) out.push_back({b.normals, b.offsets, b.normals * k_});
        branches_ = std::move(out);
    }
}

const std::vector<PhiInstance::Branch>& PhiInstance::branches() const {
    if (!branches_) throw std::logic_error("PhiInstance::branches: oracle-represented set");
    return *branches_;
}

namespace {

/// Closed form on one branch { h : Wh >= c }:
///   y in a - H + tk  <=>  <w_i, z> + t <w_i, k> >= c_i for all i,  z := a - y.
/// Rows with <w_i,k> = 0 are t-independent feasibility gates; with no
/// positive row every t is feasible (-inf) once the gates pass.
ExtValue branch_value(const PhiInstance::Branch& b, const Vector& z) {
    const double eps = tolerances().feas;
    const Eigen::VectorXd wz = b.normals * z;
    double best = -std::numeric_limits<double>::infinity();
    bool has_pos = false;
    for (Eigen::Index i = 0; i < b.wk.size(); ++i) {
        if (b.wk[i] > eps) {
            has_pos = true;
            best = std::max(best, (b.offsets[i] - wz[i]) / b.wk[i]);
        } else if (wz[i] < b.offsets[i] - eps) {
            return ExtValue::nu();
        }
    }
    if (!has_pos) return ExtValue::neg_inf();
    return ExtValue::real(best);
}

ExtValue min_over(const std::vector<ExtValue>& vals) {
    ExtValue best = ExtValue::nu();
    for (const auto& v : vals) {
        if (v.is_nu()) continue;
        if (best.is_nu() || v < best) best = v;
    }
    return best;
}

}  // namespace

ExtValue eval_phi(const PhiInstance& inst, const Vector& y) {
    if (y.size() != inst.set().dim()) throw DimensionError("eval_phi: dimension mismatch");
    if (!inst.has_closed_form()) return eval_phi_bisection(inst, y);
    const Vector z = inst.reference() - y;
    std::vector<ExtValue> vals;
    vals.reserve(inst.branches().size());
    for (const auto& b : inst.branches()) vals.push_back(branch_value(b, z));
    return min_over(vals);
}

namespace {

/// inf { t : feasible(t) } for a predicate monotone nondecreasing in t.
ExtValue bisect_inf(const std::function<bool(double)>& feasible, const BisectionLimits& lim,
                    BisectionInfo* info) {
    BisectionInfo local;
    BisectionInfo& bi = info ? *info : local;
    double lo, hi;
    if (feasible(0.0)) {
        hi = 0.0;
        lo = -1.0;
        while (feasible(lo)) {
            hi = lo;
            lo *= 2.0;
            ++bi.iterations;
            if (-lo > lim.t_max) {
                bi.presumed = true;
                return ExtValue::neg_inf();
            }
        }
    } else {
        lo = 0.0;
        hi = 1.0;
        while (!feasible(hi)) {
            lo = hi;
            hi *= 2.0;
            ++bi.iterations;
            if (hi > lim.t_max) {
                bi.presumed = true;
                return ExtValue::nu();
            }
        }
    }
    while (hi - lo > lim.rel_tol * std::max(1.0, std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (feasible(mid))
            hi = mid;
        else
            lo = mid;
        ++bi.iterations;
    }
    if (!feasible(hi)) throw std::logic_error("bisect_inf: bracket lost (non-monotone membership)");
    return ExtValue::real(hi);
}

}  // namespace

ExtValue eval_phi_bisection(const PhiInstance& inst, const Vector& y, BisectionInfo* info,
                            const BisectionLimits& limits) {
    if (y.size() != inst.set().dim()) throw DimensionError("eval_phi_bisection: dimension mismatch");
    const SetSpec& H = inst.set();
    const Vector base = inst.reference() - y;
    const Vector& k = inst.direction();
    return bisect_inf([&](double t) { return member(H, Vector(base + t * k)); }, limits, info);
}

ExtValue eval_phi_complement(const PhiInstance& inst, const Vector& y) {
    if (y.size() != inst.set().dim()) throw DimensionError("eval_phi_complement: dimension mismatch");
    if (!inst.hypothesis().h2_ok)
        throw HypothesisError("(H2): H+R>k subset int H required for the complement functional");
    if (inst.has_closed_form()) {
        // Per branch: inf { t : a - y - tk not in int(branch) } = min_i (<w_i,z> - c_i)/<w_i,k>;
        // the complement of a union is the intersection, so branches combine by max.
        const Vector z = inst.reference() - y;
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& b : inst.branches()) {
            const Eigen::VectorXd wz = b.normals * z;
            double branch = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < b.wk.size(); ++i)
                branch = std::min(branch, (wz[i] - b.offsets[i]) / b.wk[i]);
            best = std::max(best, branch);
        }
        return ExtValue::real(best);
    }
    const SetSpec& H = inst.set();
    const Vector base = inst.reference() - y;
    const Vector& k = inst.direction();
    // y + tk in Y \ (a - int H)  <=>  a - y - tk not in int H; monotone in t under (H2).
    return bisect_inf([&](double t) { return !interior_member(H, Vector(base - t * k)); }, {}, nullptr);
}

bool sublevel_member(const PhiInstance& inst, double t, const Vector& y) {
    if (y.size() != inst.set().dim()) throw DimensionError("sublevel_member: dimension mismatch");
    return member(inst.set(), Vector(inst.reference() + t * inst.direction() - y));
}

bool phi_domain_member(const PhiInstance& inst, const Vector& y) {
    return !eval_phi(inst, y).is_nu();
}

double lipschitz_bound(const PhiInstance& inst) {
    if (!inst.has_closed_form())
        throw PreconditionError("lipschitz_bound: polyhedral H required");
    if (!inst.hypothesis().h2_ok)
        throw HypothesisError("(H2): H+R>k subset int H required for the Lipschitz bound");
    double bound = 0.0;
    for (const auto& b : inst.branches())
        for (Eigen::Index i = 0; i < b.wk.size(); ++i)
            bound = std::max(bound, b.normals.row(i).norm() / b.wk[i]);
    return bound;
}

}  // namespace vopt
