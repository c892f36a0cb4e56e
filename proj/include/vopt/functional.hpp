#ifndef VOPT_FUNCTIONAL_HPP
#define VOPT_FUNCTIONAL_HPP

#include <optional>

#include "vopt/sets.hpp"
#include "vopt/types.hpp"

namespace vopt {

/// Bracketing limits for the oracle (bisection) evaluation path.
struct BisectionLimits {
    double t_max = 1e15;
    double rel_tol = 1e-10;
};

struct BisectionInfo {
    int iterations = 0;
    /// Set when an unbounded classification (nu / -inf) rests on reaching
    /// t_max rather than on structure.
    bool presumed = false;
};

/// phi_{a-H,k}(y) = inf { t : y in a - H + t k }, with all sublevel sets
/// translates of a - H along k.  Construction validates (H1) and caches the
/// hypothesis report; polyhedral-based H additionally caches the flattened
/// halfspace branches for the closed-form evaluation.
class PhiInstance {
  public:
    PhiInstance(SetSpec H, Vector k, Vector a);

    const SetSpec& set() const { return H_; }
    const Vector& direction() const { return k_; }
    const Vector& reference() const { return a_; }
    const HypothesisReport& hypothesis() const { return hyp_; }

    /// True when the closed form over halfspace branches applies.
    bool has_closed_form() const { return branches_.has_value(); }

    struct Branch {
        Eigen::MatrixXd normals;
        Eigen::VectorXd offsets;
        Eigen::VectorXd wk;  // normals * k
    };
    const std::vector<Branch>& branches() const;

  private:
    SetSpec H_;
    Vector k_, a_;
    HypothesisReport hyp_;
    std::optional<std::vector<Branch>> branches_;
};

/// Evaluate phi.  Closed form on polyhedral-based H, monotone bracketing
/// bisection otherwise.
ExtValue eval_phi(const PhiInstance& inst, const Vector& y);

/// Bisection evaluation for any supported H; used as the independent oracle
/// against the closed form.
ExtValue eval_phi_bisection(const PhiInstance& inst, const Vector& y, BisectionInfo* info = nullptr,
                            const BisectionLimits& limits = {});

/// phi_{Y \ (a - int H), -k}(y); under (H2) it equals -phi_{a-H,k} wherever
/// both are real.  Requires (H2).
ExtValue eval_phi_complement(const PhiInstance& inst, const Vector& y);

/// y in a - H + t k, decided set-theoretically (independent of eval_phi).
bool sublevel_member(const PhiInstance& inst, double t, const Vector& y);

/// eval_phi(inst, y) != nu.
bool phi_domain_member(const PhiInstance& inst, const Vector& y);

/// max_i ||w_i||_2 / <w_i, k> over all branch rows; a Lipschitz constant for
/// the closed form.  Requires polyhedral H and (H2).
double lipschitz_bound(const PhiInstance& inst);

}  // namespace vopt

#endif
