#ifndef VOPT_EFFICIENCY_HPP
#define VOPT_EFFICIENCY_HPP

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "vopt/sets.hpp"
#include "vopt/types.hpp"

namespace vopt {

struct EffResult {
    std::vector<size_t> efficient_indices;                         // filled by eff()
    std::optional<std::vector<size_t>> weakly_efficient_indices;   // filled by weff()
    std::map<size_t, size_t> dominance_witness;                    // rejected index -> first dominator
};

/// Eff(F, D): index i survives iff no j with y_j != y_i and y_i - y_j in D.
/// Points equal to y_i never disqualify it (set semantics).
EffResult eff(const PointCloud& F, const SetSpec& D);

/// WEff(F, D) = Eff(F, int D); an empty-interior D rejects nothing.
EffResult weff(const PointCloud& F, const SetSpec& D);

/// Generalized pairwise scan: i is rejected iff some j has y_j != y_i and
/// dominates(y_i - y_j).  Backs eff/weff and the lineality-stripped variants.
/// The recorded witness is the first strictly-dominating index when
/// `strictly_dominates` is given and one exists, else the first dominator.
EffResult eff_where(const PointCloud& F, const std::function<bool(const Vector&)>& dominates,
                    const std::function<bool(const Vector&)>& strictly_dominates = nullptr);

/// phi_{F+D,-k}(z) = min over y in F of max_j <w_j, y - z> / <w_j, k>
/// (closed form over translates); requires the cone rows to satisfy <w_j,k> > 0.
double phi_f_plus_d(const PointCloud& F, const PolyhedralSet& cone, const Vector& k, const Vector& z);

/// { i : phi_{F+D,-k}(y_i) = 0 within tol } — the boundary slice of F + D.
/// Requires a cone D with (H2_{D,k}), i.e. k strictly inside.
std::vector<size_t> weff_boundary(const PointCloud& F, const PolyhedralSet& cone, const Vector& k,
                                  double tol = 1e-8);

struct LocalizeReport {
    bool eff_subset_of_boundary = false;
    bool weff_equals_boundary = false;
    std::vector<size_t> eff_violations;    // efficient indices off the boundary slice
    std::vector<size_t> weff_mismatches;   // symmetric difference weff vs boundary slice
};

/// Checks Eff(F,D) inside F cap bd(F+D) and WEff(F,D) = F cap bd(F+D).
LocalizeReport localize_check(const PointCloud& F, const PolyhedralSet& cone, const Vector& k);

/// Minimizers over F of inf { t : y in -C + tk } = max_j <w_j, y> / <w_j, k>;
/// nonempty for nonempty F, and contained in Eff(F, D) for any D with
/// D \ {0} inside int C.  Requires a cone C and k with W k > 0.
std::vector<size_t> exists_eff(const PointCloud& F, const PolyhedralSet& C, const Vector& k);

struct ExistsEffReport {
    std::vector<size_t> indices;
    bool contained_in_eff = false;
};

/// exists_eff plus the containment check against the brute-force efficient
/// set of the supplied domination set.
ExistsEffReport exists_eff_checked(const PointCloud& F, const PolyhedralSet& C, const Vector& k,
                                   const SetSpec& D);

struct ArgminResult {
    std::vector<size_t> indices;
    bool unique = false;
};

/// Indices within tol of the minimum.  -inf entries dominate: if present,
/// exactly those are returned.  Nu entries must be excluded by the caller.
ArgminResult argmin_scalar(const std::vector<ExtValue>& values, double tol);

}  // namespace vopt

#endif
