#ifndef VOPT_SCALARIZE_HPP
#define VOPT_SCALARIZE_HPP

#include <optional>
#include <vector>

#include "vopt/efficiency.hpp"
#include "vopt/functional.hpp"
#include "vopt/sets.hpp"
#include "vopt/types.hpp"

namespace vopt {

enum class CertKind { Efficient, WeaklyEfficient, Refuted, Indeterminate };

const char* to_string(CertKind k);

/// Per-point certification outcome.  `values` carries phi at every cloud
/// index (including the candidate); `margin` is the minimum over the other
/// in-domain points of (value - value at the candidate), +infinity when
/// there are none.
struct Certificate {
    size_t point_index = 0;
    CertKind kind = CertKind::Indeterminate;
    Vector k_used;
    std::vector<std::pair<size_t, ExtValue>> values;
    std::optional<size_t> witness;
    double margin = 0.0;
};

/// Necessary-and-sufficient test: i is efficient iff phi_{-D,k}(y_j - y_i) > 0
/// for every other in-domain cloud point.  Values inside the comparison band
/// [-cmp, cmp] yield Indeterminate rather than a boolean.  Requires (H1).
Certificate certify_efficient(const PointCloud& F, size_t i, const SetSpec& D, const Vector& k);

/// Weak variant: i is weakly efficient iff all other in-domain values are
/// >= 0 (within cmp).  Requires (H2).
Certificate certify_weakly_efficient(const PointCloud& F, size_t i, const SetSpec& D, const Vector& k);

enum class ScalClass { CertifiedEfficient, SubsetOfEff, SubsetOfWEff, NoClaim };

const char* to_string(ScalClass c);

struct ScalarizationOutcome {
    std::vector<size_t> psi;
    bool unique = false;
    ScalClass classification = ScalClass::NoClaim;
    std::vector<ExtValue> values;   // per cloud index
    std::vector<size_t> dropped_nu; // indices outside dom phi
};

/// Strongest inclusion the cone arithmetic can establish for (H, D):
/// H+(D\{0}) inside int H -> SubsetOfEff; H+D inside H and unique ->
/// CertifiedEfficient; H+D inside H -> SubsetOfWEff.  Exact on (shifted)
/// polyhedral cone data, NoClaim otherwise.
ScalClass classify_scalarization(const SetSpec& H, const SetSpec& D, bool unique);

/// Psi = argmin over F of phi_{a-H,k}, nu values dropped and recorded;
/// classification per classify_scalarization.
ScalarizationOutcome scalarize_argmin(const PointCloud& F, const SetSpec& H, const Vector& k,
                                      const Vector& a, const SetSpec& D);

enum class BoundMode { Upper, Lower };

struct BoundedFrontResult {
    std::vector<size_t> eff_indices;
    std::vector<size_t> weff_indices;
    std::vector<Certificate> certificates;  // one per cloud index
};

/// Per-point scalarization with the constructive direction k_i = a - y_i
/// (upper, F strictly inside a - int D) or k_i = y_i - a (lower, F strictly
/// inside a + int D); recovers WEff as the argmin members and Eff as the
/// strict unique minimizers.  The anchor value phi(y_i) = -1 / +1 is checked
/// to 1e-9.
BoundedFrontResult scalarize_bounded(const PointCloud& F, const PolyhedralSet& D, const Vector& a,
                                     BoundMode mode);

struct ConeFrontResult {
    std::vector<size_t> efficient;
    std::vector<Certificate> certificates;
    std::vector<size_t> lineality_skipped;  // candidates decided by brute force
};

/// F inside a - D (non-strict), |F| > 1: i is efficient iff its value under
/// k_i = a - y_i is strictly below every other in-domain value.  Candidates
/// whose k_i hits the lineality of D are decided by the pairwise scan and
/// reported in `lineality_skipped`.
ConeFrontResult scalarize_upper_cone(const PointCloud& F, const PolyhedralSet& D, const Vector& a);

/// F inside a + D for pointed D.  If a itself is in F the efficient set is
/// exactly the indices of a; otherwise k_i = y_i - a with the strict-minimum
/// rule over F cap dom phi.
ConeFrontResult scalarize_lower_cone(const PointCloud& F, const PolyhedralSet& D, const Vector& a);

}  // namespace vopt

#endif
