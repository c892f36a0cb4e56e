#ifndef VOPT_NORMS_HPP
#define VOPT_NORMS_HPP

#include <cstdint>

#include "vopt/scalarize.hpp"
#include "vopt/sets.hpp"
#include "vopt/types.hpp"

namespace vopt {

/// Order unit norm ||.||_{C,k}: the Minkowski gauge of the order interval
/// [-k,k]_C = (-k+C) cap (k-C) for a pointed polyhedral cone C and
/// k in int C.  Closed form: max_i |<w_i,y>| / <w_i,k>.
class OrderUnitNorm {
  public:
    OrderUnitNorm(PolyhedralSet cone, Vector k);

    double operator()(const Vector& y) const;

    const PolyhedralSet& cone() const { return cone_; }
    const Vector& unit() const { return k_; }

  private:
    PolyhedralSet cone_;
    Vector k_;
    Eigen::VectorXd wk_;
};

inline double norm(const OrderUnitNorm& n, const Vector& y) { return n(y); }

struct IdentityCheckReport {
    int samples = 0;
    double max_deviation = 0.0;
    bool ok = false;
};

/// Samples y in a + C (nonnegative combinations of recession directions) and
/// compares ||y-a||_{C,k} against phi_{a-C,k}(y); they must agree to 1e-9 on
/// that set.
IdentityCheckReport norm_phi_identity_check(const OrderUnitNorm& n, const Vector& a, int samples,
                                            std::uint64_t seed);

/// Psi = argmin over F of ||y-a||_{C,k} under the lower bound F inside a+C;
/// classification mirrors scalarize_argmin with C in place of H.
ScalarizationOutcome norm_scalarize_argmin(const PointCloud& F, const PolyhedralSet& C, const Vector& k,
                                           const Vector& a, const SetSpec& D);

/// Per-point norm scalarization with k_i = y_i - a under the strict bound
/// F inside a + int D; recovers eff/weff with the anchor ||y_i-a|| = 1.
BoundedFrontResult norm_scalarize_bounded(const PointCloud& F, const PolyhedralSet& D, const Vector& a);

}  // namespace vopt

#endif
