#ifndef VOPT_CONES_HPP
#define VOPT_CONES_HPP

#include <Eigen/Core>

#include "vopt/types.hpp"

namespace vopt {

/// Nonnegative least squares, min ||A x - b|| s.t. x >= 0 (Lawson-Hanson
/// active set).  Sized for the small systems of the inclusion checks.
Eigen::VectorXd nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, int max_iter = 0);

/// v in cone spanned by the rows of `generators` (Farkas route: residual of
/// the NNLS fit below tolerance).
bool in_conic_hull(const Eigen::MatrixXd& generators, const Vector& v, double tol = 1e-8);

/// { x : W_inner x >= 0 } subset of { x : W_outer x >= 0 }.  Exact for
/// halfspace data: each outer normal must lie in the conic hull of the inner
/// normals (dual-cone membership).
bool cone_contained(const Eigen::MatrixXd& W_inner, const Eigen::MatrixXd& W_outer, double tol = 1e-8);

}  // namespace vopt

#endif
