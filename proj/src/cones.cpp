#include "vopt/cones.hpp"

#include <Eigen/Dense>

#include <vector>

namespace vopt {

Eigen::VectorXd nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, int max_iter) {
    const Eigen::Index n = A.cols();
    if (b.size() != A.rows()) throw DimensionError("nnls: dimension mismatch");
    if (max_iter <= 0) max_iter = 3 * static_cast<int>(n) + 30;

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    std::vector<bool> passive(n, false);
    const double tol = 1e-12 * (1.0 + b.norm());

    for (int iter = 0; iter < max_iter; ++iter) {
        const Eigen::VectorXd grad = A.transpose() * (b - A * x);
        Eigen::Index best = -1;
        double best_g = tol;
        for (Eigen::Index j = 0; j < n; ++j)
            if (!passive[j] && grad[j] > best_g) {
                best_g = grad[j];
                best = j;
            }
        if (best < 0) break;
        passive[best] = true;

        while (true) {
            std::vector<Eigen::Index> idx;
            for (Eigen::Index j = 0; j < n; ++j)
                if (passive[j]) idx.push_back(j);
            Eigen::MatrixXd Ap(A.rows(), static_cast<Eigen::Index>(idx.size()));
            for (std::size_t c = 0; c < idx.size(); ++c) Ap.col(static_cast<Eigen::Index>(c)) = A.col(idx[c]);
            const Eigen::VectorXd z = Ap.colPivHouseholderQr().solve(b);

            double alpha = 1.0;
            bool clipped = false;
            for (std::size_t c = 0; c < idx.size(); ++c) {
                if (z[static_cast<Eigen::Index>(c)] <= 0.0) {
                    const double xc = x[idx[c]];
                    const double step = xc / (xc - z[static_cast<Eigen::Index>(c)]);
                    if (step < alpha) alpha = step;
                    clipped = true;
                }
            }
            if (!clipped) {
                x.setZero();
                for (std::size_t c = 0; c < idx.size(); ++c) x[idx[c]] = z[static_cast<Eigen::Index>(c)];
                break;
            }
            for (std::size_t c = 0; c < idx.size(); ++c) {
                const Eigen::Index j = idx[c];
                x[j] += alpha * (z[static_cast<Eigen::Index>(c)] - x[j]);
                if (x[j] <= 1e-14) {
                    x[j] = 0.0;
                    passive[j] = false;
                }
            }
        }
    }
    return x;
}

bool in_conic_hull(const Eigen::MatrixXd& generators, const Vector& v, double tol) {
    if (generators.cols() != v.size()) throw DimensionError("in_conic_hull: dimension mismatch");
    const Eigen::VectorXd lambda = nnls(generators.transpose(), v);
    return (generators.transpose() * lambda - v).norm() <= tol * (1.0 + v.norm());
}

bool cone_contained(const Eigen::MatrixXd& W_inner, const Eigen::MatrixXd& W_outer, double tol) {
    for (Eigen::Index i = 0; i < W_outer.rows(); ++i)
        if (!in_conic_hull(W_inner, W_outer.row(i).transpose(), tol)) return false;
    return true;
}

}  // namespace vopt
