#ifndef VOPT_TYPES_HPP
#define VOPT_TYPES_HPP

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace vopt {

/// A point of R^n.
using Vector = Eigen::VectorXd;

/// Global float comparison policy.  `feas` is the slack for non-strict
/// membership tests; strict inequalities require a margin larger than `feas`.
/// `cmp` is the strictness threshold used by the scalarization certificates.
struct Tolerances {
    double feas = 1e-9;
    double cmp = 1e-7;
};

/// Mutable process-wide tolerances.  Set once before concurrent use.
Tolerances& tolerances();

class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when (H1)/(H2) or a cone-shape hypothesis fails as a precondition.
class HypothesisError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a bound or shape precondition of an operation is violated
/// (e.g. F not inside a - int D).
class PreconditionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Ordering queries against the symbolic value nu are domain errors.
class NuComparisonError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Value of the functional phi: a finite real, -infinity, or the symbolic
/// value nu ("no feasible level", inf of the empty set).
class ExtValue {
  public:
    enum class Kind { Real, NegInf, Nu };

    static ExtValue real(double r) {
        if (!std::isfinite(r)) throw std::invalid_argument("ExtValue::real: payload must be finite");
        ExtValue v;
        v.kind_ = Kind::Real;
        v.value_ = r;
        return v;
    }
    static ExtValue neg_inf() {
        ExtValue v;
        v.kind_ = Kind::NegInf;
        return v;
    }
    static ExtValue nu() {
        ExtValue v;
        v.kind_ = Kind::Nu;
        return v;
    }

    Kind kind() const { return kind_; }
    bool is_real() const { return kind_ == Kind::Real; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_nu() const { return kind_ == Kind::Nu; }

    /// In-domain per the extended-value convention: real or -infinity.
    bool in_domain() const { return kind_ != Kind::Nu; }

    double value() const {
        if (!is_real()) throw std::logic_error("ExtValue::value: not a finite real");
        return value_;
    }

    friend bool operator<(const ExtValue& a, const ExtValue& b) {
        a.require_ordered("operator<");
        b.require_ordered("operator<");
        if (a.is_neg_inf()) return !b.is_neg_inf();
        if (b.is_neg_inf()) return false;
        return a.value_ < b.value_;
    }
    friend bool operator==(const ExtValue& a, const ExtValue& b) {
        if (a.is_nu() || b.is_nu()) return a.is_nu() && b.is_nu();
        if (a.is_neg_inf() || b.is_neg_inf()) return a.is_neg_inf() && b.is_neg_inf();
        return a.value_ == b.value_;
    }
    friend bool operator<=(const ExtValue& a, const ExtValue& b) {
        a.require_ordered("operator<=");
        b.require_ordered("operator<=");
        return a < b || a == b;
    }

  private:
    void require_ordered(const char* op) const {
        if (is_nu()) throw NuComparisonError(std::string(op) + ": nu is incomparable");
    }

    Kind kind_ = Kind::Nu;
    double value_ = 0.0;
};

std::string to_string(const ExtValue& v);

/// Finite indexed list of points, all of the same dimension.
class PointCloud {
  public:
    PointCloud() = default;
    explicit PointCloud(std::vector<Vector> points) { for (auto& p : points) push_back(std::move(p)); }

    void push_back(Vector p) {
        if (!p.allFinite()) throw std::invalid_argument("PointCloud: coordinates must be finite");
        if (!points_.empty() && p.size() != points_.front().size())
            throw DimensionError("PointCloud: inconsistent point dimension");
        points_.push_back(std::move(p));
    }

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    Eigen::Index dim() const { return points_.empty() ? 0 : points_.front().size(); }
    const Vector& operator[](std::size_t i) const { return points_.at(i); }
    const std::vector<Vector>& points() const { return points_; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

  private:
    std::vector<Vector> points_;
};

}  // namespace vopt

#endif
