#ifndef VOPT_SETS_HPP
#define VOPT_SETS_HPP

#include <Eigen/Core>

#include <memory>
#include <optional>
#include <vector>

#include "vopt/types.hpp"

namespace vopt {

/// Closed polyhedron in halfspace form, H = { h : <w_i, h> >= c_i for all i }.
/// The representation is treated as irredundant; with redundant halfspaces the
/// interior-of-recession-cone test can reject valid (H2) instances.
class PolyhedralSet {
  public:
    /// `normals` holds the w_i as rows; `offsets` the c_i.
    PolyhedralSet(Eigen::MatrixXd normals, Eigen::VectorXd offsets);

    const Eigen::MatrixXd& normals() const { return normals_; }
    const Eigen::VectorXd& offsets() const { return offsets_; }
    Eigen::Index dim() const { return normals_.cols(); }
    Eigen::Index halfspaces() const { return normals_.rows(); }

  private:
    Eigen::MatrixXd normals_;
    Eigen::VectorXd offsets_;
};

bool member(const PolyhedralSet& P, const Vector& y);
bool interior_member(const PolyhedralSet& P, const Vector& y);

/// { u : <w_i, u> >= 0 for all i } — same normals, zero offsets.
PolyhedralSet recession_cone(const PolyhedralSet& P);

/// All offsets zero (the representation denotes a cone).
bool is_cone(const PolyhedralSet& P);

/// Cone with trivial lineality space: {u : Wu = 0} = {0}, i.e. rank(W) = n.
bool is_pointed_cone(const PolyhedralSet& P);

/// Representation of a closed set: polyhedral, a shift of another set, a
/// finite union of translates of one set, or the built-in analytic oracle
/// { h : h_n >= h_1^2 + ... + h_{n-1}^2 }.
class SetSpec {
  public:
    enum class Kind { Polyhedral, Shifted, UnionTranslates, ParabolaEpigraph };

    static SetSpec polyhedral(PolyhedralSet P);
    static SetSpec shifted(SetSpec base, Vector shift);
    static SetSpec union_translates(SetSpec base, std::vector<Vector> translates);
    static SetSpec parabola_epigraph(Eigen::Index dim);

    /// Convenience: the nonnegative orthant of R^n.
    static SetSpec orthant(Eigen::Index dim);

    Kind kind() const;
    Eigen::Index dim() const;

    // Accessors; each throws std::logic_error when the kind does not match.
    const PolyhedralSet& polyhedron() const;
    const SetSpec& base() const;
    const Vector& shift() const;
    const std::vector<Vector>& translates() const;

  private:
    struct Node;
    explicit SetSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// y in S, within the global feasibility tolerance.
bool member(const SetSpec& S, const Vector& y);

/// y in int S.  For a union of translates this is the union of the interiors
/// of the translates, a sound under-approximation that is exact for the
/// full-dimensional F+D sets used here.
bool interior_member(const SetSpec& S, const Vector& y);

/// Recession cone of the underlying base set in halfspace form.  For
/// shifted/translated polyhedral bases this equals the base's recession cone;
/// for the parabola epigraph it is the vertical ray {u : u_1..u_{n-1}=0, u_n>=0}.
PolyhedralSet recession_cone(const SetSpec& S);

/// Diagnostics for the standing hypotheses on a pair (H, k).
struct HypothesisReport {
    bool h1_ok = false;
    bool h2_ok = false;
    bool k_in_recession = false;
    bool k_in_recession_interior = false;
    bool lineality_hit = false;  // k and -k both in the recession cone
    std::vector<std::string> messages;
};

/// (H1): k nonzero and k in the recession cone of H.  Sets lineality_hit when
/// -k is also a recession direction (phi then attains no real value).
HypothesisReport validate_h1(const SetSpec& H, const Vector& k);

/// (H2): H + R_> k inside int H.  Polyhedral: <w_i,k> > 0 for every i of the
/// base; parabola epigraph: k = (0,...,0,kappa) with kappa > 0.
HypothesisReport validate_h2(const SetSpec& H, const Vector& k);

/// F + D as the union of the translates y + D over y in F.
SetSpec build_f_plus_d(const PointCloud& F, const SetSpec& D);

/// One halfspace system { h : W h >= c } of a polyhedral-based spec, shifts
/// already absorbed into the offsets.  A spec flattens to the union of its
/// branches; nullopt when an oracle kind (parabola) occurs.
struct HalfspaceBranch {
    Eigen::MatrixXd normals;
    Eigen::VectorXd offsets;
};
std::optional<std::vector<HalfspaceBranch>> halfspace_branches(const SetSpec& S);

/// Decomposition S = shift + {x : Wx >= 0} when the offsets are consistent
/// with a pure cone through `shift`.  Used by the inclusion checks behind the
/// scalarization classifications.
struct ConeWithShift {
    Eigen::MatrixXd normals;
    Vector shift;
};
std::optional<ConeWithShift> as_shifted_cone(const SetSpec& S);

}  // namespace vopt

#endif
