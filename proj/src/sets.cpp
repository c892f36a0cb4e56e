#include "vopt/sets.hpp"

#include <Eigen/Dense>

#include <sstream>
#include <variant>

namespace vopt {

Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

std::string to_string(const ExtValue& v) {
    switch (v.kind()) {
        case ExtValue::Kind::Nu: return "nu";
        case ExtValue::Kind::NegInf: return "-inf";
        default: break;
    }
    std::ostringstream os;
    os.precision(17);
    os << v.value();
    return os.str();
}

PolyhedralSet::PolyhedralSet(Eigen::MatrixXd normals, Eigen::VectorXd offsets)
    : normals_(std::move(normals)), offsets_(std::move(offsets)) {
    if (normals_.rows() < 1) throw std::invalid_argument("PolyhedralSet: need at least one halfspace");
    if (normals_.cols() < 1) throw DimensionError("PolyhedralSet: dimension must be >= 1");
    if (offsets_.size() != normals_.rows())
        throw DimensionError("PolyhedralSet: offsets count must match normal count");
    if (!normals_.allFinite() || !offsets_.allFinite())
        throw std::invalid_argument("PolyhedralSet: entries must be finite");
    for (Eigen::Index i = 0; i < normals_.rows(); ++i)
        if (normals_.row(i).isZero(0.0))
            throw std::invalid_argument("PolyhedralSet: zero normal at row " + std::to_string(i));
    // Nonemptiness: with offsets <= 0 the origin is a feasibility witness;
    // for general offsets nonemptiness is caller-asserted.
}

bool member(const PolyhedralSet& P, const Vector& y) {
    if (y.size() != P.dim()) throw DimensionError("member: dimension mismatch");
    const double eps = tolerances().feas;
    return ((P.normals() * y - P.offsets()).array() >= -eps).all();
}

bool interior_member(const PolyhedralSet& P, const Vector& y) {
    if (y.size() != P.dim()) throw DimensionError("interior_member: dimension mismatch");
    const double eps = tolerances().feas;
    return ((P.normals() * y - P.offsets()).array() > eps).all();
}

PolyhedralSet recession_cone(const PolyhedralSet& P) {
    return PolyhedralSet(P.normals(), Eigen::VectorXd::Zero(P.halfspaces()));
}

bool is_cone(const PolyhedralSet& P) {
    return (P.offsets().array().abs() <= tolerances().feas).all();
}

bool is_pointed_cone(const PolyhedralSet& P) {
    if (!is_cone(P)) return false;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(P.normals());
    qr.setThreshold(1e-12);
    return qr.rank() == P.dim();
}

struct SetSpec::Node {
    struct Poly {
        PolyhedralSet set;
    };
    struct Shift {
        SetSpec base;
        Vector shift;
    };
    struct Union {
        SetSpec base;
        std::vector<Vector> translates;
    };
    struct Parabola {
        Eigen::Index dim;
    };
    std::variant<Poly, Shift, Union, Parabola> data;
};

SetSpec SetSpec::polyhedral(PolyhedralSet P) {
    return SetSpec(std::make_shared<Node>(Node{Node::Poly{std::move(P)}}));
}

SetSpec SetSpec::shifted(SetSpec base, Vector shift) {
    if (shift.size() != base.dim()) throw DimensionError("SetSpec::shifted: dimension mismatch");
    if (!shift.allFinite()) throw std::invalid_argument("SetSpec::shifted: shift must be finite");
    return SetSpec(std::make_shared<Node>(Node{Node::Shift{std::move(base), std::move(shift)}}));
}

SetSpec SetSpec::union_translates(SetSpec base, std::vector<Vector> translates) {
    if (translates.empty()) throw std::invalid_argument("SetSpec::union_translates: need at least one translate");
    for (const auto& t : translates) {
        if (t.size() != base.dim()) throw DimensionError("SetSpec::union_translates: dimension mismatch");
        if (!t.allFinite()) throw std::invalid_argument("SetSpec::union_translates: translate must be finite");
    }
    return SetSpec(std::make_shared<Node>(Node{Node::Union{std::move(base), std::move(translates)}}));
}

SetSpec SetSpec::parabola_epigraph(Eigen::Index dim) {
    if (dim < 2) throw DimensionError("SetSpec::parabola_epigraph: dimension must be >= 2");
    return SetSpec(std::make_shared<Node>(Node{Node::Parabola{dim}}));
}

SetSpec SetSpec::orthant(Eigen::Index dim) {
    return polyhedral(PolyhedralSet(Eigen::MatrixXd::Identity(dim, dim), Eigen::VectorXd::Zero(dim)));
}

SetSpec::Kind SetSpec::kind() const {
    switch (node_->data.index()) {
        case 0: return Kind::Polyhedral;
        case 1: return Kind::Shifted;
        case 2: return Kind::UnionTranslates;
        default: return Kind::ParabolaEpigraph;
    }
}

Eigen::Index SetSpec::dim() const {
    if (auto* p = std::get_if<Node::Poly>(&node_->data)) return p->set.dim();
    if (auto* s = std::get_if<Node::Shift>(&node_->data)) return s->base.dim();
    if (auto* u = std::get_if<Node::Union>(&node_->data)) return u->base.dim();
    return std::get<Node::Parabola>(node_->data).dim;
}

const PolyhedralSet& SetSpec::polyhedron() const {
    if (auto* p = std::get_if<Node::Poly>(&node_->data)) return p->set;
    throw std::logic_error("SetSpec::polyhedron: not a polyhedral spec");
}

const SetSpec& SetSpec::base() const {
    if (auto* s = std::get_if<Node::Shift>(&node_->data)) return s->base;
    if (auto* u = std::get_if<Node::Union>(&node_->data)) return u->base;
    throw std::logic_error("SetSpec::base: no base set");
}

const Vector& SetSpec::shift() const {
    if (auto* s = std::get_if<Node::Shift>(&node_->data)) return s->shift;
    throw std::logic_error("SetSpec::shift: not a shifted spec");
}

const std::vector<Vector>& SetSpec::translates() const {
    if (auto* u = std::get_if<Node::Union>(&node_->data)) return u->translates;
    throw std::logic_error("SetSpec::translates: not a union spec");
}

namespace {

bool parabola_member(Eigen::Index dim, const Vector& y, bool strict) {
    const double eps = tolerances().feas;
    const double quad = y.head(dim - 1).squaredNorm();
    return strict ? y[dim - 1] > quad + eps : y[dim - 1] >= quad - eps;
}

}  // namespace

bool member(const SetSpec& S, const Vector& y) {
    if (y.size() != S.dim()) throw DimensionError("member: dimension mismatch");
    switch (S.kind()) {
        case SetSpec::Kind::Polyhedral: return member(S.polyhedron(), y);
        case SetSpec::Kind::Shifted: return member(S.base(), Vector(y - S.shift()));
        case SetSpec::Kind::UnionTranslates: {
            for (const auto& t : S.translates())
                if (member(S.base(), Vector(y - t))) return true;
            return false;
        }
        default: return parabola_member(S.dim(), y, false);
    }
}

bool interior_member(const SetSpec& S, const Vector& y) {
    if (y.size() != S.dim()) throw DimensionError("interior_member: dimension mismatch");
    switch (S.kind()) {
        case SetSpec::Kind::Polyhedral: return interior_member(S.polyhedron(), y);
        case SetSpec::Kind::Shifted: return interior_member(S.base(), Vector(y - S.shift()));
        case SetSpec::Kind::UnionTranslates: {
            for (const auto& t : S.translates())
                if (interior_member(S.base(), Vector(y - t))) return true;
            return false;
        }
        default: return parabola_member(S.dim(), y, true);
    }
}

PolyhedralSet recession_cone(const SetSpec& S) {
    switch (S.kind()) {
        case SetSpec::Kind::Polyhedral: return recession_cone(S.polyhedron());
        case SetSpec::Kind::Shifted:
        case SetSpec::Kind::UnionTranslates: return recession_cone(S.base());
        default: break;
    }
    // Vertical ray: u_1..u_{n-1} = 0, u_n >= 0.
    const Eigen::Index n = S.dim();
    Eigen::MatrixXd W(2 * (n - 1) + 1, n);
    W.setZero();
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        W(2 * i, i) = 1.0;
        W(2 * i + 1, i) = -1.0;
    }
    W(2 * (n - 1), n - 1) = 1.0;
    return PolyhedralSet(W, Eigen::VectorXd::Zero(W.rows()));
}

namespace {

/// The polyhedral base underlying a spec, if any (parabola otherwise).
const PolyhedralSet* polyhedral_base(const SetSpec& S) {
    switch (S.kind()) {
        case SetSpec::Kind::Polyhedral: return &S.polyhedron();
        case SetSpec::Kind::Shifted:
        case SetSpec::Kind::UnionTranslates: return polyhedral_base(S.base());
        default: return nullptr;
    }
}

}  // namespace

HypothesisReport validate_h1(const SetSpec& H, const Vector& k) {
    if (k.size() != H.dim()) throw DimensionError("validate_h1: dimension mismatch");
    const double eps = tolerances().feas;
    HypothesisReport r;
    const PolyhedralSet rc = recession_cone(H);
    const bool k_nonzero = !k.isZero(0.0);
    r.k_in_recession = k_nonzero && member(rc, k);
    r.k_in_recession_interior = k_nonzero && interior_member(rc, k);
    r.lineality_hit = r.k_in_recession && member(rc, Vector(-k));
    r.h1_ok = k_nonzero && r.k_in_recession;
    if (!k_nonzero) r.messages.push_back("(H1): k must be nonzero");
    if (k_nonzero && !r.k_in_recession) r.messages.push_back("(H1): k not in the recession cone of H");
    if (r.lineality_hit)
        r.messages.push_back("k and -k both in the recession cone: phi attains no real value");

    if (const PolyhedralSet* base = polyhedral_base(H)) {
        const Eigen::VectorXd wk = base->normals() * k;
        r.h2_ok = r.h1_ok && (wk.array() > eps).all();
        if (r.h1_ok && !r.h2_ok) {
            for (Eigen::Index i = 0; i < wk.size(); ++i)
                if (!(wk[i] > eps)) {
                    r.messages.push_back("(H2): H+R>k subset int H violated at row " + std::to_string(i));
                    break;
                }
        }
    } else {
        const Eigen::Index n = H.dim();
        const bool axis = (k.head(n - 1).array().abs() <= eps).all() && k[n - 1] > eps;
        r.h2_ok = r.h1_ok && axis;
        if (r.h1_ok && !axis)
            r.messages.push_back("(H2): parabola epigraph requires k = (0,...,0,kappa), kappa > 0");
    }
    return r;
}

HypothesisReport validate_h2(const SetSpec& H, const Vector& k) { return validate_h1(H, k); }

SetSpec build_f_plus_d(const PointCloud& F, const SetSpec& D) {
    if (F.empty()) throw std::invalid_argument("build_f_plus_d: empty point cloud");
    if (F.dim() != D.dim()) throw DimensionError("build_f_plus_d: dimension mismatch");
    return SetSpec::union_translates(D, F.points());
}

namespace {

void collect_branches(const SetSpec& S, const Vector& shift, std::vector<HalfspaceBranch>& out, bool& ok) {
    if (!ok) return;
    switch (S.kind()) {
        case SetSpec::Kind::Polyhedral: {
            const PolyhedralSet& P = S.polyhedron();
            // { x : W(x - s) >= c } = { x : Wx >= c + Ws }
            out.push_back({P.normals(), P.offsets() + P.normals() * shift});
            return;
        }
        case SetSpec::Kind::Shifted:
            collect_branches(S.base(), Vector(shift + S.shift()), out, ok);
            return;
        case SetSpec::Kind::UnionTranslates:
            for (const auto& t : S.translates()) collect_branches(S.base(), Vector(shift + t), out, ok);
            return;
        default:
            ok = false;
            return;
    }
}

}  // namespace

std::optional<std::vector<HalfspaceBranch>> halfspace_branches(const SetSpec& S) {
    std::vector<HalfspaceBranch> out;
    bool ok = true;
    collect_branches(S, Vector::Zero(S.dim()), out, ok);
    if (!ok) return std::nullopt;
    return out;
}

std::optional<ConeWithShift> as_shifted_cone(const SetSpec& S) {
    auto branches = halfspace_branches(S);
    if (!branches || branches->size() != 1) return std::nullopt;
    const auto& b = branches->front();
    // { x : Wx >= c } is a cone through s iff Ws = c is consistent.
    Vector s = b.normals.colPivHouseholderQr().solve(b.offsets);
    if ((b.normals * s - b.offsets).lpNorm<Eigen::Infinity>() > 1e-9) return std::nullopt;
    if (b.offsets.isZero(tolerances().feas)) s.setZero();
    return ConeWithShift{b.normals, s};
}

}  // namespace vopt
