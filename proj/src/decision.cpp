#include "vopt/decision.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <random>
#include <sstream>

namespace vopt {

Relation Relation::from_domination_set(SetSpec D, bool strip_zero) {
    Relation r;
    r.kind_ = Kind::FromDominationSet;
    r.dset_ = std::move(D);
    r.strip_zero_ = strip_zero;
    return r;
}

Relation Relation::norm2_weak() {
    Relation r;
    r.kind_ = Kind::Norm2Weak;
    return r;
}

Relation Relation::table(PointCloud points, std::vector<std::vector<bool>> matrix) {
    if (matrix.size() != points.size())
        throw std::invalid_argument("Relation::table: matrix rows must match cloud size");
    for (const auto& row : matrix)
        if (row.size() != points.size())
            throw std::invalid_argument("Relation::table: matrix must be square");
    Relation r;
    r.kind_ = Kind::Table;
    r.table_points_ = std::move(points);
    r.table_ = std::move(matrix);
    return r;
}

namespace {

std::optional<size_t> find_point(const PointCloud& cloud, const Vector& y) {
    for (size_t i = 0; i < cloud.size(); ++i)
        if ((cloud[i] - y).isZero(0.0)) return i;
    return std::nullopt;
}

}  // namespace

bool Relation::holds(const Vector& y1, const Vector& y2) const {
    switch (kind_) {
        case Kind::FromDominationSet: {
            const Vector d = y2 - y1;
            if (strip_zero_ && d.isZero(0.0)) return false;
            return member(*dset_, d);
        }
        case Kind::Norm2Weak:
            if (y1.size() != y2.size()) throw DimensionError("Relation::holds: dimension mismatch");
            return y1.norm() <= y2.norm();
        default: {
            const auto i = find_point(table_points_, y1);
            const auto j = find_point(table_points_, y2);
            if (!i || !j) throw std::invalid_argument("Relation::holds: point not in table cloud");
            return table_[*i][*j];
        }
    }
}

bool structure_member(const Relation& rel, const StructureQuery& q) {
    if (q.y.size() != q.d.size()) throw DimensionError("structure_member: dimension mismatch");
    if (q.pre) return rel.holds(Vector(q.y - q.d), q.y);
    return rel.holds(q.y, Vector(q.y + q.d));
}

std::vector<size_t> min_relation(const PointCloud& F, const Relation& rel) {
    if (F.empty()) throw std::invalid_argument("min_relation: empty point cloud");
    std::vector<size_t> out;
    for (size_t i = 0; i < F.size(); ++i) {
        bool minimal = true;
        for (size_t j = 0; j < F.size() && minimal; ++j)
            if (rel.holds(F[j], F[i]) && !rel.holds(F[i], F[j])) minimal = false;
        if (minimal) out.push_back(i);
    }
    return out;
}

const char* to_string(PropStatus s) {
    switch (s) {
        case PropStatus::Holds: return "holds";
        case PropStatus::Fails: return "fails";
        default: return "sampled: no counterexample";
    }
}

namespace {

PropStatus combine(std::initializer_list<PropStatus> parts) {
    PropStatus out = PropStatus::Holds;
    for (PropStatus p : parts) {
        if (p == PropStatus::Fails) return PropStatus::Fails;
        if (p == PropStatus::SampledNoCounterexample) out = PropStatus::SampledNoCounterexample;
    }
    return out;
}

std::string fmt_vec(const Vector& v) {
    std::ostringstream os;
    os.precision(12);
    os << "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

/// Crude data radius so the sampled probes cover the interesting region.
double probe_radius(const SetSpec& D) {
    double r = 4.0;
    switch (D.kind()) {
        case SetSpec::Kind::Polyhedral:
            r += D.polyhedron().offsets().cwiseAbs().maxCoeff();
            break;
        case SetSpec::Kind::Shifted:
            r = probe_radius(D.base()) + D.shift().lpNorm<Eigen::Infinity>();
            break;
        case SetSpec::Kind::UnionTranslates: {
            r = probe_radius(D.base());
            for (const auto& t : D.translates()) r = std::max(r, 4.0 + t.lpNorm<Eigen::Infinity>());
            break;
        }
        default:
            break;
    }
    return r;
}

}  // namespace

RelationPropsReport check_relation_props(const SetSpec& D, int samples, std::uint64_t seed) {
    RelationPropsReport rep;
    const Eigen::Index n = D.dim();
    const Vector zero = Vector::Zero(n);
    const bool zero_in = member(D, zero);
    rep.reflexive = zero_in ? PropStatus::Holds : PropStatus::Fails;

    std::mt19937_64 rng(seed);
    const double radius = probe_radius(D);
    std::uniform_real_distribution<double> coord(-radius, radius);
    auto draw = [&]() {
        Vector v(n);
        for (Eigen::Index i = 0; i < n; ++i) v[i] = coord(rng);
        return v;
    };

    const auto cone_shift = as_shifted_cone(D);
    const bool pure_cone = cone_shift && cone_shift->shift.isZero(tolerances().feas);

    // D cap -D: exact via lineality for pure polyhedral cones, sampled probes otherwise.
    const bool asym_decided = zero_in;
    if (zero_in) {
        rep.asymmetric = PropStatus::Fails;
        rep.notes.push_back("asymmetric: 0 in D cap -D");
    }
    const bool antisym_decided = pure_cone;
    if (pure_cone) {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(cone_shift->normals);
        lu.setThreshold(1e-10);
        const Eigen::MatrixXd null_space = lu.kernel();
        const bool pointed = null_space.cols() == 0 || null_space.isZero(1e-10);
        rep.antisymmetric = pointed ? PropStatus::Holds : PropStatus::Fails;
        if (!pointed)
            rep.notes.push_back("antisymmetric: lineality direction " + fmt_vec(null_space.col(0)));
    }
    if (!asym_decided || !antisym_decided) {
        bool asym_cex = false, antisym_cex = false;
        Vector witness;
        for (int s = 0; s < samples && !antisym_cex; ++s) {
            const Vector d = draw();
            if (member(D, d) && member(D, Vector(-d))) {
                asym_cex = true;
                if (!d.isZero(0.0)) {
                    antisym_cex = true;
                    witness = d;
                }
            }
        }
        if (!asym_decided)
            rep.asymmetric = asym_cex ? PropStatus::Fails : PropStatus::SampledNoCounterexample;
        if (!antisym_decided)
            rep.antisymmetric = antisym_cex ? PropStatus::Fails : PropStatus::SampledNoCounterexample;
        if (antisym_cex) rep.notes.push_back("antisymmetric: counterexample d = " + fmt_vec(witness));
    }

    // D + D subset D: exact for (shifted) polyhedral cones, sampled otherwise.
    if (cone_shift) {
        const bool ok = ((cone_shift->normals * cone_shift->shift).array() >= -tolerances().feas).all();
        rep.transitive = ok ? PropStatus::Holds : PropStatus::Fails;
        if (!ok) rep.notes.push_back("transitive: shift not a recession direction, D+D exceeds D");
    } else {
        bool cex = false;
        std::vector<Vector> members;
        int tries = samples * 40;
        while (static_cast<int>(members.size()) < samples && tries-- > 0) {
            Vector d = draw();
            if (member(D, d)) members.push_back(std::move(d));
        }
        for (size_t i = 0; i + 1 < members.size() && !cex; i += 2) {
            const Vector sum = members[i] + members[i + 1];
            if (!member(D, sum)) {
                cex = true;
                rep.notes.push_back("transitive: d1+d2 leaves D at d1 = " + fmt_vec(members[i]) +
                                    ", d2 = " + fmt_vec(members[i + 1]));
            }
        }
        if (members.size() < 2) rep.notes.push_back("transitive: too few members sampled");
        rep.transitive = cex ? PropStatus::Fails : PropStatus::SampledNoCounterexample;
    }

    // D cup {0} a cone: exact for irredundant polyhedral data, sampled otherwise.
    {
        const auto branches = halfspace_branches(D);
        if (branches && branches->size() == 1) {
            const bool conic = branches->front().offsets.isZero(tolerances().feas);
            rep.scale_invariant = conic ? PropStatus::Holds : PropStatus::Fails;
        } else {
            bool cex = false;
            for (int s = 0; s < samples && !cex; ++s) {
                Vector d = draw();
                if (!member(D, d) || d.isZero(0.0)) continue;
                for (double lambda : {0.5, 2.0, 7.0}) {
                    if (!member(D, Vector(lambda * d))) {
                        cex = true;
                        rep.notes.push_back("scale: lambda*d leaves D at d = " + fmt_vec(d) +
                                            ", lambda = " + std::to_string(lambda));
                        break;
                    }
                }
            }
            rep.scale_invariant = cex ? PropStatus::Fails : PropStatus::SampledNoCounterexample;
        }
    }

    rep.convex_cone_order = combine({rep.transitive, rep.scale_invariant});
    rep.partial_order = combine({rep.reflexive, rep.antisymmetric, rep.transitive, rep.scale_invariant});
    return rep;
}

MinEffBridgeReport min_eff_bridge(const PointCloud& F, const SetSpec& D) {
    if (F.empty()) throw std::invalid_argument("min_eff_bridge: empty point cloud");
    MinEffBridgeReport rep;
    const Relation rel = Relation::from_domination_set(D, false);
    rep.min_indices = min_relation(F, rel);
    // D \ (-D): keep d with d in D and -d not in D.
    rep.eff_stripped_indices =
        eff_where(F, [&](const Vector& d) { return member(D, d) && !member(D, Vector(-d)); })
            .efficient_indices;
    rep.eff_indices = eff(F, D).efficient_indices;
    rep.min_equals_eff_stripped = rep.min_indices == rep.eff_stripped_indices;
    rep.min_equals_eff = rep.min_indices == rep.eff_indices;
    return rep;
}

ConstancyReport predomination_constancy_check(const Relation& rel, const PointCloud& grid,
                                              const PointCloud& probes) {
    ConstancyReport rep;
    if (grid.size() < 2) return rep;
    for (size_t p = 0; p < probes.size(); ++p) {
        const bool baseline = structure_member(rel, {grid[0], probes[p], true});
        for (size_t i = 1; i < grid.size(); ++i) {
            if (structure_member(rel, {grid[i], probes[p], true}) != baseline) {
                rep.constant = false;
                rep.violation = {0, i, p};
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace vopt
