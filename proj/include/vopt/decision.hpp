#ifndef VOPT_DECISION_HPP
#define VOPT_DECISION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "vopt/efficiency.hpp"
#include "vopt/sets.hpp"
#include "vopt/types.hpp"

namespace vopt {

/// A binary preference relation: induced by a domination set
/// (y1 > y2 iff y2 in y1 + D), the built-in weak norm comparison
/// (y1 > y2 iff ||y1||_2 <= ||y2||_2), or an explicit truth table over a
/// fixed point cloud.
class Relation {
  public:
    enum class Kind { FromDominationSet, Norm2Weak, Table };

    static Relation from_domination_set(SetSpec D, bool strip_zero);
    static Relation norm2_weak();
    static Relation table(PointCloud points, std::vector<std::vector<bool>> matrix);

    Kind kind() const { return kind_; }
    bool holds(const Vector& y1, const Vector& y2) const;

  private:
    Relation() = default;
    Kind kind_ = Kind::Norm2Weak;
    std::optional<SetSpec> dset_;
    bool strip_zero_ = false;
    PointCloud table_points_;
    std::vector<std::vector<bool>> table_;
};

struct StructureQuery {
    Vector y;
    Vector d;
    bool pre = false;  // false: domination factor (y > y+d); true: pre-domination (y-d > y)
};

bool structure_member(const Relation& rel, const StructureQuery& q);

/// Min(F, >) = { y0 in F : for all y in F, y > y0 implies y0 > y }.
std::vector<size_t> min_relation(const PointCloud& F, const Relation& rel);

enum class PropStatus { Holds, Fails, SampledNoCounterexample };

const char* to_string(PropStatus s);

/// Relation properties read off the set characterizations of the induced
/// relation.  Exact where the polyhedral structure decides the question;
/// otherwise a seeded sampled semi-decision.
struct RelationPropsReport {
    PropStatus reflexive = PropStatus::Fails;          // 0 in D
    PropStatus asymmetric = PropStatus::Fails;         // D cap -D empty
    PropStatus antisymmetric = PropStatus::Fails;      // D cap -D subset {0}
    PropStatus transitive = PropStatus::Fails;         // D + D subset D
    PropStatus scale_invariant = PropStatus::Fails;    // D cup {0} a cone
    PropStatus convex_cone_order = PropStatus::Fails;  // transitive + scale-invariant
    PropStatus partial_order = PropStatus::Fails;      // reflexive + antisymmetric + transitive + scale
    std::vector<std::string> notes;
};

RelationPropsReport check_relation_props(const SetSpec& D, int samples = 256, std::uint64_t seed = 42);

struct MinEffBridgeReport {
    std::vector<size_t> min_indices;
    std::vector<size_t> eff_stripped_indices;  // Eff(F, D \ -D)
    std::vector<size_t> eff_indices;           // Eff(F, D)
    bool min_equals_eff_stripped = false;
    bool min_equals_eff = false;
};

/// Min over the induced relation against the lineality-stripped efficient
/// set (they must coincide); also reports plain Eff(F, D) for the
/// asymmetric/antisymmetric bridge.
MinEffBridgeReport min_eff_bridge(const PointCloud& F, const SetSpec& D);

struct ConstancyReport {
    bool constant = true;
    /// (grid index, grid index, probe index) of the first violation found.
    std::optional<std::tuple<size_t, size_t, size_t>> violation;
};

/// Tests whether the pre-domination structure is independent of the base
/// point over the given grid and probe directions.
ConstancyReport predomination_constancy_check(const Relation& rel, const PointCloud& grid,
                                              const PointCloud& probes);

}  // namespace vopt

#endif
