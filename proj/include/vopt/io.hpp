#ifndef VOPT_IO_HPP
#define VOPT_IO_HPP

#include <iosfwd>
#include <string>

#include "vopt/decision.hpp"
#include "vopt/sets.hpp"
#include "vopt/types.hpp"

namespace vopt {

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Set-spec JSON:
///   {"type":"polyhedral","normals":[[...],...],"offsets":[...]}
///   {"type":"shifted","base":{...},"shift":[...]}
///   {"type":"union-translates","base":{...},"translates":[[...],...]}
///   {"type":"parabola-epigraph","dim":N}
SetSpec parse_set_spec(const std::string& json_text);
SetSpec load_set_spec(const std::string& path);

/// CSV with header "y1,...,yn", one point per row, LF line endings.
PointCloud parse_points_csv(const std::string& text);
PointCloud load_points_csv(const std::string& path);
void write_points_csv(std::ostream& os, const PointCloud& cloud);

/// Comma-separated vector literal, e.g. "1,1" or "0.5,-2e-3".
Vector parse_vector(const std::string& text);

/// Table relation JSON: {"points":[[...],...],"matrix":[[true,false,...],...]}.
Relation parse_table_relation(const std::string& json_text);
Relation load_table_relation(const std::string& path);

/// %.17g rendering — lossless double round-trip.
std::string format_double(double x);
/// "nu", "-inf", or the %.17g rendering.
std::string format_ext(const ExtValue& v);

}  // namespace vopt

#endif
