#pragma once

#include "psc/classifier.hpp"
#include "psc/curvature.hpp"
#include "psc/diagram.hpp"
#include "psc/oracle.hpp"
#include "psc/warp_profile.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace psc::io {

using Json = nlohmann::ordered_json;

/// Input that is not shaped like the documented JSON format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ClassifyInput = std::variant<GroupDiagram, HomogeneousPair>;

/// Reads JSON text; malformed text raises ParseError.
Json parse_text(const std::string& text);
Json read_file(const std::string& path);

/// {"catalog": name} or {"dim": n, "structure_constants": [[i, j, k, v], ...]}.
/// Indices are 0-based; a missing (j, i, k) entry is filled in as -v.
LieAlgebra parse_algebra(const Json& j);

/// "trivial" / "full", or {"basis": [[...], ...], "components": n,
/// "finite_generators": [[...], ...]}. Basis vectors are in g coordinates.
SubgroupDescriptor parse_subgroup(const Json& j, std::size_t dim);

/// {"catalog": "diagram:..."} or {"kind": circle|interval|line|ray|homogeneous,
/// "G": ..., "H": ..., "K_minus"/"K_plus"/"K": ..., "monodromy": [[...]]}.
/// Unknown catalog names raise UnknownCatalogEntry.
ClassifyInput parse_classify_input(const Json& j);

Json to_json(const LieAlgebra& g);
Json to_json(const SubgroupDescriptor& s);
Json to_json(const GroupDiagram& d);
Json to_json(const HomogeneousPair& p);
Json to_json(const Verdict& v);
Json to_json(const warp::WarpProfile& p);
Json to_json(const CurvatureReport& r);
Json to_json(const OracleReport& r);

/// Profile request as read from a parameter file:
/// {"variant": "gz"|"modified", "a", "b", "c", "d": [d0, d1, d2], "epsilon",
///  "delta", "t_max"}. Missing fields keep the values already in `params`.
struct ProfileRequest {
  std::string variant = "modified";
  warp::ProfileParams params;
  std::optional<double> delta;
};
ProfileRequest parse_profile_request(const Json& j, ProfileRequest defaults = {});

/// Builds the requested variant and smooths it with `delta` (default epsilon/5
/// for the modified profile and 0.01 c for the sine/constant one).
warp::WarpProfile build_profile(const ProfileRequest& request);

/// Sample points: t = 0, the uniform grid k t_max / N (k = 1..N) and every
/// breakpoint, sorted.
std::vector<double> sample_points(const warp::WarpProfile& p, std::size_t grid_size);

/// CSV with header t,F0,F1,F2,dF0,dF1,dF2,ric_t,ric_0,ric_1,ric_2 and 17
/// significant digits; values of inactive blocks are written as nan.
void write_samples_csv(std::ostream& out, const warp::WarpProfile& p, std::size_t grid_size);

std::string format_double(double x);

}  // namespace psc::io
