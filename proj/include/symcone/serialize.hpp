#ifndef SYMCONE_SERIALIZE_HPP
#define SYMCONE_SERIALIZE_HPP

#include <json.hpp>

#include "symcone/faces.hpp"
#include "symcone/jordan.hpp"

namespace symcone::io {

using nlohmann::json;

struct IoErr : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"kind":"I","p":2,"q":3} | {"kind":"II"|"III"|"IV","n":...}
jts::Jts parse_jts(const json& j);
json jts_descriptor(const jts::Jts& Z);

/// {"kind":"sym"|"herm"|"spin","n":...}
jordan::Eja parse_eja(const json& j);

/// Elements as interleaved re/im coordinate arrays.
json element_to_json(const jts::CVec& z);
jts::CVec element_from_json(const json& j, int dim);

/// Tripotent with cached rank.
json tripotent_to_json(const jts::Jts& Z, const jts::CVec& e);

/// LieElement as {kappa: row-major real matrix on 2n coords, u: coords}.
json lie_element_to_json(const lie::LieAlgebraG& g, const lie::RVec& xi);

/// Exact cone export with V- and H-descriptions, rationals as "p/q".
json cone_to_json(const poly::PolyhedralCone& c);

/// Root datum export: functionals and coroots in the t basis.
json roots_to_json(const roots::RootSystemData& rsd);

/// Face catalogue export: one entry per class.
json face_classes_to_json(
    const faces::FaceCatalogue& cat,
    const std::vector<std::pair<faces::StratumLabel, faces::FaceDescriptor>>&
        classes);

/// DOT digraph of the Cartan-slice face order (inclusion of generator sets),
/// nodes annotated with the audit's matched primitive labels.
std::string hasse_dot(const faces::FaceCatalogue& cat);

/// Grading export: per-level bases as row-major matrices.
json grading_to_json(const lie::LieAlgebraG& g, const lie::Grading& G);

std::string format_double(double v);  // 17 significant digits

}  // namespace symcone::io

#endif
