#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "qd/deform.hpp"
#include "qd/diagram.hpp"
#include "qd/diamond.hpp"
#include "qd/hypersurface.hpp"

namespace qd::io {

using json = nlohmann::ordered_json;

/// Malformed input document.
struct SchemaError : Error {
  using Error::Error;
};

json rational_to_json(const Rational& r);  // {"num":..,"den":..}
Rational rational_from_json(const json& j);

json quiver_to_json(const Quiver& q);
QuiverPtr quiver_from_json(const json& j);

/// Arrow-label array; trivial paths as {"e": vertex}. Also reads path text.
json path_to_json(const Quiver& q, const Path& p);
Path path_from_json(const Quiver& q, const json& j);

json poly_to_json(const ParamPoly& p);
/// Reads {"monomials":[...]}, a number or polynomial text.
ParamPoly poly_from_json(const RingPtr& ring, const json& j);

json element_to_json(const Quiver& q, const AlgebraElement& a);
/// Reads {"terms":[{"path":..,"coeff":..}]}, a number or element text.
AlgebraElement element_from_json(const Quiver& q, const RingPtr& ring, const json& j,
                                 std::optional<int> default_vertex = std::nullopt);

json order_to_json(const Quiver& q, const AdmissibleOrder& o);
AdmissibleOrder order_from_json(const Quiver& q, const json& j);

/// {"quiver":..,"pairs":[..],"order":..|null}; the order is the certificate.
json system_to_json(const ReductionSystem& r);
/// The stated order becomes the certificate only if it checks.
ReductionSystem system_from_json(const json& j);
/// The order as written in a system document, certified or not.
std::optional<AdmissibleOrder> stated_order(const ReductionSystem& r, const json& j);

json phi_to_json(const Quiver& q, const DeformationMap& phi);
DeformationMap phi_from_json(const Quiver& q, const json& j);

json cover_to_json(const CoverSpec& c);
CoverSpec cover_from_json(const json& j);
json provenance_to_json(const BuiltDiagram& d);

json hypersurface_to_json(const HypersurfacePresentation& h);
HypersurfacePresentation hypersurface_from_json(const json& j);

json validation_to_json(const Quiver& q, const ValidationReport& v, const TerminationReport* t);
json confluence_to_json(const Quiver& q, const ConfluenceReport& r);
json trace_to_json(const Quiver& q, const ReductionSystem& r, const ReductionTrace& t);
json ambiguities_to_json(const Quiver& q, const std::vector<Ambiguity>& a);
json mc_to_json(const Quiver& q, const MCReport& r);
json equations_to_json(const std::vector<ParamPoly>& eqs);
json degree_to_json(const Quiver& q, const DegreeReport& r);
json hh2_to_json(const Quiver& q, const HH2Verdict& v);

json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);

}  // namespace qd::io
