#ifndef GKFOL_TEXTIO_HPP
#define GKFOL_TEXTIO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "gkfol/classify.hpp"

namespace gkfol {

/// Fixed rendering grammar, round-trippable:
///   poly  :=  term (('+'|'-') term)* | '0'
///   term  :=  rational | [rational '*'] var ('*' var)*
///   var   :=  'x'<idx> ['^'<exp>]
///   field :=  part (' + ' part)* | '0',  part := poly-or-(poly) ' d/dx'<idx>
std::string render_poly(const Poly& p);
Poly parse_poly(const std::string& text, int nvars);

std::string render_field(const VectorField& f);
VectorField parse_field(const std::string& text, int nvars);

std::string render_rational(const mpq_class& q);
mpq_class parse_rational(const std::string& text);

/// Certificate record, line-oriented; replay recomputes and compares.
std::string render_certificate(const GKCertificate& cert);
GKCertificate parse_certificate(const std::string& text);

nlohmann::json paramset_to_json(const ParamSet& ps);
nlohmann::json certificate_to_json(const GKCertificate& cert);
GKCertificate certificate_from_json(const nlohmann::json& j);
nlohmann::json descriptor_to_json(const ComponentDescriptor& desc);
ComponentDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::json table_report_to_json(const TableReport& rep);

} // namespace gkfol

#endif
