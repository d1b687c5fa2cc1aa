#pragma once

#include <string>

#include <json.hpp>

#include "scal/convergence.hpp"
#include "scal/domains.hpp"
#include "scal/holomaps.hpp"

namespace scal {

using Json = nlohmann::json;

SCAL_DECLARE_ERROR(IoError)

/// An error carrying structured detail for the machine-readable report.
class DetailedError : public Error {
public:
  DetailedError(const Error &inner, Json detail)
      : Error(inner.what()), kind_(inner.kind()), detail_(std::move(detail)) {}
  std::string kind() const override { return kind_; }
  const Json &detail() const { return detail_; }

private:
  std::string kind_;
  Json detail_;
};

// Exact values are written as {"re": "p/q", "im": "p/q"}, numeric ones with
// JSON numbers. On input a string or integer is exact and a float numeric;
// a bare value is read as a real scalar.
Json to_json(const Scalar &s);
Scalar scalar_from_json(const Json &j);

Json to_json(const Gauss &g);

/// {"num": [...], "den": [...]}, coefficients ascending in mu. A bare scalar
/// is accepted on input as a constant.
Json to_json(const ParamRational &q);
ParamRational param_from_json(const Json &j);

Json to_json(const Exponent &e);
/// List of {"a","b","c","d","re","im"} records in exponent order.
Json to_json(const RealPoly &p);
RealPoly real_poly_from_json(const Json &j);

Json to_json(const HoloPoly &h);
HoloPoly holo_from_json(const Json &j);

Json to_json(const ElementaryMap &e);
ElementaryMap elementary_from_json(const Json &j);
Json to_json(const MapWord &w);
MapWord word_from_json(const Json &j);

Json to_json(const MapTerm &t);
Json to_json(const TriangularPolyMap &m);
Json to_json(const MapFamily &m);
TriangularPolyMap map_from_json(const Json &j);
MapFamily family_from_json(const Json &j);

Json to_json(const Point &p);

Json read_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

/// {"order_r": r, "rho": [...], "premap": [...]} with premap optional.
ModelDomain domain_from_json(const Json &j);
ModelDomain load_domain(const std::string &path);
MapFamily load_family(const std::string &path);

/// "re,im;re,im" with exact rational or decimal entries.
Point parse_point(const std::string &text);
/// "re,im;re,im;h" or "...;h1,h2,h3,h4".
CompactBox parse_box(const std::string &text);

} // namespace scal
