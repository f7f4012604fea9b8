#pragma once

// JSON serialization for every payload the CLI reads or writes.  Rationals
// are always "a/b" strings; every schema carries "schema": "tropicast/1".

#include <json.hpp>

#include "tropicast/lines.hpp"

namespace trop {

using Json = nlohmann::ordered_json;

extern const char* kSchema;

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);
Json qvec_to_json(const QVec& v);
QVec qvec_from_json(const Json& j);
Json zvec_to_json(const ZVec& v);
ZVec zvec_from_json(const Json& j);
Json zmat_to_json(const ZMat& m);
ZMat zmat_from_json(const Json& j);

Json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

Json valued_poly_to_json(const ValuedPolynomial& f);
ValuedPolynomial valued_poly_from_json(const Json& j);

Json subdivision_to_json(const RegularSubdivision& s);

Json complex_to_json(const TropicalComplex& x);
TropicalComplex complex_from_json(const Json& j);

Json report_to_json(const IntersectionReport& r);

Json fiber_to_json(const FiberPolytope& f);

Json sip_report_to_json(const PlaneCurveImage& img);
Json dual_subdivision_to_json(const ImageDualSubdivision& ds);

Json line_to_json(const TropicalLine& l);
TropicalLine line_from_json(const Json& j);

// Inline matrix format: rows separated by ';', integer entries by blanks.
ZMat parse_matrix(const std::string& text);

}  // namespace trop
