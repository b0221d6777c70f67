#pragma once

#include <string>

#include <json.hpp>

#include "twalg/algebra.hpp"
#include "twalg/clifford.hpp"
#include "twalg/iso.hpp"

namespace twalg::io {

using json = nlohmann::json;

// "1", "-2.5", "i", "-i", "3+4i", "0.5-2i", "2i"; numbers are accepted as JSON numbers too.
cplx parse_scalar(const std::string& s);
cplx parse_scalar(const json& j);
inline cplx parse_scalar(const char* s) { return parse_scalar(std::string(s)); }

// "complex" | "real" | "quaternion" | {"kind":"laurent","m":1,"field":"complex"} |
// {"kind":"matrix","k":2,"field":"real"} | {"kind":"product","parts":[...]}.
DescPtr parse_descriptor(const json& j);

// Laurent strings: "z", "-z^2", "2i*z1^-1*z2", "(1+i)z^(1,0)" terms joined by " + ".
RingValue parse_value(const json& j, const DescPtr& d);

// {"kind":"cyclic","n":4} | {"kind":"product","factors":[...]} | {"kind":"subsets","labels":[...]}.
GroupPtr parse_group(const json& j);

// Cocycle sections: trivial | table | f_alpha | klein | clifford | z2z4 | torus.
CocyclePtr parse_cocycle(const json& j, const GroupPtr& g, const DescPtr& d, double tol = kExactTol);
KleinParams parse_klein_params(const json& j, const DescPtr& d);
CliffordSpec parse_clifford(const json& j, const DescPtr& d, double tol = kExactTol);

// {"label": value, ...}; missing labels are zero.
AlgebraElement parse_element(const json& j, const CocyclePtr& f);

json value_json(const RingValue& v);
json element_json(const AlgebraElement& x);
json report_json(const MorphismReport& r);
json violation_json(const Violation& v, const GroupTable& g);
std::string format_real(double x);  // 12 significant digits

}  // namespace twalg::io
