#pragma once

#include <string>

#include <json.hpp>

#include "parmod/moduli.hpp"
#include "parmod/parabolic.hpp"
#include "parmod/projective.hpp"

namespace parmod {

using nlohmann::json;

/// Shortest text form of a double that round-trips exactly (%.17g trimmed
/// via the usual shortest-digits search); used everywhere text output must
/// be byte-deterministic.
std::string format_real(double x);

/// CSV cell for a CP^1 point: "inf" or "re+imi" (e.g. "1.5-2.25i").
std::string format_proj(const ProjPoint& p);

/// Complex numbers serialize as [re, im]; CP^1 points as {"inf": true} or
/// {"re": x, "im": y}.
json json_of(cplx z);
cplx cplx_from_json(const json& j);
json json_of(const ProjPoint& p);
ProjPoint proj_from_json(const json& j);

/// Bundle classes carry a "kind" tag: {"kind": "split_generic", "lambda":
/// [re, im]}, {"kind": "split_torsion", "index": i}, {"kind": "nonsplit",
/// "index": i}.
json json_of(const BundleClass& E);
BundleClass bundle_from_json(const LatticeTau& lat, const json& j);

/// Parabolic bundles: {"bundle": ..., "marks": [{"at": [re, im], "coord":
/// ...}, ...], "weight": w}.
json json_of(const ParabolicBundle& pb);
ParabolicBundle parabolic_from_json(const LatticeTau& lat, const json& j);

/// Triples serialize as a 3-array of CP^1 points.
json json_of(const ModuliTriple& t);
ModuliTriple triple_from_json(const json& j);

/// Header and row format of curve point clouds.
inline constexpr const char* kCurveCsvHeader = "lambda_re,lambda_im,c1,c2,c3";
std::string curve_csv_row(const TorusPoint& lam, const ModuliTriple& t);

/// Parse a complex number written as "a+bi" / "a-bi" / "a" / "bi" / "i"
/// (also accepts a trailing "j"); throws Error on malformed input.
cplx parse_complex(const std::string& text);

}  // namespace parmod
