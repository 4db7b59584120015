#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "hodge/berger.hpp"
#include "hodge/curl.hpp"
#include "hodge/geometry.hpp"
#include "hodge/inverse.hpp"
#include "hodge/lambda1.hpp"
#include "hodge/laplacian.hpp"

namespace hodge {

using Json = nlohmann::ordered_json;

/// Rounds to 15 significant digits so that serialized floats do not depend
/// on the last bits of a platform's libm.
double round15(double x);

/// Non-finite values become null.
Json number(double x);

Json to_json(const MetricParams & m);
Json to_json(const GeometryTensors & g);
Json to_json(const HeatInvariants & h);

/// Spectrum rows {eigenvalue, multiplicity, k, degree, tag}.
Json spectrum_rows(const Spectrum & s);
/// Rows of the closed-form Berger spectrum over k ≤ k_max, with a family column.
Json berger_rows(const BergerParams & p, Group g, int k_max);

Json to_json(const Lambda1Result & r);
Json to_json(const StressReport & r);
Json to_json(const InversionResult & r);
Json to_json(const CoexactBoundReport & r);
Json to_json(const RoundCurlReport & r);

/// Fixed-layout JSON text, two-space indent, trailing newline.
std::string dump_json(const Json & report);

/// CSV rendering. A report with a "rows" array of objects becomes a table
/// with one column per key (eigenvalue, multiplicity, k, degree, tag,
/// family); every other field is written as a leading `# path,value`
/// comment line. Reports without rows become `path,value` lines.
std::string dump_csv(const Json & report);

}  // namespace hodge
