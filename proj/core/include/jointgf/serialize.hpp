#pragma once

#include <string>

#include "jointgf/asymptotics.hpp"
#include "jointgf/real.hpp"
#include "jointgf/trivariate_series.hpp"
#include "jointgf/univariate_series.hpp"

#include <json.hpp>

namespace jointgf {

using OrderedJson = nlohmann::ordered_json;

// Rationals serialize as decimal strings ("5", "-7/3") so nothing is lost
// to binary floating point.
OrderedJson series_to_json(const UnivariateSeries& s);
OrderedJson series_to_json(const TrivariateSeries& s);

// Fixed-point rendering with the given number of digits after the point.
std::string format_real(const Real& value, int decimals);
// Full-precision decimal rendering (round-trips at the working precision).
std::string format_real_full(const Real& value);

OrderedJson report_to_json(const SingularityReport& report);

} // namespace jointgf
