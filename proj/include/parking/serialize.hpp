#pragma once

// CSV / JSON / text renderings of every engine result. Big numbers are
// always decimal strings; CSV has a header row and LF line endings.

#include <string>

#include "json.hpp"

#include "parking/airy.hpp"
#include "parking/conjecture_fit.hpp"
#include "parking/genfun.hpp"
#include "parking/moments.hpp"
#include "parking/parking_core.hpp"

namespace parking {

using nlohmann::json;

// {n, a, total, counts: [{area, count}]}
json to_json(const AreaHistogram& h);
AreaHistogram histogram_from_json(const json& j);
std::string to_csv(const AreaHistogram& h);

AreaHistogram to_histogram(const AreaGenFun& q);

// {n, a, K, values: [...]}
json to_json(const JetAtOne& j);
JetAtOne jet_from_json(const json& j);

// {n, a, K, factorial, raw, central, variance_zero, scaled_split: [{j, central_j, var_power}], scaled}
json to_json(const MomentTable& t, unsigned precision);
std::string to_csv(const MomentTable& t, unsigned precision);
std::string to_text(const MomentTable& t, unsigned precision);

json to_json(const ScaledHistogram& h);
std::string to_csv(const ScaledHistogram& h);

json to_json(const SymPoly& p);  // [{exponents, coefficient}]
SymPoly sympoly_from_json(const std::vector<std::string>& symbols, const json& j);

// {k, symbols, deg_A, deg_B, A, B, status, samples, holdout, ...}
json to_json(const FitResult& f);
FitResult fit_from_json(const json& j);
std::string to_csv(const FitResult& f);
std::string to_text(const FitResult& f);

json to_json(const AiryMoment& m);
json to_json(const AsymptoticReport& r);
std::string to_csv(const AsymptoticReport& r);
std::string to_text(const AsymptoticReport& r);

}  // namespace parking
