#pragma once

#include "invfp/distribution.hpp"
#include "invfp/gf.hpp"
#include "invfp/goe.hpp"
#include "invfp/weights.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace invfp {

using OrderedJson = nlohmann::ordered_json;

// Weight rows as CSV (header n,j,count; counts as decimal strings) and JSON.
std::string weights_csv(const std::vector<WeightPolynomial>& rows);
OrderedJson weights_json(const std::vector<WeightPolynomial>& rows);

// Distribution emission; exact mode renders probabilities as "num/den".
std::string distribution_csv(const FpDistribution& d);
OrderedJson distribution_json(const FpDistribution& d);

// value,weight lines under a comment header carrying k, q, seed, ess.
std::string weighted_sample_csv(const WeightedSample& s);

// Locale-independent shortest round-trip formatting.
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace invfp
