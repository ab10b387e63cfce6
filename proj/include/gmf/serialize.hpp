#pragma once

#include <json.hpp>

#include "gmf/kw.hpp"
#include "gmf/mf.hpp"

namespace gmf {

using Json = nlohmann::json;

// {"-1":1,"0":2}; keys sort as strings, values are the coefficients
Json series_json(const PoincareSeries& p);
PoincareSeries series_from_json(const Json& j);

// {"generators":[..],"degrees":[..]}
Json ring_json(const RingPtr& r);
RingPtr ring_from_json(const Json& j);

Json mat_json(const Mat& m);  // rows of canonical polynomial text
Mat mat_from_json(const RingPtr& r, const Json& j, size_t rows, size_t cols);

Json fingerprint_json(const MFFingerprint& f);

// {ring, potential, potential_degree, m0_degrees, m1_degrees, f_entries, g_entries};
// degrees are generator degrees, i.e. minus the shifts
Json mf_json(const MF& m);
// throws std::invalid_argument on malformed input
MF mf_from_json(const Json& j);

// the MF fields per term plus "lo", "terms": [{degrees, del_entries, s_entries}]
Json kw_json(const KwModule& m);

}  // namespace gmf
