#pragma once

// Stable JSON shapes for the report types. Field names follow the struct
// members; complex numbers are {"re": .., "im": ..}; absent optionals are null.

#include "json.hpp"
#include "zetakit/arith.hpp"
#include "zetakit/identities.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit::report {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Json to_json(const zeta::EvalResult& r);
Json to_json(const zeta::ZeroRecord& r);
Json to_json(const arith::BetaValue& b);
Json to_json(const identities::LinearCoeffs& c);
Json to_json(const identities::SystemResiduals& r);
Json to_json(const identities::SwapReport& r);
Json to_json(const identities::ProbeReport& r);

}  // namespace zetakit::report
