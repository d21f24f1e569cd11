#pragma once

#include <json.hpp>

#include "dsv/diagrams.hpp"
#include "dsv/fillings.hpp"
#include "dsv/symfunc.hpp"

namespace dsv {

using json = nlohmann::json;

json to_json(const QPoly& f);           // [c0, c1, ...]
json to_json(const Partition& la);      // [parts...]
json to_json(const Composition& alpha); // [parts...]
// {"n":, "basis":, "terms":[{"partition":, "coeffs":}]}, descending lex terms.
json to_json(const SymFunc& f);
// Row-major matrix padded with 0 on ragged rows.
json to_json(const Filling& T);
json to_json(const PRDFilling& phi);

QPoly qpoly_from_json(const json& j);
Partition partition_from_json(const json& j);
SymFunc symfunc_from_json(const json& j);

} // namespace dsv
