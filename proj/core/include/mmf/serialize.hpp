#pragma once

#include <mmf/mlde.hpp>
#include <mmf/rep.hpp>
#include <json.hpp>

namespace mmf {

using Json = nlohmann::json; // sorts object keys, giving byte-stable output

Json to_json(const QSeries& f);
QSeries qseries_from_json(const Json& j);

Json to_json(const ModularFormExact& f);
ModularFormExact mform_from_json(const Json& j);

Json to_json(const MLDE& L);
MLDE mlde_from_json(const Json& j);

Json to_json(const TransformReport& r);

} // namespace mmf
