#pragma once

#include <nlohmann/json.hpp>

#include "mtc/modular.hpp"

namespace mtc {

/// Schema "mtc.modular-datum/1"; see docs/schemas.md.
nlohmann::json to_json(const ModularDatum& datum);

/// Rebuilds a datum from its JSON form. The alcove is recomputed from N, k and
/// must match the stored labels. Throws InvalidArgument on schema violations.
ModularDatum modular_datum_from_json(const nlohmann::json& j);

}  // namespace mtc
