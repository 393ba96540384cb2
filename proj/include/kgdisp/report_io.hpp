#pragma once

#include "json.hpp"

#include <string>
#include <vector>

#include "kgdisp/decay.hpp"

namespace kgd {

using Json = nlohmann::ordered_json;

Json to_json(const FitResult& fit);
Json to_json(const DecayReport& report, bool include_curve = false);

/// Writes `value` with two-space indentation and a trailing newline.
void write_json(const std::string& path, const Json& value);
/// Columns: t, weighted_sup, raw_sup.
void write_csv(const std::string& path, const DecayCurve& curve);
/// Log-log plot of weighted_sup and raw_sup against t; nonpositive values are skipped.
void write_svg(const std::string& path, const DecayCurve& curve);

}  // namespace kgd
