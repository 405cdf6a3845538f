/**
 * This code is part of the coherence toolkit.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "coh/channels.hpp"
#include "coh/rates.hpp"
#include "coh/types.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace coh {

using Json = nlohmann::ordered_json;

// Wire formats: complex numbers as [re, im]; states as
//   {"dim": d, "amplitudes": [[re, im], ...]}
//   {"dim": d, "matrix": [[[re, im], ...], ...]}
//   {"members": [{"weight": w, "amplitudes": [...]}, ...]}
//   {"input_dim": d, "output_dim": M, "kraus": [matrix, ...]}

Json to_json(const PureState& psi);
Json to_json(const DensityOperator& rho);
Json to_json(const PureEnsemble& ensemble);
Json to_json(const IncoherentChannel& ch);

PureState pure_state_from_json(const Json& j);
DensityOperator density_from_json(const Json& j);
PureEnsemble ensemble_from_json(const Json& j);
IncoherentChannel channel_from_json(const Json& j);

/// Non-finite values become the string sentinel "unbounded" so reports
/// serialize unambiguously.
Json finite_or_sentinel(double value);

Json rate_report_to_json(const RateReport& report);

/// 12 significant digits, '.' separator, locale independent.
std::string format_csv_number(double value);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

/// FNV-1a 64-bit content hash, hex encoded.
std::string content_hash(std::string_view bytes);

/// Writes via a temp file in the same directory plus rename, so failed runs
/// never leave partial output behind.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace coh
