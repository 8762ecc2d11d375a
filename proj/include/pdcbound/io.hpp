#pragma once

// File formats.
//
//   matrix   {"dim": 4, "re": [[...], ...], "im": [[...], ...]}, row-major
//   channel  {"operators": [matrix, ...], "labels": ["...", ...]}   (labels optional)
//   params   {"t", "theta1", "theta2", "alpha1", "alpha2", "mu", "gamma0", "pump_p"}
//   sweep    CSV with header kSweepCsvHeader, decimals at 17 significant digits
//
// Malformed input raises Error(ParseError); a matrix of the wrong size raises
// Error(DimensionMismatch).

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pdcbound/channels.hpp"
#include "pdcbound/scheme.hpp"
#include "pdcbound/sweep.hpp"

namespace pdcbound::io {

/// Shortest-safe round-trip text: printf "%.17g".
std::string format_double(double v);
double parse_double(std::string_view text);

template <std::size_t N>
nlohmann::json matrix_to_json(const Matrix<N>& m);

template <std::size_t N>
Matrix<N> matrix_from_json(const nlohmann::json& j);

nlohmann::json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const nlohmann::json& j);

nlohmann::json params_to_json(const SchemeParams& p);
/// Exactly the eight fields are required; unknown fields are rejected.
SchemeParams params_from_json(const nlohmann::json& j);

/// Pretty-printed; doubles are emitted in shortest round-trip form.
std::string dump_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

inline constexpr std::string_view kSweepCsvHeader =
    "sample_id,pump_p,t,theta1,theta2,alpha1,alpha2,mu,gamma0,concurrence,bound_general,bound_2d,"
    "lambda1,lambda2,lambda3,lambda4";

std::string csv_row(const SweepRecord& r);
SweepRecord parse_csv_row(std::string_view line);

/// Reads every record of a sweep CSV, validating the header.
void read_sweep_csv(std::istream& in, const std::function<void(const SweepRecord&)>& sink);

extern template nlohmann::json matrix_to_json<2>(const Matrix<2>&);
extern template nlohmann::json matrix_to_json<4>(const Matrix<4>&);
extern template Matrix<2> matrix_from_json<2>(const nlohmann::json&);
extern template Matrix<4> matrix_from_json<4>(const nlohmann::json&);

} // namespace pdcbound::io
