#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace axb {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// %.17g; non-finite values become null.
std::string format_double(double v);

/// Serialises with insertion-ordered keys, 17 significant digits for floats
/// and null for non-finite values.
std::string dump_json(const Json& j, int indent = 2);

/// "s,value" header followed by one row per pair.
std::string profile_csv(const std::vector<std::pair<double, double>>& rows, const std::string& x_name = "s",
                        const std::string& y_name = "value");

/// Creates parent directories as needed.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace axb
