#pragma once

#include <map>
#include <string>

#include <json.hpp>

namespace bohr {

/// One computed radius as printed by the command line tool.
struct OutputRecord {
    std::string class_tag;
    std::map<std::string, double> params;  ///< sorted by name
    double radius = 0.0;
    double residual = 0.0;
    std::string method;
    double d_star = 0.0;
    double tol = 0.0;

    bool operator==(const OutputRecord&) const = default;
};

/// Flat object {"class", "params", "radius", "residual", "method",
/// "d_star", "tol"}. Reals are written in shortest round-trip form.
nlohmann::json to_json(const OutputRecord& rec);
OutputRecord record_from_json(const nlohmann::json& j);

/// Single-line JSON text.
std::string emit_json(const OutputRecord& rec);

inline constexpr const char* csv_header = "class,param_name,param_value,radius,residual,method";

/// CSV row matching csv_header. Several parameters are joined with ';'
/// in both the name and value column. Reals have 12 significant digits,
/// the residual is in scientific notation.
std::string emit_csv_row(const OutputRecord& rec);

/// %.12g
std::string format_real(double x);

}  // namespace bohr
