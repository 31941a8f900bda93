#include "bohr/record.hpp"

#include <cstdio>
#include <stdexcept>

namespace bohr {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string format_sci(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

}  // namespace

nlohmann::json to_json(const OutputRecord& rec) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : rec.params) params[name] = value;
    return {{"class", rec.class_tag}, {"params", params},   {"radius", rec.radius},
            {"residual", rec.residual}, {"method", rec.method}, {"d_star", rec.d_star},
            {"tol", rec.tol}};
}

OutputRecord record_from_json(const nlohmann::json& j) {
    OutputRecord rec;
    rec.class_tag = j.at("class").get<std::string>();
    for (const auto& [name, value] : j.at("params").items()) rec.params[name] = value.get<double>();
    rec.radius = j.at("radius").get<double>();
    rec.residual = j.at("residual").get<double>();
    rec.method = j.at("method").get<std::string>();
    rec.d_star = j.at("d_star").get<double>();
    rec.tol = j.at("tol").get<double>();
    return rec;
}

std::string emit_json(const OutputRecord& rec) { return to_json(rec).dump(); }

std::string emit_csv_row(const OutputRecord& rec) {
    std::string names;
    std::string values;
    for (const auto& [name, value] : rec.params) {
        if (!names.empty()) {
            names += ';';
            values += ';';
        }
        names += name;
        values += format_real(value);
    }
    return rec.class_tag + ',' + names + ',' + values + ',' + format_real(rec.radius) + ',' +
           format_sci(rec.residual) + ',' + rec.method;
}

}  // namespace bohr
