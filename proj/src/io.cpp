#include "nongauss/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nongauss {

std::string format_double(double value) {
    char buf[40];
    for (int precision = 12; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("write failed for " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

std::vector<std::string> column_names(const SweepResult& result) {
    std::vector<std::string> names{result.param, "value_ng"};
    if (!result.value_ref.empty()) names.emplace_back("value_ref");
    if (!result.gain_db.empty()) names.emplace_back("gain_db");
    return names;
}

}  // namespace

std::string to_csv(const SweepResult& result) {
    result.validate();
    std::ostringstream out;
    out << "# kind=" << result.kind << "\n";
    for (const auto& [key, value] : result.metadata) {
        out << "# " << key << "=" << value << "\n";
    }
    const auto names = column_names(result);
    for (size_t c = 0; c < names.size(); ++c) {
        out << names[c] << (c + 1 < names.size() ? "," : "\n");
    }
    for (size_t i = 0; i < result.grid.size(); ++i) {
        out << format_double(result.grid[i]) << "," << format_double(result.value_ng[i]);
        if (!result.value_ref.empty()) out << "," << format_double(result.value_ref[i]);
        if (!result.gain_db.empty()) out << "," << format_double(result.gain_db[i]);
        out << "\n";
    }
    return out.str();
}

SweepResult parse_csv(const std::string& text) {
    SweepResult result;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    std::vector<std::string> names;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            if (!body.empty() && body[0] == ' ') body.erase(0, 1);
            const auto eq = body.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = body.substr(0, eq);
            const std::string value = body.substr(eq + 1);
            if (key == "kind") {
                result.kind = value;
            } else {
                result.metadata.emplace_back(key, value);
            }
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (!header_seen) {
            names = cells;
            if (names.empty()) throw std::runtime_error("missing CSV header");
            result.param = names[0];
            header_seen = true;
            continue;
        }
        if (cells.size() != names.size()) throw std::runtime_error("ragged CSV row");
        for (size_t c = 0; c < cells.size(); ++c) {
            const double v = std::strtod(cells[c].c_str(), nullptr);
            if (names[c] == result.param) {
                result.grid.push_back(v);
            } else if (names[c] == "value_ng") {
                result.value_ng.push_back(v);
            } else if (names[c] == "value_ref") {
                result.value_ref.push_back(v);
            } else if (names[c] == "gain_db") {
                result.gain_db.push_back(v);
            }
        }
    }
    result.validate();
    return result;
}

std::string to_json(const SweepResult& result) {
    result.validate();
    nlohmann::ordered_json j;
    j["kind"] = result.kind;
    j["param"] = result.param;
    nlohmann::ordered_json meta;
    for (const auto& [key, value] : result.metadata) meta[key] = value;
    j["metadata"] = meta;
    j["grid"] = result.grid;
    j["value_ng"] = result.value_ng;
    if (!result.value_ref.empty()) j["value_ref"] = result.value_ref;
    if (!result.gain_db.empty()) j["gain_db"] = result.gain_db;
    return j.dump(2) + "\n";
}

SweepResult parse_json(const std::string& text) {
    const auto j = nlohmann::ordered_json::parse(text);
    SweepResult result;
    result.kind = j.at("kind").get<std::string>();
    result.param = j.at("param").get<std::string>();
    for (const auto& [key, value] : j.at("metadata").items()) {
        result.metadata.emplace_back(key, value.get<std::string>());
    }
    result.grid = j.at("grid").get<std::vector<double>>();
    result.value_ng = j.at("value_ng").get<std::vector<double>>();
    if (j.contains("value_ref")) result.value_ref = j.at("value_ref").get<std::vector<double>>();
    if (j.contains("gain_db")) result.gain_db = j.at("gain_db").get<std::vector<double>>();
    result.validate();
    return result;
}

}  // namespace nongauss
