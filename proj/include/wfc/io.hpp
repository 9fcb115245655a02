#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wfc/bec.hpp"
#include "wfc/code.hpp"
#include "wfc/distance.hpp"

namespace wfc {

using json = nlohmann::json;

inline json type_to_json(const TypeVector& t) {
    json j;
    j["m"] = t.m;
    j["n"] = t.n();
    j["type"] = t.counts;
    if (t.zero_columns) j["zero_columns"] = t.zero_columns;
    return j;
}

inline json codebook_to_json(const Codebook& cb) {
    json j;
    j["m"] = cb.m;
    j["n"] = cb.n;
    std::vector<std::string> rows;
    for (const auto& row : cb.rows) {
        std::string s(row.size(), '0');
        for (std::size_t p = 0; p < row.size(); ++p) s[p] = row[p] ? '1' : '0';
        rows.push_back(std::move(s));
    }
    j["rows"] = rows;
    return j;
}

// Accepts {"m", "n", "type": [...]} or {"m", "rows": ["0101...", ...]}.
inline TypeVector type_from_json(const json& j) {
    const int m = j.at("m").get<int>();
    if (j.contains("type")) {
        TypeVector t(m);
        const auto counts = j.at("type").get<std::vector<std::uint32_t>>();
        if (counts.size() != t.counts.size()) throw std::invalid_argument("code json: bad type length");
        t.counts = counts;
        if (j.contains("zero_columns")) t.zero_columns = j.at("zero_columns").get<std::uint64_t>();
        if (j.contains("n") && j.at("n").get<std::uint64_t>() != t.n())
            throw std::invalid_argument("code json: n does not match type sum");
        return t;
    }
    if (j.contains("rows")) {
        Codebook cb;
        cb.m = m;
        const auto rows = j.at("rows").get<std::vector<std::string>>();
        if (static_cast<int>(rows.size()) != m) throw std::invalid_argument("code json: row count != m");
        cb.n = static_cast<int>(rows.front().size());
        for (const auto& s : rows) {
            if (static_cast<int>(s.size()) != cb.n) throw std::invalid_argument("code json: ragged rows");
            std::vector<std::uint8_t> row(cb.n);
            for (int p = 0; p < cb.n; ++p) {
                if (s[p] != '0' && s[p] != '1') throw std::invalid_argument("code json: bad bit");
                row[p] = static_cast<std::uint8_t>(s[p] - '0');
            }
            cb.rows.push_back(std::move(row));
        }
        return canonicalize(cb);
    }
    throw std::invalid_argument("code json: need \"type\" or \"rows\"");
}

inline std::string codebook_text(const Codebook& cb) {
    std::ostringstream os;
    for (const auto& row : cb.rows) {
        for (auto b : row) os << (b ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

inline Codebook codebook_from_text(const std::string& text) {
    Codebook cb;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::uint8_t> row(line.size());
        for (std::size_t p = 0; p < line.size(); ++p) {
            if (line[p] != '0' && line[p] != '1') throw std::invalid_argument("codebook text: bad bit");
            row[p] = static_cast<std::uint8_t>(line[p] - '0');
        }
        cb.rows.push_back(std::move(row));
    }
    if (cb.rows.empty()) throw std::invalid_argument("codebook text: empty");
    cb.m = static_cast<int>(cb.rows.size());
    cb.n = static_cast<int>(cb.rows.front().size());
    for (const auto& row : cb.rows)
        if (row.size() != cb.rows.front().size()) throw std::invalid_argument("codebook text: ragged rows");
    return cb;
}

inline json profile_to_json(const DistanceProfile& p) {
    json j;
    json mr = json::object();
    for (std::size_t i = 0; i < p.min_rwise.size(); ++i) mr[std::to_string(i + 2)] = p.min_rwise[i];
    j["min_rwise"] = mr;
    j["pairwise"] = p.pairwise;
    return j;
}

inline json eval_to_json(const EvalResult& r) {
    json j;
    j["delta"] = r.delta;
    j["p_error"] = r.p_error;
    if (r.per_message) j["lambda"] = *r.per_message;
    return j;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace wfc
