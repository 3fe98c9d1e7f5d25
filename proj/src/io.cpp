#include "ckdual/io.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ckdual {

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

namespace {

MatrixDocument from_rows(std::optional<std::string> name, const std::vector<std::vector<int>>& rows,
                         const std::string& text, const std::string& source) {
    if (rows.empty()) throw ParseError(source + ": empty matrix");
    const std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw ParseError(source + ": matrix is not square");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (rows[i][j] != 0 && rows[i][j] != 1)
                throw ParseError(source + ": entries must be 0 or 1");
            m(i, j) = rows[i][j];
        }
    return MatrixDocument{std::move(name), std::move(m), fnv1a64_hex(text), source};
}

MatrixDocument parse_json_document(const std::string& text, const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array())
        throw ParseError(source + ": expected an object with a \"matrix\" array");
    std::optional<std::string> name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError(source + ": \"name\" must be a string");
        name = doc["name"].get<std::string>();
    }
    std::vector<std::vector<int>> rows;
    for (const auto& row : doc["matrix"]) {
        if (!row.is_array()) throw ParseError(source + ": matrix rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ParseError(source + ": entries must be integers");
            r.push_back(v.get<int>());
        }
        rows.push_back(std::move(r));
    }
    return from_rows(std::move(name), rows, text, source);
}

MatrixDocument parse_text_document(const std::string& text, const std::string& source) {
    std::optional<std::string> name;
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    bool first_content = true;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') {
            if (first_content) {
                std::string rest = line.substr(start + 1);
                std::size_t b = rest.find_first_not_of(" \t");
                std::size_t e = rest.find_last_not_of(" \t\r");
                if (b != std::string::npos) name = rest.substr(b, e - b + 1);
                first_content = false;
            }
            continue;
        }
        first_content = false;
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            if (tok != "0" && tok != "1") throw ParseError(source + ": entries must be 0 or 1");
            row.push_back(tok == "1" ? 1 : 0);
        }
        rows.push_back(std::move(row));
    }
    return from_rows(std::move(name), rows, text, source);
}

}  // namespace

MatrixDocument parse_matrix_document(const std::string& text, const std::string& source) {
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw ParseError(source + ": empty input");
    if (text[start] == '{') return parse_json_document(text, source);
    return parse_text_document(text, source);
}

MatrixDocument load_matrix_document(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError(path + ": cannot open file");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_matrix_document(text, path);
}

long json_int(const Int& value) {
    if (!value.fits_slong_p())
        throw Error("value " + value.get_str() + " does not fit in a 64-bit report field");
    return value.get_si();
}

nlohmann::json group_json(const MarkedDisplay& display) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const Int& d : display.torsion) torsion.push_back(json_int(d));
    nlohmann::json marks = nlohmann::json::array();
    for (const IntVector& mk : display.marks) {
        nlohmann::json coords = nlohmann::json::array();
        for (const Int& c : mk) coords.push_back(json_int(c));
        marks.push_back(std::move(coords));
    }
    return nlohmann::json{{"free_rank", display.free_rank},
                          {"torsion", std::move(torsion)},
                          {"marks", std::move(marks)}};
}

nlohmann::json group_json(const FgAbGroup& group) {
    return group_json(canonical_marked_display(MarkedGroup{group, {}}));
}

nlohmann::json check_json(const CheckResult& check) {
    nlohmann::json j{{"label", check.label}, {"pass", check.pass}};
    if (!check.witness.empty()) j["witness"] = check.witness;
    return j;
}

nlohmann::json diagram_report_json(const DiagramReport& report) {
    nlohmann::json exactness = nlohmann::json::array();
    for (const auto& c : report.exactness) exactness.push_back(check_json(c));
    nlohmann::json squares = nlohmann::json::array();
    for (const auto& c : report.squares) squares.push_back(check_json(c));
    nlohmann::json identities = nlohmann::json::array();
    for (const auto& c : report.identities) identities.push_back(check_json(c));
    return nlohmann::json{{"name", report.name},
                          {"pass", report.pass},
                          {"exactness", std::move(exactness)},
                          {"squares", std::move(squares)},
                          {"identities", std::move(identities)}};
}

nlohmann::json strong_duality_json(const StrongDualityReport& report) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : report.sub_reports) reports.push_back(diagram_report_json(r));
    nlohmann::json identities = nlohmann::json::array();
    for (const auto& c : report.identities) identities.push_back(check_json(c));
    return nlohmann::json{{"pass", report.pass},
                          {"reports", std::move(reports)},
                          {"identities", std::move(identities)}};
}

nlohmann::json matrix_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace ckdual
