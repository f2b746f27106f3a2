#include "fourient/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fourient {

namespace {

using nlohmann::json;

int require_int(const json& value, const std::string& where) {
    if (!value.is_number_integer()) {
        throw problem_error(where + " must be an integer");
    }
    return value.get<int>();
}

int require_vertex(const json& value, int n, const std::string& where) {
    const int v = require_int(value, where);
    if (v < 0 || v >= n) {
        throw problem_error(where + " = " + std::to_string(v) + " is out of range [0, " +
                            std::to_string(n) + ")");
    }
    return v;
}

std::vector<VertexPair> parse_pairs(const json& doc, const char* key, int n) {
    std::vector<VertexPair> pairs;
    if (!doc.contains(key)) return pairs;
    const json& list = doc.at(key);
    if (!list.is_array()) throw problem_error(std::string(key) + " must be an array of pairs");
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string where = std::string(key) + "[" + std::to_string(i) + "]";
        const json& entry = list[i];
        if (!entry.is_array() || entry.size() != 2) {
            throw problem_error(where + " must be a [u, v] pair");
        }
        pairs.push_back({require_vertex(entry[0], n, where + "[0]"),
                         require_vertex(entry[1], n, where + "[1]")});
    }
    return pairs;
}

}  // namespace

ProblemFile ProblemFile::parse_text(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw problem_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw problem_error("problem document must be a JSON object");

    ProblemFile problem;
    if (doc.contains("name")) {
        if (!doc.at("name").is_string()) throw problem_error("name must be a string");
        problem.name = doc.at("name").get<std::string>();
    }
    if (!doc.contains("vertices")) throw problem_error("missing field: vertices");
    problem.vertices = require_int(doc.at("vertices"), "vertices");
    if (problem.vertices < 0) throw problem_error("vertices must be nonnegative");

    if (!doc.contains("edges")) throw problem_error("missing field: edges");
    const json& edges = doc.at("edges");
    if (!edges.is_array()) throw problem_error("edges must be an array of pairs");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        const json& entry = edges[i];
        if (!entry.is_array() || entry.size() != 2) {
            throw problem_error(where + " must be a [tail, head] pair");
        }
        problem.edges.push_back({require_vertex(entry[0], problem.vertices, where + "[0]"),
                                 require_vertex(entry[1], problem.vertices, where + "[1]")});
    }

    problem.a_pairs = parse_pairs(doc, "A", problem.vertices);
    problem.b_pairs = parse_pairs(doc, "B", problem.vertices);
    return problem;
}

ProblemFile ProblemFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw problem_error("cannot open problem file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str());
}

std::string ProblemFile::canonical_json() const {
    json doc;
    doc["name"] = name;
    doc["vertices"] = vertices;
    json edge_list = json::array();
    for (const Edge& e : edges) edge_list.push_back({e.tail, e.head});
    doc["edges"] = std::move(edge_list);
    json a_list = json::array();
    for (const VertexPair& p : a_pairs) a_list.push_back({p.u, p.v});
    doc["A"] = std::move(a_list);
    json b_list = json::array();
    for (const VertexPair& p : b_pairs) b_list.push_back({p.u, p.v});
    doc["B"] = std::move(b_list);
    return doc.dump();
}

std::string ProblemFile::digest() const {
    const std::string text = canonical_json();
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char byte : text) {
        hash ^= byte;
        hash *= 0x100000001b3ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buffer);
}

SolidSpec parse_solid_spec(const std::string& text, int edge_count) {
    SolidSpec spec;
    spec.text = text;
    if (text == "none") {
        spec.mask = 0;
        return spec;
    }
    if (text == "all") {
        spec.mask = edge_count >= 64 ? ~EdgeMask{0} : (EdgeMask{1} << edge_count) - 1;
        return spec;
    }
    if (text == "every") {
        spec.mask = std::nullopt;
        return spec;
    }
    EdgeMask mask = 0;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        int index = 0;
        try {
            std::size_t used = 0;
            index = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw problem_error("solid spec entry '" + token +
                                "' is not an edge index (expected none, all, every, or a "
                                "comma-separated index list)");
        }
        if (index < 0 || index >= edge_count) {
            throw problem_error("solid spec edge index " + std::to_string(index) +
                                " is out of range [0, " + std::to_string(edge_count) + ")");
        }
        mask |= EdgeMask{1} << index;
    }
    spec.mask = mask;
    return spec;
}

}  // namespace fourient
