// Lattice exchange format and text renderings.
//
// Exchange files are UTF-8 JSON objects with the fields `name` (string),
// `elements` (array of strings) and `covers` (array of [lower, upper] label
// pairs).  Reading always runs full validation; writing is stable (fixed key
// order, fixed indentation), so write(read(f)) is byte-identical up to key
// ordering and whitespace of the source.
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "latkit/covers.hpp"
#include "latkit/lattice.hpp"

namespace latkit {

inline Lattice read_lattice_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("bad lattice file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw InputError("bad lattice file: expected an object with 'elements' and 'covers'");
    std::string name = j.value("name", "");
    std::vector<std::string> labels;
    for (auto& e : j.at("elements")) {
        if (!e.is_string()) throw InputError("bad lattice file: elements must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            throw InputError("bad lattice file: covers must be [lower, upper] label pairs");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return Lattice::from_covers(std::move(name), std::move(labels), covers);
}

inline Lattice read_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_lattice_json(buf.str());
}

inline std::string write_lattice_json(const Lattice& L) {
    nlohmann::ordered_json j;
    j["name"] = L.name();
    j["elements"] = L.labels();
    auto covers = nlohmann::ordered_json::array();
    for (auto [lo, hi] : L.cover_pairs())
        covers.push_back({L.label(lo), L.label(hi)});
    j["covers"] = covers;
    return j.dump(2) + "\n";
}

inline void write_lattice_file(const Lattice& L, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << write_lattice_json(L);
}

// Hasse diagram in DOT form: one edge per cover pair, pointing from the
// lower cover to the upper cover, drawn bottom-to-top.
inline std::string to_dot(const Lattice& L) {
    std::ostringstream out;
    out << "digraph \"" << L.name() << "\" {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle];\n";
    for (int x = 0; x < L.size(); ++x)
        out << "  \"" << L.label(x) << "\";\n";
    for (auto [lo, hi] : L.cover_pairs())
        out << "  \"" << L.label(lo) << "\" -> \"" << L.label(hi) << "\";\n";
    out << "}\n";
    return out.str();
}

inline std::string set_to_string(const Lattice& L, ElemSet xs) {
    std::string s;
    for (int x : xs) {
        if (!s.empty()) s += ",";
        s += L.label(x);
    }
    return s;
}

inline const char* cover_kind_name(CoverKind k) {
    switch (k) {
        case CoverKind::none: return "none";
        case CoverKind::cover: return "cover";
        case CoverKind::irredundant: return "irredundant";
        case CoverKind::tight: return "tight";
        case CoverKind::minimal: return "minimal";
    }
    return "?";
}

// Report line, e.g. `a <= b,c [minimal]`.
inline std::string cover_report_line(const Lattice& L, const Cover& c) {
    return L.label(c.target) + " <= " + set_to_string(L, c.members) + " [" +
           cover_kind_name(c.kind) + "]";
}

}  // namespace latkit
