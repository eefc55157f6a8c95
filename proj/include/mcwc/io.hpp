// io.hpp -- text file formats for codes and generalized packings, the
// certificate sidecar, and JSON export.

#pragma once

#include <fstream>
#include <sstream>

#include "constructions.hpp"
#include "core.hpp"

namespace mcwc {

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::vector<int> split_ints(const std::string& s, char sep = ',') {
    std::vector<int> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

}  // namespace detail

// Code file: line 1 "MCWC v1"; line 2 "m= lengths= weights= d=";
// then one serialized codeword per line.
inline void write_code(std::ostream& os, const Code& c) {
    const Shape& sh = c.shape();
    os << "MCWC v1\n";
    os << "m=" << sh.parts() << " lengths=" << detail::join_ints(sh.lengths())
       << " weights=" << detail::join_ints(sh.weights()) << " d=" << sh.distance() << "\n";
    for (const auto& w : c.words()) os << w.serialize() << "\n";
}

inline void write_code_file(const std::string& path, const Code& c) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_code(os, c);
}

inline Code read_code(std::istream& is, const std::string& origin = "<stream>") {
    std::string line;
    if (!std::getline(is, line) || line.rfind("MCWC v1", 0) != 0)
        throw std::runtime_error(origin + ": missing 'MCWC v1' header");
    if (!std::getline(is, line)) throw std::runtime_error(origin + ": missing parameter line");
    auto kv = detail::parse_kv(line);
    if (!kv.count("lengths") || !kv.count("weights") || !kv.count("d"))
        throw std::runtime_error(origin + ": parameter line needs lengths=, weights=, d=");
    Shape sh(detail::split_ints(kv["lengths"]), detail::split_ints(kv["weights"]),
             std::stoi(kv["d"]));
    Code code(sh);
    int lineno = 2;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            code.insert(Codeword(sh.lengths(), line));
        } catch (const std::exception& e) {
            throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return code;
}

inline Code read_code_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_code(is, path);
}

// Packing file mirrors the code format; blocks are comma-separated per-part
// subsets, elements space-separated.
inline void write_packing(std::ostream& os, const PackingInstance& p) {
    os << "GPACK v1\n";
    os << "m=" << p.lengths.size() << " lengths=" << detail::join_ints(p.lengths)
       << " k=" << detail::join_ints(p.block_sizes) << " t=" << p.strength
       << " lambda=" << p.lambda << "\n";
    for (const auto& b : p.blocks) {
        std::string line;
        for (std::size_t i = 0; i < b.parts.size(); ++i) {
            if (i) line += ',';
            for (std::size_t j = 0; j < b.parts[i].size(); ++j) {
                if (j) line += ' ';
                line += std::to_string(b.parts[i][j]);
            }
        }
        os << line << "\n";
    }
}

inline void write_packing_file(const std::string& path, const PackingInstance& p) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_packing(os, p);
}

inline PackingInstance read_packing(std::istream& is, const std::string& origin = "<stream>") {
    std::string line;
    if (!std::getline(is, line) || line.rfind("GPACK v1", 0) != 0)
        throw std::runtime_error(origin + ": missing 'GPACK v1' header");
    if (!std::getline(is, line)) throw std::runtime_error(origin + ": missing parameter line");
    auto kv = detail::parse_kv(line);
    PackingInstance p;
    p.lengths = detail::split_ints(kv["lengths"]);
    p.block_sizes = detail::split_ints(kv["k"]);
    p.strength = std::stoi(kv["t"]);
    p.lambda = std::stoi(kv["lambda"]);
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        GeneralizedBlock b;
        std::string part;
        std::istringstream ls(line);
        while (std::getline(ls, part, ',')) b.parts.push_back(detail::split_ints(part, ' '));
        while (b.parts.size() < p.lengths.size()) b.parts.emplace_back();
        b.normalize();
        p.blocks.push_back(std::move(b));
    }
    return p;
}

inline PackingInstance read_packing_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_packing(is, path);
}

// Certificate sidecar: key=value lines.
inline void write_certificate_file(const std::string& path, const ConstructionCertificate& c) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << "size=" << c.size << "\n";
    os << "distance=" << c.distance << "\n";
    os << "optimal=" << (c.optimal ? "true" : "false") << "\n";
    if (!c.bound_method.empty()) os << "bound_method=" << c.bound_method << "\n";
    if (c.bound_value) os << "bound_value=" << c.bound_value->str() << "\n";
    os << "provenance=" << c.provenance << "\n";
}

inline std::map<std::string, std::string> read_certificate_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(is, line)) {
        auto eq = line.find('=');
        if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

}  // namespace mcwc
