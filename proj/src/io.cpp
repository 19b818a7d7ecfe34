#include "gf2od/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gf2od {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("parse error at line " + std::to_string(line_no) + ": " + what);
}

// strips comments and reports whether anything is left
bool strip(std::string& line) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t n = 0;
    bool have_n = false;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (!strip(line)) continue;
        std::istringstream ls(line);
        if (!have_n) {
            std::string kw;
            ls >> kw;
            if (kw != "n") parse_fail(line_no, "expected header 'n <count>'");
            if (!(ls >> n)) parse_fail(line_no, "bad vertex count");
            have_n = true;
        } else {
            long long u, v;
            if (!(ls >> u >> v)) parse_fail(line_no, "expected '<u> <v>'");
            if (u < 0 || v < 0 || std::size_t(u) >= n || std::size_t(v) >= n)
                parse_fail(line_no, "edge endpoint out of range");
            edges.push_back({std::size_t(u), std::size_t(v)});
        }
    }
    if (!have_n) throw std::runtime_error("parse error: missing 'n <count>' header");
    return Graph(n, std::move(edges));
}

Graph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph(f);
}

BitVector parse_labels(const std::string& spec, std::size_t n) {
    if (spec == "all0") return BitVector(n);
    if (spec == "all1") {
        BitVector v(n);
        for (std::size_t i = 0; i < n; ++i) v.set(i, true);
        return v;
    }
    if (spec.size() != n)
        throw std::runtime_error("label spec length " + std::to_string(spec.size()) +
                                 " does not match vertex count " + std::to_string(n));
    return BitVector::from_string(spec);
}

RootedTree parse_tree(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    struct Row { long long id, parent; int label; };
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!strip(line)) continue;
        std::istringstream ls(line);
        Row r;
        if (!(ls >> r.id >> r.parent >> r.label)) parse_fail(line_no, "expected '<id> <parent|-1> <label>'");
        if (r.label != 0 && r.label != 1) parse_fail(line_no, "label must be 0 or 1");
        rows.push_back(r);
    }
    const std::size_t n = rows.size();
    std::vector<std::size_t> parent(n, RootedTree::npos);
    std::vector<bool> seen(n, false);
    BitVector label(n);
    for (const Row& r : rows) {
        if (r.id < 0 || std::size_t(r.id) >= n)
            throw std::runtime_error("tree file: vertex id out of range (ids must be 0.." +
                                     std::to_string(n ? n - 1 : 0) + ")");
        if (seen[std::size_t(r.id)]) throw std::runtime_error("tree file: duplicate vertex id");
        seen[std::size_t(r.id)] = true;
        if (r.parent >= 0) {
            if (std::size_t(r.parent) >= n) throw std::runtime_error("tree file: parent out of range");
            parent[std::size_t(r.id)] = std::size_t(r.parent);
        }
        if (r.label) label.set(std::size_t(r.id), true);
    }
    return RootedTree(std::move(parent), std::move(label));
}

RootedTree load_tree(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open tree file: " + path);
    return parse_tree(f);
}

} // namespace gf2od
