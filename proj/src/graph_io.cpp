#include "graph_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace x3p {

void write_graph(const PartitionedGraph& g, std::ostream& out) {
    out << "# x3p-graph v1\n";
    if (!g.metadata().construction.empty())
        out << "# construction: " << g.metadata().construction << "\n";
    if (g.metadata().loops_discarded)
        out << "# loops-discarded: " << g.metadata().loops_discarded << "\n";
    out << "p " << g.part_count();
    for (uint64_t s : g.part_sizes()) out << " " << s;
    out << "\n";
    for (uint64_t v = 0; v < g.vertex_count(); ++v)
        if (!g.label(v).empty()) out << "v " << v << " " << g.label(v) << "\n";
    for (uint64_t u = 0; u < g.vertex_count(); ++u)
        for (uint64_t v = g.row(u).find_next(u); v != Bitset::npos; v = g.row(u).find_next(v))
            out << "e " << u << " " << v << "\n";
}

void write_graph_file(const PartitionedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(errc::io, "cannot open " + path + " for writing");
    write_graph(g, out);
    out.flush();
    if (!out) fail(errc::io, "write to " + path + " failed");
}

namespace {

[[noreturn]] void parse_fail(uint64_t line, const std::string& msg) {
    fail(errc::parse, "line " + std::to_string(line) + ": " + msg);
}

uint64_t parse_u64(const std::string& tok, uint64_t line, const char* what) {
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        parse_fail(line, std::string("bad ") + what + " '" + tok + "'");
    return value;
}

} // namespace

PartitionedGraph read_graph(std::istream& in) {
    std::string line;
    uint64_t lineno = 0;

    if (!std::getline(in, line)) parse_fail(1, "empty input");
    ++lineno;
    if (line == "# x3p-graph v1\r") line.pop_back();
    if (line != "# x3p-graph v1") parse_fail(1, "missing 'x3p-graph v1' header");

    std::optional<PartitionedGraph> graph;
    GraphMetadata meta;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string construction_tag = "# construction: ";
            const std::string loops_tag = "# loops-discarded: ";
            if (line.rfind(construction_tag, 0) == 0)
                meta.construction = line.substr(construction_tag.size());
            else if (line.rfind(loops_tag, 0) == 0)
                meta.loops_discarded = parse_u64(line.substr(loops_tag.size()), lineno, "loop count");
            continue;
        }

        std::istringstream fields(line);
        std::string kind;
        fields >> kind;
        if (kind == "p") {
            if (graph) parse_fail(lineno, "duplicate p line");
            std::string tok;
            if (!(fields >> tok)) parse_fail(lineno, "missing part count");
            uint64_t k = parse_u64(tok, lineno, "part count");
            if (k == 0) parse_fail(lineno, "part count must be positive");
            std::vector<uint64_t> sizes;
            for (uint64_t i = 0; i < k; ++i) {
                if (!(fields >> tok)) parse_fail(lineno, "missing part size");
                sizes.push_back(parse_u64(tok, lineno, "part size"));
            }
            if (fields >> tok) parse_fail(lineno, "trailing fields after p line");
            try {
                graph.emplace(std::move(sizes), meta);
            } catch (const Error& e) {
                parse_fail(lineno, e.what());
            }
        } else if (kind == "v") {
            if (!graph) parse_fail(lineno, "v line before p line");
            std::string tok;
            if (!(fields >> tok)) parse_fail(lineno, "missing vertex index");
            uint64_t v = parse_u64(tok, lineno, "vertex index");
            if (v >= graph->vertex_count()) parse_fail(lineno, "vertex index out of range");
            std::string label;
            std::getline(fields, label);
            size_t start = label.find_first_not_of(' ');
            if (start == std::string::npos) parse_fail(lineno, "missing vertex label");
            graph->set_label(v, label.substr(start));
        } else if (kind == "e") {
            if (!graph) parse_fail(lineno, "e line before p line");
            std::string ta, tb, extra;
            if (!(fields >> ta >> tb)) parse_fail(lineno, "edge needs two endpoints");
            if (fields >> extra) parse_fail(lineno, "trailing fields after edge");
            uint64_t u = parse_u64(ta, lineno, "vertex index");
            uint64_t v = parse_u64(tb, lineno, "vertex index");
            if (u >= graph->vertex_count() || v >= graph->vertex_count())
                parse_fail(lineno, "edge endpoint out of range");
            if (u >= v) parse_fail(lineno, "edge endpoints must satisfy u < v");
            try {
                graph->add_edge(u, v);
            } catch (const Error& e) {
                parse_fail(lineno, e.what());
            }
        } else {
            parse_fail(lineno, "unknown record '" + kind + "'");
        }
    }
    if (!graph) parse_fail(lineno, "missing p line");
    graph->metadata() = meta;
    graph->validate();
    return std::move(*graph);
}

PartitionedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io, "cannot open " + path);
    return read_graph(in);
}

} // namespace x3p
