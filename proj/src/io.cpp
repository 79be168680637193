#include "inj/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace inj {

namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t where) {
    throw Error(Errc::ParseError, what + " at byte " + std::to_string(where));
}

} // namespace

GraphFormat format_from_path(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "g6" || ext == "graph6") return GraphFormat::Graph6;
    if (ext == "col" || ext == "dimacs") return GraphFormat::Dimacs;
    return GraphFormat::EdgeList;
}

Graph read_graph6(const std::string& text) {
    std::size_t pos = 0;
    const std::string header = ">>graph6<<";
    if (text.compare(0, header.size(), header) == 0) pos = header.size();
    if (pos < text.size() && text[pos] == ':')
        throw Error(Errc::FormatViolation, "sparse6 input is not supported");

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) parse_fail("unexpected end of graph6 data", i);
        unsigned char raw = static_cast<unsigned char>(text[i]);
        if (raw < 63 || raw > 126) parse_fail("byte outside the printable graph6 range", i);
        return raw - 63;
    };

    auto raw_at = [&](std::size_t i) -> unsigned char {
        if (i >= text.size()) parse_fail("unexpected end of graph6 data", i);
        return static_cast<unsigned char>(text[i]);
    };

    long long n = 0;
    if (raw_at(pos) != 126) {
        n = byte_at(pos);
        ++pos;
    } else if (raw_at(pos + 1) != 126) {
        ++pos;
        for (int i = 0; i < 3; ++i) n = n * 64 + byte_at(pos + static_cast<std::size_t>(i));
        pos += 3;
    } else {
        pos += 2;
        for (int i = 0; i < 6; ++i) n = n * 64 + byte_at(pos + static_cast<std::size_t>(i));
        pos += 6;
    }
    if (n > 100000) throw Error(Errc::TooLarge, "graph6 vertex count " + std::to_string(n));

    std::vector<std::pair<int, int>> edges;
    long long bit_index = 0;
    long long total_bits = n * (n - 1) / 2;
    int column = 1, row = 0;
    while (bit_index < total_bits) {
        int packet = byte_at(pos);
        ++pos;
        for (int b = 5; b >= 0 && bit_index < total_bits; --b, ++bit_index) {
            if (packet >> b & 1) edges.emplace_back(row, column);
            if (++row == column) {
                ++column;
                row = 0;
            }
        }
    }
    while (pos < text.size() && (text[pos] == '\n' || text[pos] == '\r')) ++pos;
    if (pos != text.size()) parse_fail("trailing bytes after graph6 data", pos);
    return Graph::build(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    std::string out;
    long long n = g.vertex_count();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    std::vector<char> bits(static_cast<std::size_t>(n * (n - 1) / 2), 0);
    auto index_of = [](long long row, long long column) { return column * (column - 1) / 2 + row; };
    for (auto [u, v] : g.edges()) {
        auto [row, column] = std::minmax(u, v);
        bits[static_cast<std::size_t>(index_of(row, column))] = 1;
    }
    int packet = 0, filled = 0;
    for (char bit : bits) {
        packet = packet << 1 | bit;
        if (++filled == 6) {
            out.push_back(static_cast<char>(packet + 63));
            packet = 0;
            filled = 0;
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((packet << (6 - filled)) + 63));
    return out;
}

Graph read_edgelist(const std::string& text) {
    std::istringstream in(text);
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw Error(Errc::ParseError, "edge list must start with 'n m'");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw Error(Errc::ParseError, "edge list ended after " + std::to_string(i) + " of " +
                                              std::to_string(m) + " edges");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string leftover;
    if (in >> leftover) throw Error(Errc::ParseError, "unexpected token '" + leftover + "'");
    return Graph::build(static_cast<int>(n), edges);
}

std::string write_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "p") {
            std::string kind;
            if (!(fields >> kind >> n >> m) || (kind != "edge" && kind != "col"))
                throw Error(Errc::ParseError, "bad problem line at line " + std::to_string(line_no));
        } else if (tag == "e") {
            long long u = 0, v = 0;
            if (!(fields >> u >> v))
                throw Error(Errc::ParseError, "bad edge line at line " + std::to_string(line_no));
            if (u < 1 || v < 1)
                throw Error(Errc::ParseError,
                            "DIMACS vertices are 1-indexed; got " + std::to_string(std::min(u, v)) +
                                " at line " + std::to_string(line_no));
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw Error(Errc::ParseError, "unknown line tag '" + tag + "' at line " + std::to_string(line_no));
        }
    }
    if (n < 0) throw Error(Errc::ParseError, "missing 'p edge n m' line");
    if (m >= 0 && m != static_cast<long long>(edges.size()))
        throw Error(Errc::FormatViolation, "edge count mismatch: declared " + std::to_string(m) +
                                               ", found " + std::to_string(edges.size()));
    return Graph::build(static_cast<int>(n), edges);
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    return out.str();
}

Graph read_graph_text(const std::string& text, GraphFormat format) {
    switch (format) {
    case GraphFormat::Graph6: {
        // trim trailing newline; graph6 is a single line
        std::string body = text;
        while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
        return read_graph6(body);
    }
    case GraphFormat::EdgeList: return read_edgelist(text);
    case GraphFormat::Dimacs: return read_dimacs(text);
    }
    throw Error(Errc::Internal, "unhandled format");
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return read_graph_text(buffer.str(), format);
}

std::string write_result_json(const Graph& g, const std::string& method, int index_or_bound,
                              const std::vector<int>& colors, const std::vector<EdgeId>& clique) {
    nlohmann::ordered_json out;
    out["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
    out["method"] = method;
    out["index_or_bound"] = index_or_bound;
    out["colors"] = colors;
    out["valid"] = true;
    out["certificates"] = {{"clique", clique}};
    return out.dump(2);
}

std::string write_result_tsv(const Graph& g, const std::vector<int>& colors) {
    std::ostringstream out;
    out << "edge_u\tedge_v\tcolor\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out << u << '\t' << v << '\t' << colors[static_cast<std::size_t>(e)] << '\n';
    }
    return out.str();
}

std::string write_mad_json(const Graph& g, const Rational& mad) {
    nlohmann::ordered_json out;
    out["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}};
    out["method"] = "mad";
    out["mad"] = {{"num", mad.num}, {"den", mad.den}};
    return out.dump(2);
}

} // namespace inj
