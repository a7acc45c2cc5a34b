#include "svcfc/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "svcfc/errors.hpp"

namespace svcfc {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw input_error("line " + std::to_string(line) + ": " + what);
}

std::vector<long long> parse_ints(const std::string& text, int line, const std::string& what) {
    std::istringstream in(text);
    std::vector<long long> values;
    long long value = 0;
    while (in >> value)
        values.push_back(value);
    if (!in.eof()) {
        std::string garbage;
        in.clear();
        in >> garbage;
        parse_fail(line, "unexpected token '" + garbage + "' in " + what);
    }
    return values;
}

} // namespace

ParsedInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;

    long long n = -1, m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    std::optional<std::vector<Vertex>> x;
    std::optional<int> k;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string trimmed = raw;
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
            trimmed.pop_back();
        size_t start = trimmed.find_first_not_of(' ');
        if (start == std::string::npos)
            continue;
        trimmed = trimmed.substr(start);

        if (n == -1) {
            auto header = parse_ints(trimmed, line_no, "header");
            if (header.size() != 2)
                parse_fail(line_no, "header must be 'n m'");
            n = header[0];
            m = header[1];
            if (n < 1)
                parse_fail(line_no, "vertex count must be at least 1");
            if (m < 0)
                parse_fail(line_no, "edge count must be nonnegative");
            continue;
        }

        if (static_cast<long long>(edges.size()) < m) {
            auto pair = parse_ints(trimmed, line_no, "edge");
            if (pair.size() != 2)
                parse_fail(line_no, "edge line must be 'u v'");
            long long u = pair[0], v = pair[1];
            if (u < 0 || u >= n || v < 0 || v >= n)
                parse_fail(line_no, "edge endpoint out of range");
            if (u == v)
                parse_fail(line_no, "self-loop");
            if (u > v)
                std::swap(u, v);
            if (!seen.insert({static_cast<Vertex>(u), static_cast<Vertex>(v)}).second)
                parse_fail(line_no, "duplicate edge");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            continue;
        }

        if (trimmed.rfind("X:", 0) == 0) {
            if (x.has_value())
                parse_fail(line_no, "duplicate X annotation");
            auto values = parse_ints(trimmed.substr(2), line_no, "X annotation");
            std::vector<Vertex> verts;
            std::set<long long> distinct;
            for (long long v : values) {
                if (v < 0 || v >= n)
                    parse_fail(line_no, "annotation vertex out of range");
                if (!distinct.insert(v).second)
                    parse_fail(line_no, "annotation vertex repeated");
                verts.push_back(static_cast<Vertex>(v));
            }
            std::sort(verts.begin(), verts.end());
            x = std::move(verts);
            continue;
        }

        if (trimmed.rfind("k:", 0) == 0) {
            if (k.has_value())
                parse_fail(line_no, "duplicate k line");
            auto values = parse_ints(trimmed.substr(2), line_no, "k line");
            if (values.size() != 1 || values[0] < 1)
                parse_fail(line_no, "k must be a single positive integer");
            k = static_cast<int>(values[0]);
            continue;
        }

        parse_fail(line_no, "unexpected line '" + trimmed + "'");
    }

    if (n == -1)
        parse_fail(line_no + 1, "missing header");
    if (static_cast<long long>(edges.size()) < m)
        parse_fail(line_no + 1, "expected " + std::to_string(m) + " edges, got " +
                                    std::to_string(edges.size()));

    return ParsedInstance{Graph(static_cast<int>(n), edges), std::move(x), k};
}

std::string serialize_instance(const Graph& g, const std::optional<std::vector<Vertex>>& x,
                               std::optional<int> k) {
    std::ostringstream out;
    out << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges())
        out << u << " " << v << "\n";
    if (x.has_value()) {
        std::vector<Vertex> sorted = *x;
        std::sort(sorted.begin(), sorted.end());
        out << "X:";
        for (Vertex v : sorted)
            out << " " << v;
        out << "\n";
    }
    if (k.has_value())
        out << "k: " << *k << "\n";
    return out.str();
}

namespace {

constexpr int kG6Offset = 63;

int g6_byte(const std::string& line, size_t i) {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126)
        throw input_error("invalid graph6 byte at position " + std::to_string(i));
    return c - kG6Offset;
}

} // namespace

Graph parse_graph6(const std::string& raw) {
    std::string line = raw;
    if (line.rfind(">>graph6<<", 0) == 0)
        line = line.substr(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.pop_back();
    if (line.empty())
        throw input_error("empty graph6 string");

    size_t pos = 0;
    long long n = 0;
    if (g6_byte(line, 0) != 63) {
        n = g6_byte(line, 0);
        pos = 1;
    } else if (line.size() >= 4 && g6_byte(line, 1) != 63) {
        n = 0;
        for (size_t i = 1; i <= 3; ++i)
            n = (n << 6) | g6_byte(line, i);
        pos = 4;
    } else if (line.size() >= 8) {
        n = 0;
        for (size_t i = 2; i <= 7; ++i)
            n = (n << 6) | g6_byte(line, i);
        pos = 8;
    } else {
        throw input_error("truncated graph6 size field");
    }
    if (n < 1)
        throw input_error("graph6 graph has no vertices");

    long long bits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((bits + 5) / 6);
    if (line.size() - pos != need)
        throw input_error("graph6 body has wrong length: expected " + std::to_string(need) +
                          " bytes, got " + std::to_string(line.size() - pos));

    std::vector<std::pair<Vertex, Vertex>> edges;
    long long bit = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++bit) {
            int byte = g6_byte(line, pos + static_cast<size_t>(bit / 6));
            if ((byte >> (5 - bit % 6)) & 1)
                edges.emplace_back(u, v);
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> parse_graph6_file(const std::string& text) {
    std::istringstream in(text);
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        std::string stripped = line;
        while (!stripped.empty() && (stripped.back() == '\r' || stripped.back() == ' '))
            stripped.pop_back();
        if (stripped.empty())
            continue;
        graphs.push_back(parse_graph6(stripped));
    }
    return graphs;
}

std::string to_graph6(const Graph& g) {
    long long n = g.num_vertices();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Offset));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kG6Offset));
    }
    long long bits = n * (n - 1) / 2;
    std::vector<int> body(static_cast<size_t>((bits + 5) / 6), 0);
    long long bit = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++bit) {
            if (g.has_edge(u, v))
                body[static_cast<size_t>(bit / 6)] |= 1 << (5 - bit % 6);
        }
    }
    for (int b : body)
        out.push_back(static_cast<char>(b + kG6Offset));
    return out;
}

} // namespace svcfc
