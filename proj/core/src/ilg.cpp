#include "lsg/ilg.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace lsg {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size())
                lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::vector<int> parse_ints(std::string_view line, int line_no) {
    std::vector<int> values;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i >= line.size())
            break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        int value = 0;
        auto token = line.substr(i, j - i);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                             std::string(token) + "'");
        values.push_back(value);
        i = j;
    }
    return values;
}

} // namespace

Graph parse_ilg(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty())
        throw ParseError("line 1: missing header \"n d\"");

    auto header = parse_ints(lines[0], 1);
    if (header.size() != 2)
        throw ParseError("line 1: header must be exactly \"n d\"");
    const int n = header[0];
    const int d = header[1];
    if (n < 1)
        throw ParseError("line 1: vertex count must be positive, got " + std::to_string(n));
    if (d < 1)
        throw ParseError("line 1: degree bound must be positive, got " + std::to_string(d));
    if (static_cast<int>(lines.size()) < n + 1)
        throw ParseError("line " + std::to_string(lines.size() + 1) + ": expected " +
                         std::to_string(n) + " adjacency lines, got " +
                         std::to_string(lines.size() - 1));
    for (std::size_t extra = n + 1; extra < lines.size(); ++extra)
        if (!parse_ints(lines[extra], static_cast<int>(extra) + 1).empty())
            throw ParseError("line " + std::to_string(extra + 1) + ": unexpected content after " +
                             std::to_string(n) + " adjacency lines");

    std::vector<std::vector<int>> adjacency(n);
    for (int v = 1; v <= n; ++v) {
        const int line_no = v + 1;
        auto list = parse_ints(lines[v], line_no);
        if (static_cast<int>(list.size()) > d)
            throw ParseError("line " + std::to_string(line_no) + ": vertex " + std::to_string(v) +
                             " lists " + std::to_string(list.size()) +
                             " neighbors, above the bound " + std::to_string(d));
        for (int u : list) {
            if (u < 1 || u > n)
                throw ParseError("line " + std::to_string(line_no) + ": neighbor id " +
                                 std::to_string(u) + " outside 1.." + std::to_string(n));
            if (u == v)
                throw ParseError("line " + std::to_string(line_no) + ": vertex " +
                                 std::to_string(v) + " lists itself");
        }
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                if (list[i] == list[j])
                    throw ParseError("line " + std::to_string(line_no) + ": duplicate neighbor " +
                                     std::to_string(list[i]));
        adjacency[v - 1] = std::move(list);
    }
    // Symmetry with a line-numbered report.
    for (int v = 1; v <= n; ++v) {
        for (int u : adjacency[v - 1]) {
            const auto& back = adjacency[u - 1];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw ParseError("line " + std::to_string(v + 1) + ": edge (" + std::to_string(v) +
                                 "," + std::to_string(u) + ") is not symmetric, vertex " +
                                 std::to_string(u) + " (line " + std::to_string(u + 1) +
                                 ") does not list " + std::to_string(v));
        }
    }
    return Graph::from_adjacency(d, std::move(adjacency));
}

std::string write_ilg(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.degree_bound() << '\n';
    for (int v = 1; v <= g.vertex_count(); ++v) {
        auto list = g.neighbors(v);
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i > 0)
                out << ' ';
            out << list[i];
        }
        out << '\n';
    }
    return out.str();
}

Graph load_ilg(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("cannot open graph file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_ilg(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_ilg(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DomainError("cannot write graph file: " + path);
    out << write_ilg(g);
}

} // namespace lsg
