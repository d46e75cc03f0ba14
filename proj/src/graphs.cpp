#include "harmolight/graphs.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace harmolight {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u >= n || v >= n)
            throw std::invalid_argument("vertex index out of range: " +
                                        std::to_string(std::max(u, v)));
        if (u > v)
            std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u > v)
        std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::uint32_t> Graph::degrees() const {
    std::vector<std::uint32_t> deg(n_, 0);
    for (auto [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<std::vector<std::uint32_t>> Graph::adjacency_lists() const {
    std::vector<std::vector<std::uint32_t>> adj(n_);
    for (auto [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

long long parse_int(std::string_view tok, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                    std::string(tok) + "'");
    return value;
}

Graph parse_edge_list(const std::vector<std::string_view>& lines) {
    std::string_view header = lines[0];
    if (!header.starts_with("n="))
        throw std::invalid_argument("malformed header, expected n=<int>");
    const long long n = parse_int(trim(header.substr(2)), "vertex count");
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream iss{std::string(lines[i])};
        std::string a, b, extra;
        if (!(iss >> a >> b) || (iss >> extra))
            throw std::invalid_argument("malformed edge line: '" + std::string(lines[i]) + "'");
        const long long u = parse_int(a, "vertex index");
        const long long v = parse_int(b, "vertex index");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("vertex index out of range on line: '" +
                                        std::string(lines[i]) + "'");
        edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

} // namespace

Graph parse_graph6(std::string_view line) {
    line = trim(line);
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    if (line.empty())
        throw std::invalid_argument("empty graph6 string");
    for (char ch : line)
        if (ch < 63 || ch > 126)
            throw std::invalid_argument("invalid graph6 character");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (line[0] == 126) {
        if (line.size() >= 2 && line[1] == 126)
            throw std::invalid_argument("graph6 order too large");
        if (line.size() < 4)
            throw std::invalid_argument("truncated graph6 header");
        n = 0;
        for (std::size_t i = 1; i <= 3; ++i)
            n = (n << 6) | static_cast<std::uint64_t>(line[i] - 63);
        pos = 4;
    } else {
        n = static_cast<std::uint64_t>(line[0] - 63);
        pos = 1;
    }

    const std::uint64_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t nbytes = (nbits + 5) / 6;
    if (line.size() - pos != nbytes)
        throw std::invalid_argument("graph6 body length mismatch");

    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    for (std::uint64_t v = 1; v < n; ++v) {
        for (std::uint64_t u = 0; u < v; ++u, ++bit) {
            const std::uint64_t byte = bit / 6;
            const int shift = 5 - static_cast<int>(bit % 6);
            if ((static_cast<unsigned>(line[pos + byte] - 63) >> shift) & 1u)
                edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
        }
    }
    // Padding bits must be zero.
    for (std::uint64_t b = nbits; b < nbytes * 6; ++b) {
        const std::uint64_t byte = b / 6;
        const int shift = 5 - static_cast<int>(b % 6);
        if ((static_cast<unsigned>(line[pos + byte] - 63) >> shift) & 1u)
            throw std::invalid_argument("nonzero graph6 padding");
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph parse_graph(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty())
            lines.push_back(line);
        start = end + 1;
    }
    if (lines.empty())
        throw std::invalid_argument("empty graph description");
    if (lines[0].starts_with("n="))
        return parse_edge_list(lines);
    if (lines.size() == 1)
        return parse_graph6(lines[0]);
    throw std::invalid_argument("unrecognized graph format (expected n=<int> header or graph6)");
}

std::string to_edge_list(const Graph& g) {
    std::string out = "n=" + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

BitMatrix harmonic_matrix(const Graph& g) {
    const std::size_t n = g.vertex_count();
    BitMatrix a(n);
    std::vector<std::uint32_t> deg(n, 0);
    for (auto [u, v] : g.edges()) {
        a.set(u, v, true);
        a.set(v, u, true);
        ++deg[u];
        ++deg[v];
    }
    for (std::size_t i = 0; i < n; ++i)
        if (deg[i] & 1u)
            a.set(i, i, true);
    return a;
}

Graph graph_from_harmonic(const BitMatrix& m) {
    const std::size_t n = m.dim();
    if (!m.is_symmetric())
        throw std::invalid_argument("harmonic matrix must be symmetric");
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t row_sum = 0;
        for (std::size_t c = 0; c < n; ++c)
            row_sum += m.get(r, c);
        if (row_sum & 1u)
            throw std::invalid_argument("row " + std::to_string(r) +
                                        " has odd sum; not a harmonic matrix");
        for (std::size_t c = r + 1; c < n; ++c)
            if (m.get(r, c))
                edges.emplace_back(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c));
    }
    return Graph(n, std::move(edges));
}

CoState boundary(const Graph& g, const State& s) {
    if (s.length() != g.vertex_count())
        throw std::invalid_argument("state length does not match vertex count");
    CoState out(g.edge_count());
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (s.get(edges[e].first) != s.get(edges[e].second))
            out.set(e, true);
    return out;
}

State coboundary(const Graph& g, const CoState& c) {
    if (c.length() != g.edge_count())
        throw std::invalid_argument("co-state length does not match edge count");
    State out(g.vertex_count());
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (c.get(e)) {
            out.flip(edges[e].first);
            out.flip(edges[e].second);
        }
    return out;
}

} // namespace harmolight
