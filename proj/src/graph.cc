#include <rainbow_aw/graph.hh>

#include <algorithm>
#include <charconv>
#include <limits>
#include <optional>
#include <queue>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace rainbow_aw
{
    ParseError::ParseError(std::size_t line, const string & what) :
        GraphError("line " + std::to_string(line) + ": " + what),
        _line(line)
    {
    }

    auto Graph::from_edges(int order, std::span<const Edge> edges) -> Graph
    {
        if (order < 0)
            throw GraphError("negative vertex count");

        Graph g;
        g._adjacency.resize(order);
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= order || v >= order)
                throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
            if (u == v)
                throw GraphError("self-loop at " + std::to_string(u));
            g._adjacency[u].push_back(v);
            g._adjacency[v].push_back(u);
        }

        for (auto & adj : g._adjacency) {
            std::sort(adj.begin(), adj.end());
            if (auto dup = std::adjacent_find(adj.begin(), adj.end()); dup != adj.end())
                throw GraphError("duplicate edge at vertex " + std::to_string(*dup));
        }
        g._edge_count = edges.size();
        return g;
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        auto & adj = _adjacency.at(u);
        return std::binary_search(adj.begin(), adj.end(), v);
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (Vertex u = 0; u < order(); ++u)
            for (auto v : _adjacency[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    VertexSet::VertexSet(int universe, std::span<const Vertex> members) :
        _bits(universe, 0)
    {
        for (auto v : members)
            insert(v);
    }

    void VertexSet::insert(Vertex v)
    {
        if (! _bits.at(v)) {
            _bits[v] = 1;
            ++_count;
        }
    }

    auto VertexSet::members() const -> vector<Vertex>
    {
        vector<Vertex> result;
        result.reserve(_count);
        for (Vertex v = 0; v < universe(); ++v)
            if (_bits[v])
                result.push_back(v);
        return result;
    }

    namespace
    {
        auto trim(string_view s) -> string_view
        {
            auto first = s.find_first_not_of(" \t\r");
            if (first == string_view::npos)
                return {};
            auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        auto split_tokens(string_view s) -> vector<string_view>
        {
            vector<string_view> tokens;
            std::size_t pos = 0;
            while (pos < s.size()) {
                auto start = s.find_first_not_of(" \t\r", pos);
                if (start == string_view::npos)
                    break;
                auto end = s.find_first_of(" \t\r", start);
                if (end == string_view::npos)
                    end = s.size();
                tokens.push_back(s.substr(start, end - start));
                pos = end;
            }
            return tokens;
        }

        auto parse_int(string_view token, std::size_t line) -> long long
        {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw ParseError(line, "expected an integer, got '" + string(token) + "'");
            return value;
        }
    }

    auto parse_edge_list(string_view text) -> Graph
    {
        std::optional<int> order;
        vector<Edge> edges;
        vector<std::size_t> edge_lines;

        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == string_view::npos)
                nl = text.size();
            auto line = trim(text.substr(pos, nl - pos));
            pos = nl + 1;
            ++line_no;

            if (line.empty() || line.front() == '#')
                continue;

            auto tokens = split_tokens(line);
            if (! order) {
                if (tokens.size() != 1)
                    throw ParseError(line_no, "expected the vertex count on its own line");
                auto n = parse_int(tokens[0], line_no);
                if (n < 0 || n > std::numeric_limits<int>::max())
                    throw ParseError(line_no, "vertex count out of range");
                order = static_cast<int>(n);
                continue;
            }

            if (tokens.size() != 2)
                throw ParseError(line_no, "expected 'u v'");
            auto u = parse_int(tokens[0], line_no), v = parse_int(tokens[1], line_no);
            if (u < 0 || v < 0 || u >= *order || v >= *order)
                throw ParseError(line_no, "vertex id out of range 0.." + std::to_string(*order - 1));
            if (u == v)
                throw ParseError(line_no, "self-loop at " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            edge_lines.push_back(line_no);
        }

        if (! order)
            throw ParseError(line_no, "missing vertex count");

        vector<std::size_t> idx(edges.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return edges[a] < edges[b]; });
        for (std::size_t i = 1; i < idx.size(); ++i)
            if (edges[idx[i]] == edges[idx[i - 1]])
                throw ParseError(edge_lines[idx[i]], "duplicate edge " + std::to_string(edges[idx[i]].first) + " " +
                        std::to_string(edges[idx[i]].second));

        return Graph::from_edges(*order, edges);
    }

    auto format_edge_list(const Graph & g) -> string
    {
        std::ostringstream out;
        out << g.order() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
        return out.str();
    }

    auto bfs_distances(const Graph & g, Vertex source) -> vector<int>
    {
        vector<int> dist(g.order(), DistanceMatrix::unreachable);
        vector<Vertex> queue;
        queue.reserve(g.order());
        dist.at(source) = 0;
        queue.push_back(source);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto u = queue[head];
            for (auto w : g.neighbours(u))
                if (dist[w] == DistanceMatrix::unreachable) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

    auto all_pairs_distances(const Graph & g) -> DistanceMatrix
    {
        DistanceMatrix dm;
        auto n = g.order();
        dm._order = n;
        dm._dist.resize(static_cast<std::size_t>(n) * n);
        dm._ecc.assign(n, 0);

        for (Vertex s = 0; s < n; ++s) {
            auto row = bfs_distances(g, s);
            std::copy(row.begin(), row.end(), dm._dist.begin() + static_cast<std::ptrdiff_t>(s) * n);
            for (auto d : row) {
                if (d == DistanceMatrix::unreachable)
                    dm._connected = false;
                else
                    dm._ecc[s] = std::max(dm._ecc[s], d);
            }
        }

        if (n > 0) {
            dm._diameter = *std::max_element(dm._ecc.begin(), dm._ecc.end());
            dm._radius = *std::min_element(dm._ecc.begin(), dm._ecc.end());
        }
        return dm;
    }

    auto is_connected(const Graph & g) -> bool
    {
        if (g.order() == 0)
            return true;
        auto dist = bfs_distances(g, 0);
        return std::none_of(dist.begin(), dist.end(), [](int d) { return d == DistanceMatrix::unreachable; });
    }

    auto is_tree(const Graph & g) -> bool
    {
        return g.order() > 0 && g.size() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
    }

    auto is_forest(const Graph & g) -> bool
    {
        return g.size() + connected_components(g).size() == static_cast<std::size_t>(g.order());
    }

    auto induced_subgraph(const Graph & g, std::span<const Vertex> vertices) -> InducedSubgraph
    {
        vector<int> to_sub(g.order(), -1);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            if (to_sub.at(vertices[i]) != -1)
                throw GraphError("repeated vertex in induced subgraph");
            to_sub[vertices[i]] = static_cast<int>(i);
        }

        vector<Edge> edges;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (auto w : g.neighbours(vertices[i]))
                if (to_sub[w] > static_cast<int>(i))
                    edges.emplace_back(static_cast<int>(i), to_sub[w]);

        return {Graph::from_edges(static_cast<int>(vertices.size()), edges), {vertices.begin(), vertices.end()}};
    }

    auto connected_components(const Graph & g) -> vector<InducedSubgraph>
    {
        vector<InducedSubgraph> result;
        vector<char> seen(g.order(), 0);
        for (Vertex s = 0; s < g.order(); ++s) {
            if (seen[s])
                continue;
            auto dist = bfs_distances(g, s);
            vector<Vertex> members;
            for (Vertex v = 0; v < g.order(); ++v)
                if (dist[v] != DistanceMatrix::unreachable) {
                    members.push_back(v);
                    seen[v] = 1;
                }
            result.push_back(induced_subgraph(g, members));
        }
        return result;
    }

    auto center_and_peripheral(const DistanceMatrix & dm) -> CenterAndPeriphery
    {
        if (! dm.connected())
            throw GraphError("center and periphery need a connected graph");

        CenterAndPeriphery result{VertexSet(dm.order()), VertexSet(dm.order())};
        for (Vertex v = 0; v < dm.order(); ++v) {
            if (dm.eccentricity(v) == dm.radius())
                result.center.insert(v);
            if (dm.eccentricity(v) == dm.diameter())
                result.peripheral.insert(v);
        }
        return result;
    }

    auto is_isometric_embedding(const Graph & sub, const Graph & host, std::span<const Vertex> map) -> bool
    {
        if (map.size() != static_cast<std::size_t>(sub.order()))
            throw GraphError("embedding map has the wrong length");

        vector<char> used(host.order(), 0);
        for (auto h : map) {
            if (h < 0 || h >= host.order())
                throw GraphError("embedding maps outside the host graph");
            if (used[h])
                throw GraphError("embedding map is not injective");
            used[h] = 1;
        }

        for (auto [u, v] : sub.edges())
            if (! host.adjacent(map[u], map[v]))
                return false;

        auto sub_dist = all_pairs_distances(sub);
        for (Vertex u = 0; u < sub.order(); ++u) {
            auto host_row = bfs_distances(host, map[u]);
            for (Vertex v = 0; v < sub.order(); ++v)
                if (sub_dist(u, v) != host_row[map[v]])
                    return false;
        }
        return true;
    }

    auto make_path(int order) -> Graph
    {
        vector<Edge> edges;
        for (int i = 0; i + 1 < order; ++i)
            edges.emplace_back(i, i + 1);
        return Graph::from_edges(order, edges);
    }

    auto make_star(int leaves) -> Graph
    {
        vector<Edge> edges;
        for (int i = 1; i <= leaves; ++i)
            edges.emplace_back(0, i);
        return Graph::from_edges(leaves + 1, edges);
    }

    auto make_cycle(int order) -> Graph
    {
        if (order < 3)
            throw GraphError("a cycle needs at least 3 vertices");
        vector<Edge> edges;
        for (int i = 0; i < order; ++i)
            edges.emplace_back(std::min(i, (i + 1) % order), std::max(i, (i + 1) % order));
        return Graph::from_edges(order, edges);
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        auto edges = a.edges();
        for (auto [u, v] : b.edges())
            edges.emplace_back(u + a.order(), v + a.order());
        return Graph::from_edges(a.order() + b.order(), edges);
    }
}
