#ifndef RAINBOW_AW_GRAPH_HH
#define RAINBOW_AW_GRAPH_HH

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rainbow_aw
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    class GraphError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Raised by the edge-list reader; carries the 1-based line of the offending input.
    class ParseError : public GraphError
    {
    public:
        ParseError(std::size_t line, const std::string & what);

        auto line() const noexcept -> std::size_t { return _line; }

    private:
        std::size_t _line;
    };

    /// Immutable undirected simple graph on vertices 0 .. order()-1.  Adjacency
    /// lists are sorted and symmetric.
    class Graph
    {
    public:
        Graph() = default;

        /// Builds a graph from an edge list.  Throws GraphError on self-loops,
        /// duplicate edges or out-of-range endpoints.
        static auto from_edges(int order, std::span<const Edge> edges) -> Graph;

        auto order() const noexcept -> int { return static_cast<int>(_adjacency.size()); }
        auto size() const noexcept -> std::size_t { return _edge_count; }
        auto empty() const noexcept -> bool { return _adjacency.empty(); }

        auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adjacency.at(v); }
        auto degree(Vertex v) const -> int { return static_cast<int>(_adjacency.at(v).size()); }
        auto adjacent(Vertex u, Vertex v) const -> bool;

        /// Edges as (u, v) with u < v, sorted lexicographically.
        auto edges() const -> std::vector<Edge>;

        auto operator==(const Graph &) const -> bool = default;

    private:
        std::vector<std::vector<Vertex>> _adjacency;
        std::size_t _edge_count = 0;
    };

    /// Membership set over the vertices of one graph.
    class VertexSet
    {
    public:
        VertexSet() = default;
        explicit VertexSet(int universe) : _bits(universe, 0) {}
        VertexSet(int universe, std::span<const Vertex> members);

        auto universe() const noexcept -> int { return static_cast<int>(_bits.size()); }
        auto contains(Vertex v) const -> bool { return _bits.at(v) != 0; }
        auto size() const noexcept -> int { return _count; }
        void insert(Vertex v);

        /// Members in increasing order.
        auto members() const -> std::vector<Vertex>;

        auto operator==(const VertexSet &) const -> bool = default;

    private:
        std::vector<char> _bits;
        int _count = 0;
    };

    /// All-pairs hop distances.  Unreachable pairs hold `unreachable`; the
    /// eccentricity and diameter are taken over finite entries only.
    class DistanceMatrix
    {
    public:
        static constexpr int unreachable = -1;

        DistanceMatrix() = default;

        auto order() const noexcept -> int { return _order; }
        auto operator()(Vertex u, Vertex v) const -> int { return _dist[static_cast<std::size_t>(u) * _order + v]; }
        auto reachable(Vertex u, Vertex v) const -> bool { return (*this)(u, v) != unreachable; }
        auto row(Vertex u) const -> std::span<const int>
        {
            return {_dist.data() + static_cast<std::size_t>(u) * _order, static_cast<std::size_t>(_order)};
        }

        auto eccentricity(Vertex v) const -> int { return _ecc.at(v); }
        auto eccentricities() const -> std::span<const int> { return _ecc; }
        auto diameter() const noexcept -> int { return _diameter; }
        auto radius() const noexcept -> int { return _radius; }
        auto connected() const noexcept -> bool { return _connected; }

    private:
        friend auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

        int _order = 0;
        std::vector<int> _dist;
        std::vector<int> _ecc;
        int _diameter = 0;
        int _radius = 0;
        bool _connected = true;
    };

    struct InducedSubgraph
    {
        Graph graph;
        std::vector<Vertex> to_parent; ///< subgraph id -> parent id
    };

    struct CenterAndPeriphery
    {
        VertexSet center;
        VertexSet peripheral;
    };

    /// Reads the edge-list format: a vertex count line, then one "u v" edge per
    /// line.  Blank lines and lines starting with '#' are ignored.
    auto parse_edge_list(std::string_view text) -> Graph;
    auto format_edge_list(const Graph & g) -> std::string;

    auto all_pairs_distances(const Graph & g) -> DistanceMatrix;
    auto bfs_distances(const Graph & g, Vertex source) -> std::vector<int>;

    auto is_connected(const Graph & g) -> bool;
    auto is_tree(const Graph & g) -> bool;
    auto is_forest(const Graph & g) -> bool;

    auto induced_subgraph(const Graph & g, std::span<const Vertex> vertices) -> InducedSubgraph;

    /// Maximal connected pieces, ordered by smallest member.
    auto connected_components(const Graph & g) -> std::vector<InducedSubgraph>;

    /// Throws GraphError when the matrix belongs to a disconnected graph.
    auto center_and_peripheral(const DistanceMatrix & dm) -> CenterAndPeriphery;

    /// True iff `map` (sub vertex -> host vertex) preserves all pairwise
    /// distances.  A map that is not edge-preserving is never isometric.  Throws
    /// GraphError when the map is not injective or leaves the host.
    auto is_isometric_embedding(const Graph & sub, const Graph & host, std::span<const Vertex> map) -> bool;

    auto make_path(int order) -> Graph;
    auto make_star(int leaves) -> Graph;
    auto make_cycle(int order) -> Graph;
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
}

#endif
