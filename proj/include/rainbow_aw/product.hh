#ifndef RAINBOW_AW_PRODUCT_HH
#define RAINBOW_AW_PRODUCT_HH

#include <rainbow_aw/graph.hh>

#include <string>
#include <utility>

namespace rainbow_aw
{
    enum class Factor
    {
        first,
        second
    };

    /// Cartesian product of two graphs.  Vertex (i, j) pairs vertex i of the
    /// first factor with vertex j of the second and has the row-major flat id
    /// i * n2 + j.  Distances come from the factor matrices; the product's own
    /// matrix is never built unless asked for.
    class ProductGraph
    {
    public:
        ProductGraph(Graph first, Graph second);

        auto graph() const noexcept -> const Graph & { return _graph; }
        auto factor(Factor which) const noexcept -> const Graph & { return which == Factor::first ? _first : _second; }
        auto factor_distances(Factor which) const noexcept -> const DistanceMatrix &
        {
            return which == Factor::first ? _first_dist : _second_dist;
        }

        auto order() const noexcept -> int { return _graph.order(); }
        auto first_order() const noexcept -> int { return _first.order(); }
        auto second_order() const noexcept -> int { return _second.order(); }

        auto flat(Vertex i, Vertex j) const -> Vertex;
        auto coordinates(Vertex flat) const -> std::pair<Vertex, Vertex>;

        /// d1(i, h) + d2(j, k); DistanceMatrix::unreachable if either factor pair is.
        auto distance(Vertex a, Vertex b) const -> int;

        /// diam(first) + diam(second), meaningful for connected factors.
        auto diameter() const noexcept -> int { return _first_dist.diameter() + _second_dist.diameter(); }

        /// Full BFS matrix on the product graph, Θ(order²) memory.
        auto materialise_distances() const -> DistanceMatrix;

        /// "v{i+1},{j+1}", the 1-based label used in human-facing output.
        auto label(Vertex flat) const -> std::string;

    private:
        Graph _first, _second;
        DistanceMatrix _first_dist, _second_dist;
        Graph _graph;
    };

    auto cartesian_product(const Graph & g, const Graph & h) -> ProductGraph;

    auto product_distance(const ProductGraph & pg, Vertex a, Vertex b) -> int;

    /// Vertices of one labelled factor copy.  copy_of_factor(pg, first, j) is the
    /// copy of the first factor sitting over vertex j of the second, and
    /// symmetrically for the second factor.
    auto copy_of_factor(const ProductGraph & pg, Factor which, Vertex index) -> VertexSet;
}

#endif
