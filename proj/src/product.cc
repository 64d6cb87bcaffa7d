#include <rainbow_aw/product.hh>

#include <vector>

namespace rainbow_aw
{
    namespace
    {
        auto build_product(const Graph & g, const Graph & h) -> Graph
        {
            auto n2 = h.order();
            std::vector<Edge> edges;
            edges.reserve(g.order() * h.size() + n2 * g.size());
            for (Vertex i = 0; i < g.order(); ++i)
                for (auto [j, k] : h.edges())
                    edges.emplace_back(i * n2 + j, i * n2 + k);
            for (auto [i, h2] : g.edges())
                for (Vertex j = 0; j < n2; ++j)
                    edges.emplace_back(i * n2 + j, h2 * n2 + j);
            return Graph::from_edges(g.order() * n2, edges);
        }
    }

    ProductGraph::ProductGraph(Graph first, Graph second) :
        _first(std::move(first)),
        _second(std::move(second))
    {
        if (_first.empty() || _second.empty())
            throw GraphError("Cartesian product needs nonempty factors");
        _first_dist = all_pairs_distances(_first);
        _second_dist = all_pairs_distances(_second);
        _graph = build_product(_first, _second);
    }

    auto ProductGraph::flat(Vertex i, Vertex j) const -> Vertex
    {
        if (i < 0 || i >= first_order() || j < 0 || j >= second_order())
            throw GraphError("product coordinates out of range");
        return i * second_order() + j;
    }

    auto ProductGraph::coordinates(Vertex flat) const -> std::pair<Vertex, Vertex>
    {
        if (flat < 0 || flat >= order())
            throw GraphError("product vertex " + std::to_string(flat) + " out of range");
        return {flat / second_order(), flat % second_order()};
    }

    auto ProductGraph::distance(Vertex a, Vertex b) const -> int
    {
        auto [i, j] = coordinates(a);
        auto [h, k] = coordinates(b);
        auto d1 = _first_dist(i, h), d2 = _second_dist(j, k);
        if (d1 == DistanceMatrix::unreachable || d2 == DistanceMatrix::unreachable)
            return DistanceMatrix::unreachable;
        return d1 + d2;
    }

    auto ProductGraph::materialise_distances() const -> DistanceMatrix
    {
        return all_pairs_distances(_graph);
    }

    auto ProductGraph::label(Vertex flat) const -> std::string
    {
        auto [i, j] = coordinates(flat);
        return "v" + std::to_string(i + 1) + "," + std::to_string(j + 1);
    }

    auto cartesian_product(const Graph & g, const Graph & h) -> ProductGraph
    {
        return ProductGraph(g, h);
    }

    auto product_distance(const ProductGraph & pg, Vertex a, Vertex b) -> int
    {
        return pg.distance(a, b);
    }

    auto copy_of_factor(const ProductGraph & pg, Factor which, Vertex index) -> VertexSet
    {
        VertexSet result(pg.order());
        if (which == Factor::first) {
            if (index < 0 || index >= pg.second_order())
                throw GraphError("copy index out of range");
            for (Vertex i = 0; i < pg.first_order(); ++i)
                result.insert(pg.flat(i, index));
        }
        else {
            if (index < 0 || index >= pg.first_order())
                throw GraphError("copy index out of range");
            for (Vertex j = 0; j < pg.second_order(); ++j)
                result.insert(pg.flat(index, j));
        }
        return result;
    }
}
