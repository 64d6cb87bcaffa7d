#include <rainbow_aw/dot.hh>

#include <array>
#include <functional>
#include <regex>
#include <sstream>

namespace rainbow_aw
{
    namespace
    {
        constexpr std::array fill_colours{"red", "blue", "green", "gold", "orchid", "cyan", "orange", "gray"};

        auto render(const Graph & g, const std::optional<Coloring> & coloring,
            const std::function<std::string(Vertex)> & label) -> std::string
        {
            if (coloring && coloring->order() != g.order())
                throw ColoringError("colouring does not match the graph order");

            std::ostringstream out;
            out << "graph G {\n";
            for (Vertex v = 0; v < g.order(); ++v) {
                out << "  n" << v << " [label=\"" << label(v) << "\"";
                if (coloring)
                    out << ", style=filled, fillcolor=" << fill_colours[(*coloring)[v] % fill_colours.size()];
                out << "];\n";
            }
            for (auto [u, v] : g.edges())
                out << "  n" << u << " -- n" << v << ";\n";
            out << "}\n";
            return out.str();
        }
    }

    auto to_dot(const Graph & g, const std::optional<Coloring> & coloring) -> std::string
    {
        return render(g, coloring, [](Vertex v) { return "v" + std::to_string(v + 1); });
    }

    auto to_dot(const ProductGraph & pg, const std::optional<Coloring> & coloring) -> std::string
    {
        return render(pg.graph(), coloring, [&](Vertex v) { return pg.label(v); });
    }

    auto parse_dot(std::string_view text) -> Graph
    {
        static const std::regex node(R"(^\s*n(\d+)\s*\[)");
        static const std::regex edge(R"(^\s*n(\d+)\s*--\s*n(\d+)\s*;)");

        int order = 0;
        std::vector<Edge> edges;
        std::istringstream in{std::string(text)};
        std::string line;
        std::smatch m;
        while (std::getline(in, line)) {
            if (std::regex_search(line, m, edge))
                edges.emplace_back(std::stoi(m[1]), std::stoi(m[2]));
            else if (std::regex_search(line, m, node))
                order = std::max(order, std::stoi(m[1]) + 1);
        }
        return Graph::from_edges(order, edges);
    }
}
