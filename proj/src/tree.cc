#include <rainbow_aw/tree.hh>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace rainbow_aw
{
    auto to_string(TreeKind kind) -> string_view
    {
        switch (kind) {
            case TreeKind::trivial: return "Trivial";
            case TreeKind::three_peripheral: return "ThreePeripheral";
            case TreeKind::strongly_non3_peripheral: return "StronglyNon3Peripheral";
            case TreeKind::weakly_non3_peripheral: return "WeaklyNon3Peripheral";
        }
        return "?";
    }

    auto to_string(DiameterParity parity) -> string_view
    {
        switch (parity) {
            case DiameterParity::zero: return "zero";
            case DiameterParity::odd: return "odd";
            case DiameterParity::even: return "even";
        }
        return "?";
    }

    auto parity_of(int diameter) -> DiameterParity
    {
        if (diameter == 0)
            return DiameterParity::zero;
        return diameter % 2 ? DiameterParity::odd : DiameterParity::even;
    }

    auto is_n_peripheral(const DistanceMatrix & dm, int n) -> optional<PeripheralWitness>
    {
        if (n < 1)
            throw std::invalid_argument("n-peripherality needs n >= 1");
        auto peripheral = center_and_peripheral(dm).peripheral.members();
        if (static_cast<int>(peripheral.size()) < n)
            return std::nullopt;

        auto diam = dm.diameter();
        vector<Vertex> chosen;
        std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
            if (static_cast<int>(chosen.size()) == n)
                return true;
            for (auto i = from; i < peripheral.size(); ++i) {
                auto v = peripheral[i];
                if (std::all_of(chosen.begin(), chosen.end(), [&](Vertex u) { return u != v && dm(u, v) == diam; })) {
                    chosen.push_back(v);
                    if (extend(i + 1))
                        return true;
                    chosen.pop_back();
                }
            }
            return false;
        };

        if (extend(0))
            return PeripheralWitness{chosen};
        return std::nullopt;
    }

    auto is_three_peripheral(const Graph & g) -> bool
    {
        return is_n_peripheral(all_pairs_distances(g), 3).has_value();
    }

    auto tree_minus(const Graph & t, Vertex v) -> InducedSubgraph
    {
        if (! is_tree(t) || t.order() < 2)
            throw GraphError("tree_minus needs a nontrivial tree");
        if (v < 0 || v >= t.order())
            throw GraphError("vertex " + std::to_string(v) + " out of range");

        auto dm = all_pairs_distances(t);
        if (dm.eccentricity(v) != dm.diameter())
            throw GraphError("vertex " + std::to_string(v) + " is not peripheral");

        vector<Vertex> keep;
        for (Vertex u = 0; u < t.order(); ++u)
            if (dm(u, v) < dm.diameter())
                keep.push_back(u);
        return induced_subgraph(t, keep);
    }

    auto tree_plus(const Graph & t, Vertex u) -> Graph
    {
        if (u < 0 || u >= t.order())
            throw GraphError("vertex " + std::to_string(u) + " out of range");
        auto edges = t.edges();
        edges.emplace_back(u, t.order());
        return Graph::from_edges(t.order() + 1, edges);
    }

    auto classify_tree(const Graph & t) -> TreeClass
    {
        if (! is_tree(t))
            throw GraphError("classify_tree needs a tree");

        TreeClass result;
        if (t.order() == 1)
            return result;

        auto dm = all_pairs_distances(t);
        result.diameter = dm.diameter();
        result.parity = parity_of(result.diameter);
        result.is_p2 = t.order() == 2;

        if (auto triple = is_n_peripheral(dm, 3)) {
            result.kind = TreeKind::three_peripheral;
            result.peripheral_triple = std::move(triple);
            return result;
        }

        auto peripheral = center_and_peripheral(dm).peripheral.members();

        if (result.parity == DiameterParity::odd) {
            result.kind = TreeKind::weakly_non3_peripheral;
            for (auto v : peripheral) {
                auto minus = tree_minus(t, v);
                if (! is_n_peripheral(all_pairs_distances(minus.graph), 3)) {
                    result.kind = TreeKind::strongly_non3_peripheral;
                    result.witness = v;
                    break;
                }
            }
            return result;
        }

        // Even diameter: a vertex whose added leaf creates a 3-peripheral tree
        // must sit at distance diam-1 from every peripheral vertex.
        result.kind = TreeKind::strongly_non3_peripheral;
        for (Vertex u = 0; u < t.order(); ++u) {
            bool candidate = std::all_of(peripheral.begin(), peripheral.end(),
                [&](Vertex v) { return dm(u, v) == result.diameter - 1; });
            if (candidate && is_three_peripheral(tree_plus(t, u))) {
                result.kind = TreeKind::weakly_non3_peripheral;
                result.witness = u;
                break;
            }
        }
        return result;
    }

    namespace
    {
        auto encode_rooted(const Graph & t, Vertex root, Vertex parent) -> string
        {
            vector<string> children;
            for (auto w : t.neighbours(root))
                if (w != parent)
                    children.push_back(encode_rooted(t, w, root));
            std::sort(children.begin(), children.end());
            string out = "(";
            for (auto & c : children)
                out += c;
            out += ')';
            return out;
        }
    }

    auto canonical_encoding(const Graph & tree) -> string
    {
        if (! is_tree(tree))
            throw GraphError("canonical_encoding needs a tree");
        auto center = center_and_peripheral(all_pairs_distances(tree)).center.members();
        string best;
        for (auto c : center) {
            auto enc = encode_rooted(tree, c, -1);
            if (best.empty() || enc < best)
                best = std::move(enc);
        }
        return best;
    }

    auto tree_from_encoding(string_view encoding) -> Graph
    {
        vector<Edge> edges;
        vector<Vertex> stack;
        int next = 0;
        for (auto ch : encoding) {
            if (ch == '(') {
                if (! stack.empty())
                    edges.emplace_back(stack.back(), next);
                else if (next != 0)
                    throw GraphError("tree encoding has more than one root");
                stack.push_back(next++);
            }
            else if (ch == ')') {
                if (stack.empty())
                    throw GraphError("unbalanced tree encoding");
                stack.pop_back();
            }
            else
                throw GraphError("bad character in tree encoding");
        }
        if (! stack.empty() || next == 0)
            throw GraphError("unbalanced tree encoding");
        return Graph::from_edges(next, edges);
    }

    auto enumerate_trees(int n, int max_order) -> vector<Graph>
    {
        if (n < 1)
            throw std::invalid_argument("tree order must be positive");
        if (n > max_order)
            throw std::invalid_argument("tree order " + std::to_string(n) + " exceeds the enumeration bound " +
                std::to_string(max_order));

        vector<string> level{"()"};
        for (int order = 2; order <= n; ++order) {
            std::set<string> next;
            for (auto & enc : level) {
                auto t = tree_from_encoding(enc);
                for (Vertex u = 0; u < t.order(); ++u)
                    next.insert(canonical_encoding(tree_plus(t, u)));
            }
            level.assign(next.begin(), next.end());
        }

        vector<Graph> result;
        for (auto & enc : level)
            result.push_back(tree_from_encoding(enc));
        return result;
    }
}
