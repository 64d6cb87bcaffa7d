#ifndef RAINBOW_AW_TREE_HH
#define RAINBOW_AW_TREE_HH

#include <rainbow_aw/graph.hh>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow_aw
{
    enum class TreeKind
    {
        trivial,
        three_peripheral,
        strongly_non3_peripheral,
        weakly_non3_peripheral
    };

    enum class DiameterParity
    {
        zero,
        odd,
        even
    };

    auto to_string(TreeKind kind) -> std::string_view;
    auto to_string(DiameterParity parity) -> std::string_view;
    auto parity_of(int diameter) -> DiameterParity;

    /// Vertices pairwise at diameter distance.
    struct PeripheralWitness
    {
        std::vector<Vertex> vertices;
    };

    /// Outcome of classify_tree.  `witness` is the least peripheral v whose
    /// minus-transform is non-3-peripheral (strongly, odd diameter) or the least
    /// u whose plus-transform is 3-peripheral (weakly, even diameter).
    struct TreeClass
    {
        TreeKind kind = TreeKind::trivial;
        int diameter = 0;
        DiameterParity parity = DiameterParity::zero;
        bool is_p2 = false;
        std::optional<Vertex> witness;
        std::optional<PeripheralWitness> peripheral_triple;
    };

    /// Lexicographically least set of n vertices pairwise at diameter distance,
    /// searched among peripheral vertices only.  Throws std::invalid_argument for
    /// n < 1 and GraphError on a disconnected graph.
    auto is_n_peripheral(const DistanceMatrix & dm, int n) -> std::optional<PeripheralWitness>;

    auto is_three_peripheral(const Graph & g) -> bool;

    /// T with every vertex at diameter distance from the peripheral vertex v
    /// removed.  `to_parent` maps back into t.
    auto tree_minus(const Graph & t, Vertex v) -> InducedSubgraph;

    /// T with one new leaf (id t.order()) hung on u.
    auto tree_plus(const Graph & t, Vertex u) -> Graph;

    auto classify_tree(const Graph & t) -> TreeClass;

    /// Center-rooted canonical string; equal iff the trees are isomorphic.
    auto canonical_encoding(const Graph & tree) -> std::string;

    /// Rebuilds a tree from its canonical encoding, root = vertex 0, preorder ids.
    auto tree_from_encoding(std::string_view encoding) -> Graph;

    inline constexpr int default_enumeration_bound = 10;

    /// One tree per isomorphism class on n vertices, ordered by canonical encoding.
    auto enumerate_trees(int n, int max_order = default_enumeration_bound) -> std::vector<Graph>;
}

#endif
