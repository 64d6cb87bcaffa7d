#ifndef RAINBOW_AW_CLASSIFIER_HH
#define RAINBOW_AW_CLASSIFIER_HH

#include <rainbow_aw/coloring.hh>
#include <rainbow_aw/graph.hh>
#include <rainbow_aw/product.hh>
#include <rainbow_aw/tree.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow_aw
{
    /// The decision rules for aw(T □ T', 3), in the order they are tried.
    enum class AwRule
    {
        three_peripheral_factor, ///< 1: a factor is 3-peripheral -> 3
        odd_product_diameter,    ///< 2: diam(T) + diam(T') odd -> 4
        p2_factor,               ///< 3: a factor is P2 -> 3
        weakly_factor,           ///< 4: a factor is weakly non-3-peripheral -> 3
        both_strongly            ///< 5: otherwise -> 4
    };

    auto to_string(AwRule rule) -> std::string_view;
    auto rule_number(AwRule rule) -> int;
    auto rule_value(AwRule rule) -> int;

    class ClassifierError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Anchors of the rainbow-free exact 3-colouring used for odd-diameter
    /// products: v(a1, a2) and v(b1, b2) with d(a1, b1) = diam(T) and
    /// d(a2, b2) = diam(T').  Red is everything at product diameter from
    /// v(b1, b2), blue everything at product diameter from v(a1, a2).
    struct DiametralPairWitness
    {
        Vertex a1 = 0, a2 = 0;
        Vertex b1 = 0, b2 = 0;

        auto operator==(const DiametralPairWitness &) const -> bool = default;
    };

    struct AwResult
    {
        int value = 0;
        AwRule rule = AwRule::both_strongly;
        int product_diameter = 0;
        TreeClass first, second;

        /// The factor whose class fired rules 1, 3 or 4.
        std::optional<Factor> deciding_factor;
        std::optional<PeripheralWitness> peripheral_triple;
        std::optional<Vertex> weakly_witness;
        std::optional<Lemma31Witness> lemma31;
        std::optional<DiametralPairWitness> diametral_pair;

        /// Machine-verified rainbow-free exact 3-colouring; present iff value = 4.
        std::optional<Coloring> coloring;
    };

    /// aw(T □ T', 3) for nontrivial trees.  Throws ClassifierError on trivial or
    /// non-tree factors.
    auto aw_tree_product(const Graph & t, const Graph & t2) -> AwResult;

    /// Every rule whose condition holds for the pair, ignoring rule order.  Rule
    /// 5 appears only when none of rules 1-4 does.
    auto applicable_rules(const Graph & t, const Graph & t2) -> std::vector<AwRule>;

    auto diametral_pair_coloring(const ProductGraph & pg, const DiametralPairWitness & w) -> Coloring;

    struct ComponentPair
    {
        int first_component = 0, second_component = 0;
        int first_order = 0, second_order = 0;
        int aw = 0;
        AwRule rule = AwRule::both_strongly;
    };

    struct ForestAwResult
    {
        int value = 0;
        int p_count = 0; ///< component products with aw 3
        int s_count = 0; ///< component products with aw 4
        int disconnected_formula = 0; ///< 1 + sum(aw_i - 1)
        std::vector<ComponentPair> components;
    };

    /// aw(F1 □ F2, 3) = 2|P| + 3|S| + 1 over the component products.  Throws
    /// ClassifierError on empty or non-forest input or a trivial component.
    auto aw_forest_product(const Graph & f1, const Graph & f2) -> ForestAwResult;

    /// Human-readable account of the rule chain and witnesses.
    auto explain(const AwResult & result) -> std::string;
}

#endif
