#include <rainbow_aw/classifier.hh>

#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace rainbow_aw
{
    auto to_string(AwRule rule) -> std::string_view
    {
        switch (rule) {
            case AwRule::three_peripheral_factor: return "ThreePeripheralFactor";
            case AwRule::odd_product_diameter: return "OddProductDiameter";
            case AwRule::p2_factor: return "P2Factor";
            case AwRule::weakly_factor: return "WeaklyFactor";
            case AwRule::both_strongly: return "BothStrongly";
        }
        return "?";
    }

    auto rule_number(AwRule rule) -> int
    {
        return static_cast<int>(rule) + 1;
    }

    auto rule_value(AwRule rule) -> int
    {
        switch (rule) {
            case AwRule::three_peripheral_factor:
            case AwRule::p2_factor:
            case AwRule::weakly_factor: return 3;
            case AwRule::odd_product_diameter:
            case AwRule::both_strongly: return 4;
        }
        return 0;
    }

    namespace
    {
        void require_nontrivial_tree(const Graph & t, const char * which)
        {
            if (! is_tree(t))
                throw ClassifierError(string(which) + " factor is not a tree");
            if (t.order() < 2)
                throw ClassifierError(string(which) + " factor is the trivial tree; single-tree aw is not supported");
        }

        auto is_weakly(const TreeClass & c) -> bool
        {
            return c.kind == TreeKind::weakly_non3_peripheral;
        }

        auto diametral_partner(const Graph & t, Vertex v) -> Vertex
        {
            auto dm = all_pairs_distances(t);
            for (Vertex u = 0; u < t.order(); ++u)
                if (dm(u, v) == dm.diameter())
                    return u;
            throw std::logic_error("vertex has no diametral partner");
        }

        auto least_peripheral(const Graph & t) -> Vertex
        {
            return center_and_peripheral(all_pairs_distances(t)).peripheral.members().front();
        }

        void require_rainbow_free(const ProductGraph & pg, const Coloring & c, const char * what)
        {
            if (! c.is_exact())
                throw std::logic_error(string(what) + " colouring is not exact");
            if (auto t = find_rainbow_3ap(pg, c))
                throw std::logic_error(string(what) + " colouring has a rainbow triple at (" + pg.label(t->x) + ", " +
                    pg.label(t->y) + ", " + pg.label(t->z) + ")");
        }
    }

    auto diametral_pair_coloring(const ProductGraph & pg, const DiametralPairWitness & w) -> Coloring
    {
        auto diam = pg.diameter();
        auto red_anchor = pg.flat(w.b1, w.b2), blue_anchor = pg.flat(w.a1, w.a2);
        vector<int> colors(pg.order(), colour::green);
        for (Vertex v = 0; v < pg.order(); ++v) {
            bool red = pg.distance(v, red_anchor) == diam, blue = pg.distance(v, blue_anchor) == diam;
            if (red && blue)
                throw std::logic_error("vertex " + pg.label(v) + " is diametral to both anchors");
            colors[v] = red ? colour::red : blue ? colour::blue : colour::green;
        }
        return Coloring(std::move(colors), 3);
    }

    auto applicable_rules(const Graph & t, const Graph & t2) -> vector<AwRule>
    {
        require_nontrivial_tree(t, "first");
        require_nontrivial_tree(t2, "second");
        auto a = classify_tree(t), b = classify_tree(t2);
        bool odd = (a.diameter + b.diameter) % 2 != 0;

        vector<AwRule> rules;
        if (a.kind == TreeKind::three_peripheral || b.kind == TreeKind::three_peripheral)
            rules.push_back(AwRule::three_peripheral_factor);
        if (odd)
            rules.push_back(AwRule::odd_product_diameter);
        if (! odd && (a.is_p2 || b.is_p2))
            rules.push_back(AwRule::p2_factor);
        if (! odd && (is_weakly(a) || is_weakly(b)))
            rules.push_back(AwRule::weakly_factor);
        if (rules.empty())
            rules.push_back(AwRule::both_strongly);
        return rules;
    }

    auto aw_tree_product(const Graph & t, const Graph & t2) -> AwResult
    {
        require_nontrivial_tree(t, "first");
        require_nontrivial_tree(t2, "second");

        AwResult result;
        result.first = classify_tree(t);
        result.second = classify_tree(t2);
        result.product_diameter = result.first.diameter + result.second.diameter;

        auto decide = [&](AwRule rule) {
            result.rule = rule;
            result.value = rule_value(rule);
        };
        auto pick = [&](auto predicate) -> optional<Factor> {
            if (predicate(result.first))
                return Factor::first;
            if (predicate(result.second))
                return Factor::second;
            return std::nullopt;
        };
        auto class_of = [&](Factor f) -> const TreeClass & { return f == Factor::first ? result.first : result.second; };

        if (auto f = pick([](const TreeClass & c) { return c.kind == TreeKind::three_peripheral; })) {
            decide(AwRule::three_peripheral_factor);
            result.deciding_factor = f;
            result.peripheral_triple = class_of(*f).peripheral_triple;
            return result;
        }

        if (result.product_diameter % 2 != 0) {
            decide(AwRule::odd_product_diameter);
            auto i = least_peripheral(t), h = least_peripheral(t2);
            DiametralPairWitness w{i, h, diametral_partner(t, i), diametral_partner(t2, h)};
            ProductGraph pg(t, t2);
            auto coloring = diametral_pair_coloring(pg, w);
            require_rainbow_free(pg, coloring, "diametral-pair");
            result.diametral_pair = w;
            result.coloring = std::move(coloring);
            return result;
        }

        if (auto f = pick([](const TreeClass & c) { return c.is_p2; })) {
            decide(AwRule::p2_factor);
            result.deciding_factor = f;
            return result;
        }

        if (auto f = pick(is_weakly)) {
            decide(AwRule::weakly_factor);
            result.deciding_factor = f;
            result.weakly_witness = class_of(*f).witness;
            return result;
        }

        decide(AwRule::both_strongly);
        auto w = find_lemma31_witnesses(t, t2);
        if (! w)
            throw std::logic_error("strongly non-3-peripheral factors without a rainbow-free construction witness");
        ProductGraph pg(t, t2);
        auto coloring = lemma31_coloring(pg, *w);
        require_rainbow_free(pg, coloring, "construction");
        result.lemma31 = w;
        result.coloring = std::move(coloring);
        return result;
    }

    auto aw_forest_product(const Graph & f1, const Graph & f2) -> ForestAwResult
    {
        for (auto * f : {&f1, &f2}) {
            if (f->empty())
                throw ClassifierError("forest factor is empty");
            if (! is_forest(*f))
                throw ClassifierError("factor is not a forest");
        }

        auto c1 = connected_components(f1), c2 = connected_components(f2);
        for (auto * cs : {&c1, &c2})
            for (auto & c : *cs)
                if (c.graph.order() < 2)
                    throw ClassifierError("forest has a trivial component (vertex " + std::to_string(c.to_parent[0]) +
                        "); single-tree aw is not supported");

        ForestAwResult result;
        int sum = 0;
        for (std::size_t a = 0; a < c1.size(); ++a)
            for (std::size_t b = 0; b < c2.size(); ++b) {
                auto aw = aw_tree_product(c1[a].graph, c2[b].graph);
                result.components.push_back({static_cast<int>(a), static_cast<int>(b), c1[a].graph.order(),
                    c2[b].graph.order(), aw.value, aw.rule});
                (aw.value == 3 ? result.p_count : result.s_count)++;
                sum += aw.value - 1;
            }

        result.value = 2 * result.p_count + 3 * result.s_count + 1;
        result.disconnected_formula = 1 + sum;
        if (result.value != result.disconnected_formula)
            throw std::logic_error("forest totals disagree");
        return result;
    }

    namespace
    {
        auto describe(const TreeClass & c) -> string
        {
            std::ostringstream out;
            out << to_string(c.kind) << ", diameter " << c.diameter << " (" << to_string(c.parity) << ")";
            if (c.is_p2)
                out << ", P2";
            return out.str();
        }

        auto vertices(const vector<Vertex> & vs) -> string
        {
            string out;
            for (auto v : vs)
                out += (out.empty() ? "u" : ", u") + std::to_string(v + 1);
            return out;
        }
    }

    auto explain(const AwResult & r) -> string
    {
        std::ostringstream out;
        out << "first factor:  " << describe(r.first) << '\n';
        out << "second factor: " << describe(r.second) << '\n';
        out << "product diameter: " << r.product_diameter << '\n';
        out << "rule " << rule_number(r.rule) << " (" << to_string(r.rule) << ") fired: aw = " << r.value << '\n';

        auto factor_name = [&] { return r.deciding_factor == Factor::second ? "second" : "first"; };
        switch (r.rule) {
            case AwRule::three_peripheral_factor:
                out << "  the " << factor_name() << " factor is 3-peripheral; pairwise diametral vertices "
                    << vertices(r.peripheral_triple->vertices) << '\n';
                break;
            case AwRule::odd_product_diameter:
                out << "  product diameter is odd and neither factor is 3-peripheral\n";
                out << "  witness colouring: red at distance " << r.product_diameter << " from v"
                    << r.diametral_pair->b1 + 1 << "," << r.diametral_pair->b2 + 1 << ", blue at distance "
                    << r.product_diameter << " from v" << r.diametral_pair->a1 + 1 << "," << r.diametral_pair->a2 + 1
                    << ", green elsewhere; verified rainbow-free\n";
                break;
            case AwRule::p2_factor:
                out << "  the " << factor_name() << " factor is P2 and the product diameter is even\n";
                break;
            case AwRule::weakly_factor:
                out << "  the " << factor_name() << " factor is weakly non-3-peripheral";
                if (r.weakly_witness)
                    out << "; adding a leaf at u" << *r.weakly_witness + 1 << " makes it 3-peripheral";
                out << '\n';
                break;
            case AwRule::both_strongly:
                out << "  both factors are strongly non-3-peripheral and neither is P2\n";
                out << "  witness: u1 = " << r.lemma31->u1 + 1 << ", w1 = " << r.lemma31->w1 + 1 << " (1-based factor vertices), v(j,k) = v"
                    << r.lemma31->j + 1 << "," << r.lemma31->k + 1 << '\n';
                out << "  colouring: blue at distance " << r.product_diameter - 1 << " from v" << r.lemma31->u1 + 1
                    << "," << r.lemma31->w1 + 1 << ", red at distance " << r.product_diameter << " from v"
                    << r.lemma31->j + 1 << "," << r.lemma31->k + 1 << ", green elsewhere; verified rainbow-free\n";
                break;
        }
        if (r.coloring)
            out << "  the verified colouring is the \"coloring\" field of the JSON result (--emit-coloring writes it)\n";
        return out.str();
    }
}
