#include <rainbow_aw/coloring.hh>
#include <rainbow_aw/tree.hh>

#include <algorithm>
#include <sstream>

using std::optional;
using std::string;
using std::vector;

namespace rainbow_aw
{
    Coloring::Coloring(vector<int> colors, int palette) :
        _colors(std::move(colors)),
        _palette(palette)
    {
        if (palette < 0)
            throw ColoringError("negative palette size");
        for (std::size_t v = 0; v < _colors.size(); ++v)
            if (_colors[v] < 0 || _colors[v] >= palette)
                throw ColoringError("vertex " + std::to_string(v) + " has colour " + std::to_string(_colors[v]) +
                    " outside the palette of " + std::to_string(palette));
    }

    auto Coloring::uniform(int order, int color, int palette) -> Coloring
    {
        return Coloring(vector<int>(order, color), palette);
    }

    auto Coloring::used_color_count() const -> int
    {
        vector<char> seen(_palette, 0);
        int count = 0;
        for (auto c : _colors)
            if (! seen[c]) {
                seen[c] = 1;
                ++count;
            }
        return count;
    }

    auto Coloring::is_exact() const -> bool
    {
        return used_color_count() == _palette;
    }

    auto merge_colors(const Coloring & c, int keep, int drop) -> Coloring
    {
        if (keep == drop || keep < 0 || drop < 0 || keep >= c.palette() || drop >= c.palette())
            throw ColoringError("bad colour pair to merge");
        vector<int> colors(c.colors().begin(), c.colors().end());
        for (auto & x : colors) {
            if (x == drop)
                x = keep;
            if (x > drop)
                --x;
        }
        return Coloring(std::move(colors), c.palette() - 1);
    }

    void for_each_3ap(const ProductGraph & pg, const APVisitor & visit)
    {
        detail::enumerate_3aps(pg.order(), [&](Vertex a, Vertex b) { return pg.distance(a, b); },
            [&](const APTriple & t) {
                visit(t);
                return false;
            });
    }

    void for_each_3ap(const DistanceMatrix & dm, const APVisitor & visit)
    {
        detail::enumerate_3aps(dm.order(), [&](Vertex a, Vertex b) { return dm(a, b); },
            [&](const APTriple & t) {
                visit(t);
                return false;
            });
    }

    namespace
    {
        template <typename DistFn>
        auto first_rainbow(int order, DistFn && dist, const Coloring & c) -> optional<APTriple>
        {
            if (c.order() != order)
                throw ColoringError("colouring covers " + std::to_string(c.order()) + " vertices, graph has " +
                    std::to_string(order));
            optional<APTriple> found;
            if (c.palette() < 3)
                return found;
            detail::enumerate_3aps(order, dist, [&](const APTriple & t) {
                auto cx = c[t.x], cy = c[t.y], cz = c[t.z];
                if (cx != cy && cy != cz && cx != cz) {
                    found = t;
                    return true;
                }
                return false;
            });
            return found;
        }
    }

    auto find_rainbow_3ap(const ProductGraph & pg, const Coloring & c) -> optional<APTriple>
    {
        auto & d1 = pg.factor_distances(Factor::first);
        auto & d2 = pg.factor_distances(Factor::second);
        auto n2 = pg.second_order();
        return first_rainbow(pg.order(), [&](Vertex a, Vertex b) {
            auto x = d1(a / n2, b / n2), y = d2(a % n2, b % n2);
            return (x == DistanceMatrix::unreachable || y == DistanceMatrix::unreachable) ? DistanceMatrix::unreachable
                                                                                            : x + y;
        }, c);
    }

    auto find_rainbow_3ap(const DistanceMatrix & dm, const Coloring & c) -> optional<APTriple>
    {
        return first_rainbow(dm.order(), [&](Vertex a, Vertex b) { return dm(a, b); }, c);
    }

    namespace
    {
        struct Lemma31Factor
        {
            Vertex start, far;
        };

        auto lemma31_factor(const Graph & t) -> optional<Lemma31Factor>
        {
            auto dm = all_pairs_distances(t);
            for (auto p : center_and_peripheral(dm).peripheral.members()) {
                if (is_three_peripheral(tree_minus(t, p).graph))
                    continue;
                for (Vertex q = 0; q < t.order(); ++q)
                    if (dm(p, q) == dm.diameter())
                        return Lemma31Factor{p, q};
            }
            return std::nullopt;
        }

        void require_lemma31_factor(const Graph & t, const char * which)
        {
            if (! is_tree(t) || t.order() < 2)
                throw std::invalid_argument(string(which) + " factor must be a nontrivial tree");
            if (is_three_peripheral(t))
                throw std::invalid_argument(string(which) + " factor is 3-peripheral");
        }
    }

    auto find_lemma31_witnesses(const Graph & t, const Graph & t2) -> optional<Lemma31Witness>
    {
        require_lemma31_factor(t, "first");
        require_lemma31_factor(t2, "second");
        if ((all_pairs_distances(t).diameter() + all_pairs_distances(t2).diameter()) % 2 != 0)
            throw std::invalid_argument("product diameter is odd");

        auto a = lemma31_factor(t);
        auto b = lemma31_factor(t2);
        if (! a || ! b)
            return std::nullopt;
        return Lemma31Witness{a->start, b->start, a->far, b->far};
    }

    Lemma31DefectError::Lemma31DefectError(Vertex v, const string & what) :
        std::logic_error(what),
        _vertex(v)
    {
    }

    namespace
    {
        struct RuleHits
        {
            bool blue, red;
        };

        auto rules_at(const ProductGraph & pg, const Lemma31Witness & w, Vertex v) -> RuleHits
        {
            auto diam = pg.diameter();
            return {pg.distance(v, pg.flat(w.u1, w.w1)) == diam - 1, pg.distance(v, pg.flat(w.j, w.k)) == diam};
        }
    }

    auto lemma31_coloring(const ProductGraph & pg, const Lemma31Witness & w) -> Coloring
    {
        vector<int> colors(pg.order(), colour::green);
        for (Vertex v = 0; v < pg.order(); ++v) {
            auto [blue, red] = rules_at(pg, w, v);
            if (blue && red)
                throw Lemma31DefectError(v, "vertex " + pg.label(v) + " satisfies both the red and the blue rule");
            if (blue)
                colors[v] = colour::blue;
            else if (red)
                colors[v] = colour::red;
        }
        return Coloring(std::move(colors), 3);
    }

    auto Lemma31Report::checks() const -> vector<const PropertyCheck *>
    {
        return {&well_defined, &red_blue_distance, &red_reach_is_blue, &rainbow_midpoint_blue, &rainbow_free};
    }

    auto Lemma31Report::all_passed() const -> bool
    {
        auto all = checks();
        return std::all_of(all.begin(), all.end(), [](auto * p) { return p->passed; });
    }

    namespace
    {
        void fail(PropertyCheck & check, string detail, vector<Vertex> counterexample)
        {
            if (! check.passed)
                return;
            check.passed = false;
            check.detail = std::move(detail);
            check.counterexample = std::move(counterexample);
        }
    }

    auto verify_lemma31_properties(const ProductGraph & pg, const Coloring & c, const Lemma31Witness & w)
        -> Lemma31Report
    {
        if (c.order() != pg.order())
            throw ColoringError("colouring does not match the product order");

        Lemma31Report report;
        report.well_defined.name = "well_defined";
        report.red_blue_distance.name = "red_blue_distance";
        report.red_reach_is_blue.name = "red_reach_is_blue";
        report.rainbow_midpoint_blue.name = "rainbow_midpoint_blue";
        report.rainbow_free.name = "rainbow_free";

        auto diam = pg.diameter();
        for (Vertex v = 0; v < pg.order(); ++v) {
            auto [blue, red] = rules_at(pg, w, v);
            if (blue && red)
                fail(report.well_defined, "red and blue rules overlap at " + pg.label(v), {v});
            auto expected = blue ? colour::blue : red ? colour::red : colour::green;
            if (! (blue && red) && c[v] != expected)
                fail(report.well_defined, "colour at " + pg.label(v) + " departs from the construction", {v});
        }

        for (Vertex x = 0; x < pg.order(); ++x) {
            if (c[x] != colour::red)
                continue;
            for (Vertex y = 0; y < pg.order(); ++y) {
                auto d = pg.distance(x, y);
                if (c[y] == colour::blue && d != diam - 1)
                    fail(report.red_blue_distance,
                        "red " + pg.label(x) + " and blue " + pg.label(y) + " at distance " + std::to_string(d), {x, y});
                if (d == diam - 1 && c[y] != colour::blue)
                    fail(report.red_reach_is_blue,
                        pg.label(y) + " is diam-1 from red " + pg.label(x) + " but not blue", {x, y});
            }
        }

        for_each_3ap(pg, [&](const APTriple & t) {
            auto cx = c[t.x], cy = c[t.y], cz = c[t.z];
            if (cx == cy || cy == cz || cx == cz)
                return;
            auto detail = "(" + pg.label(t.x) + ", " + pg.label(t.y) + ", " + pg.label(t.z) + ") d=" + std::to_string(t.d);
            fail(report.rainbow_free, "rainbow triple " + detail, {t.x, t.y, t.z});
            if (cy != colour::blue)
                fail(report.rainbow_midpoint_blue, "rainbow triple with non-blue midpoint " + detail, {t.x, t.y, t.z});
        });

        return report;
    }

    namespace
    {
        auto walk_geodesic(const ProductGraph & pg, Vertex from, Vertex to, vector<Vertex> & out)
        {
            auto cur = from;
            while (cur != to) {
                auto d = pg.distance(cur, to);
                for (auto w : pg.graph().neighbours(cur))
                    if (pg.distance(w, to) == d - 1) {
                        cur = w;
                        break;
                    }
                out.push_back(cur);
            }
        }
    }

    auto shortest_trichromatic_path(const ProductGraph & pg, const Coloring & c) -> optional<TrichromaticPath>
    {
        if (c.order() != pg.order())
            throw ColoringError("colouring does not match the product order");
        if (c.used_color_count() < 3)
            throw ColoringError("a trichromatic path needs at least three colours");

        // A shortest trichromatic geodesic has distinctly coloured endpoints a, b
        // and an interior vertex of a third colour somewhere in the interval I(a, b).
        struct Best
        {
            int length;
            Vertex a, via, b;
        };
        optional<Best> best;
        auto n = pg.order();
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) {
                if (c[a] == c[b])
                    continue;
                auto dab = pg.distance(a, b);
                if (dab == DistanceMatrix::unreachable || dab < 2 || (best && dab >= best->length))
                    continue;
                for (Vertex v = 0; v < n; ++v) {
                    if (c[v] == c[a] || c[v] == c[b])
                        continue;
                    auto dav = pg.distance(a, v), dvb = pg.distance(v, b);
                    if (dav != DistanceMatrix::unreachable && dvb != DistanceMatrix::unreachable && dav + dvb == dab) {
                        best = Best{dab, a, v, b};
                        break;
                    }
                }
            }

        if (! best)
            return std::nullopt;

        TrichromaticPath path;
        path.vertices.push_back(best->a);
        walk_geodesic(pg, best->a, best->via, path.vertices);
        walk_geodesic(pg, best->via, best->b, path.vertices);
        return path;
    }
}
