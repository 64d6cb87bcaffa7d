#ifndef RAINBOW_AW_COLORING_HH
#define RAINBOW_AW_COLORING_HH

#include <rainbow_aw/graph.hh>
#include <rainbow_aw/product.hh>

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow_aw
{
    /// Fixed indices for the three named colour classes of the rainbow-free
    /// construction.
    namespace colour
    {
        inline constexpr int red = 0;
        inline constexpr int blue = 1;
        inline constexpr int green = 2;
    }

    class ColoringError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Total vertex colouring with colours drawn from 0 .. palette()-1.
    class Coloring
    {
    public:
        Coloring() = default;
        Coloring(std::vector<int> colors, int palette);

        static auto uniform(int order, int color, int palette) -> Coloring;

        auto palette() const noexcept -> int { return _palette; }
        auto order() const noexcept -> int { return static_cast<int>(_colors.size()); }
        auto operator[](Vertex v) const -> int { return _colors[v]; }
        auto colors() const noexcept -> std::span<const int> { return _colors; }

        auto used_color_count() const -> int;
        /// Surjective onto 0 .. palette()-1.
        auto is_exact() const -> bool;

        auto operator==(const Coloring &) const -> bool = default;

    private:
        std::vector<int> _colors;
        int _palette = 0;
    };

    /// Recolours every `drop` vertex with `keep` and closes the gap, giving a
    /// colouring on palette()-1 colours.
    auto merge_colors(const Coloring & c, int keep, int drop) -> Coloring;

    /// (x, y, z) with d(x, y) = d(y, z) = d >= 1 and x < z.  Only consecutive
    /// distances are constrained; d(x, z) is unrestricted.
    struct APTriple
    {
        Vertex x = 0, y = 0, z = 0;
        int d = 0;

        auto operator==(const APTriple &) const -> bool = default;
    };

    namespace detail
    {
        /// Visits every 3-AP, midpoint-major then (x, z) lexicographic.  Stops
        /// early and returns true as soon as `visit` returns true.
        template <typename DistFn, typename Visit>
        auto enumerate_3aps(int order, DistFn && dist, Visit && visit) -> bool
        {
            std::vector<std::vector<Vertex>> buckets;
            std::vector<int> dist_to_mid(order), slot(order);
            for (Vertex y = 0; y < order; ++y) {
                for (auto & b : buckets)
                    b.clear();
                for (Vertex v = 0; v < order; ++v) {
                    auto d = v == y ? DistanceMatrix::unreachable : dist(y, v);
                    dist_to_mid[v] = d;
                    if (d <= 0)
                        continue;
                    if (static_cast<int>(buckets.size()) <= d)
                        buckets.resize(d + 1);
                    slot[v] = static_cast<int>(buckets[d].size());
                    buckets[d].push_back(v);
                }
                for (Vertex x = 0; x < order; ++x) {
                    auto d = dist_to_mid[x];
                    if (d <= 0)
                        continue;
                    auto & bucket = buckets[d];
                    for (auto k = static_cast<std::size_t>(slot[x]) + 1; k < bucket.size(); ++k)
                        if (visit(APTriple{x, y, bucket[k], d}))
                            return true;
                }
            }
            return false;
        }
    }

    using APVisitor = std::function<void(const APTriple &)>;

    void for_each_3ap(const ProductGraph & pg, const APVisitor & visit);
    void for_each_3ap(const DistanceMatrix & dm, const APVisitor & visit);

    /// First rainbow triple in enumeration order, if any.
    auto find_rainbow_3ap(const ProductGraph & pg, const Coloring & c) -> std::optional<APTriple>;
    auto find_rainbow_3ap(const DistanceMatrix & dm, const Coloring & c) -> std::optional<APTriple>;

    /// Coordinates (0-based factor vertices) fixing the rainbow-free 3-colouring
    /// of an even-diameter product of non-3-peripheral trees: u1 and w1 are
    /// peripheral with non-3-peripheral minus-transforms, and u_j, w_k sit at
    /// factor diameter from them.
    struct Lemma31Witness
    {
        Vertex u1 = 0, w1 = 0, j = 0, k = 0;

        auto operator==(const Lemma31Witness &) const -> bool = default;
    };

    /// Lexicographically least witness, or nothing when a factor has no
    /// peripheral vertex with a non-3-peripheral minus-transform.  Throws
    /// std::invalid_argument unless both trees are nontrivial and
    /// non-3-peripheral with an even product diameter.
    auto find_lemma31_witnesses(const Graph & t, const Graph & t2) -> std::optional<Lemma31Witness>;

    /// Raised when the blue and red rules of the construction overlap, which
    /// can only happen for a bad witness.
    class Lemma31DefectError : public std::logic_error
    {
    public:
        Lemma31DefectError(Vertex v, const std::string & what);
        auto vertex() const noexcept -> Vertex { return _vertex; }

    private:
        Vertex _vertex;
    };

    /// blue: distance diam-1 from v(u1, w1); red: distance diam from v(j, k);
    /// green otherwise.
    auto lemma31_coloring(const ProductGraph & pg, const Lemma31Witness & w) -> Coloring;

    struct PropertyCheck
    {
        std::string name;
        bool passed = true;
        std::string detail;
        std::vector<Vertex> counterexample;
    };

    struct Lemma31Report
    {
        PropertyCheck well_defined;           ///< (i) the rules never overlap and c follows them
        PropertyCheck red_blue_distance;      ///< (ii) red-blue pairs are diam-1 apart
        PropertyCheck red_reach_is_blue;      ///< (iii) diam-1 from red means blue
        PropertyCheck rainbow_midpoint_blue;  ///< (iv) rainbow triples only have blue midpoints
        PropertyCheck rainbow_free;           ///< no rainbow triple at all

        auto checks() const -> std::vector<const PropertyCheck *>;
        auto all_passed() const -> bool;
    };

    auto verify_lemma31_properties(const ProductGraph & pg, const Coloring & c, const Lemma31Witness & w)
        -> Lemma31Report;

    struct TrichromaticPath
    {
        std::vector<Vertex> vertices;
        auto length() const -> int { return static_cast<int>(vertices.size()) - 1; }
    };

    /// A minimum-length geodesic whose vertices carry at least three colours.
    /// Throws ColoringError when fewer than three colours are present.
    auto shortest_trichromatic_path(const ProductGraph & pg, const Coloring & c) -> std::optional<TrichromaticPath>;
}

#endif
