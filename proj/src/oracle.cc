#include <rainbow_aw/oracle.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

using std::vector;
using std::chrono::steady_clock;

namespace rainbow_aw
{
    auto to_string(SearchStatus status) -> std::string_view
    {
        switch (status) {
            case SearchStatus::found: return "found";
            case SearchStatus::exhausted: return "exhausted";
            case SearchStatus::inconclusive: return "inconclusive";
        }
        return "?";
    }

    namespace
    {
        using Mask = std::uint32_t;
        constexpr int max_palette = 32;

        auto bit(int c) -> Mask { return Mask{1} << c; }
        auto prefix(int k) -> Mask { return k >= max_palette ? ~Mask{0} : bit(k) - 1; }

        auto elapsed_ms(steady_clock::time_point start) -> double
        {
            return std::chrono::duration<double, std::milli>(steady_clock::now() - start).count();
        }

        /// Domains are colour bitmasks.  Every 3-AP holding two distinct
        /// assigned colours confines its third vertex to those two colours.
        /// Colours are introduced in order along the static vertex order, so
        /// the used colours are always 0 .. distinct-1.
        class RainbowFreeSearch
        {
        public:
            RainbowFreeSearch(const Graph & g, int r, const SearchBudget & budget) :
                _n(g.order()),
                _r(r),
                _budget(budget),
                _watch(g.order()),
                _color(g.order(), -1),
                _domain(g.order(), prefix(r)),
                _count(r, 0),
                _unassigned(g.order())
            {
                auto dm = all_pairs_distances(g);
                detail::enumerate_3aps(_n, [&](Vertex a, Vertex b) { return dm(a, b); }, [&](const APTriple & t) {
                    auto idx = static_cast<int>(_aps.size());
                    _aps.push_back({t.x, t.y, t.z});
                    _watch[t.x].push_back(idx);
                    _watch[t.y].push_back(idx);
                    _watch[t.z].push_back(idx);
                    return false;
                });

                _order.resize(_n);
                for (Vertex v = 0; v < _n; ++v)
                    _order[v] = v;
                std::stable_sort(_order.begin(), _order.end(),
                    [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
            }

            auto run() -> OracleOutcome
            {
                _start = steady_clock::now();
                OracleOutcome outcome;
                bool found = search(0);
                outcome.stats = {_nodes, elapsed_ms(_start)};
                if (found) {
                    outcome.status = SearchStatus::found;
                    outcome.coloring = Coloring(_color, _r);
                }
                else if (_out_of_budget) {
                    outcome.status = SearchStatus::inconclusive;
                    outcome.note = _nodes > _budget.max_nodes ? "node budget exceeded" : "time budget exceeded";
                }
                else
                    outcome.status = SearchStatus::exhausted;
                return outcome;
            }

        private:
            struct TrailEntry
            {
                Vertex v;
                Mask domain;
                int color;
            };

            auto assign(Vertex v, int c) -> bool
            {
                if (! (_domain[v] & bit(c)))
                    return false;
                _trail.push_back({v, _domain[v], _color[v]});
                _domain[v] = bit(c);
                _color[v] = c;
                if (_count[c]++ == 0)
                    ++_distinct;
                --_unassigned;
                _queue.push_back(v);
                return true;
            }

            auto restrict_domain(Vertex v, Mask allowed) -> bool
            {
                auto narrowed = _domain[v] & allowed;
                if (narrowed == _domain[v])
                    return true;
                if (narrowed == 0)
                    return false;
                if (std::popcount(narrowed) == 1)
                    return assign(v, std::countr_zero(narrowed));
                _trail.push_back({v, _domain[v], _color[v]});
                _domain[v] = narrowed;
                return true;
            }

            auto propagate() -> bool
            {
                for (std::size_t head = 0; head < _queue.size(); ++head) {
                    auto v = _queue[head];
                    auto cv = _color[v];
                    for (auto idx : _watch[v]) {
                        auto & ap = _aps[idx];
                        Vertex a = -1, b = -1;
                        for (auto u : ap)
                            if (u != v)
                                (a == -1 ? a : b) = u;
                        auto ca = _color[a], cb = _color[b];
                        if (ca >= 0 && cb >= 0) {
                            if (ca != cv && cb != cv && ca != cb) {
                                _queue.clear();
                                return false;
                            }
                        }
                        else if (ca >= 0 && ca != cv) {
                            if (! restrict_domain(b, bit(ca) | bit(cv))) {
                                _queue.clear();
                                return false;
                            }
                        }
                        else if (cb >= 0 && cb != cv) {
                            if (! restrict_domain(a, bit(cb) | bit(cv))) {
                                _queue.clear();
                                return false;
                            }
                        }
                    }
                }
                _queue.clear();
                return true;
            }

            // Enough unassigned vertices must still be able to take an unused colour.
            auto can_still_be_exact() const -> bool
            {
                auto missing = _r - _distinct;
                if (missing <= 0)
                    return true;
                if (_unassigned < missing)
                    return false;
                auto unused = ~prefix(_distinct) & prefix(_r);
                int able = 0;
                for (Vertex v = 0; v < _n && able < missing; ++v)
                    if (_color[v] < 0 && (_domain[v] & unused))
                        ++able;
                return able >= missing;
            }

            void undo_to(std::size_t mark)
            {
                while (_trail.size() > mark) {
                    auto e = _trail.back();
                    _trail.pop_back();
                    if (e.color < 0 && _color[e.v] >= 0) {
                        if (--_count[_color[e.v]] == 0)
                            --_distinct;
                        ++_unassigned;
                    }
                    _color[e.v] = e.color;
                    _domain[e.v] = e.domain;
                }
            }

            auto over_budget() -> bool
            {
                if (_nodes > _budget.max_nodes)
                    _out_of_budget = true;
                else if ((_nodes & 1023) == 1 && elapsed_ms(_start) > static_cast<double>(_budget.time_limit.count()))
                    _out_of_budget = true;
                return _out_of_budget;
            }

            auto search(std::size_t pos) -> bool
            {
                while (pos < _order.size() && _color[_order[pos]] >= 0)
                    ++pos;
                if (pos == _order.size())
                    return _distinct == _r;

                auto v = _order[pos];
                auto allowed = _domain[v] & prefix(std::min(_distinct + 1, _r));
                for (int c = 0; c < _r; ++c) {
                    if (! (allowed & bit(c)))
                        continue;
                    ++_nodes;
                    if (over_budget())
                        return false;
                    auto mark = _trail.size();
                    if (assign(v, c) && propagate() && can_still_be_exact() && search(pos + 1))
                        return true;
                    _queue.clear();
                    undo_to(mark);
                    if (_out_of_budget)
                        return false;
                }
                return false;
            }

            int _n, _r;
            SearchBudget _budget;
            vector<std::array<Vertex, 3>> _aps;
            vector<vector<int>> _watch;
            vector<Vertex> _order;
            vector<int> _color;
            vector<Mask> _domain;
            vector<int> _count;
            int _distinct = 0;
            int _unassigned;
            vector<TrailEntry> _trail;
            vector<Vertex> _queue;
            std::uint64_t _nodes = 0;
            bool _out_of_budget = false;
            steady_clock::time_point _start;
        };
    }

    auto exists_rainbow_free_exact_coloring(const Graph & g, int r, const SearchBudget & budget) -> OracleOutcome
    {
        if (r < 1 || r > max_palette)
            throw std::invalid_argument("palette size must be in 1.." + std::to_string(max_palette));
        if (! is_connected(g))
            throw GraphError("the colouring oracle needs a connected graph");

        if (g.order() > budget.max_vertices) {
            OracleOutcome outcome;
            outcome.note = "graph has " + std::to_string(g.order()) + " vertices, budget allows " +
                std::to_string(budget.max_vertices);
            return outcome;
        }
        if (r > g.order()) {
            OracleOutcome outcome;
            outcome.status = SearchStatus::exhausted;
            outcome.note = "fewer vertices than colours";
            return outcome;
        }

        return RainbowFreeSearch(g, r, budget).run();
    }

    auto AwOracleResult::found_coloring(int colors) const -> const Coloring *
    {
        for (auto & run : runs)
            if (run.colors == colors && run.outcome.coloring)
                return &*run.outcome.coloring;
        return nullptr;
    }

    auto brute_force_aw3(const Graph & g, const SearchBudget & budget, const AwOracleOptions & options) -> AwOracleResult
    {
        AwOracleResult result;
        for (int r = 2; r <= max_palette; ++r) {
            auto outcome = exists_rainbow_free_exact_coloring(g, r, budget);
            result.total.nodes += outcome.stats.nodes;
            result.total.milliseconds += outcome.stats.milliseconds;
            auto status = outcome.status;
            result.runs.push_back({r, std::move(outcome)});

            if (status == SearchStatus::inconclusive)
                return result;
            if (status == SearchStatus::exhausted) {
                result.value = r;
                return result;
            }
            if (options.upper_bound && r + 1 >= *options.upper_bound) {
                result.value = *options.upper_bound;
                result.capped_by_bound = true;
                return result;
            }
        }
        return result;
    }
}
