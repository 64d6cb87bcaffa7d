#ifndef RAINBOW_AW_ORACLE_HH
#define RAINBOW_AW_ORACLE_HH

#include <rainbow_aw/coloring.hh>
#include <rainbow_aw/graph.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow_aw
{
    /// Limits on a single colouring search.  Running out of any of them gives
    /// an inconclusive outcome rather than an answer.
    struct SearchBudget
    {
        std::uint64_t max_nodes = 100'000'000;
        std::chrono::milliseconds time_limit{300'000};
        int max_vertices = 64;
    };

    enum class SearchStatus
    {
        found,
        exhausted,
        inconclusive
    };

    auto to_string(SearchStatus status) -> std::string_view;

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        double milliseconds = 0;
    };

    struct OracleOutcome
    {
        SearchStatus status = SearchStatus::inconclusive;
        std::optional<Coloring> coloring;
        SearchStats stats;
        std::string note;
    };

    /// Complete backtracking search for an exact r-colouring of a connected
    /// graph with no rainbow 3-AP.  Exhausted is a proof of non-existence.
    auto exists_rainbow_free_exact_coloring(const Graph & g, int r, const SearchBudget & budget = {})
        -> OracleOutcome;

    struct AwOracleOptions
    {
        /// Known upper bound on aw; once a rainbow-free (bound-1)-colouring is
        /// found the scan stops and reports the bound.
        std::optional<int> upper_bound;
    };

    struct AwOracleRun
    {
        int colors;
        OracleOutcome outcome;
    };

    struct AwOracleResult
    {
        std::optional<int> value; ///< empty when some run was inconclusive
        bool capped_by_bound = false;
        std::vector<AwOracleRun> runs;
        SearchStats total;

        /// The rainbow-free exact colouring found with `colors` colours, if any.
        auto found_coloring(int colors) const -> const Coloring *;
    };

    /// aw(g, 3) as the least r for which the search is exhausted, scanning
    /// r = 2, 3, ... upward.
    auto brute_force_aw3(const Graph & g, const SearchBudget & budget = {}, const AwOracleOptions & options = {})
        -> AwOracleResult;
}

#endif
