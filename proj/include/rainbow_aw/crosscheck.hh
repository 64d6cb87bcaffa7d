#ifndef RAINBOW_AW_CROSSCHECK_HH
#define RAINBOW_AW_CROSSCHECK_HH

#include <rainbow_aw/classifier.hh>
#include <rainbow_aw/graph.hh>
#include <rainbow_aw/oracle.hh>

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rainbow_aw
{
    enum class Agreement
    {
        agree,
        disagree,
        inconclusive
    };

    auto to_string(Agreement a) -> std::string_view;

    struct CrosscheckReport
    {
        std::string first_encoding, second_encoding;
        int first_order = 0, second_order = 0;
        int classifier_aw = 0;
        AwRule rule{};
        AwOracleResult oracle;
        Agreement agreement = Agreement::inconclusive;

        /// Rainbow-free exact 3-colouring the oracle found, if aw came out 4.
        auto found_3_coloring() const -> const Coloring *;
    };

    /// Runs the classifier and the oracle on t□t2.  The oracle scan is not
    /// capped, so a value of 4 means r = 4 was actually exhausted.
    auto crosscheck_pair(const Graph & t, const Graph & t2, const SearchBudget & budget = {}) -> CrosscheckReport;

    /// Unordered pairs, with repetition, of non-isomorphic nontrivial trees
    /// with at most max_factor vertices, in catalog order.
    auto sweep_pairs(int max_factor) -> std::vector<std::pair<Graph, Graph>>;

    /// Crosschecks every pair from sweep_pairs on `jobs` worker threads.
    /// Results come back in sweep order; on_report is called from a single
    /// thread, in order, as reports complete.
    auto crosscheck_sweep(int max_factor, int jobs, const SearchBudget & budget = {},
        const std::function<void(const CrosscheckReport &)> & on_report = {}) -> std::vector<CrosscheckReport>;
}

#endif
