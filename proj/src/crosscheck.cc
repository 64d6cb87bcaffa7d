#include <rainbow_aw/crosscheck.hh>
#include <rainbow_aw/product.hh>
#include <rainbow_aw/tree.hh>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>

namespace rainbow_aw
{
    auto to_string(Agreement a) -> std::string_view
    {
        switch (a) {
            case Agreement::agree: return "agree";
            case Agreement::disagree: return "disagree";
            case Agreement::inconclusive: return "inconclusive";
        }
        return "?";
    }

    auto CrosscheckReport::found_3_coloring() const -> const Coloring *
    {
        return oracle.found_coloring(3);
    }

    auto crosscheck_pair(const Graph & t, const Graph & t2, const SearchBudget & budget) -> CrosscheckReport
    {
        CrosscheckReport report;
        report.first_encoding = canonical_encoding(t);
        report.second_encoding = canonical_encoding(t2);
        report.first_order = t.order();
        report.second_order = t2.order();

        auto classified = aw_tree_product(t, t2);
        report.classifier_aw = classified.value;
        report.rule = classified.rule;

        report.oracle = brute_force_aw3(cartesian_product(t, t2).graph(), budget);
        if (! report.oracle.value)
            report.agreement = Agreement::inconclusive;
        else
            report.agreement = *report.oracle.value == report.classifier_aw ? Agreement::agree : Agreement::disagree;
        return report;
    }

    auto sweep_pairs(int max_factor) -> std::vector<std::pair<Graph, Graph>>
    {
        std::vector<Graph> catalog;
        for (int n = 2; n <= max_factor; ++n)
            for (auto & t : enumerate_trees(n, std::max(max_factor, default_enumeration_bound)))
                catalog.push_back(std::move(t));

        std::vector<std::pair<Graph, Graph>> pairs;
        for (std::size_t a = 0; a < catalog.size(); ++a)
            for (std::size_t b = a; b < catalog.size(); ++b)
                pairs.emplace_back(catalog[a], catalog[b]);
        return pairs;
    }

    auto crosscheck_sweep(int max_factor, int jobs, const SearchBudget & budget,
        const std::function<void(const CrosscheckReport &)> & on_report) -> std::vector<CrosscheckReport>
    {
        auto pairs = sweep_pairs(max_factor);
        std::vector<std::optional<CrosscheckReport>> slots(pairs.size());
        std::atomic<std::size_t> next{0};
        std::mutex mutex;
        std::condition_variable ready;
        std::exception_ptr failure;

        auto worker = [&] {
            for (std::size_t i; (i = next++) < pairs.size();) {
                try {
                    auto report = crosscheck_pair(pairs[i].first, pairs[i].second, budget);
                    std::lock_guard lock(mutex);
                    slots[i] = std::move(report);
                }
                catch (...) {
                    std::lock_guard lock(mutex);
                    if (! failure)
                        failure = std::current_exception();
                    next = pairs.size();
                }
                ready.notify_all();
            }
            ready.notify_all();
        };

        std::vector<std::jthread> workers;
        for (int w = 0; w < std::max(1, jobs); ++w)
            workers.emplace_back(worker);

        // Reports are emitted strictly in sweep order, from this thread only.
        std::vector<CrosscheckReport> reports;
        reports.reserve(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return slots[i].has_value() || failure; });
            if (failure)
                break;
            reports.push_back(std::move(*slots[i]));
            lock.unlock();
            if (on_report)
                on_report(reports.back());
        }
        workers.clear();
        if (failure)
            std::rethrow_exception(failure);
        return reports;
    }
}
