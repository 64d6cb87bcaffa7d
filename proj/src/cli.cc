#include <rainbow_aw/classifier.hh>
#include <rainbow_aw/cli.hh>
#include <rainbow_aw/crosscheck.hh>
#include <rainbow_aw/dot.hh>
#include <rainbow_aw/json.hh>
#include <rainbow_aw/oracle.hh>
#include <rainbow_aw/product.hh>
#include <rainbow_aw/tree.hh>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

using std::string;

namespace rainbow_aw::cli
{
    namespace
    {
        /// Bad input files and unreadable or unwritable paths.
        class InputError : public std::runtime_error
        {
        public:
            using std::runtime_error::runtime_error;
        };

        auto read_file(const string & path) -> string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw InputError("cannot read " + path);
            std::ostringstream text;
            text << in.rdbuf();
            return text.str();
        }

        void write_file(const string & path, const string & text)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (! (out << text))
                throw InputError("cannot write " + path);
        }

        auto load_graph(const string & path) -> Graph
        {
            try {
                return parse_edge_list(read_file(path));
            }
            catch (const GraphError & e) {
                throw InputError(path + ": " + e.what());
            }
        }

        auto load_tree(const string & path) -> Graph
        {
            auto g = load_graph(path);
            if (! is_tree(g))
                throw ClassifierError(path + " is not a tree");
            return g;
        }

        void emit(std::ostream & out, const Json & j)
        {
            out << j.dump() << '\n';
        }

        void configure_logging()
        {
            spdlog::set_default_logger(spdlog::default_logger());
            spdlog::set_level(spdlog::level::warn);
            if (auto * level = std::getenv("RAINBOW_AW_LOG"))
                spdlog::set_level(spdlog::level::from_str(level));
        }

        auto budget_from(std::uint64_t nodes, std::int64_t ms) -> SearchBudget
        {
            if (nodes == 0 || ms <= 0)
                throw CLI::ValidationError("budget", "node and time budgets must be positive");
            SearchBudget b;
            b.max_nodes = nodes;
            b.time_limit = std::chrono::milliseconds(ms);
            return b;
        }

        constexpr auto footer = R"(Vertex ids are 0-based in edge lists and in JSON.  Product vertices are flat
ids i*|V(T2)| + j in JSON; human-facing output (traces, DOT labels, rainbow
triples) uses 1-based labels v{i+1},{j+1}.  Colours red, blue, green are 0, 1, 2.
Exit codes: 0 ok, 1 domain error, 2 usage error, 3 inconclusive (budget).
RAINBOW_AW_LOG sets the log level (trace, debug, info, warn, error, off).)";
    }

    auto run(const std::vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        configure_logging();

        CLI::App app{"Anti-van der Waerden numbers aw(G,3) of tree and forest Cartesian products", "rainbow_aw"};
        app.footer(footer);
        app.require_subcommand(1);

        std::function<int()> action;
        auto on = [&](CLI::App * sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

        std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
        std::int64_t budget_ms = SearchBudget{}.time_limit.count();
        auto add_budget = [&](CLI::App * sub) {
            sub->add_option("--budget-nodes", budget_nodes, "node expansion limit per search")->capture_default_str();
            sub->add_option("--budget-ms", budget_ms, "wall-clock limit per search, ms")->capture_default_str();
        };

        // classify
        string tree_path;
        auto * classify = app.add_subcommand("classify", "peripherality class of a tree");
        classify->add_option("tree", tree_path, "edge-list file")->required();
        on(classify, [&] {
            auto t = load_tree(tree_path);
            auto j = to_json(classify_tree(t));
            j["order"] = t.order();
            emit(out, j);
            return ok;
        });

        // aw
        string first_path, second_path, emit_path, dot_path;
        bool want_explain = false;
        auto * aw = app.add_subcommand("aw", "aw(T1 x T2, 3) by the closed-form classification");
        aw->add_option("t1", first_path, "first tree")->required();
        aw->add_option("t2", second_path, "second tree")->required();
        aw->add_flag("--explain", want_explain, "write a human-readable trace to stderr");
        aw->add_option("--emit-coloring", emit_path, "write the verified rainbow-free colouring here");
        aw->add_option("--dot", dot_path, "write the product as DOT here, coloured when aw = 4");
        on(aw, [&] {
            auto t = load_tree(first_path), t2 = load_tree(second_path);
            auto result = aw_tree_product(t, t2);
            auto j = to_json(result);
            if (! emit_path.empty()) {
                if (result.coloring) {
                    write_file(emit_path, to_json(*result.coloring).dump() + "\n");
                    j["coloring_ref"] = emit_path;
                }
                else
                    j["coloring_ref"] = nullptr;
            }
            if (! dot_path.empty())
                write_file(dot_path, to_dot(ProductGraph(t, t2), result.coloring));
            if (want_explain)
                err << explain(result);
            emit(out, j);
            return ok;
        });

        // aw-forest
        auto * aw_forest = app.add_subcommand("aw-forest", "aw(F1 x F2, 3) for forests without trivial components");
        aw_forest->add_option("f1", first_path, "first forest")->required();
        aw_forest->add_option("f2", second_path, "second forest")->required();
        on(aw_forest, [&] {
            emit(out, to_json(aw_forest_product(load_graph(first_path), load_graph(second_path))));
            return ok;
        });

        // color
        string out_path;
        auto * color = app.add_subcommand("color", "write a verified rainbow-free exact 3-colouring when aw = 4");
        color->add_option("t1", first_path, "first tree")->required();
        color->add_option("t2", second_path, "second tree")->required();
        color->add_option("--out", out_path, "colouring JSON output path")->required();
        on(color, [&] {
            auto result = aw_tree_product(load_tree(first_path), load_tree(second_path));
            if (! result.coloring)
                throw ClassifierError("aw = 3 by rule " + string(to_string(result.rule)) +
                    "; no rainbow-free exact 3-colouring exists");
            write_file(out_path, to_json(*result.coloring).dump() + "\n");
            emit(out, Json{{"aw", result.value}, {"rule", to_string(result.rule)}, {"coloring_ref", out_path},
                          {"order", result.coloring->order()}});
            return ok;
        });

        // verify
        string coloring_path;
        auto * verify = app.add_subcommand("verify", "search a colouring of T1 x T2 for a rainbow 3-AP");
        verify->add_option("t1", first_path, "first tree")->required();
        verify->add_option("t2", second_path, "second tree")->required();
        verify->add_option("--coloring", coloring_path, "colouring JSON")->required();
        on(verify, [&] {
            ProductGraph pg(load_tree(first_path), load_tree(second_path));
            auto c = coloring_from_json(read_file(coloring_path));
            if (c.order() != pg.order())
                throw ColoringError("colouring has " + std::to_string(c.order()) + " entries but the product has " +
                    std::to_string(pg.order()) + " vertices");
            Json j;
            if (auto t = find_rainbow_3ap(pg, c)) {
                j["result"] = "rainbow";
                j["triple"] = to_json(*t, &pg);
                j["triple"]["colors"] = {c[t->x], c[t->y], c[t->z]};
            }
            else
                j["result"] = "rainbow-free";
            j["exact"] = c.is_exact();
            j["r"] = c.palette();
            j["used_colors"] = c.used_color_count();
            if (! c.is_exact())
                j["note"] = "colouring is not exact: " + std::to_string(c.used_color_count()) + " of " +
                    std::to_string(c.palette()) + " colours used";
            else if (c.palette() < 3)
                j["note"] = "fewer than 3 colours cannot form a rainbow triple";
            emit(out, j);
            return ok;
        });

        // oracle
        string graph_path;
        std::optional<int> colors;
        auto * oracle = app.add_subcommand("oracle", "brute-force search on a connected graph");
        oracle->add_option("graph", graph_path, "edge-list file")->required();
        oracle->add_option("--r", colors, "decide a single colour count instead of computing aw")
            ->check(CLI::Range(1, 32));
        add_budget(oracle);
        on(oracle, [&] {
            auto g = load_graph(graph_path);
            auto budget = budget_from(budget_nodes, budget_ms);
            if (colors) {
                auto o = exists_rainbow_free_exact_coloring(g, *colors, budget);
                auto j = to_json(o);
                j["r"] = *colors;
                emit(out, j);
                return o.status == SearchStatus::inconclusive ? inconclusive : ok;
            }
            auto result = brute_force_aw3(g, budget);
            emit(out, to_json(result));
            return result.value ? ok : inconclusive;
        });

        // crosscheck
        int max_factor = 0, jobs = 1;
        string jsonl_path;
        auto * crosscheck = app.add_subcommand("crosscheck", "classifier against oracle on all small tree pairs");
        crosscheck->add_option("--max-factor", max_factor, "largest factor order")->required()->check(CLI::Range(2, 7));
        crosscheck->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::Range(1, 256));
        crosscheck->add_option("--out", jsonl_path, "write JSONL here instead of stdout");
        add_budget(crosscheck);
        on(crosscheck, [&] {
            auto budget = budget_from(budget_nodes, budget_ms);
            std::unique_ptr<std::ofstream> file;
            if (! jsonl_path.empty()) {
                file = std::make_unique<std::ofstream>(jsonl_path, std::ios::trunc);
                if (! *file)
                    throw InputError("cannot write " + jsonl_path);
            }
            std::ostream & sink = file ? *file : out;
            int disagreements = 0, unresolved = 0;
            crosscheck_sweep(max_factor, jobs, budget, [&](const CrosscheckReport & r) {
                Json oracle_json;
                oracle_json["aw"] = r.oracle.value ? Json(*r.oracle.value) : Json("inconclusive");
                oracle_json["nodes"] = r.oracle.total.nodes;
                oracle_json["ms"] = r.oracle.total.milliseconds;
                Json record{{"t1", r.first_encoding}, {"t2", r.second_encoding},
                    {"classifier", {{"aw", r.classifier_aw}, {"rule", to_string(r.rule)}}}, {"oracle", oracle_json},
                    {"agree", r.agreement == Agreement::agree}};
                sink << record.dump() << '\n' << std::flush;
                disagreements += r.agreement == Agreement::disagree;
                unresolved += r.agreement == Agreement::inconclusive;
                spdlog::info("{} x {}: {}", r.first_encoding, r.second_encoding, to_string(r.agreement));
            });
            if (disagreements)
                err << disagreements << " disagreement(s)\n";
            if (unresolved)
                err << unresolved << " inconclusive pair(s)\n";
            return disagreements ? domain_error : unresolved ? inconclusive : ok;
        });

        // enumerate-trees
        int tree_order = 0;
        auto * enumerate = app.add_subcommand("enumerate-trees", "all non-isomorphic trees of one order");
        enumerate->add_option("n", tree_order, "number of vertices")->required();
        on(enumerate, [&] {
            Json trees = Json::array();
            for (auto & t : enumerate_trees(tree_order))
                trees.push_back(Json{{"encoding", canonical_encoding(t)}, {"edges", edges_to_json(t)}});
            emit(out, Json{{"n", tree_order}, {"count", trees.size()}, {"trees", trees}});
            return ok;
        });

        // export-dot
        auto * export_dot = app.add_subcommand("export-dot", "DOT for a graph, or for G1 x G2 when two are given");
        export_dot->add_option("graph", first_path, "edge-list file")->required();
        export_dot->add_option("second", second_path, "second factor; exports the product");
        export_dot->add_option("--coloring", coloring_path, "colouring JSON for node fills");
        on(export_dot, [&] {
            auto g = load_graph(first_path);
            std::optional<Coloring> c;
            if (! coloring_path.empty())
                c = coloring_from_json(read_file(coloring_path));
            if (second_path.empty())
                out << to_dot(g, c);
            else
                out << to_dot(ProductGraph(g, load_graph(second_path)), c);
            return ok;
        });

        try {
            std::vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::Success & e) {
            app.exit(e, out, err);
            return ok;
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            return usage_error;
        }

        auto fail = [&](std::string_view kind, const std::exception & e) {
            err << Json{{"error", {{"kind", kind}, {"message", e.what()}}}}.dump() << '\n';
            return domain_error;
        };
        try {
            return action();
        }
        catch (const CLI::ValidationError & e) {
            err << e.what() << '\n';
            return usage_error;
        }
        catch (const InputError & e) {
            return fail("input", e);
        }
        catch (const ParseError & e) {
            return fail("parse", e);
        }
        catch (const ClassifierError & e) {
            return fail("classifier", e);
        }
        catch (const ColoringError & e) {
            return fail("coloring", e);
        }
        catch (const GraphError & e) {
            return fail("graph", e);
        }
        catch (const std::invalid_argument & e) {
            return fail("argument", e);
        }
    }
}
