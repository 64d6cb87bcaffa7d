#include "oracles.hh"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace oracle
{
    auto graph(int n, std::vector<Edge> edges) -> Graph
    {
        return Graph::from_edges(n, edges);
    }

    auto path(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return graph(n, edges);
    }

    auto floyd_warshall(const Graph & g) -> Matrix
    {
        int n = g.order();
        constexpr int big = 1 << 28;
        std::vector<std::vector<int>> d(n, std::vector<int>(n, big));
        for (int v = 0; v < n; ++v)
            d[v][v] = 0;
        for (auto [u, v] : g.edges())
            d[u][v] = d[v][u] = 1;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        for (auto & row : d)
            for (auto & x : row)
                if (x >= big)
                    x = inf;
        return d;
    }

    auto product_matrix_by_construction(const Graph & g, const Graph & h) -> Matrix
    {
        int n1 = g.order(), n2 = h.order();
        std::vector<Edge> edges;
        for (int i = 0; i < n1; ++i)
            for (auto [a, b] : h.edges())
                edges.emplace_back(i * n2 + a, i * n2 + b);
        for (int j = 0; j < n2; ++j)
            for (auto [a, b] : g.edges())
                edges.emplace_back(a * n2 + j, b * n2 + j);
        return floyd_warshall(graph(n1 * n2, edges));
    }

    auto all_triples(const Matrix & dist) -> std::vector<std::array<int, 4>>
    {
        int n = static_cast<int>(dist.size());
        std::vector<std::array<int, 4>> out;
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x)
                for (int z = x + 1; z < n; ++z)
                    if (x != y && z != y && dist[x][y] != inf && dist[x][y] == dist[y][z])
                        out.push_back({x, y, z, dist[x][y]});
        return out;
    }

    auto naive_rainbow(const Matrix & dist, const std::vector<int> & c) -> std::array<int, 4>
    {
        for (auto & t : all_triples(dist))
            if (c[t[0]] != c[t[1]] && c[t[1]] != c[t[2]] && c[t[0]] != c[t[2]])
                return t;
        return {-1, -1, -1, -1};
    }

    auto naive_rainbow_free_exists(const Matrix & dist, int r) -> bool
    {
        int n = static_cast<int>(dist.size());
        if (r > n || r < 1)
            return false;
        auto triples = all_triples(dist);
        std::vector<int> c(n, 0);

        // Restricted growth strings: c[0] = 0, c[i] <= 1 + max(c[0..i-1]).
        std::vector<int> prefix_max(n, 0);
        std::function<bool(int)> go = [&](int i) -> bool {
            if (i == n) {
                if (prefix_max[n - 1] + 1 != r)
                    return false;
                for (auto & t : triples)
                    if (c[t[0]] != c[t[1]] && c[t[1]] != c[t[2]] && c[t[0]] != c[t[2]])
                        return false;
                return true;
            }
            int top = i == 0 ? 0 : prefix_max[i - 1] + 1;
            for (int col = 0; col <= std::min(top, r - 1); ++col) {
                c[i] = col;
                prefix_max[i] = i == 0 ? col : std::max(prefix_max[i - 1], col);
                if (go(i + 1))
                    return true;
            }
            return false;
        };
        return go(0);
    }

    auto naive_aw3(const Matrix & dist) -> int
    {
        int n = static_cast<int>(dist.size());
        for (int r = 1; r <= n; ++r)
            if (! naive_rainbow_free_exists(dist, r))
                return r;
        return 0;
    }

    auto tree_from_prufer(const std::vector<int> & seq) -> Graph
    {
        int n = static_cast<int>(seq.size()) + 2;
        std::vector<int> degree(n, 1);
        for (int x : seq)
            ++degree[x];
        std::vector<Edge> edges;
        for (int x : seq) {
            for (int leaf = 0; leaf < n; ++leaf)
                if (degree[leaf] == 1) {
                    edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
                    --degree[leaf];
                    --degree[x];
                    break;
                }
        }
        std::vector<int> last;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1)
                last.push_back(v);
        edges.emplace_back(last[0], last[1]);
        return graph(n, edges);
    }

    auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        int n = a.order();
        if (n != b.order() || a.size() != b.size())
            return false;
        std::vector<int> da, db;
        for (int v = 0; v < n; ++v) {
            da.push_back(a.degree(v));
            db.push_back(b.degree(v));
        }
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;

        std::vector<int> map(n, -1);
        std::vector<char> used(n, 0);
        std::function<bool(int)> go = [&](int v) -> bool {
            if (v == n)
                return true;
            for (int w = 0; w < n; ++w) {
                if (used[w] || da[v] != db[w])
                    continue;
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    ok = a.adjacent(u, v) == b.adjacent(map[u], w);
                if (! ok)
                    continue;
                map[v] = w;
                used[w] = 1;
                if (go(v + 1))
                    return true;
                used[w] = 0;
            }
            return false;
        };
        return go(0);
    }

    auto free_trees_by_prufer(int n) -> std::vector<Graph>
    {
        std::vector<Graph> reps;
        for_each_labelled_tree(n, [&](const Graph & t) {
            for (auto & r : reps)
                if (isomorphic(r, t))
                    return;
            reps.push_back(t);
        });
        return reps;
    }

    auto connected_graphs_up_to_iso(int n) -> std::vector<Graph>
    {
        std::vector<Edge> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                slots.emplace_back(u, v);

        std::vector<int> perm(n);
        std::set<std::uint64_t> seen;
        std::vector<Graph> out;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (mask >> s & 1)
                    edges.push_back(slots[s]);
            auto g = graph(n, edges);
            auto d = floyd_warshall(g);
            bool connected = std::all_of(d[0].begin(), d[0].end(), [](int x) { return x != inf; });
            if (! connected)
                continue;

            std::uint64_t best = ~std::uint64_t{0};
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::uint64_t code = 0;
                for (auto [u, v] : edges) {
                    int a = std::min(perm[u], perm[v]), b = std::max(perm[u], perm[v]);
                    code |= std::uint64_t{1} << (a * n + b);
                }
                best = std::min(best, code);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (seen.insert(best).second)
                out.push_back(g);
        }
        return out;
    }

    auto random_tree(int n, std::mt19937_64 & rng) -> Graph
    {
        if (n <= 2)
            return path(n);
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<int> seq(n - 2);
        for (auto & x : seq)
            x = pick(rng);
        return tree_from_prufer(seq);
    }

    auto random_connected_graph(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        auto t = random_tree(n, rng);
        auto edges = t.edges();
        std::bernoulli_distribution coin(p);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (! t.adjacent(u, v) && coin(rng))
                    edges.emplace_back(u, v);
        return graph(n, edges);
    }

    auto random_forest(const std::vector<int> & orders, std::mt19937_64 & rng) -> Graph
    {
        std::vector<Edge> edges;
        int offset = 0;
        for (int n : orders) {
            for (auto [u, v] : random_tree(n, rng).edges())
                edges.emplace_back(u + offset, v + offset);
            offset += n;
        }
        // Shuffle labels so components are not contiguous blocks.
        std::vector<int> perm(offset);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (auto & [u, v] : edges) {
            u = perm[u];
            v = perm[v];
            if (u > v)
                std::swap(u, v);
        }
        return graph(offset, edges);
    }
}
