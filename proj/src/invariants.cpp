#include "dsg/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dsg/errors.hpp"

namespace dsg {

namespace {

// BFS by frontier bitsets; returns (eccentricity, number of visited vertices)
std::pair<int, int> bfs_eccentricity(const std::vector<Bitset>& adj, int n, int src) {
    Bitset visited(n), frontier(n);
    visited.set(src);
    frontier.set(src);
    int level = 0, seen = 1;
    while (true) {
        Bitset next(n);
        for (int v = frontier.next(); v != -1; v = frontier.next(v + 1)) next |= adj[v];
        next.and_not(visited);
        if (next.none()) break;
        ++level;
        seen += next.count();
        visited |= next;
        frontier = std::move(next);
    }
    return {level, seen};
}

} // namespace

std::pair<bool, int> connectivity_and_diameter(const DirectSumGraph& g) {
    if (g.order == 1) return {true, 0};
    int diameter = 0;
    for (int v = 0; v < g.order; ++v) {
        auto [ecc, seen] = bfs_eccentricity(g.adj, g.order, v);
        if (seen != g.order) return {false, kInfinite};
        diameter = std::max(diameter, ecc);
    }
    return {true, diameter};
}

std::vector<int> path_witness(const DirectSumGraph& g, int x, int y) {
    if (x == y) throw std::invalid_argument("path witness requires distinct endpoints");
    if (x < 0 || y < 0 || x >= g.order || y >= g.order)
        throw std::invalid_argument("vertex rank out of range");
    if (g.adjacent(x, y)) return {x, y};

    const DSVector& vx = g.vertices[x];
    const DSVector& vy = g.vertices[y];
    DSVector sum = vector_add(vx, vy);
    if (sum.is_vertex()) {
        int z = static_cast<int>(rank_vertex(sum));
        if (g.adjacent(x, z) && g.adjacent(z, y)) return {x, z, y};
    }
    // all-ones on the union support; its skeleton contains both endpoint
    // skeletons, so it is adjacent to both whenever x !~ y
    Skeleton su = g.skeletons[x], sv = g.skeletons[y];
    DSVector mid{g.params, std::vector<std::uint32_t>(g.params.dim_u, 0),
                 std::vector<std::uint32_t>(g.params.dim_w, 0)};
    std::uint32_t um = su.u_mask | sv.u_mask, wm = su.w_mask | sv.w_mask;
    for (int i = 0; i < g.params.dim_u; ++i)
        if (um & (1u << i)) mid.u_coeffs[i] = 1;
    for (int i = 0; i < g.params.dim_w; ++i)
        if (wm & (1u << i)) mid.w_coeffs[i] = 1;
    return {x, static_cast<int>(rank_vertex(mid)), y};
}

int girth_exact(const DirectSumGraph& g) {
    if (g.order < 3 || g.edge_count == 0) return kInfinite;

    // dense graphs almost always close a triangle; check rows first
    for (int i = 0; i < g.order; ++i)
        for (int j = g.adj[i].next(i + 1); j != -1; j = g.adj[i].next(j + 1))
            if (g.adj[i].intersects(g.adj[j])) return 3;

    // per-root BFS; a non-tree edge (a,b) bounds a cycle through the root by
    // dist(a)+dist(b)+1, and the bound is attained for a root on a shortest
    // cycle, so the minimum over all roots is the girth
    int best = kInfinite;
    std::vector<int> dist(g.order), parent(g.order), queue(g.order);
    for (int root = 0; root < g.order; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        int head = 0, tail = 0;
        dist[root] = 0;
        parent[root] = -1;
        queue[tail++] = root;
        while (head < tail) {
            int a = queue[head++];
            for (int b = g.adj[a].next(); b != -1; b = g.adj[a].next(b + 1)) {
                if (dist[b] == -1) {
                    dist[b] = dist[a] + 1;
                    parent[b] = a;
                    queue[tail++] = b;
                } else if (b != parent[a]) {
                    int len = dist[a] + dist[b] + 1;
                    if (best == kInfinite || len < best) best = len;
                }
            }
        }
    }
    return best;
}

DegreeStats degree_stats(const DirectSumGraph& g) {
    DegreeStats st;
    st.degrees = g.degrees;
    st.min_degree = *std::min_element(g.degrees.begin(), g.degrees.end());
    for (int v = 0; v < g.order; ++v) {
        auto key = std::make_pair(g.skeletons[v].u_size(), g.skeletons[v].w_size());
        auto& seen = st.by_class[key];
        if (std::find(seen.begin(), seen.end(), g.degrees[v]) == seen.end())
            seen.push_back(g.degrees[v]);
    }
    for (auto& [key, seen] : st.by_class) std::sort(seen.begin(), seen.end());
    return st;
}

bool is_eulerian_exact(const DirectSumGraph& g) {
    if (g.order == 1) return true;
    for (int d : g.degrees)
        if (d % 2 != 0) return false;
    return connectivity_and_diameter(g).first;
}

bool is_triangulated_exact(const DirectSumGraph& g) {
    if (g.order < 3) return false;
    for (int v = 0; v < g.order; ++v) {
        bool in_triangle = false;
        for (int u = g.adj[v].next(); u != -1 && !in_triangle; u = g.adj[v].next(u + 1))
            in_triangle = g.adj[v].intersects(g.adj[u]);
        if (!in_triangle) return false;
    }
    return true;
}

// ---- edge connectivity via unit-capacity max-flow ----

namespace {

struct FlowNetwork {
    // paired arcs: arc e and e^1 are reverses of each other
    std::vector<int> to;
    std::vector<int> first; // CSR offsets per vertex
    std::vector<int> arcs;  // arc ids, grouped by tail
    std::vector<std::uint8_t> cap;

    explicit FlowNetwork(const DirectSumGraph& g) {
        int n = g.order;
        std::vector<int> cnt(n, 0);
        for (int i = 0; i < n; ++i) cnt[i] = g.degrees[i];
        first.assign(n + 1, 0);
        for (int i = 0; i < n; ++i) first[i + 1] = first[i] + cnt[i];
        arcs.resize(first[n]);
        to.reserve(first[n]);
        std::vector<int> fill(first.begin(), first.end() - 1);
        for (int i = 0; i < n; ++i)
            for (int j = g.adj[i].next(i + 1); j != -1; j = g.adj[i].next(j + 1)) {
                int e = static_cast<int>(to.size());
                to.push_back(j);
                to.push_back(i);
                arcs[fill[i]++] = e;
                arcs[fill[j]++] = e + 1;
            }
        cap.assign(to.size(), 1);
    }

    void reset() { std::fill(cap.begin(), cap.end(), 1); }

    // max flow s->t by BFS augmentation, stopping once flow reaches `enough`
    int max_flow(int s, int t, int enough) {
        int flow = 0;
        std::vector<int> parent_arc(first.size() - 1);
        std::vector<int> queue(first.size() - 1);
        while (flow < enough) {
            std::fill(parent_arc.begin(), parent_arc.end(), -1);
            parent_arc[s] = -2;
            int head = 0, tail = 0;
            queue[tail++] = s;
            bool reached = false;
            while (head < tail && !reached) {
                int v = queue[head++];
                for (int k = first[v]; k < first[v + 1]; ++k) {
                    int e = arcs[k];
                    if (cap[e] == 0 || parent_arc[to[e]] != -1) continue;
                    parent_arc[to[e]] = e;
                    if (to[e] == t) { reached = true; break; }
                    queue[tail++] = to[e];
                }
            }
            if (!reached) break;
            for (int v = t; v != s;) {
                int e = parent_arc[v];
                --cap[e];
                ++cap[e ^ 1];
                v = to[e ^ 1];
            }
            ++flow;
        }
        return flow;
    }
};

} // namespace

int edge_connectivity_exact(const DirectSumGraph& g) {
    if (g.order == 1) return 0;
    if (!connectivity_and_diameter(g).first) return 0;
    int src = 0;
    for (int v = 1; v < g.order; ++v)
        if (g.degrees[v] < g.degrees[src]) src = v;
    FlowNetwork net(g);
    int best = g.degrees[src]; // the cut isolating src
    for (int t = 0; t < g.order && best > 0; ++t) {
        if (t == src) continue;
        net.reset();
        best = std::min(best, net.max_flow(src, t, best));
    }
    return best;
}

// ---- maximal clique enumeration (pivoted, on bit rows) ----

namespace {

struct CliqueEnumerator {
    const std::vector<Bitset>& adj;
    int n;
    std::uint64_t budget;
    CliqueCensus out;
    std::vector<int> current;

    void run() {
        Bitset p(n), x(n);
        p.set_all();
        expand(p, x);
    }

    void expand(Bitset p, Bitset x) {
        if (!out.complete) return;
        if (p.none() && x.none()) {
            if (out.cliques.size() >= budget) {
                out.complete = false;
                return;
            }
            out.cliques.push_back(current);
            return;
        }
        // pivot: vertex of P|X with most neighbours inside P
        int pivot = -1, bestdeg = -1;
        Bitset both = p | x;
        for (int u = both.next(); u != -1; u = both.next(u + 1)) {
            int d = p.and_count(adj[u]);
            if (d > bestdeg) { bestdeg = d; pivot = u; }
        }
        Bitset ext = p;
        ext.and_not(adj[pivot]);
        for (int v = ext.next(); v != -1; v = ext.next(v + 1)) {
            current.push_back(v);
            expand(p & adj[v], x & adj[v]);
            current.pop_back();
            if (!out.complete) return;
            p.reset(v);
            x.set(v);
        }
    }
};

} // namespace

CliqueCensus maximal_clique_census(const DirectSumGraph& g, std::uint64_t budget) {
    CliqueEnumerator en{g.adj, g.order, budget, {}, {}};
    en.run();
    CliqueCensus census = std::move(en.out);
    for (const auto& c : census.cliques) {
        int sz = static_cast<int>(c.size());
        census.clique_number = std::max(census.clique_number, sz);
        ++census.count_by_size[sz];
    }
    return census;
}

// ---- maximum clique (branch and bound with greedy colouring bound) ----

namespace {

struct MaxCliqueSolver {
    const std::vector<Bitset>& adj;
    int n;
    int best = 0;

    void expand(const Bitset& p, int rsize) {
        if (p.none()) {
            best = std::max(best, rsize);
            return;
        }
        // greedy colouring of P; colour index bounds the clique extension
        std::vector<int> order, bound;
        Bitset uncoloured = p;
        int colour = 0;
        while (uncoloured.any()) {
            ++colour;
            Bitset cand = uncoloured;
            while (cand.any()) {
                int v = cand.next();
                order.push_back(v);
                bound.push_back(colour);
                uncoloured.reset(v);
                cand.reset(v);
                cand.and_not(adj[v]);
            }
        }
        Bitset rest = p;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (rsize + bound[i] <= best) return;
            int v = order[i];
            expand(rest & adj[v], rsize + 1);
            rest.reset(v);
        }
    }
};

} // namespace

int max_clique_size(const std::vector<Bitset>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 0) return 0;
    MaxCliqueSolver solver{adj, n};
    Bitset all(n);
    all.set_all();
    solver.expand(all, 0);
    return solver.best;
}

int independence_number_exact(const DirectSumGraph& g) {
    std::vector<Bitset> comp(g.order, Bitset(g.order));
    for (int v = 0; v < g.order; ++v) {
        comp[v].set_all();
        comp[v].and_not(g.adj[v]);
        comp[v].reset(v);
    }
    return max_clique_size(comp);
}

// ---- chromatic number ----

namespace {

// deterministic greedy clique: repeatedly add the highest-degree compatible
// vertex (ties by rank); a cheap lower bound for large graphs
int greedy_clique_size(const DirectSumGraph& g) {
    std::vector<int> by_degree(g.order);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return g.degrees[a] > g.degrees[b]; });
    Bitset allowed(g.order);
    allowed.set_all();
    int size = 0;
    for (int v : by_degree) {
        if (!allowed.test(v)) continue;
        ++size;
        allowed &= g.adj[v];
    }
    return size;
}

// largest-saturation-first greedy colouring; returns number of colours
int dsatur_upper_bound(const DirectSumGraph& g) {
    int n = g.order;
    int capacity = *std::max_element(g.degrees.begin(), g.degrees.end()) + 1;
    std::vector<Bitset> neighbour_colours(n, Bitset(capacity));
    std::vector<int> saturation(n, 0), colour(n, -1);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (colour[u] != -1) continue;
            if (v == -1 || saturation[u] > saturation[v] ||
                (saturation[u] == saturation[v] && g.degrees[u] > g.degrees[v]))
                v = u;
        }
        int c = 0;
        while (neighbour_colours[v].test(c)) ++c;
        colour[v] = c;
        used = std::max(used, c + 1);
        for (int u = g.adj[v].next(); u != -1; u = g.adj[v].next(u + 1)) {
            if (colour[u] != -1 || neighbour_colours[u].test(c)) continue;
            neighbour_colours[u].set(c);
            ++saturation[u];
        }
    }
    return used;
}

// first-fit greedy in rank order; O(V+E) memory-light bound for big graphs
int sequential_upper_bound(const DirectSumGraph& g) {
    std::vector<int> colour(g.order, -1);
    std::vector<int> taken;
    int used = 0;
    for (int v = 0; v < g.order; ++v) {
        taken.assign(used + 1, 0);
        for (int u = g.adj[v].next(); u != -1 && u < v; u = g.adj[v].next(u + 1))
            if (colour[u] <= used) taken[colour[u]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        colour[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

struct KColouring {
    const std::vector<Bitset>& adj;
    int n, k;
    std::vector<std::uint64_t> forbidden; // colour bits seen in neighbourhood
    std::vector<int> colour;
    std::vector<int> degree;

    bool solve() {
        forbidden.assign(n, 0);
        colour.assign(n, -1);
        return place(0, 0);
    }

    bool place(int placed, int used) {
        if (placed == n) return true;
        // most saturated uncoloured vertex, ties by degree then rank
        int v = -1, vsat = -1;
        for (int u = 0; u < n; ++u) {
            if (colour[u] != -1) continue;
            int sat = __builtin_popcountll(forbidden[u]);
            if (v == -1 || sat > vsat || (sat == vsat && degree[u] > degree[v])) {
                v = u;
                vsat = sat;
            }
        }
        int limit = std::min(k, used + 1); // at most one brand-new colour
        std::uint64_t avail = ~forbidden[v] & ((limit >= 64 ? 0 : (std::uint64_t{1} << limit)) - 1);
        while (avail) {
            int c = __builtin_ctzll(avail);
            avail &= avail - 1;
            colour[v] = c;
            std::vector<int> touched;
            for (int u = adj[v].next(); u != -1; u = adj[v].next(u + 1)) {
                if (colour[u] != -1 || (forbidden[u] >> c) & 1) continue;
                forbidden[u] |= std::uint64_t{1} << c;
                touched.push_back(u);
            }
            if (place(placed + 1, std::max(used, c + 1))) return true;
            for (int u : touched) forbidden[u] &= ~(std::uint64_t{1} << c);
            colour[v] = -1;
        }
        return false;
    }
};

} // namespace

ChromaticResult chromatic_number_exact(const DirectSumGraph& g, const Caps& caps) {
    int lower = g.order <= caps.clique_order_cap ? max_clique_size(g.adj)
                                                 : greedy_clique_size(g);
    int upper = g.order <= caps.traversal_cap ? dsatur_upper_bound(g)
                                              : sequential_upper_bound(g);
    // exact search stores colour sets in one word, so it needs order <= 64
    if (g.order > caps.chromatic_cap || g.order > 64) return {false, lower, upper};

    for (int k = lower; k < upper; ++k) {
        KColouring search{g.adj, g.order, k, {}, {}, g.degrees};
        if (search.solve()) return {true, k, k};
    }
    return {true, upper, upper};
}

// ---- domination ----

namespace {

bool dominates_within(const std::vector<Bitset>& closed, const Bitset& undominated, int k) {
    if (undominated.none()) return true;
    if (k == 0) return false;
    int v = undominated.next(); // must be covered by someone in its closed nbhd
    for (int u = closed[v].next(); u != -1; u = closed[v].next(u + 1)) {
        Bitset rest = undominated;
        rest.and_not(closed[u]);
        if (dominates_within(closed, rest, k - 1)) return true;
    }
    return false;
}

} // namespace

int domination_number_exact(const DirectSumGraph& g) {
    std::vector<Bitset> closed(g.order);
    for (int v = 0; v < g.order; ++v) {
        closed[v] = g.adj[v];
        closed[v].set(v);
    }
    Bitset all(g.order);
    all.set_all();
    for (int k = 1; k <= g.order; ++k)
        if (dominates_within(closed, all, k)) return k;
    return g.order;
}

int upper_domination_exact(const DirectSumGraph& g) {
    if (g.order > 20)
        throw ResourceError("minimal dominating set enumeration needs order <= 20 (got " +
                            std::to_string(g.order) + ")");
    int n = g.order;
    std::vector<std::uint64_t> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = std::uint64_t{1} << v;
        for (int u = g.adj[v].next(); u != -1; u = g.adj[v].next(u + 1))
            closed[v] |= std::uint64_t{1} << u;
    }
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    int best = 0;
    for (std::uint64_t set = 1; set <= full; ++set) {
        if (__builtin_popcountll(set) <= best) continue;
        std::uint64_t covered = 0;
        for (std::uint64_t m = set; m;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            covered |= closed[v];
        }
        if (covered != full) continue;
        bool minimal = true;
        for (std::uint64_t m = set; m && minimal;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            std::uint64_t rest = 0;
            for (std::uint64_t mm = set & ~(std::uint64_t{1} << v); mm;) {
                int u = __builtin_ctzll(mm);
                mm &= mm - 1;
                rest |= closed[u];
            }
            minimal = rest != full;
        }
        if (minimal) best = __builtin_popcountll(set);
    }
    return best;
}

// ---- full report ----

InvariantReport analyze(const DirectSumGraph& g, const Caps& caps) {
    InvariantReport rep;
    rep.params = g.params;
    rep.order = g.order;
    rep.edges = g.edge_count;

    DegreeStats st = degree_stats(g);
    rep.min_degree = st.min_degree;

    auto note = [&](const std::string& what, int cap, const std::string& capname) {
        rep.cap_notes.push_back(what + " skipped: order " + std::to_string(g.order) +
                                " exceeds " + capname + " " + std::to_string(cap));
    };

    if (g.order <= caps.traversal_cap) {
        auto [conn, diam] = connectivity_and_diameter(g);
        rep.connected = conn;
        rep.diameter = diam;
        rep.girth = girth_exact(g);
        rep.triangulated = is_triangulated_exact(g);
        rep.eulerian = is_eulerian_exact(g);
        rep.domination_number = domination_number_exact(g);
    } else {
        auto [ecc, seen] = bfs_eccentricity(g.adj, g.order, 0);
        (void)ecc;
        rep.connected = seen == g.order;
        rep.eulerian = rep.connected &&
                       std::all_of(g.degrees.begin(), g.degrees.end(),
                                   [](int d) { return d % 2 == 0; });
        note("diameter", caps.traversal_cap, "traversal cap");
        note("girth", caps.traversal_cap, "traversal cap");
        note("triangulated", caps.traversal_cap, "traversal cap");
        note("domination number", caps.traversal_cap, "traversal cap");
    }

    if (g.order <= caps.edgeconn_cap)
        rep.edge_connectivity = edge_connectivity_exact(g);
    else
        note("edge connectivity", caps.edgeconn_cap, "edge connectivity cap");

    if (g.order <= caps.clique_order_cap) {
        CliqueCensus census = maximal_clique_census(g, caps.clique_budget);
        if (census.complete) {
            rep.clique_number = census.clique_number;
            rep.clique_census = census.count_by_size;
        } else {
            rep.cap_notes.push_back("maximal clique census skipped: enumeration passed budget " +
                                    std::to_string(caps.clique_budget));
        }
        rep.independence_number = independence_number_exact(g);
    } else {
        note("maximal clique census", caps.clique_order_cap, "clique order cap");
        note("independence number", caps.clique_order_cap, "clique order cap");
    }

    rep.chromatic = chromatic_number_exact(g, caps);
    if (!rep.chromatic.exact)
        note("exact chromatic number (bounds reported)", caps.chromatic_cap, "chromatic cap");

    if (g.order <= caps.updom_cap)
        rep.upper_domination = upper_domination_exact(g);
    else
        note("upper domination", caps.updom_cap, "upper domination cap");

    return rep;
}

} // namespace dsg
