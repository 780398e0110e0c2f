#include "spherand/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "spherand/errors.hpp"

namespace spherand {

void Graph::check_vertex(int v) const {
    if (!has_vertex(v)) throw input_error("unknown vertex " + std::to_string(v));
}

void Graph::add_vertex(int v) {
    verts_.insert(v);
    if (v >= next_id_) next_id_ = v + 1;
}

void Graph::add_vertex(int v, const std::string& label) {
    add_vertex(v);
    labels_[v] = label;
}

void Graph::add_edge(int a, int b) {
    add_vertex(a);
    add_vertex(b);
    if (a > b) std::swap(a, b);
    edges_.insert({a, b});
}

bool Graph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return edges_.count({a, b}) != 0;
}

bool Graph::has_any_loop() const {
    for (const auto& [a, b] : edges_)
        if (a == b) return true;
    return false;
}

std::vector<int> Graph::vertices() const {
    return std::vector<int>(verts_.begin(), verts_.end());
}

std::vector<int> Graph::link(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == v && b != v) out.push_back(b);
        else if (b == v && a != v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(int v) const { return static_cast<int>(link(v).size()); }

Graph Graph::without_vertex(int v) const {
    check_vertex(v);
    return without_vertices({v});
}

Graph Graph::without_vertices(const std::vector<int>& vs) const {
    std::set<int> gone(vs.begin(), vs.end());
    Graph out;
    out.next_id_ = next_id_;
    for (int v : verts_)
        if (!gone.count(v)) out.add_vertex(v);
    for (const auto& [a, b] : edges_)
        if (!gone.count(a) && !gone.count(b)) out.add_edge(a, b);
    for (const auto& [v, l] : labels_)
        if (!gone.count(v)) out.labels_[v] = l;
    out.next_id_ = std::max(out.next_id_, next_id_);
    return out;
}

Graph Graph::without_star(int v) const {
    check_vertex(v);
    std::vector<int> gone = link(v);
    gone.push_back(v);
    return without_vertices(gone);
}

int Graph::fresh_vertex_id() const { return next_id_; }

std::string Graph::label(int v) const {
    auto it = labels_.find(v);
    return it != labels_.end() ? it->second : std::to_string(v);
}

void Graph::set_label(int v, const std::string& label) {
    check_vertex(v);
    labels_[v] = label;
}

bool dominates(const Graph& g, int v, int w) {
    if (!g.has_vertex(v)) throw input_error("unknown vertex " + std::to_string(v));
    if (!g.has_vertex(w)) throw input_error("unknown vertex " + std::to_string(w));
    if (v == w) throw input_error("dominates requires distinct vertices");
    // lk(w) ∪ {w,v} ⊆ lk(v) ∪ {v,w} reduces to lk(w) \ {v} ⊆ lk(v) ∪ {w}.
    for (int u : g.link(w)) {
        if (u == v || u == w) continue;
        if (!g.has_edge(u, v)) return false;
    }
    return true;
}

Graph subdivide_edge_x4(const Graph& g, int a, int b) {
    if (a == b) throw not_applicable("cannot subdivide a loop");
    if (!g.has_edge(a, b))
        throw not_applicable("no edge {" + g.label(a) + "," + g.label(b) + "}");
    Graph out = g;
    int f = out.fresh_vertex_id();
    Graph trimmed;
    // rebuild without the edge, keeping everything else
    for (int v : out.vertices()) trimmed.add_vertex(v, out.label(v));
    for (const auto& [x, y] : out.edges())
        if (!((x == std::min(a, b)) && (y == std::max(a, b)))) trimmed.add_edge(x, y);
    trimmed.add_edge(a, f);
    trimmed.add_edge(f, f + 1);
    trimmed.add_edge(f + 1, f + 2);
    trimmed.add_edge(f + 2, b);
    return trimmed;
}

Graph structure_move_deg2(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw input_error("unknown vertex " + std::to_string(v));
    std::vector<int> nb = g.link(v);
    if (nb.size() != 2) throw not_applicable("vertex is not of degree 2");
    int v1 = nb[0], v2 = nb[1];
    if (g.has_edge(v1, v2)) throw not_applicable("neighbors are adjacent");
    if (g.has_loop(v) || g.has_loop(v1) || g.has_loop(v2))
        throw not_applicable("loop on v or its neighbors");
    std::vector<int> w1, w2;
    for (int u : g.link(v1))
        if (u != v) w1.push_back(u);
    for (int u : g.link(v2))
        if (u != v) w2.push_back(u);
    Graph h = g.without_vertices({v, v1, v2});
    for (int a : w1)
        for (int b : w2) h.add_edge(a, b);  // a == b makes a loop
    return h;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    std::set<int> seen;
    for (int start : g.vertices()) {
        if (seen.count(start)) continue;
        std::set<int> comp;
        std::queue<int> q;
        q.push(start);
        comp.insert(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.link(v))
                if (comp.insert(u).second) q.push(u);
        }
        seen.insert(comp.begin(), comp.end());
        Graph c;
        for (int v : comp) c.add_vertex(v, g.label(v));
        for (const auto& [a, b] : g.edges())
            if (comp.count(a) && comp.count(b)) c.add_edge(a, b);
        out.push_back(std::move(c));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.empty() || connected_components(g).size() == 1;
}

std::optional<int> as_path(const Graph& g) {
    std::size_t n = g.vertex_count();
    if (n == 0 || g.has_any_loop() || !is_connected(g)) return std::nullopt;
    if (n == 1) return 0;
    if (g.edge_count() != n - 1) return std::nullopt;
    int deg1 = 0;
    for (int v : g.vertices()) {
        int d = g.degree(v);
        if (d > 2) return std::nullopt;
        if (d == 1) ++deg1;
    }
    if (deg1 != 2) return std::nullopt;
    return static_cast<int>(n) - 1;
}

std::optional<int> as_cycle(const Graph& g) {
    std::size_t n = g.vertex_count();
    if (n < 3 || g.has_any_loop() || g.edge_count() != n) return std::nullopt;
    for (int v : g.vertices())
        if (g.degree(v) != 2) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;
    return static_cast<int>(n);
}

bool is_forest(const Graph& g) {
    if (g.has_any_loop()) return false;
    return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

bool is_bipartite(const Graph& g) {
    std::map<int, int> color;
    for (int start : g.vertices()) {
        if (color.count(start)) continue;
        color[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (g.has_loop(v)) return false;
            for (int u : g.link(v)) {
                auto it = color.find(u);
                if (it == color.end()) {
                    color[u] = 1 - color[v];
                    q.push(u);
                } else if (it->second == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out = a;
    int base = out.fresh_vertex_id();
    std::map<int, int> remap;
    int k = 0;
    for (int v : b.vertices()) remap[v] = base + k++;
    for (int v : b.vertices()) out.add_vertex(remap[v], b.label(v));
    for (const auto& [x, y] : b.edges()) out.add_edge(remap[x], remap[y]);
    return out;
}

Graph wedge_graphs(const Graph& a, int v1, const Graph& b, int v2) {
    if (!a.has_vertex(v1) || !b.has_vertex(v2))
        throw input_error("wedge basepoint missing");
    Graph out = a;
    int base = out.fresh_vertex_id();
    std::map<int, int> remap;
    int k = 0;
    for (int v : b.vertices()) remap[v] = (v == v2) ? v1 : base + k++;
    for (int v : b.vertices())
        if (v != v2) out.add_vertex(remap[v], b.label(v));
    for (const auto& [x, y] : b.edges()) out.add_edge(remap[x], remap[y]);
    return out;
}

Graph path_graph(int edges) {
    Graph g;
    g.add_vertex(0);
    for (int i = 0; i < edges; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw input_error("cycle graph needs n >= 3");
    Graph g;
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

namespace {

// Shared machinery for canonical labeling and isomorphism testing: color
// refinement (1-WL) over an adjacency-matrix view with stable vertex order.
struct DenseGraph {
    int n = 0;
    std::vector<int> ids;                 // index -> original id
    std::vector<std::vector<bool>> adj;   // includes loops on the diagonal

    explicit DenseGraph(const Graph& g) {
        ids = g.vertices();
        n = static_cast<int>(ids.size());
        adj.assign(n, std::vector<bool>(n, false));
        std::map<int, int> index;
        for (int i = 0; i < n; ++i) index[ids[i]] = i;
        for (const auto& [a, b] : g.edges()) {
            int i = index[a], j = index[b];
            adj[i][j] = adj[j][i] = true;
        }
    }
};

// Refine colors to the 1-WL fixpoint. Colors are dense ints; the relabeling
// is isomorphism-invariant (new color = rank of (old color, neighbor multiset)).
std::vector<int> refine_colors(const DenseGraph& g, std::vector<int> color) {
    const int n = g.n;
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            s.push_back(g.adj[v][v] ? 1 : 0);
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (u != v && g.adj[v][u]) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

std::vector<int> initial_colors(const DenseGraph& g) {
    return refine_colors(g, std::vector<int>(g.n, 0));
}

std::string adjacency_string(const DenseGraph& g, const std::vector<int>& order) {
    std::string s;
    s.reserve(static_cast<std::size_t>(g.n) * (g.n + 1) / 2);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j <= i; ++j)
            s.push_back(g.adj[order[i]][order[j]] ? '1' : '0');
    return s;
}

void canon_search(const DenseGraph& g, const std::vector<int>& color,
                  std::string& best) {
    const int n = g.n;
    // cells ordered by color value; find first non-singleton
    std::vector<std::vector<int>> cells;
    {
        int maxc = 0;
        for (int c : color) maxc = std::max(maxc, c);
        cells.assign(maxc + 1, {});
        for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    }
    int target = -1;
    for (std::size_t c = 0; c < cells.size(); ++c)
        if (cells[c].size() > 1) {
            target = static_cast<int>(c);
            break;
        }
    if (target < 0) {
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[color[v]] = v;
        std::string s = adjacency_string(g, order);
        if (best.empty() || s < best) best = std::move(s);
        return;
    }
    for (int v : cells[target]) {
        std::vector<int> next = color;
        // individualize v: give it a fresh color slot below its cell
        for (int u = 0; u < n; ++u)
            if (next[u] >= next[v]) ++next[u];
        --next[v];
        canon_search(g, refine_colors(g, next), best);
    }
}

}  // namespace

std::string canonical_string(const Graph& g) {
    DenseGraph d(g);
    if (d.n == 0) return "0:";
    std::string best;
    canon_search(d, initial_colors(d), best);
    return std::to_string(d.n) + ":" + best;
}

namespace {

bool iso_backtrack(const DenseGraph& a, const DenseGraph& b,
                   const std::vector<int>& ca, const std::vector<int>& cb,
                   std::vector<int>& map_ab, std::vector<bool>& used,
                   const std::vector<int>& order, std::size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < b.n; ++w) {
        if (used[w] || cb[w] != ca[v]) continue;
        if (a.adj[v][v] != b.adj[w][w]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < pos && ok; ++k) {
            int u = order[k];
            if (a.adj[v][u] != b.adj[w][map_ab[u]]) ok = false;
        }
        if (!ok) continue;
        map_ab[v] = w;
        used[w] = true;
        if (iso_backtrack(a, b, ca, cb, map_ab, used, order, pos + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

std::map<int, std::string> unique_vertex_names(const Graph& g) {
    std::map<std::string, int> freq;
    for (int v : g.vertices()) ++freq[g.label(v)];
    std::map<int, std::string> out;
    for (int v : g.vertices()) {
        const std::string l = g.label(v);
        out[v] = freq[l] > 1 ? l + "#" + std::to_string(v) : l;
    }
    return out;
}

bool is_isomorphic(const Graph& ga, const Graph& gb) {
    if (ga.vertex_count() != gb.vertex_count() || ga.edge_count() != gb.edge_count())
        return false;
    DenseGraph a(ga), b(gb);
    if (a.n == 0) return true;
    std::vector<int> ca = initial_colors(a), cb = initial_colors(b);
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
    // match most-constrained vertices first: rare colors, then high degree
    std::vector<int> count(a.n + 1, 0);
    for (int c : ca) ++count[c];
    std::vector<int> order(a.n);
    for (int i = 0; i < a.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (count[ca[x]] != count[ca[y]]) return count[ca[x]] < count[ca[y]];
        return ca[x] < ca[y];
    });
    std::vector<int> map_ab(a.n, -1);
    std::vector<bool> used(b.n, false);
    return iso_backtrack(a, b, ca, cb, map_ab, used, order, 0);
}

}  // namespace spherand
