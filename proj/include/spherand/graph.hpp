#ifndef SPHERAND_GRAPH_HPP
#define SPHERAND_GRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace spherand {

/// Finite undirected graph. Loops are permitted (an edge {v,v}); multi-edges
/// collapse. Vertex ids are stable ints that are never reused after deletion;
/// each vertex may carry a string label used for reporting and traces.
class Graph {
public:
    Graph() = default;

    void add_vertex(int v);
    void add_vertex(int v, const std::string& label);
    // Adds missing endpoints. A pair {v,v} is a loop.
    void add_edge(int a, int b);

    bool has_vertex(int v) const { return verts_.count(v) != 0; }
    bool has_edge(int a, int b) const;
    bool has_loop(int v) const { return has_edge(v, v); }
    bool has_any_loop() const;

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return verts_.empty(); }

    std::vector<int> vertices() const;
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

    // Neighbors of v excluding v itself, even when v has a loop.
    std::vector<int> link(int v) const;
    // |link(v)|; a loop does not add to the degree.
    int degree(int v) const;

    Graph without_vertex(int v) const;
    Graph without_vertices(const std::vector<int>& vs) const;
    // Removes v and all its neighbors (the closed star).
    Graph without_star(int v) const;

    // Smallest id not present (and above any id ever used), for subdivision
    // vertices and other fresh insertions.
    int fresh_vertex_id() const;

    std::string label(int v) const;  // stored label or decimal id
    void set_label(int v, const std::string& label);

    bool operator==(const Graph& o) const {
        return verts_ == o.verts_ && edges_ == o.edges_;
    }

private:
    void check_vertex(int v) const;

    std::set<int> verts_;
    std::set<std::pair<int, int>> edges_;  // normalized a <= b
    std::map<int, std::string> labels_;
    int next_id_ = 0;
};

// lk(w) ∪ {w,v} ⊆ lk(v) ∪ {v,w}; requires v != w, both present.
bool dominates(const Graph& g, int v, int w);

// Replaces edge {a,b} by a path of length 4 through three fresh vertices.
// Rejects loops and missing edges.
Graph subdivide_edge_x4(const Graph& g, int a, int b);

// Degree-2 structure move: for v of degree 2 with distinct non-adjacent
// neighbors v1, v2 and no loops on v, v1, v2, returns H = (g - st(v)) with
// every vertex of W1 = lk(v1)-v joined to every vertex of W2 = lk(v2)-v; a
// vertex in W1 ∩ W2 receives a loop. Contract: I_g ≃ Σ I_H.
Graph structure_move_deg2(const Graph& g, int v);

std::vector<Graph> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Path classification: returns the number of edges when g is a path graph
// (single vertex counts as the 0-path), otherwise nullopt.
std::optional<int> as_path(const Graph& g);
// Returns n when g is the cycle graph C_n (n >= 3), otherwise nullopt.
std::optional<int> as_cycle(const Graph& g);

bool is_forest(const Graph& g);
bool is_bipartite(const Graph& g);

// Disjoint union; the vertices of b are shifted to fresh ids when they clash.
Graph disjoint_union(const Graph& a, const Graph& b);
// One-point union identifying v1 (in a) with v2 (in b).
Graph wedge_graphs(const Graph& a, int v1, const Graph& b, int v2);

// Convenience builders used across tests and the engine.
Graph path_graph(int edges);   // L_n: n+1 vertices 0..n
Graph cycle_graph(int n);      // C_n: vertices 0..n-1

// Canonical form: the lexicographically smallest adjacency bitstring over all
// vertex orderings, found by individualization-refinement. Two graphs are
// isomorphic iff their canonical strings are equal. Loops participate.
std::string canonical_string(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

// Per-vertex display names: the label, disambiguated with "#id" when several
// vertices share one. Complexes built from a graph use these names.
std::map<int, std::string> unique_vertex_names(const Graph& g);

}  // namespace spherand

#endif
