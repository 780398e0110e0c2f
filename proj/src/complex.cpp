#include "spherand/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "spherand/errors.hpp"

namespace spherand {

namespace {

// Maximal cliques of the graph given by adjacency bitmasks, Bron-Kerbosch
// with pivoting. n <= 64.
void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r,
                   std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint64_t m = px; m;) {
        int u = __builtin_ctzll(m);
        m &= m - 1;
        int cnt = __builtin_popcountll(p & adj[u]);
        if (cnt > best) {
            best = cnt;
            pivot = u;
        }
    }
    std::uint64_t cand = p & ~adj[pivot];
    while (cand) {
        int v = __builtin_ctzll(cand);
        std::uint64_t vb = 1ULL << v;
        cand &= cand - 1;
        bron_kerbosch(adj, r | vb, p & adj[v], x & adj[v], out);
        p &= ~vb;
        x |= vb;
    }
}

std::vector<int> mask_to_indices(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(__builtin_ctzll(m));
        m &= m - 1;
    }
    return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::point(const std::string& name) {
    return from_facets({{name}});
}

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& facets) {
    SimplicialComplex k;
    std::vector<std::string> names;
    for (const auto& f : facets) names.insert(names.end(), f.begin(), f.end());
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    k.names_ = names;

    std::vector<std::vector<int>> idx;
    for (const auto& f : facets) {
        std::vector<int> s;
        for (const auto& v : f) {
            int i = static_cast<int>(
                std::lower_bound(names.begin(), names.end(), v) - names.begin());
            s.push_back(i);
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        idx.push_back(std::move(s));
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    // drop faces contained in other facets
    std::vector<std::vector<int>> maximal;
    for (const auto& a : idx) {
        bool contained = false;
        for (const auto& b : idx) {
            if (&a == &b || a.size() >= b.size()) continue;
            if (std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(a);
    }
    if (maximal.empty()) maximal.push_back({});
    k.facets_ = std::move(maximal);
    return k;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<std::vector<std::string>> SimplicialComplex::facet_names() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : facets_) {
        std::vector<std::string> s;
        for (int i : f) s.push_back(names_[i]);
        out.push_back(std::move(s));
    }
    return out;
}

bool SimplicialComplex::has_vertex(const std::string& name) const {
    return std::binary_search(names_.begin(), names_.end(), name);
}

bool SimplicialComplex::contains(const std::vector<std::string>& simplex) const {
    std::vector<int> s;
    for (const auto& v : simplex) {
        auto it = std::lower_bound(names_.begin(), names_.end(), v);
        if (it == names_.end() || *it != v) return false;
        s.push_back(static_cast<int>(it - names_.begin()));
    }
    std::sort(s.begin(), s.end());
    for (const auto& f : facets_)
        if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
    return false;
}

std::vector<std::vector<std::uint64_t>> SimplicialComplex::simplices_by_dim()
    const {
    if (names_.size() > 64)
        throw internal_error("simplex enumeration capped at 64 vertices, got " +
                             std::to_string(names_.size()));
    int d = dim();
    std::vector<std::vector<std::uint64_t>> by_dim(d + 2);
    std::vector<std::unordered_set<std::uint64_t>> seen(d + 2);
    for (const auto& f : facets_) {
        std::uint64_t m = 0;
        for (int i : f) m |= 1ULL << i;
        seen[f.size()].insert(m);
    }
    // faces of each (k)-level feed the (k-1)-level
    for (int k = d + 1; k >= 1; --k) {
        for (std::uint64_t m : seen[k]) {
            for (std::uint64_t rest = m; rest;) {
                int b = __builtin_ctzll(rest);
                rest &= rest - 1;
                seen[k - 1].insert(m & ~(1ULL << b));
            }
        }
    }
    for (int k = 0; k <= d + 1; ++k) {
        by_dim[k].assign(seen[k].begin(), seen[k].end());
        std::sort(by_dim[k].begin(), by_dim[k].end());
    }
    if (by_dim[0].empty()) by_dim[0].push_back(0);  // the empty simplex
    return by_dim;
}

SimplicialComplex independence_complex(const Graph& g) {
    Graph h = g;
    for (int v : g.vertices())
        if (g.has_loop(v)) h = h.without_vertex(v);
    std::vector<int> vs = h.vertices();
    const int n = static_cast<int>(vs.size());
    if (n == 0) return SimplicialComplex::empty_complex();
    if (n > 64)
        throw internal_error("independence complex capped at 64 vertices, got " +
                             std::to_string(n));
    // names; disambiguate duplicate labels with the vertex id
    std::vector<std::string> names(n);
    {
        std::map<std::string, int> freq;
        for (int v : vs) ++freq[h.label(v)];
        for (int i = 0; i < n; ++i) {
            const std::string l = h.label(vs[i]);
            names[i] = freq[l] > 1 ? l + "#" + std::to_string(vs[i]) : l;
        }
    }
    // complement adjacency: maximal independent sets = maximal cliques there
    std::vector<std::uint64_t> nonadj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !h.has_edge(vs[i], vs[j])) nonadj[i] |= 1ULL << j;
    std::vector<std::uint64_t> cliques;
    bron_kerbosch(nonadj, 0, n >= 64 ? ~0ULL : ((1ULL << n) - 1), 0, cliques);
    std::vector<std::vector<std::string>> facets;
    for (std::uint64_t m : cliques) {
        std::vector<std::string> f;
        for (int i : mask_to_indices(m)) f.push_back(names[i]);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

namespace {

// Deterministic clash-avoiding rename of k2's vertices against `taken`.
std::map<std::string, std::string> rename_against(
    const std::vector<std::string>& taken_list,
    const std::vector<std::string>& incoming) {
    std::unordered_set<std::string> taken(taken_list.begin(), taken_list.end());
    std::map<std::string, std::string> out;
    for (const auto& name : incoming) {
        std::string candidate = name;
        int k = 2;
        while (taken.count(candidate))
            candidate = name + "_" + std::to_string(k++);
        out[name] = candidate;
        taken.insert(candidate);
    }
    return out;
}

}  // namespace

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2,
                       std::map<std::string, std::string>* renames) {
    auto ren = rename_against(k1.vertex_names(), k2.vertex_names());
    if (renames) *renames = ren;
    std::vector<std::vector<std::string>> facets;
    for (const auto& f1 : k1.facet_names())
        for (const auto& f2 : k2.facet_names()) {
            std::vector<std::string> f = f1;
            for (const auto& v : f2) f.push_back(ren[v]);
            facets.push_back(std::move(f));
        }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex) {
    return join(k, SimplicialComplex::point(apex));
}

SimplicialComplex suspension(const SimplicialComplex& k) {
    return join(k, SimplicialComplex::from_facets({{"s+"}, {"s-"}}));
}

SimplicialComplex wedge_at(const SimplicialComplex& k1, const std::string& v1,
                           const SimplicialComplex& k2, const std::string& v2,
                           std::map<std::string, std::string>* renames) {
    if (!k1.has_vertex(v1) || !k2.has_vertex(v2))
        throw input_error("wedge basepoint missing");
    std::vector<std::string> incoming;
    for (const auto& v : k2.vertex_names())
        if (v != v2) incoming.push_back(v);
    auto ren = rename_against(k1.vertex_names(), incoming);
    ren[v2] = v1;
    if (renames) *renames = ren;
    std::vector<std::vector<std::string>> facets = k1.facet_names();
    for (const auto& f2 : k2.facet_names()) {
        std::vector<std::string> f;
        for (const auto& v : f2) f.push_back(ren[v]);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(facets);
}

std::vector<long long> f_vector(const SimplicialComplex& k) {
    auto by_dim = k.simplices_by_dim();
    std::vector<long long> f;
    for (const auto& level : by_dim) f.push_back(static_cast<long long>(level.size()));
    return f;
}

long long euler_characteristic_reduced(const SimplicialComplex& k) {
    auto f = f_vector(k);
    long long chi = 0;
    for (std::size_t i = 1; i < f.size(); ++i)
        chi += ((i - 1) % 2 == 0) ? f[i] : -f[i];
    return chi - 1;
}

bool is_flag(const SimplicialComplex& k) {
    const int n = static_cast<int>(k.vertex_count());
    if (n == 0) return true;
    if (n > 64) throw internal_error("is_flag capped at 64 vertices");
    // adjacency of the 1-skeleton
    std::vector<std::uint64_t> adj(n, 0);
    for (const auto& f : k.facets())
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                adj[f[i]] |= 1ULL << f[j];
                adj[f[j]] |= 1ULL << f[i];
            }
    std::vector<std::uint64_t> cliques;
    bron_kerbosch(adj, 0, n >= 64 ? ~0ULL : ((1ULL << n) - 1), 0, cliques);
    // every maximal clique of the skeleton must be a face
    for (std::uint64_t m : cliques) {
        bool inside = false;
        for (const auto& f : k.facets()) {
            std::uint64_t fm = 0;
            for (int i : f) fm |= 1ULL << i;
            if ((m & fm) == m) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

std::pair<SimplicialComplex, int> structure_complex(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw input_error("unknown vertex " + std::to_string(v));
    std::vector<int> lk = g.link(v);
    if (g.has_loop(v)) throw not_applicable("loop on v");
    for (int u : lk)
        if (g.has_loop(u)) throw not_applicable("loop in lk(v)");
    for (std::size_t i = 0; i < lk.size(); ++i)
        for (std::size_t j = i + 1; j < lk.size(); ++j)
            if (g.has_edge(lk[i], lk[j]))
                throw not_applicable("lk(v) is not independent");

    Graph rest = g.without_star(v);
    SimplicialComplex base = independence_complex(rest);
    // W_i = lk(v_i) - v, as name sets of the base complex
    std::vector<std::vector<std::string>> w_sets;
    for (int vi : lk) {
        std::vector<std::string> w;
        for (int u : g.link(vi))
            if (u != v) w.push_back(rest.label(u));
        w_sets.push_back(std::move(w));
    }
    const auto& names = base.vertex_names();
    std::vector<std::uint64_t> w_masks;
    for (const auto& w : w_sets) {
        std::uint64_t m = 0;
        for (const auto& name : w) {
            auto it = std::lower_bound(names.begin(), names.end(), name);
            if (it != names.end() && *it == name)
                m |= 1ULL << (it - names.begin());
        }
        w_masks.push_back(m);
    }
    auto by_dim = base.simplices_by_dim();
    std::vector<std::vector<std::string>> kept;
    for (const auto& level : by_dim)
        for (std::uint64_t m : level) {
            bool meets_all = true;
            for (std::uint64_t wm : w_masks)
                if ((m & wm) == 0) {
                    meets_all = false;
                    break;
                }
            if (meets_all && !w_masks.empty()) continue;  // deleted simplex
            std::vector<std::string> f;
            for (int i : mask_to_indices(m)) f.push_back(names[i]);
            kept.push_back(std::move(f));
        }
    return {SimplicialComplex::from_facets(kept), 1};
}

}  // namespace spherand
