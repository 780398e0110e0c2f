#ifndef SPHERAND_COMPLEX_HPP
#define SPHERAND_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spherand/graph.hpp"

namespace spherand {

/// Finite abstract simplicial complex stored by its facets (maximal
/// simplices). The empty simplex is always present; the empty complex
/// (no vertices, facets = {∅}) is valid and denotes S^{-1}. Vertices are
/// named by strings; the global vertex order used for boundary signs is
/// the sorted name order.
class SimplicialComplex {
public:
    SimplicialComplex() : facets_{{}} {}  // S^{-1}

    static SimplicialComplex empty_complex() { return SimplicialComplex(); }
    static SimplicialComplex point(const std::string& name);
    static SimplicialComplex from_facets(
        const std::vector<std::vector<std::string>>& facets);

    std::size_t vertex_count() const { return names_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    int dim() const;  // -1 for the empty complex

    /// Facets in index form (sorted vertex indices, lexicographic order).
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    std::vector<std::vector<std::string>> facet_names() const;

    bool has_vertex(const std::string& name) const;
    bool contains(const std::vector<std::string>& simplex) const;

    /// All simplices as bitmasks over vertex indices, grouped by dimension:
    /// element k lists the (k-1)-simplices, so element 0 is {0} (the empty
    /// simplex). Masks within a dimension are sorted. Requires <= 64 vertices.
    std::vector<std::vector<std::uint64_t>> simplices_by_dim() const;

    bool operator==(const SimplicialComplex& o) const {
        return names_ == o.names_ && facets_ == o.facets_;
    }

private:
    std::vector<std::string> names_;        // sorted unique
    std::vector<std::vector<int>> facets_;  // antichain; {{}} when empty complex
};

/// Complex whose simplices are the independent sets of g, looped vertices
/// removed first. Facets are the maximal independent sets.
SimplicialComplex independence_complex(const Graph& g);

/// Join: facets are pairwise unions. Name clashes in k2 are resolved by
/// deterministic suffixing ("x" -> "x_2", "x_3", ...); the applied renames
/// are appended to *renames when given.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2,
                       std::map<std::string, std::string>* renames = nullptr);
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex);
SimplicialComplex suspension(const SimplicialComplex& k);

/// One-point union identifying v1 with v2 (v1's name survives).
SimplicialComplex wedge_at(const SimplicialComplex& k1, const std::string& v1,
                           const SimplicialComplex& k2, const std::string& v2,
                           std::map<std::string, std::string>* renames = nullptr);

/// f[0] = 1 for the empty simplex, f[d+1] = number of d-simplices.
std::vector<long long> f_vector(const SimplicialComplex& k);
long long euler_characteristic_reduced(const SimplicialComplex& k);
bool is_flag(const SimplicialComplex& k);

/// K(G,v) for a vertex v whose link {v_1,...,v_n} is independent and loop-free:
/// from I_{G-st(v)} delete every simplex s with s ∩ W_i != ∅ for all i,
/// where W_i = lk(v_i) - v. Contract: I_G ≃ Σ K(G,v); the returned count is
/// that suspension count (always 1).
std::pair<SimplicialComplex, int> structure_complex(const Graph& g, int v);

}  // namespace spherand

#endif
