#ifndef ANTIFLAG_RELATION_GRAPH_HPP
#define ANTIFLAG_RELATION_GRAPH_HPP

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "antiflag/antiflag_space.hpp"
#include "antiflag/bitset.hpp"

namespace antiflag {

/// Simple graph on anti-flag ids (or any 0..n-1 vertex set) with dense
/// bitset adjacency rows. Immutable once built; queries are word-parallel.
class RelGraph {
public:
    RelGraph(int relation, int num_vertices);

    int relation() const { return relation_; }
    int num_vertices() const { return nv_; }

    const DynBitset& row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    bool adjacent(int a, int b) const { return rows_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
    void add_edge(int a, int b);

    int degree(int v) const { return static_cast<int>(row(v).count()); }
    long long num_edges() const;
    /// All edges as (min,max) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;
    /// True iff all degrees equal; the common degree goes to *deg if given.
    bool is_regular(int* deg = nullptr) const;

private:
    int relation_;
    int nv_;
    std::vector<DynBitset> rows_;
};

/// Builds the graph of one relation by classifying all pairs.
RelGraph build_graph(int relation, const AntiFlagSpace& afs);

/// One pass over all pairs filling all four graphs; graphs[i-1] is the
/// relation-i graph.
std::array<RelGraph, 4> build_all_graphs(const AntiFlagSpace& afs);

/// Vertices related (in g) to every member of xs. Members of xs are never
/// included (adjacency is irreflexive). Empty xs returns the full vertex
/// set: "related to every member of the empty set" is vacuously true, and
/// downstream double-perp computations rely on this reading.
DynBitset common_related(const RelGraph& g, std::span<const AntiFlagId> xs);
DynBitset common_related(const RelGraph& g, AntiFlagId a, AntiFlagId b);
/// Same, with the member set given as a bitset.
DynBitset common_related(const RelGraph& g, const DynBitset& xs);

enum class CocliqueShape { linear, dually_linear, neither };

/// Shape of a coclique C (|C| >= 2) of the relation-1 graph:
///   linear        - one common hyperplane, all points on one line;
///   dually_linear - one common point, hyperplane functionals on one dual line.
/// Throws std::invalid_argument if C is not a coclique (some pair 1-related)
/// or has fewer than two members.
CocliqueShape classify_coclique_shape(const AntiFlagSpace& afs,
                                      std::span<const AntiFlagId> c);

/// For a 4-element coclique C of graph1: true iff every vertex outside C has
/// 0, 1, 3 or 4 neighbors inside C (never exactly 2). Throws on |C| != 4 or
/// non-coclique input.
bool coclique_profile_admissible(const RelGraph& graph1, std::span<const AntiFlagId> c);

/// All 4-element cocliques of graph1 passing coclique_profile_admissible,
/// as sorted quadruples in lexicographic order. Enumeration walks common
/// non-neighborhoods of non-adjacent pairs, never the full 4-subset space.
std::vector<std::array<AntiFlagId, 4>> admissible_cocliques(const RelGraph& graph1);

/// All maximal cliques (pivoted Bron-Kerbosch), each sorted ascending.
std::vector<std::vector<int>> maximal_cliques(const RelGraph& g);

}  // namespace antiflag

#endif
