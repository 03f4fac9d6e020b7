#ifndef ANTIFLAG_HYPERBOLIC_HPP
#define ANTIFLAG_HYPERBOLIC_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "antiflag/antiflag_space.hpp"
#include "antiflag/relation_graph.hpp"

namespace antiflag {

/// PG(2n-1,2) carrying the split quadratic form Q(x,x*) = x*(x). A point is
/// a nonzero 2n-bit code: the low n bits are the vector part x, the high n
/// bits the functional part x*. Q(v) = 0 marks v singular.
class HyperbolicSpace {
public:
    explicit HyperbolicSpace(int n);  // 3 <= n <= 12

    int n() const { return n_; }
    std::uint32_t num_nonzero() const { return (std::uint32_t{1} << (2 * n_)) - 1; }

    std::uint32_t vec_part(std::uint32_t v) const { return v & ((std::uint32_t{1} << n_) - 1); }
    std::uint32_t fun_part(std::uint32_t v) const { return v >> n_; }

    int q_value(std::uint32_t v) const {
        return std::popcount(vec_part(v) & fun_part(v)) & 1;
    }
    /// The polar form F(u,v) = Q(u+v) + Q(u) + Q(v) of Q over GF(2).
    int bilinear(std::uint32_t u, std::uint32_t v) const {
        return q_value(u ^ v) ^ q_value(u) ^ q_value(v);
    }
    bool is_singular(std::uint32_t v) const { return q_value(v) == 0; }

    const std::vector<std::uint32_t>& singular() const { return singular_; }
    const std::vector<std::uint32_t>& nonsingular() const { return nonsingular_; }

    /// Position of a non-singular code in nonsingular(); throws if singular.
    int nonsingular_index(std::uint32_t code) const;

    /// The anti-flag of a non-singular point: its vector part spans the
    /// point, its functional part cuts out the hyperplane. Q = 1 guarantees
    /// both parts are nonzero and the pair non-incident. Throws on singular
    /// input.
    AntiFlagId to_antiflag(std::uint32_t ns_code, const AntiFlagSpace& afs) const;
    /// Inverse direction: concatenate the point's coordinates and the
    /// hyperplane's coefficients back into a code.
    std::uint32_t from_antiflag(AntiFlagId a, const AntiFlagSpace& afs) const;

private:
    int n_;
    std::vector<std::uint32_t> singular_, nonsingular_;
};

/// All lines {s, t, s^t} of PG(2n-1,2) whose three points are singular,
/// as ascending code triples in lexicographic order.
std::vector<std::array<std::uint32_t, 3>> fully_singular_lines(const HyperbolicSpace& hs);

/// The relation-1 graph with vertex v standing for hs.nonsingular()[v],
/// adjacency pulled back through the anti-flag correspondence.
RelGraph nonsingular_graph1(const HyperbolicSpace& hs, const AntiFlagSpace& afs);

/// Output of the graph-only polar-space reconstruction: abstract points are
/// parallel classes of 2-element cocliques, abstract lines are class
/// triples realized by three pairwise-intersecting member cocliques.
struct ReconstructedGeometry {
    std::vector<std::pair<int, int>> cocliques;  // all 2-cocliques (a<b), lex order
    std::vector<int> coclique_class;             // class index per coclique
    int num_classes = 0;
    std::vector<std::array<int, 3>> lines;       // ascending class triples, lex order
};

/// Graph-side machinery for the reconstruction: totally non-singular lines
/// recovered as 3-cliques with even outside profiles, and the two parallelism
/// tests on 2-element cocliques. Everything is computed from the graph alone.
class PolarReconstruction {
public:
    explicit PolarReconstruction(const RelGraph& graph1);

    const std::vector<std::array<int, 3>>& tns_lines() const { return lines_; }
    const std::vector<std::pair<int, int>>& cocliques() const { return cocliques_; }
    /// Index into cocliques() or -1 when the two vertices are adjacent.
    int coclique_index(int a, int b) const;

    /// First-type parallelism: two distinct recovered lines, each meeting
    /// both cocliques, meet each other outside the union of the cocliques.
    bool parallel_first_type(int ci, int cj) const;
    /// Second-type parallelism: the four adjacency rows XOR to zero (every
    /// vertex sees an even number of the four members) but no member of one
    /// coclique is adjacent to a member of the other. Mutually exclusive
    /// with the first type; together the two types form the parallelism
    /// whose classes reconstruct() returns.
    bool parallel_second_type(int ci, int cj) const;

    /// Classes of the parallelism relation (first- or second-type, which
    /// together are detected by equal row-XOR signatures); lines from
    /// 3-element cocliques whose three sub-pairs land in distinct classes.
    ReconstructedGeometry reconstruct() const;

private:
    // Even-profile test: the XOR of the four members' adjacency rows is
    // zero. Holds exactly when the cocliques are parallel (either type).
    bool same_parallel_signature(int ci, int cj) const;

    const RelGraph* g_;
    std::vector<std::array<int, 3>> lines_;
    std::vector<DynBitset> lines_thru_;   // vertex -> line-index set
    std::vector<std::pair<int, int>> cocliques_;
    std::vector<int> coclique_idx_;       // nv*nv lookup, -1 = adjacent
};

/// Convenience wrappers over PolarReconstruction.
std::vector<std::array<int, 3>> tns_lines_from_graph(const RelGraph& graph1);
ReconstructedGeometry reconstruct_polar_space(const RelGraph& graph1);

}  // namespace antiflag

#endif
