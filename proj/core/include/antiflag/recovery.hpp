#ifndef ANTIFLAG_RECOVERY_HPP
#define ANTIFLAG_RECOVERY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "antiflag/relation_graph.hpp"

namespace antiflag {

/// A recovery procedure observed data that matches no expected case; the
/// input graph cannot be the relation graph it was claimed to be.
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A recovery procedure detected that its input genuinely cannot separate
/// the relations (e.g. coinciding count values at q = 2). Distinct from
/// InconsistencyError: the input is fine, the method does not apply.
class RecoveryRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Symmetric relation tag for every unordered pair of distinct vertices.
class PairLabeling {
public:
    explicit PairLabeling(int num_vertices);

    int num_vertices() const { return n_; }
    Relation get(int a, int b) const { return tags_[index(a, b)]; }
    void set(int a, int b, Relation r) { tags_[index(a, b)] = r; }
    long long count(Relation r) const;

    /// Pairs where the labelings differ, up to `limit` of them.
    std::vector<std::pair<int, int>> diff(const PairLabeling& other, std::size_t limit = 8) const;

    friend bool operator==(const PairLabeling&, const PairLabeling&) = default;

private:
    std::size_t index(int a, int b) const;
    int n_;
    std::vector<Relation> tags_;
};

/// The true labeling, straight from classify.
PairLabeling ground_truth(const AntiFlagSpace& afs);

/// Relation recovery knowing only the relation-3 graph: adjacent pairs are
/// R3; the rest are labeled by the common-3-neighbor count (1 -> R1,
/// 0 -> R2, 2 -> R4). Any other count throws InconsistencyError.
PairLabeling recover_from_3(const RelGraph& graph3);

/// Decides 3-adjacency of (a, b) from the relation-2 graph alone, via the
/// double-perp operator D(x,y) = ({x,y}~2)~2: true iff every distinct pair
/// inside D(a,b) reproduces D(a,b) as its own double-perp. An empty inner
/// set makes the outer operator the full vertex set (see common_related).
bool decide_3adjacent_from_2(const RelGraph& graph2, AntiFlagId a, AntiFlagId b);

/// Relation recovery knowing only the relation-2 graph: adjacency gives R2,
/// the double-perp criterion gives R3, and common-neighbor counts in the
/// recovered relation-3 graph split R1 from R4.
PairLabeling recover_from_2(const RelGraph& graph2);

/// Relation recovery knowing only the relation-4 graph, via the containment
/// poset of the family of sets {a,b}~4 over non-adjacent pairs: minimal
/// non-maximal -> R1, minimal and maximal -> R2, maximal non-minimal -> R3.
/// Refuses (RecoveryRefused) if some set is empty -- that happens exactly
/// when the method's precondition (q >= 3 or n >= 4) fails -- and throws
/// InconsistencyError on a set that is neither minimal nor maximal.
PairLabeling recover_from_4(const RelGraph& graph4);

/// The q=2, n=3 variant: {a,b}~4 is nonempty exactly for R2 pairs there,
/// so R2 comes first, then R3 via the double-perp criterion on the
/// recovered relation-2 graph, and the remainder is R1.
PairLabeling recover_from_4_special(const RelGraph& graph4);

/// The four closed-form common-1-neighbor counts for a pair in relation
/// R2 / R3 / R4. R4 splits by the position of the line through the two
/// points: meeting the intersection of the two hyperplanes, or meeting them
/// in two distinct points (the latter impossible at q = 2).
enum class Common1Kind { r2, r3, r4_line_meets_both, r4_line_meets_separately };

long long formula_common1(Common1Kind kind, int q, int n);

/// Which R4 sub-case a ground-truth R4 pair falls in (oracle side only).
Common1Kind r4_subcase(const AntiFlagSpace& afs, AntiFlagId a, AntiFlagId b);

/// Relation recovery knowing only the relation-1 graph, by matching
/// common-1-neighbor counts of non-adjacent pairs against the closed forms.
/// Verifies first that the formula values are pairwise distinct at (q, n)
/// and refuses otherwise -- at q = 2 they always coincide.
PairLabeling recover_from_1_counts(const RelGraph& graph1, int q, int n);

/// R3 pair set recovered from the relation-1 graph alone (q >= 4): the
/// pairs covered by 4-element cocliques with admissible outside profiles.
/// Returned sorted, deduplicated.
std::vector<std::pair<AntiFlagId, AntiFlagId>> recover_3_from_1_cocliques(
    const RelGraph& graph1);

}  // namespace antiflag

#endif
