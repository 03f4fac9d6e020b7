#ifndef ANTIFLAG_GROUP_ACTION_HPP
#define ANTIFLAG_GROUP_ACTION_HPP

#include <random>
#include <vector>

#include "antiflag/antiflag_space.hpp"
#include "antiflag/relation_graph.hpp"

namespace antiflag {

/// x -> M * sigma^e(x) with sigma the frobenius of GF(q). Hyperplanes move
/// by the inverse-transpose so incidence is preserved; the inverse is fixed
/// at construction, which rejects singular matrices.
class SemilinearMap {
public:
    SemilinearMap(const Field& f, Mat m, int frob_power);

    const Mat& matrix() const { return mat_; }
    int frob_power() const { return frob_; }

    Vec apply_vector(const Field& f, const Vec& v) const;
    Vec apply_functional(const Field& f, const Vec& h) const;
    AntiFlagId apply(const AntiFlagSpace& afs, AntiFlagId a) const;

private:
    Mat mat_;
    Mat inv_transpose_;
    int frob_;
};

/// Semilinear generators plus, optionally, the duality transform.
struct GeneratorSet {
    std::vector<SemilinearMap> maps;
    bool include_duality = false;
};

/// Standard generating set of the semilinear group: an elementary
/// transvection matrix, a basis cycle, a primitive-scalar diagonal (q > 2),
/// and the frobenius (k > 1).
GeneratorSet gl_generators(const Field& f, int n, bool with_duality);

/// A uniformly sampled invertible matrix (rejection sampling).
Mat random_invertible(const Field& f, int n, std::mt19937_64& rng);

/// The permutation of anti-flag ids induced by a map / by duality.
std::vector<int> antiflag_permutation(const AntiFlagSpace& afs, const SemilinearMap& m);
std::vector<int> duality_permutation(const AntiFlagSpace& afs);
std::vector<std::vector<int>> generator_permutations(const AntiFlagSpace& afs,
                                                     const GeneratorSet& gens);

/// Orbit of one anti-flag under the generated action (BFS), sorted.
std::vector<int> orbit_of_antiflag(const AntiFlagSpace& afs, const GeneratorSet& gens,
                                   AntiFlagId start);

/// Sizes of the edge orbits of g under the vertex permutations, descending.
std::vector<long long> edge_orbit_sizes(const RelGraph& g,
                                        const std::vector<std::vector<int>>& vertex_perms);

/// True iff the permutation preserves classify on every pair.
bool preserves_relations(const AntiFlagSpace& afs, const std::vector<int>& perm);

}  // namespace antiflag

#endif
