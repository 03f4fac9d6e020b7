#include "antiflag/recovery.hpp"

#include <algorithm>
#include <unordered_map>

namespace antiflag {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

PairLabeling::PairLabeling(int num_vertices)
    : n_(num_vertices),
      tags_(static_cast<std::size_t>(num_vertices) * (num_vertices - 1) / 2, Relation::eq) {}

std::size_t PairLabeling::index(int a, int b) const {
    if (a > b) std::swap(a, b);
    // row a of the strict upper triangle starts after a full rows of
    // decreasing length n-1, n-2, ...
    return static_cast<std::size_t>(a) * (2 * n_ - a - 1) / 2 + (b - a - 1);
}

long long PairLabeling::count(Relation r) const {
    long long c = 0;
    for (Relation t : tags_) c += (t == r);
    return c;
}

std::vector<std::pair<int, int>> PairLabeling::diff(const PairLabeling& other,
                                                    std::size_t limit) const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_ && out.size() < limit; ++a)
        for (int b = a + 1; b < n_ && out.size() < limit; ++b)
            if (get(a, b) != other.get(a, b)) out.emplace_back(a, b);
    return out;
}

PairLabeling ground_truth(const AntiFlagSpace& afs) {
    PairLabeling lab(afs.size());
    for (int a = 0; a < afs.size(); ++a)
        for (int b = a + 1; b < afs.size(); ++b) lab.set(a, b, afs.classify(a, b));
    return lab;
}

PairLabeling recover_from_3(const RelGraph& graph3) {
    const int n = graph3.num_vertices();
    PairLabeling lab(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (graph3.adjacent(a, b)) {
                lab.set(a, b, Relation::r3);
                continue;
            }
            switch (common_related(graph3, a, b).count()) {
                case 1: lab.set(a, b, Relation::r1); break;
                case 0: lab.set(a, b, Relation::r2); break;
                case 2: lab.set(a, b, Relation::r4); break;
                default:
                    throw InconsistencyError("pair " + pair_str(a, b) +
                                             ": common-3-neighbor count outside {0,1,2}");
            }
        }
    }
    return lab;
}

namespace {

// Memoized double-perp D(a,b) = ({a,b}~2)~2. The same inner sets recur for
// every pair of a pencil, so recover_from_2 would otherwise recompute them
// quadratically often.
class DoublePerp {
public:
    explicit DoublePerp(const RelGraph& g2) : g_(&g2) {}

    const DynBitset& get(int a, int b) {
        if (a > b) std::swap(a, b);
        std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        DynBitset inner = common_related(*g_, a, b);
        return cache_.emplace(key, common_related(*g_, inner)).first->second;
    }

    bool criterion(int a, int b) {
        DynBitset d = get(a, b);  // copy: cache may rehash during the scan
        auto members = d.to_indices();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!(get(static_cast<int>(members[i]), static_cast<int>(members[j])) == d))
                    return false;
        return true;
    }

private:
    const RelGraph* g_;
    std::unordered_map<std::uint64_t, DynBitset> cache_;
};

}  // namespace

bool decide_3adjacent_from_2(const RelGraph& graph2, AntiFlagId a, AntiFlagId b) {
    DoublePerp dp(graph2);
    return dp.criterion(a, b);
}

PairLabeling recover_from_2(const RelGraph& graph2) {
    const int n = graph2.num_vertices();
    PairLabeling lab(n);
    DoublePerp dp(graph2);
    RelGraph g3(3, n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (graph2.adjacent(a, b))
                lab.set(a, b, Relation::r2);
            else if (dp.criterion(a, b)) {
                lab.set(a, b, Relation::r3);
                g3.add_edge(a, b);
            }
        }
    }
    // remaining pairs split by their common-neighbor count in the
    // reconstructed relation-3 graph
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (lab.get(a, b) != Relation::eq) continue;
            switch (common_related(g3, a, b).count()) {
                case 1: lab.set(a, b, Relation::r1); break;
                case 2: lab.set(a, b, Relation::r4); break;
                default:
                    throw InconsistencyError(
                        "pair " + pair_str(a, b) +
                        ": count in recovered relation-3 graph matches neither R1 nor R4");
            }
        }
    }
    return lab;
}

namespace {

std::uint64_t bitset_hash(const DynBitset& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t w = 0; w < s.words(); ++w) {
        h ^= s.word(w);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

PairLabeling recover_from_4(const RelGraph& graph4) {
    const int n = graph4.num_vertices();
    PairLabeling lab(n);

    // Family of sets {a,b}~4 over non-adjacent pairs, deduplicated: the
    // containment poset is a poset of sets, so equal sets are one element.
    std::vector<DynBitset> sets;
    std::vector<int> set_size;
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> pair_set;

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (graph4.adjacent(a, b)) {
                lab.set(a, b, Relation::r4);
                continue;
            }
            DynBitset s = common_related(graph4, a, b);
            if (s.none())
                throw RecoveryRefused("pair " + pair_str(a, b) +
                                      " has no common 4-neighbor; the containment method "
                                      "needs q >= 3 or n >= 4");
            std::uint64_t h = bitset_hash(s);
            int idx = -1;
            for (int cand : buckets[h]) {
                if (sets[static_cast<std::size_t>(cand)] == s) { idx = cand; break; }
            }
            if (idx < 0) {
                idx = static_cast<int>(sets.size());
                buckets[h].push_back(idx);
                set_size.push_back(static_cast<int>(s.count()));
                sets.push_back(std::move(s));
            }
            pairs.emplace_back(a, b);
            pair_set.push_back(idx);
        }
    }

    // For the strict-superset sweep, index sets by member vertex so each
    // set only competes against sets sharing its least-frequent member.
    std::vector<std::vector<int>> containing(static_cast<std::size_t>(n));
    for (int i = 0; i < static_cast<int>(sets.size()); ++i)
        for (std::size_t v = sets[static_cast<std::size_t>(i)].find_first();
             v < sets[static_cast<std::size_t>(i)].size();
             v = sets[static_cast<std::size_t>(i)].find_next(v))
            containing[v].push_back(i);

    std::vector<bool> not_minimal(sets.size(), false), not_maximal(sets.size(), false);
    for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
        const DynBitset& s = sets[static_cast<std::size_t>(i)];
        std::size_t pivot = s.find_first(), best = ~std::size_t{0};
        for (std::size_t v = s.find_first(); v < s.size(); v = s.find_next(v)) {
            if (containing[v].size() < best) { best = containing[v].size(); pivot = v; }
        }
        for (int j : containing[pivot]) {
            // strict superset: deduplication makes size inequality strict
            if (set_size[static_cast<std::size_t>(j)] > set_size[static_cast<std::size_t>(i)] &&
                s.subset_of(sets[static_cast<std::size_t>(j)])) {
                not_maximal[static_cast<std::size_t>(i)] = true;
                not_minimal[static_cast<std::size_t>(j)] = true;
            }
        }
    }

    for (std::size_t k = 0; k < pairs.size(); ++k) {
        std::size_t s = static_cast<std::size_t>(pair_set[k]);
        bool mn = !not_minimal[s], mx = !not_maximal[s];
        Relation r;
        if (mn && !mx) r = Relation::r1;
        else if (mn && mx) r = Relation::r2;
        else if (!mn && mx) r = Relation::r3;
        else
            throw InconsistencyError("pair " + pair_str(pairs[k].first, pairs[k].second) +
                                     ": {a,b}~4 is neither minimal nor maximal");
        lab.set(pairs[k].first, pairs[k].second, r);
    }
    return lab;
}

PairLabeling recover_from_4_special(const RelGraph& graph4) {
    const int n = graph4.num_vertices();
    PairLabeling lab(n);
    RelGraph g2(2, n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (graph4.adjacent(a, b))
                lab.set(a, b, Relation::r4);
            else if (common_related(graph4, a, b).any()) {
                lab.set(a, b, Relation::r2);
                g2.add_edge(a, b);
            }
        }
    }
    DoublePerp dp(g2);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (lab.get(a, b) != Relation::eq) continue;
            lab.set(a, b, dp.criterion(a, b) ? Relation::r3 : Relation::r1);
        }
    }
    return lab;
}

long long formula_common1(Common1Kind kind, int q, int n) {
    const long long Q = q;
    switch (kind) {
        case Common1Kind::r2:
            return 4 * (ipow(Q, n - 2) - 1) * (Q - 1) * ipow(Q, n - 3);
        case Common1Kind::r3:
            return ipow(Q, 2 * n - 3) - 2 * ipow(Q, n - 2);
        case Common1Kind::r4_line_meets_both:
            return 4 * ipow(Q, n - 2) * (ipow(Q, n - 2) - ipow(Q, n - 3)) - 2 * ipow(Q, n - 2);
        case Common1Kind::r4_line_meets_separately:
            if (q == 2)
                throw std::invalid_argument(
                    "a line through two points off two hyperplanes cannot meet them in "
                    "distinct points over GF(2)");
            return 4 * (ipow(Q, n - 2) - 1) * (Q - 1) * ipow(Q, n - 3) + 2 * ipow(Q, n - 2);
    }
    throw std::invalid_argument("unknown count kind");
}

Common1Kind r4_subcase(const AntiFlagSpace& afs, AntiFlagId a, AntiFlagId b) {
    if (afs.classify(a, b) != Relation::r4)
        throw std::invalid_argument("sub-case split is defined for R4 pairs only");
    const ProjectiveSpace& pg = afs.space();
    const AntiFlag& x = afs.flag(a);
    const AntiFlag& y = afs.flag(b);
    for (PointId p : pg.line_through(x.point, y.point)) {
        if (pg.incident(p, x.hyperplane) && pg.incident(p, y.hyperplane))
            return Common1Kind::r4_line_meets_both;
    }
    return Common1Kind::r4_line_meets_separately;
}

PairLabeling recover_from_1_counts(const RelGraph& graph1, int q, int n) {
    std::vector<std::pair<Common1Kind, long long>> vals = {
        {Common1Kind::r2, formula_common1(Common1Kind::r2, q, n)},
        {Common1Kind::r3, formula_common1(Common1Kind::r3, q, n)},
        {Common1Kind::r4_line_meets_both, formula_common1(Common1Kind::r4_line_meets_both, q, n)},
    };
    if (q >= 3)
        vals.emplace_back(Common1Kind::r4_line_meets_separately,
                          formula_common1(Common1Kind::r4_line_meets_separately, q, n));
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            if (vals[i].second == vals[j].second)
                throw RecoveryRefused("common-1-neighbor count formulas coincide at q=" +
                                      std::to_string(q) + ", n=" + std::to_string(n) + " (value " +
                                      std::to_string(vals[i].second) +
                                      "); the relations cannot be told apart by counting");

    const int nv = graph1.num_vertices();
    PairLabeling lab(nv);
    for (int a = 0; a < nv; ++a) {
        for (int b = a + 1; b < nv; ++b) {
            if (graph1.adjacent(a, b)) {
                lab.set(a, b, Relation::r1);
                continue;
            }
            long long c = static_cast<long long>(common_related(graph1, a, b).count());
            Relation r = Relation::eq;
            for (const auto& [kind, value] : vals) {
                if (c != value) continue;
                r = kind == Common1Kind::r2   ? Relation::r2
                    : kind == Common1Kind::r3 ? Relation::r3
                                              : Relation::r4;
                break;
            }
            if (r == Relation::eq)
                throw InconsistencyError("pair " + pair_str(a, b) + ": common-1-neighbor count " +
                                         std::to_string(c) + " matches no closed form");
            lab.set(a, b, r);
        }
    }
    return lab;
}

std::vector<std::pair<AntiFlagId, AntiFlagId>> recover_3_from_1_cocliques(
    const RelGraph& graph1) {
    std::vector<std::pair<AntiFlagId, AntiFlagId>> out;
    for (const auto& c : admissible_cocliques(graph1))
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) out.emplace_back(c[i], c[j]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace antiflag
