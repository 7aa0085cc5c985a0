#pragma once

// Rotation distances: the exact right-arm formula, definedness of
// restricted right-arm distance, constructive witness scripts, exhaustive
// BFS oracles over rotation graphs, and bound certification.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rotdist/families.hpp"
#include "rotdist/genset.hpp"
#include "rotdist/pair.hpp"
#include "rotdist/tree.hpp"

namespace rotdist {

inline constexpr int kBfsCap = 12;
inline constexpr int kDiameterCap = 11;

struct DistanceResult {
    bool defined = false;
    std::optional<int> distance;
    std::optional<int> lower_bound;
    std::optional<int> upper_bound;
    std::string bound_source;
    // Satisfies apply_word(t1, witness) = t2 using only permitted locations;
    // absent for all-nodes queries (interior rotations have no letters).
    std::optional<Word> witness;
};

// Rotation graph on all trees with n carets, vertices in canonical order.
class RotationGraph {
public:
    RotationGraph(int n, GenSet gens, int cap = kBfsCap);

    int n() const { return n_; }
    const GenSet& gens() const { return gens_; }
    const std::vector<Tree>& trees() const { return trees_; }
    int size() const { return static_cast<int>(trees_.size()); }

    int index_of(const Tree& t) const; // -1 when t has the wrong size

    struct Edge {
        int to;
        Generator gen; // meaningless in all-nodes mode
    };
    const std::vector<Edge>& edges(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    // Distances from source to every vertex; -1 when unreachable.
    std::vector<int> distances_from(int source) const;

    // Deterministic geodesic script from vertex a to vertex b (empty when
    // a == b); requires reachability and a spine-location genset.
    Word witness(int a, int b) const;

private:
    int n_;
    GenSet gens_;
    std::vector<Tree> trees_;
    std::unordered_map<std::uint64_t, int> index_;
    std::vector<std::vector<Edge>> adj_;
};

// Exact right-arm rotation distance: the infinite-generating-set word
// length of the reduced pair.  Always defined; the witness is the normal
// form itself, valid against the trees as given.
DistanceResult d_ra(const Tree& t1, const Tree& t2);

// Whether the restricted right-arm distance for finite right-arm S is
// defined between t1 and t2 as given: the partially reduced normal form of
// the pair must not use any index strictly between 0 and the smallest
// nonzero permitted level.
bool rra_defined(const Tree& t1, const Tree& t2, const GenSet& s);

// Exhaustive oracle: shortest rotation script between the trees using S's
// locations; defined = reachable.
DistanceResult bfs_distance(const Tree& t1, const Tree& t2, const GenSet& s, int cap = kBfsCap);

// Valid (not necessarily minimal) rotation script over S's locations,
// built from the partially reduced normal form with out-of-set letters
// realized as root-rotation conjugates.  Finite right-arm sets and the
// all-right-arm mode only.
Word witness_sequence(const Tree& t1, const Tree& t2, const GenSet& s);

struct UpperBoundReport {
    int n = 0;
    std::string genset;
    int bound = 0;
    int max_distance = 0;
    long defined_pairs = 0;
    long undefined_pairs = 0;
    bool pass = false;
};

// Exhausts all same-size pairs: every defined pair's distance must respect
// the mode's bound (4n-8 for finite sets with n >= 3, 2n-2 for the full
// right arm); reports the realized maximum.
UpperBoundReport check_upper_bounds(int n, const GenSet& s, int cap = kBfsCap);

struct LowerBoundReport {
    std::string family;
    int n = 0;
    std::string genset;
    bool defined = false;
    int distance = -1;
    std::optional<int> predicted_lower_bound;
    std::optional<int> predicted_upper_bound;
    bool pass = false;
};

// BFS-certifies one family instance against its predicted bounds.
LowerBoundReport check_lower_bound_family(const FamilyInstance& inst, int cap = kBfsCap);

enum class PairSide { T1, T2 };

struct SiblingPersistenceReport {
    std::string family;
    int n = 0;
    PairSide side = PairSide::T1;
    std::pair<int, int> pair{0, 0};
    int radius = 0;
    long trees_within_radius = 0;
    bool all_within_radius_contain = false;
    // Smallest BFS depth at which a tree without the pair appears; absent
    // when the pair survives the whole component.
    std::optional<int> first_split_depth;
    bool pass = false;
};

// Truncated BFS from the instance's T1 (buried pair [n-3, n-2], or
// [m-1, m] for the spinal families) or T2 (pair shifted right by one)
// under the instance's genset.
SiblingPersistenceReport check_sibling_persistence(const FamilyInstance& inst, int radius,
                                                   PairSide side, int cap = kBfsCap);

// Diameter of the all-nodes rotation graph.
int d_r_ordinary_diameter(int n, int cap = kDiameterCap);

// Max over all pairs plus a witness pair attaining it, for locating
// bound-sharp examples by search.
struct DiameterWitness {
    int distance = 0;
    Tree a;
    Tree b;
};
DiameterWitness max_distance_pair(int n, const GenSet& s, int cap = kBfsCap);

} // namespace rotdist
