#pragma once

// Finite coarse-space primitives: entourages (explicit, metric-radius, and
// group-generated), balls, composition, products, E-chains, chain components,
// cover multiplicity, uniform boundedness.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coarsebox/errors.hpp"

namespace coarsebox {

// A finite set of uniquely labeled elements; elements are referred to by
// index everywhere below.
class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    std::optional<int> index_of(const std::string& label) const;
    int require_index(const std::string& label) const; // throws InvalidInputError

    bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
};

// A finite list of bijections of the ground set, stored as index tables
// together with their inverses.
class PermutationAction {
public:
    PermutationAction(GroundSet ground, std::vector<std::vector<int>> generators);

    const GroundSet& ground() const { return ground_; }
    int generator_count() const { return static_cast<int>(generators_.size()); }
    const std::vector<int>& generator(int g) const { return generators_[static_cast<size_t>(g)]; }
    const std::vector<int>& inverse(int g) const { return inverses_[static_cast<size_t>(g)]; }
    const std::vector<std::vector<int>>& generators() const { return generators_; }

private:
    GroundSet ground_;
    std::vector<std::vector<int>> generators_;
    std::vector<std::vector<int>> inverses_;
};

// A reflexive symmetric relation on a ground set. Whatever the source
// representation, the relation is materialized as a canonical sorted pair
// list, so entourages compare bit-exactly.
class Entourage {
public:
    enum class Kind { Pairs, Metric, Group };

    static Entourage from_pairs(GroundSet ground, std::vector<std::pair<int, int>> pairs);
    static Entourage from_metric(GroundSet ground, std::vector<std::vector<std::int64_t>> dist,
                                 std::int64_t radius);
    // Relation y in {x} u Fx u F^-1 x for the chosen generators, iterated to
    // words of length <= word_length (default 1, the base relation).
    static Entourage from_group(const PermutationAction& action, std::vector<int> gen_subset,
                                int word_length = 1);
    static Entourage diagonal(GroundSet ground);

    Kind kind() const { return kind_; }
    const GroundSet& ground() const { return ground_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    bool contains(int x, int y) const;

    // Metric payload (valid when kind() == Kind::Metric).
    const std::vector<std::vector<std::int64_t>>& metric_dist() const { return dist_; }
    std::int64_t metric_radius() const { return radius_; }
    // Group payload (valid when kind() == Kind::Group).
    const std::vector<std::vector<int>>& group_generators() const { return group_gens_; }
    int word_length() const { return word_length_; }

    bool operator==(const Entourage& o) const {
        return ground_ == o.ground_ && pairs_ == o.pairs_;
    }

private:
    Entourage(Kind kind, GroundSet ground) : kind_(kind), ground_(std::move(ground)) {}
    void seal(std::vector<std::pair<int, int>> raw); // symmetrize, close, sort

    Kind kind_;
    GroundSet ground_;
    std::vector<std::pair<int, int>> pairs_; // canonical: sorted, unique, symmetric, reflexive
    std::vector<std::vector<std::int64_t>> dist_;
    std::int64_t radius_ = 0;
    std::vector<std::vector<int>> group_gens_;
    int word_length_ = 1;
};

// Indexed family of nonempty subsets whose union is the ground set.
class AbstractCover {
public:
    AbstractCover(GroundSet ground, std::vector<std::pair<std::string, std::vector<int>>> members);

    const GroundSet& ground() const { return ground_; }
    const std::vector<std::pair<std::string, std::vector<int>>>& members() const { return members_; }
    const std::vector<std::string>& dropped_empty() const { return dropped_empty_; }

private:
    GroundSet ground_;
    std::vector<std::pair<std::string, std::vector<int>>> members_; // sorted by id; sets sorted
    std::vector<std::string> dropped_empty_;
};

// E[x] = {y : (x,y) in E}; always contains x.
std::vector<int> ball(const Entourage& e, int x);

// Exact relational composition, symmetrized and reflexive-closed.
Entourage compose(const Entourage& e, const Entourage& f);

// Pair related iff related coordinate-wise in every factor. Product elements
// are labeled by joining factor labels with '|'.
Entourage product_entourage(const std::vector<Entourage>& parts);
GroundSet product_ground(const std::vector<const GroundSet*>& parts);

// Wrapper over Entourage::from_group (inverses always included).
Entourage group_entourage(const PermutationAction& action, std::vector<int> gen_subset,
                          int word_length = 1);

// True iff every consecutive pair lies in E; empty/singleton sequences pass.
bool is_e_chain(const Entourage& e, const std::vector<int>& seq);

// E-chain reachability class of x; the classes partition the ground set.
std::vector<int> chain_component(const Entourage& e, int x);
std::vector<std::vector<int>> all_chain_components(const Entourage& e);

struct CoverMultiplicity {
    int count = 0;
    int argmax = 0; // lowest element index attaining the max
};

// max over x of |{U : E[x] meets U}|.
CoverMultiplicity cover_multiplicity(const Entourage& e, const AbstractCover& cov);

// True iff U x U is a subset of E for every member U.
bool is_uniformly_bounded(const AbstractCover& cov, const Entourage& e);

// Max ball cardinality over the ground set.
int finitary_bound(const Entourage& e);

// Almost-free witness: a point x moved by every forbidden permutation, or
// nullopt when each point is fixed by some forbidden element.
std::optional<int> almost_free_witness(const GroundSet& ground,
                                       const std::vector<std::vector<int>>& forbidden);

} // namespace coarsebox
