#pragma once

// Executable reconstructions of the proof machinery: the zero-dimension chain
// characterization at a fixed scale, the higher-dimension crossing pipeline,
// the product-of-chains E-box, and the torus-translation E-box demonstrator.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coarsebox/box.hpp"
#include "coarsebox/coarse.hpp"
#include "coarsebox/dichotomy.hpp"

namespace coarsebox {

// A map from a discrete box into a ground set, stored as a total table
// cell index -> element index.
struct EBoxMap {
    BoxShape shape;
    GroundSet space;
    std::vector<int> table;

    EBoxMap(BoxShape shape_, GroundSet space_, std::vector<int> table_);
    int at(const Cell& c) const { return table[static_cast<size_t>(shape.index_of(c))]; }
};

// An E-chain x_0,...,x_m in a ground set together with its scale entourage.
struct ChainSpec {
    std::vector<int> points;
    Entourage scale;

    ChainSpec(std::vector<int> points_, Entourage scale_);
};

// Finite stand-in for a Z^n action: the torus (Z_N)^n acting on itself by
// translations. N >= 2m+2 keeps the needed word ball fixed-point-free.
struct ZnActionConfig {
    int n = 0;
    int m = 0;
    int torus_size = 0;
    std::vector<int> base; // n coordinates in [0, N)

    ZnActionConfig(int n_, int m_, int torus_size_, std::vector<int> base_);
};

struct EBoxCheck {
    bool ok = false;
    std::string diagnostic; // first violating unit-neighbor pair, empty when ok
};

// True iff every unit-neighbor pair of cells maps into E.
EBoxCheck validate_ebox(const EBoxMap& f, const Entourage& e);

struct ZeroDimCheck {
    bool ok = false;
    std::vector<int> counterexample_chain; // an E-chain with endpoints outside F
};

// True iff chain_component(E,x) is contained in F[x] for every x.
ZeroDimCheck zero_dim_check_at_scale(const Entourage& e, const Entourage& f);

// The chain-component cover {U_x : x}; checks the unique-meet property
// (exactly one member meets E[x] for every x) before returning.
AbstractCover zero_dim_cover(const Entourage& e);

// Preimage cover on the box; empty preimages are dropped, ids inherited.
Cover pullback_cover(const EBoxMap& f, const AbstractCover& cov);

struct HigherDimWitness {
    Crossing crossing;  // on the box, over chain-component-refined member ids
    CellSet component;  // the crossing chain component V
};

// Pulls cov back along f, refines by chain components, and runs the
// dichotomy. Requires validate_ebox(f,E), cover_multiplicity(E,cov) <= n and
// is_uniformly_bounded(cov,F); under these the Witness branch is impossible
// and f(V) x f(V) is contained in F (both re-checked, violations raise
// InternalContradictionError).
HigherDimWitness higher_dim_witness(const EBoxMap& f, const Entourage& e,
                                    const AbstractCover& cov, const Entourage& bound);

// The coordinate-wise map (k_1,...,k_n) -> (x_{k_1,1},...,x_{k_n,n}) on the
// box (m_1+1) x ... x (m_n+1), paired with the product of the factor scales.
std::pair<EBoxMap, Entourage> product_chain_ebox(const std::vector<ChainSpec>& chains);

struct Theorem1Verdict {
    enum class Branch { Multiplicity, Contradiction } branch;
    // Multiplicity branch: the cover meets more than n members near some point.
    int multiplicity = 0;
    std::string location;
    // Contradiction branch: a crossing whose image forces an excluded pair.
    std::optional<Crossing> crossing;
    std::optional<CellSet> component;
    int axis = 0; // 1-based factor index whose bound is violated
    std::string endpoint_low, endpoint_high; // factor-space labels of the forced pair
};

// Product lower-bound demonstrator: for the supplied cover, reports which
// horn of the contradiction fires. Each chain's endpoints must lie outside
// the matching bound entourage.
Theorem1Verdict theorem1_demo(const std::vector<ChainSpec>& chains, const AbstractCover& cov,
                              const std::vector<Entourage>& bound_parts);

struct ZnEBox {
    PermutationAction action; // translations by nonzero vectors of {-1,0,1}^n
    EBoxMap map;
    Entourage scale; // group-generated Chebyshev-1 torus adjacency
    bool injective = false;
    bool translations_fixed_point_free = false; // over {0..m}^n \ {0}
};

ZnEBox zn_action_ebox(const ZnActionConfig& cfg);

struct CrossingCardinality {
    bool ok = false; // |C| >= m+1
    int axis = 0;
    std::vector<int> projection; // distinct axis coordinates of C, sorted
};

// Requires C to connect opposite faces of the box (m+1)^n.
CrossingCardinality crossing_cardinality_check(const CellSet& c, int m);

struct Theorem2Verdict {
    enum class Branch { Multiplicity, Contradiction } branch;
    int multiplicity = 0;
    std::string location;
    std::optional<Crossing> crossing;
    std::optional<CellSet> component;
    int crossing_size = 0;
    int ball_bound = 0;     // finitary_bound(F)
    int max_image_ball = 0; // max |F[f(c)]| over c in the crossing set
};

// Torus-action demonstrator: requires is_uniformly_bounded(cov, F) and
// cfg.m >= finitary_bound(F); reports which horn fires.
Theorem2Verdict theorem2_demo(const ZnActionConfig& cfg, const AbstractCover& cov,
                              const Entourage& bound);

} // namespace coarsebox
