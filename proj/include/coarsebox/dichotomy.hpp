#pragma once

// Chain connectivity on discrete boxes, the crossing/witness dichotomy,
// the Gale Hex corollary, certificate verification, and a brute-force oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coarsebox/box.hpp"

namespace coarsebox {

// An indexed family of nonempty cell sets whose union is the whole box.
// Members are kept sorted by id; empty members are dropped at construction
// and their ids recorded as warnings. Members may overlap.
class Cover {
public:
    Cover(BoxShape shape, std::vector<std::pair<std::string, CellSet>> members);

    const BoxShape& shape() const { return shape_; }
    const std::vector<std::pair<std::string, CellSet>>& members() const { return members_; }
    const std::vector<std::string>& dropped_empty() const { return dropped_empty_; }
    const CellSet* find(const std::string& id) const;

private:
    BoxShape shape_;
    std::vector<std::pair<std::string, CellSet>> members_; // sorted by id
    std::vector<std::string> dropped_empty_;
};

struct Crossing {
    std::string member_id;
    int axis = 0;            // 1-based
    std::vector<Cell> chain; // low face -> high face, steps at cheb_dist <= 1
};

struct Witness {
    CellSet cells;                         // diameter <= 1
    std::vector<std::string> touched_ids;  // >= n+1 members intersecting cells
};

using DichotomyCertificate = std::variant<Crossing, Witness>;

// Partition of A into chain-connected parts (within-part chains, steps <= 1).
// Distinct parts sit at Chebyshev distance >= 2; parts are ordered by their
// lexicographically smallest cell.
std::vector<CellSet> chain_components(const CellSet& a);

// If some chain component of A meets both faces of some axis, returns the
// smallest such axis and a shortest within-A chain (BFS from the low-face
// cells, lexicographic tie-break).
std::optional<std::pair<int, std::vector<Cell>>> connects_opposite_faces(const CellSet& a);

struct UnitMultiplicity {
    int count = 0;
    CellSet cube;
    std::vector<std::string> touched_ids;
};

// Maximizes, over the canonical unit cubes, the number of distinct cover
// members intersected; ties broken by lexicographically smallest cube.
UnitMultiplicity unit_multiplicity(const Cover& cov);

// Crossing/witness dichotomy: scan members (ascending id) for a crossing;
// otherwise return a Witness cube pruned to a minimal subset touching the
// same >= n+1 members. Throws InternalContradictionError if neither branch
// produces a certificate.
DichotomyCertificate dichotomy(const Cover& cov);

// Gale's Hex corollary: requires |members| <= n and returns a Crossing.
Crossing hex_corollary_check(const Cover& cov);

struct VerifyResult {
    bool ok = false;
    std::string violation; // first violated condition, empty when ok
};

// Re-checks every certificate invariant against cov from scratch.
VerifyResult verify_certificate(const Cover& cov, const DichotomyCertificate& cert);

struct BruteForceReport {
    std::vector<std::string> crossing_ids; // every member that crosses some axis
    int max_multiplicity = 0;              // exact max over all diameter-<=1 subsets
};

// Independent oracle: per-member flood fill plus a direct scan of all unit
// cubes; does not share search order with dichotomy(). Throws ResourceError
// above the cell-count cap.
BruteForceReport brute_force_report(const Cover& cov, std::uint64_t cell_cap = 4096);

} // namespace coarsebox
