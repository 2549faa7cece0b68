#include "coarsebox/dichotomy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace coarsebox {

Cover::Cover(BoxShape shape, std::vector<std::pair<std::string, CellSet>> members)
    : shape_(std::move(shape)) {
    std::set<std::string> seen;
    for (auto& [id, cells] : members) {
        if (!(cells.shape() == shape_))
            throw InvalidInputError("cover member '" + id + "' has a different shape");
        if (!seen.insert(id).second)
            throw InvalidInputError("duplicate cover member id '" + id + "'");
        if (cells.empty()) {
            dropped_empty_.push_back(id);
            continue;
        }
        members_.emplace_back(id, std::move(cells));
    }
    std::sort(members_.begin(), members_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<bool> covered(static_cast<size_t>(shape_.cell_count()), false);
    for (const auto& [id, cells] : members_)
        for (const Cell& c : cells.cells())
            covered[static_cast<size_t>(shape_.index_of(c))] = true;
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
        throw InvalidInputError("cover members do not cover the whole box");
}

const CellSet* Cover::find(const std::string& id) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), id,
                               [](const auto& m, const std::string& k) { return m.first < k; });
    if (it == members_.end() || it->first != id) return nullptr;
    return &it->second;
}

namespace {

// Neighbors of c inside A, in lexicographic order.
std::vector<Cell> neighbors_in(const Cell& c, const CellSet& a) {
    std::vector<Cell> out;
    CellSet around = unit_neighbors(c, a.shape());
    for (const Cell& y : around.cells())
        if (a.contains(y)) out.push_back(y);
    return out;
}

} // namespace

std::vector<CellSet> chain_components(const CellSet& a) {
    std::vector<CellSet> parts;
    std::set<Cell> unvisited(a.cells().begin(), a.cells().end());
    // seeds taken in lexicographic order, so parts come out ordered by
    // their smallest cell
    for (const Cell& seed : a.cells()) {
        if (!unvisited.count(seed)) continue;
        std::vector<Cell> part, frontier{seed};
        unvisited.erase(seed);
        while (!frontier.empty()) {
            std::vector<Cell> next;
            for (const Cell& c : frontier) {
                part.push_back(c);
                for (const Cell& y : neighbors_in(c, a)) {
                    auto it = unvisited.find(y);
                    if (it != unvisited.end()) {
                        unvisited.erase(it);
                        next.push_back(y);
                    }
                }
            }
            std::sort(next.begin(), next.end());
            frontier = std::move(next);
        }
        parts.emplace_back(a.shape(), std::move(part));
    }
    return parts;
}

namespace {

// Multi-source BFS inside A from the low face of the given 1-based axis.
// Frontier is processed in lexicographic order, so parents (and hence the
// reconstructed chain) are deterministic. Returns a shortest chain to the
// high face, or nullopt.
std::optional<std::vector<Cell>> bfs_cross_axis(const CellSet& a, int axis) {
    const BoxShape& s = a.shape();
    std::vector<Cell> frontier;
    std::map<Cell, Cell> parent; // discovered cells; roots map to themselves
    for (const Cell& c : a.cells())
        if (on_face(c, axis, FaceSide::Low, s)) {
            frontier.push_back(c);
            parent.emplace(c, c);
        }
    while (!frontier.empty()) {
        for (const Cell& c : frontier)
            if (on_face(c, axis, FaceSide::High, s)) {
                std::vector<Cell> chain{c};
                Cell cur = c;
                while (!(parent.at(cur) == cur)) {
                    cur = parent.at(cur);
                    chain.push_back(cur);
                }
                std::reverse(chain.begin(), chain.end());
                return chain;
            }
        std::vector<Cell> next;
        for (const Cell& c : frontier)
            for (const Cell& y : neighbors_in(c, a))
                if (parent.emplace(y, c).second) next.push_back(y);
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    return std::nullopt;
}

} // namespace

std::optional<std::pair<int, std::vector<Cell>>> connects_opposite_faces(const CellSet& a) {
    for (int axis = 1; axis <= a.shape().dimension(); ++axis)
        if (auto chain = bfs_cross_axis(a, axis))
            return std::make_pair(axis, std::move(*chain));
    return std::nullopt;
}

namespace {

std::vector<std::string> touched_by(const Cover& cov, const CellSet& cells) {
    std::vector<std::string> ids;
    for (const auto& [id, member] : cov.members()) {
        bool meets = std::any_of(cells.cells().begin(), cells.cells().end(),
                                 [&](const Cell& c) { return member.contains(c); });
        if (meets) ids.push_back(id);
    }
    return ids; // sorted: members are sorted by id
}

} // namespace

UnitMultiplicity unit_multiplicity(const Cover& cov) {
    UnitMultiplicity best{-1, CellSet(cov.shape()), {}};
    for (CellSet& cube : enumerate_unit_cubes(cov.shape())) {
        auto ids = touched_by(cov, cube);
        if (static_cast<int>(ids.size()) > best.count) {
            best.count = static_cast<int>(ids.size());
            best.cube = std::move(cube);
            best.touched_ids = std::move(ids);
        }
    }
    return best;
}

DichotomyCertificate dichotomy(const Cover& cov) {
    for (const auto& [id, member] : cov.members())
        if (auto hit = connects_opposite_faces(member))
            return Crossing{id, hit->first, std::move(hit->second)};

    const int n = cov.shape().dimension();
    UnitMultiplicity best = unit_multiplicity(cov);
    if (best.count < n + 1)
        throw InternalContradictionError(
            "dichotomy: no crossing and max unit multiplicity " +
            std::to_string(best.count) + " < n+1 = " + std::to_string(n + 1));

    // Prune the cube to a minimal subset touching the same members, removing
    // candidates in reverse-lexicographic order.
    std::vector<Cell> kept = best.cube.cells();
    for (auto it = best.cube.cells().rbegin(); it != best.cube.cells().rend(); ++it) {
        std::vector<Cell> trial;
        for (const Cell& c : kept)
            if (!(c == *it)) trial.push_back(c);
        if (touched_by(cov, CellSet(cov.shape(), trial)) == best.touched_ids)
            kept = std::move(trial);
    }
    return Witness{CellSet(cov.shape(), std::move(kept)), std::move(best.touched_ids)};
}

Crossing hex_corollary_check(const Cover& cov) {
    const int n = cov.shape().dimension();
    if (static_cast<int>(cov.members().size()) > n)
        throw InvalidInputError("hex_corollary_check: cover has more than n members");
    for (const auto& [id, member] : cov.members())
        if (auto hit = connects_opposite_faces(member))
            return Crossing{id, hit->first, std::move(hit->second)};
    throw InternalContradictionError("hex_corollary_check: no member crosses");
}

VerifyResult verify_certificate(const Cover& cov, const DichotomyCertificate& cert) {
    const BoxShape& s = cov.shape();
    if (const auto* cr = std::get_if<Crossing>(&cert)) {
        const CellSet* member = cov.find(cr->member_id);
        if (!member) return {false, "unknown member id '" + cr->member_id + "'"};
        if (cr->axis < 1 || cr->axis > s.dimension()) return {false, "axis out of range"};
        if (cr->chain.empty()) return {false, "empty chain"};
        for (const Cell& c : cr->chain) {
            if (!s.contains(c)) return {false, "chain cell outside box"};
            if (!member->contains(c)) return {false, "chain cell not in member"};
        }
        for (size_t i = 1; i < cr->chain.size(); ++i)
            if (cheb_dist(cr->chain[i - 1], cr->chain[i]) > 1)
                return {false, "chain step distance > 1"};
        if (!on_face(cr->chain.front(), cr->axis, FaceSide::Low, s))
            return {false, "chain does not start on low face"};
        if (!on_face(cr->chain.back(), cr->axis, FaceSide::High, s))
            return {false, "chain does not end on high face"};
        return {true, ""};
    }
    const auto& w = std::get<Witness>(cert);
    if (!(w.cells.shape() == s)) return {false, "witness shape mismatch"};
    auto diam = set_diameter(w.cells);
    if (!diam) return {false, "empty witness set"};
    if (*diam > 1) return {false, "diameter"};
    if (static_cast<int>(w.touched_ids.size()) < s.dimension() + 1)
        return {false, "touched count"};
    for (const std::string& id : w.touched_ids) {
        const CellSet* member = cov.find(id);
        if (!member) return {false, "unknown member id '" + id + "'"};
        bool meets = std::any_of(w.cells.cells().begin(), w.cells.cells().end(),
                                 [&](const Cell& c) { return member->contains(c); });
        if (!meets) return {false, "touched member does not intersect witness"};
    }
    return {true, ""};
}

BruteForceReport brute_force_report(const Cover& cov, std::uint64_t cell_cap) {
    const BoxShape& s = cov.shape();
    if (s.cell_count() > cell_cap)
        throw ResourceError("brute_force_report: cell count exceeds cap");
    const int n = s.dimension();

    BruteForceReport report;
    // crossings via union-find, independent of the BFS path
    for (const auto& [id, member] : cov.members()) {
        const auto& cs = member.cells();
        std::vector<size_t> uf(cs.size());
        std::iota(uf.begin(), uf.end(), size_t{0});
        auto find = [&](size_t x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (size_t i = 0; i < cs.size(); ++i)
            for (size_t j = i + 1; j < cs.size(); ++j)
                if (cheb_dist(cs[i], cs[j]) <= 1) uf[find(i)] = find(j);
        bool crosses = false;
        for (int axis = 1; axis <= n && !crosses; ++axis) {
            std::set<size_t> low, high;
            for (size_t i = 0; i < cs.size(); ++i) {
                size_t r = find(i);
                if (cs[i][axis - 1] == 0) low.insert(r);
                if (cs[i][axis - 1] == s.extent(axis - 1) - 1) high.insert(r);
            }
            for (size_t r : low)
                if (high.count(r)) { crosses = true; break; }
        }
        if (crosses) report.crossing_ids.push_back(id);
    }

    // max multiplicity by a direct anchor scan; a diameter-<=1 set is a
    // subset of some anchored cube, so full cubes attain the maximum
    for (std::uint64_t ai = 0; ai < s.cell_count(); ++ai) {
        Cell anchor = s.cell_at(ai);
        bool valid_anchor = true;
        for (int i = 0; i < n; ++i)
            if (anchor[i] > std::max(s.extent(i) - 2, 0)) valid_anchor = false;
        if (!valid_anchor) continue;
        int count = 0;
        for (const auto& [id, member] : cov.members()) {
            bool meets = false;
            for (const Cell& c : member.cells()) {
                bool in_cube = true;
                for (int i = 0; i < n; ++i)
                    if (c[i] < anchor[i] || c[i] > anchor[i] + 1) in_cube = false;
                if (in_cube) { meets = true; break; }
            }
            if (meets) ++count;
        }
        report.max_multiplicity = std::max(report.max_multiplicity, count);
    }
    return report;
}

} // namespace coarsebox
