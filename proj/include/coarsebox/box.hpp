#pragma once

// Discrete boxes k1 x ... x kn under the Chebyshev metric: cells, faces,
// unit-scale neighborhoods, and the canonical unit-subcube enumeration.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coarsebox/errors.hpp"

namespace coarsebox {

struct Cell {
    std::vector<int> coords;

    Cell() = default;
    explicit Cell(std::vector<int> c) : coords(std::move(c)) {}
    Cell(std::initializer_list<int> c) : coords(c) {}

    int dimension() const { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[static_cast<size_t>(i)]; }

    auto operator<=>(const Cell&) const = default;
};

std::string to_string(const Cell& c);

class BoxShape {
public:
    // Rejects empty dims, non-positive extents, and cell-count overflow.
    explicit BoxShape(std::vector<int> dims);

    int dimension() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    int extent(int axis0) const { return dims_[static_cast<size_t>(axis0)]; }
    std::uint64_t cell_count() const { return cell_count_; }

    bool contains(const Cell& c) const;
    void require_valid(const Cell& c) const; // throws InvalidInputError

    // Row-major lexicographic linearization (coords[0] most significant).
    std::uint64_t index_of(const Cell& c) const;
    Cell cell_at(std::uint64_t index) const;

    bool operator==(const BoxShape& o) const { return dims_ == o.dims_; }

private:
    std::vector<int> dims_;
    std::uint64_t cell_count_ = 0;
};

class CellSet {
public:
    explicit CellSet(BoxShape shape) : shape_(std::move(shape)) {}
    // Cells are validated, sorted lexicographically, deduplicated.
    CellSet(BoxShape shape, std::vector<Cell> cells);

    const BoxShape& shape() const { return shape_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(const Cell& c) const;

    bool operator==(const CellSet& o) const = default;

private:
    BoxShape shape_;
    std::vector<Cell> cells_; // sorted, unique
};

enum class FaceSide { Low, High };

// Chebyshev distance max_i |a(i)-b(i)|. Throws on dimension mismatch.
int cheb_dist(const Cell& a, const Cell& b);

// All cells y != c of s with cheb_dist(c,y) <= 1.
CellSet unit_neighbors(const Cell& c, const BoxShape& s);

// axis is 1-based. True iff coords(axis)=0 (Low) or coords(axis)=k_axis-1
// (High); for a degenerate axis k=1 both sides hold.
bool on_face(const Cell& c, int axis, FaceSide side, const BoxShape& s);

// Max pairwise Chebyshev distance; nullopt for the empty set.
std::optional<int> set_diameter(const CellSet& a);

// Canonical maximal diameter-<=1 subsets: for each anchor a with
// 0 <= a(i) <= max(k_i-2, 0), the set {x : a(i) <= x(i) <= min(a(i)+1, k_i-1)}.
// Every diameter-<=1 subset of the box lies inside some yielded cube.
std::vector<CellSet> enumerate_unit_cubes(const BoxShape& s);

// All cells of the box in lexicographic order.
std::vector<Cell> all_cells(const BoxShape& s);

} // namespace coarsebox
