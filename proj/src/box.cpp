#include "coarsebox/box.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace coarsebox {

std::string to_string(const Cell& c) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < c.coords.size(); ++i) {
        if (i) os << ',';
        os << c.coords[i];
    }
    os << ')';
    return os.str();
}

BoxShape::BoxShape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw InvalidInputError("BoxShape: dimension must be >= 1");
    std::uint64_t count = 1;
    for (int k : dims_) {
        if (k < 1) throw InvalidInputError("BoxShape: every extent must be >= 1");
        if (count > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k))
            throw InvalidInputError("BoxShape: cell count overflows");
        count *= static_cast<std::uint64_t>(k);
    }
    cell_count_ = count;
}

bool BoxShape::contains(const Cell& c) const {
    if (c.dimension() != dimension()) return false;
    for (int i = 0; i < dimension(); ++i)
        if (c[i] < 0 || c[i] >= dims_[static_cast<size_t>(i)]) return false;
    return true;
}

void BoxShape::require_valid(const Cell& c) const {
    if (!contains(c))
        throw InvalidInputError("cell " + to_string(c) + " is not a cell of the box");
}

std::uint64_t BoxShape::index_of(const Cell& c) const {
    require_valid(c);
    std::uint64_t idx = 0;
    for (int i = 0; i < dimension(); ++i)
        idx = idx * static_cast<std::uint64_t>(dims_[static_cast<size_t>(i)]) +
              static_cast<std::uint64_t>(c[i]);
    return idx;
}

Cell BoxShape::cell_at(std::uint64_t index) const {
    std::vector<int> coords(static_cast<size_t>(dimension()));
    for (int i = dimension() - 1; i >= 0; --i) {
        auto k = static_cast<std::uint64_t>(dims_[static_cast<size_t>(i)]);
        coords[static_cast<size_t>(i)] = static_cast<int>(index % k);
        index /= k;
    }
    return Cell(std::move(coords));
}

CellSet::CellSet(BoxShape shape, std::vector<Cell> cells)
    : shape_(std::move(shape)), cells_(std::move(cells)) {
    for (const Cell& c : cells_) shape_.require_valid(c);
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool CellSet::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

int cheb_dist(const Cell& a, const Cell& b) {
    if (a.dimension() != b.dimension())
        throw InvalidInputError("cheb_dist: dimension mismatch");
    int d = 0;
    for (int i = 0; i < a.dimension(); ++i)
        d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

CellSet unit_neighbors(const Cell& c, const BoxShape& s) {
    s.require_valid(c);
    const int n = s.dimension();
    std::vector<Cell> out;
    // enumerate offsets in {-1,0,1}^n, lexicographic
    std::vector<int> off(static_cast<size_t>(n), -1);
    for (;;) {
        Cell y = c;
        bool inside = true, all_zero = true;
        for (int i = 0; i < n; ++i) {
            y.coords[static_cast<size_t>(i)] += off[static_cast<size_t>(i)];
            if (off[static_cast<size_t>(i)] != 0) all_zero = false;
            if (y[i] < 0 || y[i] >= s.extent(i)) inside = false;
        }
        if (inside && !all_zero) out.push_back(std::move(y));
        int i = n - 1;
        while (i >= 0 && off[static_cast<size_t>(i)] == 1) off[static_cast<size_t>(i--)] = -1;
        if (i < 0) break;
        ++off[static_cast<size_t>(i)];
    }
    return CellSet(s, std::move(out));
}

bool on_face(const Cell& c, int axis, FaceSide side, const BoxShape& s) {
    if (axis < 1 || axis > s.dimension())
        throw InvalidInputError("on_face: axis out of range");
    s.require_valid(c);
    const int v = c[axis - 1];
    return side == FaceSide::Low ? v == 0 : v == s.extent(axis - 1) - 1;
}

std::optional<int> set_diameter(const CellSet& a) {
    if (a.empty()) return std::nullopt;
    int d = 0;
    const auto& cs = a.cells();
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
            d = std::max(d, cheb_dist(cs[i], cs[j]));
    return d;
}

std::vector<CellSet> enumerate_unit_cubes(const BoxShape& s) {
    const int n = s.dimension();
    std::vector<int> anchor_max(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        anchor_max[static_cast<size_t>(i)] = std::max(s.extent(i) - 2, 0);

    std::vector<CellSet> out;
    std::vector<int> a(static_cast<size_t>(n), 0);
    for (;;) {
        std::vector<Cell> cube;
        std::vector<int> x(a);
        for (;;) { // cells of the cube, lexicographic
            cube.push_back(Cell(x));
            int i = n - 1;
            while (i >= 0) {
                int hi = std::min(a[static_cast<size_t>(i)] + 1, s.extent(i) - 1);
                if (x[static_cast<size_t>(i)] < hi) { ++x[static_cast<size_t>(i)]; break; }
                x[static_cast<size_t>(i)] = a[static_cast<size_t>(i)];
                --i;
            }
            if (i < 0) break;
        }
        out.emplace_back(s, std::move(cube));
        int i = n - 1;
        while (i >= 0 && a[static_cast<size_t>(i)] == anchor_max[static_cast<size_t>(i)])
            a[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++a[static_cast<size_t>(i)];
    }
    return out;
}

std::vector<Cell> all_cells(const BoxShape& s) {
    std::vector<Cell> out;
    out.reserve(static_cast<size_t>(s.cell_count()));
    for (std::uint64_t i = 0; i < s.cell_count(); ++i) out.push_back(s.cell_at(i));
    return out;
}

} // namespace coarsebox
