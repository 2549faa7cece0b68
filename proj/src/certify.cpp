#include "coarsebox/certify.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace coarsebox {

EBoxMap::EBoxMap(BoxShape shape_, GroundSet space_, std::vector<int> table_)
    : shape(std::move(shape_)), space(std::move(space_)), table(std::move(table_)) {
    if (table.size() != static_cast<size_t>(shape.cell_count()))
        throw InvalidInputError("EBoxMap: table must cover every cell of the box");
    for (int v : table)
        if (v < 0 || v >= space.size())
            throw InvalidInputError("EBoxMap: table value out of range");
}

ChainSpec::ChainSpec(std::vector<int> points_, Entourage scale_)
    : points(std::move(points_)), scale(std::move(scale_)) {
    if (points.empty()) throw InvalidInputError("ChainSpec: chain must be nonempty");
    if (!is_e_chain(scale, points))
        throw InvalidInputError("ChainSpec: points do not form an E-chain at the given scale");
}

ZnActionConfig::ZnActionConfig(int n_, int m_, int torus_size_, std::vector<int> base_)
    : n(n_), m(m_), torus_size(torus_size_), base(std::move(base_)) {
    if (n < 1) throw InvalidInputError("ZnActionConfig: n must be >= 1");
    if (m < 1) throw InvalidInputError("ZnActionConfig: m must be >= 1");
    if (torus_size < 2 * m + 2)
        throw InvalidInputError("ZnActionConfig: torus size must be >= 2m+2");
    if (static_cast<int>(base.size()) != n)
        throw InvalidInputError("ZnActionConfig: base point dimension mismatch");
    for (int b : base)
        if (b < 0 || b >= torus_size)
            throw InvalidInputError("ZnActionConfig: base coordinate out of range");
}

EBoxCheck validate_ebox(const EBoxMap& f, const Entourage& e) {
    if (!(f.space == e.ground()))
        throw InvalidInputError("validate_ebox: ground sets differ");
    for (const Cell& c : all_cells(f.shape)) {
        CellSet around = unit_neighbors(c, f.shape);
        for (const Cell& y : around.cells()) {
            if (!(c < y)) continue; // each unordered pair once
            if (!e.contains(f.at(c), f.at(y)))
                return {false, "unit-neighbor pair " + to_string(c) + "," + to_string(y) +
                                   " maps outside E"};
        }
    }
    return {true, ""};
}

namespace {

// Shortest E-chain from x to y inside x's chain component.
std::vector<int> e_chain_between(const Entourage& e, int x, int y) {
    std::vector<int> parent(static_cast<size_t>(e.ground().size()), -1);
    std::deque<int> queue{x};
    parent[static_cast<size_t>(x)] = x;
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        if (c == y) break;
        for (int z : ball(e, c))
            if (parent[static_cast<size_t>(z)] < 0) {
                parent[static_cast<size_t>(z)] = c;
                queue.push_back(z);
            }
    }
    std::vector<int> chain{y};
    while (chain.back() != x) chain.push_back(parent[static_cast<size_t>(chain.back())]);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

} // namespace

ZeroDimCheck zero_dim_check_at_scale(const Entourage& e, const Entourage& f) {
    if (!(e.ground() == f.ground()))
        throw InvalidInputError("zero_dim_check_at_scale: ground sets differ");
    for (const auto& comp : all_chain_components(e))
        for (int x : comp)
            for (int y : comp)
                if (!f.contains(x, y)) return {false, e_chain_between(e, x, y)};
    return {true, {}};
}

AbstractCover zero_dim_cover(const Entourage& e) {
    std::vector<std::pair<std::string, std::vector<int>>> members;
    auto comps = all_chain_components(e);
    for (size_t i = 0; i < comps.size(); ++i)
        members.emplace_back("U" + std::to_string(i), comps[i]);
    AbstractCover cover(e.ground(), std::move(members));

    // unique-meet: every E-ball meets exactly one member
    for (int x = 0; x < e.ground().size(); ++x) {
        auto b = ball(e, x);
        int meets = 0;
        for (const auto& [id, set] : cover.members())
            if (std::any_of(b.begin(), b.end(), [&](int y) {
                    return std::binary_search(set.begin(), set.end(), y);
                }))
                ++meets;
        if (meets != 1)
            throw InternalContradictionError(
                "zero_dim_cover: ball meets " + std::to_string(meets) + " members");
    }
    return cover;
}

Cover pullback_cover(const EBoxMap& f, const AbstractCover& cov) {
    if (!(f.space == cov.ground()))
        throw InvalidInputError("pullback_cover: cover is not over the map's space");
    std::vector<std::pair<std::string, CellSet>> members;
    for (const auto& [id, set] : cov.members()) {
        std::vector<Cell> cells;
        for (const Cell& c : all_cells(f.shape))
            if (std::binary_search(set.begin(), set.end(), f.at(c))) cells.push_back(c);
        members.emplace_back(id, CellSet(f.shape, std::move(cells)));
    }
    return Cover(f.shape, std::move(members));
}

namespace {

// Pull back, refine by chain components, run the dichotomy. A Witness here
// contradicts the refined multiplicity bound.
HigherDimWitness extract_crossing(const EBoxMap& f, const AbstractCover& cov) {
    Cover pulled = pullback_cover(f, cov);
    std::vector<std::pair<std::string, CellSet>> refined;
    for (const auto& [id, cells] : pulled.members()) {
        auto parts = chain_components(cells);
        for (size_t j = 0; j < parts.size(); ++j)
            refined.emplace_back(id + "#" + std::to_string(j), std::move(parts[j]));
    }
    Cover refined_cover(f.shape, std::move(refined));
    DichotomyCertificate cert = dichotomy(refined_cover);
    const auto* crossing = std::get_if<Crossing>(&cert);
    if (!crossing)
        throw InternalContradictionError(
            "higher-dimension pipeline reached the Witness branch");
    return {*crossing, *refined_cover.find(crossing->member_id)};
}

} // namespace

HigherDimWitness higher_dim_witness(const EBoxMap& f, const Entourage& e,
                                    const AbstractCover& cov, const Entourage& bound) {
    const int n = f.shape.dimension();
    if (!validate_ebox(f, e).ok)
        throw InvalidInputError("higher_dim_witness: f is not an E-box for E");
    if (cover_multiplicity(e, cov).count > n)
        throw InvalidInputError("higher_dim_witness: cover multiplicity exceeds n");
    if (!is_uniformly_bounded(cov, bound))
        throw InvalidInputError("higher_dim_witness: cover is not uniformly bounded by F");

    HigherDimWitness out = extract_crossing(f, cov);
    for (const Cell& a : out.component.cells())
        for (const Cell& b : out.component.cells())
            if (!bound.contains(f.at(a), f.at(b)))
                throw InternalContradictionError(
                    "higher_dim_witness: f(V) x f(V) escapes the bound entourage");
    return out;
}

std::pair<EBoxMap, Entourage> product_chain_ebox(const std::vector<ChainSpec>& chains) {
    if (chains.empty()) throw InvalidInputError("product_chain_ebox: need at least one chain");
    std::vector<int> dims;
    std::vector<Entourage> scales;
    std::vector<const GroundSet*> grounds;
    for (const auto& ch : chains) {
        dims.push_back(static_cast<int>(ch.points.size()));
        scales.push_back(ch.scale);
        grounds.push_back(&ch.scale.ground());
    }
    BoxShape shape(dims);
    Entourage product = product_entourage(scales);

    // product element index is row-major over factors, matching product_ground
    std::vector<int> table;
    table.reserve(static_cast<size_t>(shape.cell_count()));
    for (const Cell& c : all_cells(shape)) {
        int idx = 0;
        for (size_t i = 0; i < chains.size(); ++i)
            idx = idx * grounds[i]->size() +
                  chains[i].points[static_cast<size_t>(c[static_cast<int>(i)])];
        table.push_back(idx);
    }
    EBoxMap f(std::move(shape), product.ground(), std::move(table));
    if (!validate_ebox(f, product).ok)
        throw InternalContradictionError("product_chain_ebox: product map is not an E-box");
    return {std::move(f), std::move(product)};
}

Theorem1Verdict theorem1_demo(const std::vector<ChainSpec>& chains, const AbstractCover& cov,
                              const std::vector<Entourage>& bound_parts) {
    const int n = static_cast<int>(chains.size());
    if (static_cast<int>(bound_parts.size()) != n)
        throw InvalidInputError("theorem1_demo: one bound entourage per chain required");
    for (int i = 0; i < n; ++i) {
        const auto& ch = chains[static_cast<size_t>(i)];
        const auto& fi = bound_parts[static_cast<size_t>(i)];
        if (!(fi.ground() == ch.scale.ground()))
            throw InvalidInputError("theorem1_demo: bound ground mismatch at factor " +
                                    std::to_string(i + 1));
        if (fi.contains(ch.points.front(), ch.points.back()))
            throw InvalidInputError(
                "theorem1_demo: chain endpoints at factor " + std::to_string(i + 1) +
                " must lie outside the bound entourage");
    }

    auto [f, product] = product_chain_ebox(chains);
    if (!(cov.ground() == f.space))
        throw InvalidInputError("theorem1_demo: cover is not over the product ground");

    auto mult = cover_multiplicity(product, cov);
    Theorem1Verdict verdict{Theorem1Verdict::Branch::Multiplicity, mult.count,
                            f.space.label(mult.argmax), std::nullopt, std::nullopt, 0, "", ""};
    if (mult.count > n) return verdict;

    HigherDimWitness hit = extract_crossing(f, cov);
    const int axis = hit.crossing.axis;
    const auto& ch = chains[static_cast<size_t>(axis - 1)];
    const int m = static_cast<int>(ch.points.size()) - 1;

    // the crossing component projects onto {0,...,m} along its axis
    std::set<int> proj;
    for (const Cell& c : hit.component.cells()) proj.insert(c[axis - 1]);
    if (static_cast<int>(proj.size()) != m + 1 || *proj.begin() != 0 || *proj.rbegin() != m)
        throw InternalContradictionError("theorem1_demo: crossing projection is not onto");

    verdict.branch = Theorem1Verdict::Branch::Contradiction;
    verdict.crossing = std::move(hit.crossing);
    verdict.component = std::move(hit.component);
    verdict.axis = axis;
    verdict.endpoint_low = ch.scale.ground().label(ch.points.front());
    verdict.endpoint_high = ch.scale.ground().label(ch.points.back());
    return verdict;
}

namespace {

std::string torus_label(const std::vector<int>& coords) {
    std::string s;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coords[i]);
    }
    return s;
}

// all vectors of {lo..hi}^n in lexicographic order
std::vector<std::vector<int>> vectors_in_range(int n, int lo, int hi) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& v : out)
            for (int x = lo; x <= hi; ++x) {
                auto w = v;
                w.push_back(x);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

ZnEBox zn_action_ebox(const ZnActionConfig& cfg) {
    const int n = cfg.n, m = cfg.m, N = cfg.torus_size;
    BoxShape torus_box(std::vector<int>(static_cast<size_t>(n), N));

    std::vector<std::string> labels;
    for (const Cell& c : all_cells(torus_box)) labels.push_back(torus_label(c.coords));
    GroundSet torus(std::move(labels));

    auto translation = [&](const std::vector<int>& v) {
        std::vector<int> table;
        table.reserve(static_cast<size_t>(torus_box.cell_count()));
        for (const Cell& c : all_cells(torus_box)) {
            Cell y = c;
            for (int i = 0; i < n; ++i)
                y.coords[static_cast<size_t>(i)] =
                    (c[i] + v[static_cast<size_t>(i)] % N + N) % N;
            table.push_back(static_cast<int>(torus_box.index_of(y)));
        }
        return table;
    };

    // generators: translations by the nonzero vectors of {-1,0,1}^n
    std::vector<std::vector<int>> gens;
    for (const auto& v : vectors_in_range(n, -1, 1))
        if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; }))
            gens.push_back(translation(v));
    PermutationAction action(torus, std::move(gens));

    std::vector<int> all_gens(static_cast<size_t>(action.generator_count()));
    for (size_t i = 0; i < all_gens.size(); ++i) all_gens[i] = static_cast<int>(i);
    Entourage scale = group_entourage(action, all_gens, 1);

    // f(z) = base + z (mod N) on the box {0..m}^n
    BoxShape shape(std::vector<int>(static_cast<size_t>(n), m + 1));
    std::vector<int> table;
    for (const Cell& z : all_cells(shape)) {
        Cell y = z;
        for (int i = 0; i < n; ++i)
            y.coords[static_cast<size_t>(i)] = (cfg.base[static_cast<size_t>(i)] + z[i]) % N;
        table.push_back(static_cast<int>(torus_box.index_of(y)));
    }
    EBoxMap f(shape, torus, std::move(table));

    std::set<int> image(f.table.begin(), f.table.end());
    bool injective = image.size() == f.table.size();

    // h({0..m}^n \ {0}) acts without fixed points
    std::vector<std::vector<int>> forbidden;
    for (const auto& v : vectors_in_range(n, 0, m))
        if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; }))
            forbidden.push_back(translation(v));
    bool fpf = true;
    for (const auto& g : forbidden)
        for (size_t x = 0; x < g.size(); ++x)
            if (g[x] == static_cast<int>(x)) { fpf = false; break; }

    ZnEBox out{std::move(action), std::move(f), std::move(scale), injective, fpf};
    if (!validate_ebox(out.map, out.scale).ok)
        throw InternalContradictionError("zn_action_ebox: translation map is not an E-box");
    return out;
}

CrossingCardinality crossing_cardinality_check(const CellSet& c, int m) {
    for (int k : c.shape().dims())
        if (k != m + 1)
            throw InvalidInputError("crossing_cardinality_check: box is not (m+1)^n");
    auto hit = connects_opposite_faces(c);
    if (!hit)
        throw InvalidInputError("crossing_cardinality_check: set does not connect opposite faces");
    std::set<int> proj;
    for (const Cell& x : c.cells()) proj.insert(x[hit->first - 1]);
    return {static_cast<int>(c.size()) >= m + 1, hit->first,
            std::vector<int>(proj.begin(), proj.end())};
}

Theorem2Verdict theorem2_demo(const ZnActionConfig& cfg, const AbstractCover& cov,
                              const Entourage& bound) {
    ZnEBox box = zn_action_ebox(cfg);
    if (!(cov.ground() == box.map.space) || !(bound.ground() == box.map.space))
        throw InvalidInputError("theorem2_demo: cover/bound are not over the torus ground");
    if (!is_uniformly_bounded(cov, bound))
        throw InvalidInputError("theorem2_demo: cover is not uniformly bounded by F");
    const int m_bound = finitary_bound(bound);
    if (cfg.m < m_bound)
        throw InvalidInputError("theorem2_demo: m must be >= finitary_bound(F) = " +
                                std::to_string(m_bound));

    auto mult = cover_multiplicity(box.scale, cov);
    Theorem2Verdict verdict{Theorem2Verdict::Branch::Multiplicity, mult.count,
                            box.map.space.label(mult.argmax), std::nullopt, std::nullopt,
                            0, m_bound, 0};
    if (mult.count > cfg.n) return verdict;

    HigherDimWitness hit = extract_crossing(box.map, cov);
    int max_ball = 0;
    for (const Cell& c : hit.component.cells())
        max_ball = std::max(max_ball,
                            static_cast<int>(ball(bound, box.map.at(c)).size()));

    verdict.branch = Theorem2Verdict::Branch::Contradiction;
    verdict.crossing_size = static_cast<int>(hit.component.size());
    verdict.max_image_ball = max_ball;
    verdict.crossing = std::move(hit.crossing);
    verdict.component = std::move(hit.component);
    return verdict;
}

} // namespace coarsebox
