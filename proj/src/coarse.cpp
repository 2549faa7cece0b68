#include "coarsebox/coarse.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace coarsebox {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw InvalidInputError("GroundSet: size must be >= 1");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
        throw InvalidInputError("GroundSet: labels must be unique");
}

std::optional<int> GroundSet::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

int GroundSet::require_index(const std::string& label) const {
    if (auto i = index_of(label)) return *i;
    throw InvalidInputError("unknown element '" + label + "'");
}

PermutationAction::PermutationAction(GroundSet ground, std::vector<std::vector<int>> generators)
    : ground_(std::move(ground)), generators_(std::move(generators)) {
    const int n = ground_.size();
    for (const auto& g : generators_) {
        if (static_cast<int>(g.size()) != n)
            throw InvalidInputError("PermutationAction: table size mismatch");
        std::vector<bool> hit(static_cast<size_t>(n), false);
        for (int v : g) {
            if (v < 0 || v >= n || hit[static_cast<size_t>(v)])
                throw InvalidInputError("PermutationAction: table is not a bijection");
            hit[static_cast<size_t>(v)] = true;
        }
        std::vector<int> inv(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x) inv[static_cast<size_t>(g[static_cast<size_t>(x)])] = x;
        inverses_.push_back(std::move(inv));
    }
}

void Entourage::seal(std::vector<std::pair<int, int>> raw) {
    const int n = ground_.size();
    for (auto [x, y] : raw)
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw InvalidInputError("Entourage: pair index out of range");
    for (int x = 0; x < n; ++x) raw.emplace_back(x, x);
    size_t m = raw.size();
    for (size_t i = 0; i < m; ++i) raw.emplace_back(raw[i].second, raw[i].first);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    pairs_ = std::move(raw);
}

Entourage Entourage::from_pairs(GroundSet ground, std::vector<std::pair<int, int>> pairs) {
    Entourage e(Kind::Pairs, std::move(ground));
    e.seal(std::move(pairs));
    return e;
}

Entourage Entourage::from_metric(GroundSet ground, std::vector<std::vector<std::int64_t>> dist,
                                 std::int64_t radius) {
    const int n = ground.size();
    if (static_cast<int>(dist.size()) != n)
        throw InvalidInputError("Entourage: distance table size mismatch");
    for (const auto& row : dist)
        if (static_cast<int>(row.size()) != n)
            throw InvalidInputError("Entourage: distance table is not square");
    if (radius < 0) throw InvalidInputError("Entourage: radius must be >= 0");
    for (int x = 0; x < n; ++x) {
        if (dist[static_cast<size_t>(x)][static_cast<size_t>(x)] != 0)
            throw InvalidInputError("Entourage: nonzero self-distance");
        for (int y = 0; y < n; ++y)
            if (dist[static_cast<size_t>(x)][static_cast<size_t>(y)] !=
                dist[static_cast<size_t>(y)][static_cast<size_t>(x)])
                throw InvalidInputError("Entourage: asymmetric distance table");
    }
    Entourage e(Kind::Metric, std::move(ground));
    std::vector<std::pair<int, int>> raw;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (dist[static_cast<size_t>(x)][static_cast<size_t>(y)] <= radius)
                raw.emplace_back(x, y);
    e.seal(std::move(raw));
    e.dist_ = std::move(dist);
    e.radius_ = radius;
    return e;
}

Entourage Entourage::from_group(const PermutationAction& action, std::vector<int> gen_subset,
                                int word_length) {
    if (word_length < 0) throw InvalidInputError("Entourage: word length must be >= 0");
    const int n = action.ground().size();
    std::vector<std::vector<int>> step; // symmetrized generator tables
    for (int g : gen_subset) {
        if (g < 0 || g >= action.generator_count())
            throw InvalidInputError("Entourage: generator index out of range");
        step.push_back(action.generator(g));
        step.push_back(action.inverse(g));
    }
    // y in F^w x: grow reachability sets one generator application at a time
    std::vector<std::set<int>> reach(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) reach[static_cast<size_t>(x)].insert(x);
    for (int w = 0; w < word_length; ++w) {
        std::vector<std::set<int>> next = reach;
        for (int x = 0; x < n; ++x)
            for (int y : reach[static_cast<size_t>(x)])
                for (const auto& t : step)
                    next[static_cast<size_t>(x)].insert(t[static_cast<size_t>(y)]);
        reach = std::move(next);
    }
    Entourage e(Kind::Group, action.ground());
    std::vector<std::pair<int, int>> raw;
    for (int x = 0; x < n; ++x)
        for (int y : reach[static_cast<size_t>(x)]) raw.emplace_back(x, y);
    e.seal(std::move(raw));
    std::sort(gen_subset.begin(), gen_subset.end());
    for (int g : gen_subset) e.group_gens_.push_back(action.generator(g));
    e.word_length_ = word_length;
    return e;
}

Entourage Entourage::diagonal(GroundSet ground) {
    return from_pairs(std::move(ground), {});
}

bool Entourage::contains(int x, int y) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(x, y));
}

AbstractCover::AbstractCover(GroundSet ground,
                             std::vector<std::pair<std::string, std::vector<int>>> members)
    : ground_(std::move(ground)) {
    const int n = ground_.size();
    std::set<std::string> seen;
    for (auto& [id, set] : members) {
        if (!seen.insert(id).second)
            throw InvalidInputError("duplicate cover member id '" + id + "'");
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (int x : set)
            if (x < 0 || x >= n)
                throw InvalidInputError("cover member '" + id + "' has an out-of-range element");
        if (set.empty()) {
            dropped_empty_.push_back(id);
            continue;
        }
        members_.emplace_back(id, std::move(set));
    }
    std::sort(members_.begin(), members_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<bool> covered(static_cast<size_t>(n), false);
    for (const auto& [id, set] : members_)
        for (int x : set) covered[static_cast<size_t>(x)] = true;
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
        throw InvalidInputError("cover members do not cover the ground set");
}

std::vector<int> ball(const Entourage& e, int x) {
    if (x < 0 || x >= e.ground().size())
        throw InvalidInputError("ball: element index out of range");
    std::vector<int> out;
    const auto& ps = e.pairs();
    auto it = std::lower_bound(ps.begin(), ps.end(), std::make_pair(x, 0));
    for (; it != ps.end() && it->first == x; ++it) out.push_back(it->second);
    return out;
}

Entourage compose(const Entourage& e, const Entourage& f) {
    if (!(e.ground() == f.ground()))
        throw InvalidInputError("compose: ground sets differ");
    std::vector<std::pair<int, int>> raw;
    for (int x = 0; x < e.ground().size(); ++x)
        for (int y : ball(e, x))
            for (int z : ball(f, y)) raw.emplace_back(x, z);
    return Entourage::from_pairs(e.ground(), std::move(raw));
}

GroundSet product_ground(const std::vector<const GroundSet*>& parts) {
    if (parts.empty()) throw InvalidInputError("product_ground: need at least one factor");
    std::vector<std::string> labels{""};
    for (size_t i = 0; i < parts.size(); ++i) {
        std::vector<std::string> next;
        for (const std::string& prefix : labels)
            for (const std::string& l : parts[i]->labels())
                next.push_back(i == 0 ? l : prefix + "|" + l);
        labels = std::move(next);
    }
    return GroundSet(std::move(labels));
}

Entourage product_entourage(const std::vector<Entourage>& parts) {
    if (parts.empty()) throw InvalidInputError("product_entourage: need at least one factor");
    std::vector<const GroundSet*> grounds;
    for (const auto& p : parts) grounds.push_back(&p.ground());
    GroundSet ground = product_ground(grounds);
    const int n = ground.size();

    // decompose a product index into factor indices (row-major over factors)
    std::vector<int> sizes;
    for (const auto& p : parts) sizes.push_back(p.ground().size());
    auto split = [&](int idx) {
        std::vector<int> out(parts.size());
        for (size_t i = parts.size(); i-- > 0;) {
            out[i] = idx % sizes[i];
            idx /= sizes[i];
        }
        return out;
    };

    std::vector<std::pair<int, int>> raw;
    for (int x = 0; x < n; ++x) {
        auto xs = split(x);
        for (int y = x; y < n; ++y) {
            auto ys = split(y);
            bool related = true;
            for (size_t i = 0; i < parts.size(); ++i)
                if (!parts[i].contains(xs[i], ys[i])) { related = false; break; }
            if (related) raw.emplace_back(x, y);
        }
    }
    return Entourage::from_pairs(std::move(ground), std::move(raw));
}

Entourage group_entourage(const PermutationAction& action, std::vector<int> gen_subset,
                          int word_length) {
    return Entourage::from_group(action, std::move(gen_subset), word_length);
}

bool is_e_chain(const Entourage& e, const std::vector<int>& seq) {
    for (int x : seq)
        if (x < 0 || x >= e.ground().size())
            throw InvalidInputError("is_e_chain: element index out of range");
    for (size_t i = 1; i < seq.size(); ++i)
        if (!e.contains(seq[i - 1], seq[i])) return false;
    return true;
}

std::vector<int> chain_component(const Entourage& e, int x) {
    if (x < 0 || x >= e.ground().size())
        throw InvalidInputError("chain_component: element index out of range");
    std::vector<bool> seen(static_cast<size_t>(e.ground().size()), false);
    std::vector<int> stack{x}, out;
    seen[static_cast<size_t>(x)] = true;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        out.push_back(c);
        for (int y : ball(e, c))
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = true;
                stack.push_back(y);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> all_chain_components(const Entourage& e) {
    std::vector<std::vector<int>> out;
    std::vector<bool> done(static_cast<size_t>(e.ground().size()), false);
    for (int x = 0; x < e.ground().size(); ++x) {
        if (done[static_cast<size_t>(x)]) continue;
        auto comp = chain_component(e, x);
        for (int y : comp) done[static_cast<size_t>(y)] = true;
        out.push_back(std::move(comp));
    }
    return out;
}

CoverMultiplicity cover_multiplicity(const Entourage& e, const AbstractCover& cov) {
    if (!(e.ground() == cov.ground()))
        throw InvalidInputError("cover_multiplicity: ground sets differ");
    CoverMultiplicity best{-1, 0};
    for (int x = 0; x < e.ground().size(); ++x) {
        auto b = ball(e, x);
        int count = 0;
        for (const auto& [id, set] : cov.members()) {
            bool meets = std::any_of(b.begin(), b.end(), [&](int y) {
                return std::binary_search(set.begin(), set.end(), y);
            });
            if (meets) ++count;
        }
        if (count > best.count) best = {count, x};
    }
    return best;
}

bool is_uniformly_bounded(const AbstractCover& cov, const Entourage& e) {
    if (!(e.ground() == cov.ground()))
        throw InvalidInputError("is_uniformly_bounded: ground sets differ");
    for (const auto& [id, set] : cov.members())
        for (int x : set)
            for (int y : set)
                if (!e.contains(x, y)) return false;
    return true;
}

int finitary_bound(const Entourage& e) {
    int best = 0;
    for (int x = 0; x < e.ground().size(); ++x)
        best = std::max(best, static_cast<int>(ball(e, x).size()));
    return best;
}

std::optional<int> almost_free_witness(const GroundSet& ground,
                                       const std::vector<std::vector<int>>& forbidden) {
    for (int x = 0; x < ground.size(); ++x) {
        bool moved_by_all = true;
        for (const auto& g : forbidden) {
            if (static_cast<int>(g.size()) != ground.size())
                throw InvalidInputError("almost_free_witness: table size mismatch");
            if (g[static_cast<size_t>(x)] == x) { moved_by_all = false; break; }
        }
        if (moved_by_all) return x;
    }
    return std::nullopt;
}

} // namespace coarsebox
