#include "coarsebox/json_io.hpp"

#include <fstream>

namespace coarsebox::io {

namespace {

void expect(bool cond, const std::string& where, const std::string& what) {
    if (!cond) throw InvalidInputError(where + ": " + what);
}

std::vector<int> int_array(const json& j, const std::string& where) {
    expect(j.is_array(), where, "expected an array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        expect(v.is_number_integer(), where, "expected an integer");
        out.push_back(v.get<int>());
    }
    return out;
}

} // namespace

const json& field(const json& j, const std::string& key, const std::string& where) {
    expect(j.is_object(), where, "expected an object");
    auto it = j.find(key);
    expect(it != j.end(), where, "missing field '" + key + "'");
    return *it;
}

int int_field(const json& j, const std::string& key, const std::string& where) {
    const json& v = field(j, key, where);
    expect(v.is_number_integer(), where + "." + key, "expected an integer");
    return v.get<int>();
}

json to_json(const BoxShape& s) { return json{{"dims", s.dims()}}; }

BoxShape shape_from_json(const json& j, const std::string& where) {
    return BoxShape(int_array(field(j, "dims", where), where + ".dims"));
}

json to_json(const Cell& c) { return json(c.coords); }

Cell cell_from_json(const json& j, const std::string& where) {
    return Cell(int_array(j, where));
}

json to_json(const CellSet& a) {
    json cells = json::array();
    for (const Cell& c : a.cells()) cells.push_back(to_json(c));
    return json{{"shape", to_json(a.shape())}, {"cells", cells}};
}

CellSet cellset_from_json(const json& j, const std::string& where) {
    BoxShape shape = shape_from_json(field(j, "shape", where), where + ".shape");
    const json& cells = field(j, "cells", where);
    expect(cells.is_array(), where + ".cells", "expected an array");
    std::vector<Cell> out;
    for (const auto& c : cells) out.push_back(cell_from_json(c, where + ".cells[]"));
    return CellSet(std::move(shape), std::move(out));
}

json to_json(const Cover& cov) {
    json members = json::object();
    for (const auto& [id, cells] : cov.members()) {
        json arr = json::array();
        for (const Cell& c : cells.cells()) arr.push_back(to_json(c));
        members[id] = arr;
    }
    return json{{"shape", to_json(cov.shape())}, {"members", members}};
}

Cover cover_from_json(const json& j, const std::string& where) {
    BoxShape shape = shape_from_json(field(j, "shape", where), where + ".shape");
    const json& members = field(j, "members", where);
    expect(members.is_object(), where + ".members", "expected an object");
    std::vector<std::pair<std::string, CellSet>> out;
    for (auto it = members.begin(); it != members.end(); ++it) {
        expect(it.value().is_array(), where + ".members." + it.key(), "expected an array");
        std::vector<Cell> cells;
        for (const auto& c : it.value())
            cells.push_back(cell_from_json(c, where + ".members." + it.key()));
        out.emplace_back(it.key(), CellSet(shape, std::move(cells)));
    }
    return Cover(std::move(shape), std::move(out));
}

json to_json(const DichotomyCertificate& cert) {
    if (const auto* cr = std::get_if<Crossing>(&cert)) {
        json chain = json::array();
        for (const Cell& c : cr->chain) chain.push_back(to_json(c));
        return json{{"kind", "crossing"},
                    {"member_id", cr->member_id},
                    {"axis", cr->axis},
                    {"chain", chain}};
    }
    const auto& w = std::get<Witness>(cert);
    json cells = json::array();
    for (const Cell& c : w.cells.cells()) cells.push_back(to_json(c));
    return json{{"kind", "witness"}, {"cells", cells}, {"touched_ids", w.touched_ids}};
}

DichotomyCertificate certificate_from_json(const json& j, const BoxShape& shape,
                                           const std::string& where) {
    const json& kind = field(j, "kind", where);
    expect(kind.is_string(), where + ".kind", "expected a string");
    if (kind == "crossing") {
        Crossing cr;
        const json& id = field(j, "member_id", where);
        expect(id.is_string(), where + ".member_id", "expected a string");
        cr.member_id = id.get<std::string>();
        cr.axis = int_field(j, "axis", where);
        const json& chain = field(j, "chain", where);
        expect(chain.is_array(), where + ".chain", "expected an array");
        for (const auto& c : chain) cr.chain.push_back(cell_from_json(c, where + ".chain[]"));
        return cr;
    }
    if (kind == "witness") {
        const json& cells = field(j, "cells", where);
        expect(cells.is_array(), where + ".cells", "expected an array");
        std::vector<Cell> cs;
        for (const auto& c : cells) cs.push_back(cell_from_json(c, where + ".cells[]"));
        const json& ids = field(j, "touched_ids", where);
        expect(ids.is_array(), where + ".touched_ids", "expected an array");
        std::vector<std::string> touched;
        for (const auto& v : ids) {
            expect(v.is_string(), where + ".touched_ids[]", "expected a string");
            touched.push_back(v.get<std::string>());
        }
        return Witness{CellSet(shape, std::move(cs)), std::move(touched)};
    }
    throw InvalidInputError(where + ".kind: expected 'crossing' or 'witness'");
}

json to_json(const GroundSet& g) { return json(g.labels()); }

GroundSet ground_from_json(const json& j, const std::string& where) {
    expect(j.is_array(), where, "expected an array of labels");
    std::vector<std::string> labels;
    for (const auto& v : j) {
        expect(v.is_string(), where, "expected a string label");
        labels.push_back(v.get<std::string>());
    }
    return GroundSet(std::move(labels));
}

json to_json(const Entourage& e) {
    json out{{"ground", to_json(e.ground())}};
    switch (e.kind()) {
        case Entourage::Kind::Pairs: {
            out["kind"] = "pairs";
            json pairs = json::array();
            for (auto [x, y] : e.pairs())
                if (x < y) pairs.push_back(json::array({x, y}));
            out["pairs"] = pairs;
            break;
        }
        case Entourage::Kind::Metric:
            out["kind"] = "metric";
            out["dist"] = e.metric_dist();
            out["radius"] = e.metric_radius();
            break;
        case Entourage::Kind::Group:
            out["kind"] = "group";
            out["generators"] = e.group_generators();
            out["word_length"] = e.word_length();
            break;
    }
    return out;
}

Entourage entourage_from_json(const json& j, const std::string& where) {
    GroundSet ground = ground_from_json(field(j, "ground", where), where + ".ground");
    const json& kind = field(j, "kind", where);
    expect(kind.is_string(), where + ".kind", "expected a string");
    if (kind == "pairs") {
        const json& pairs = field(j, "pairs", where);
        expect(pairs.is_array(), where + ".pairs", "expected an array");
        std::vector<std::pair<int, int>> ps;
        for (const auto& p : pairs) {
            auto xy = int_array(p, where + ".pairs[]");
            expect(xy.size() == 2, where + ".pairs[]", "expected a pair");
            ps.emplace_back(xy[0], xy[1]);
        }
        return Entourage::from_pairs(std::move(ground), std::move(ps));
    }
    if (kind == "metric") {
        const json& dist = field(j, "dist", where);
        expect(dist.is_array(), where + ".dist", "expected an array of rows");
        std::vector<std::vector<std::int64_t>> d;
        for (const auto& row : dist) {
            expect(row.is_array(), where + ".dist[]", "expected an array");
            std::vector<std::int64_t> r;
            for (const auto& v : row) {
                expect(v.is_number_integer(), where + ".dist[][]", "expected an integer");
                r.push_back(v.get<std::int64_t>());
            }
            d.push_back(std::move(r));
        }
        const json& radius = field(j, "radius", where);
        expect(radius.is_number_integer(), where + ".radius", "expected an integer");
        return Entourage::from_metric(std::move(ground), std::move(d),
                                      radius.get<std::int64_t>());
    }
    if (kind == "group") {
        const json& gens = field(j, "generators", where);
        expect(gens.is_array(), where + ".generators", "expected an array");
        std::vector<std::vector<int>> tables;
        for (const auto& g : gens) tables.push_back(int_array(g, where + ".generators[]"));
        int w = j.contains("word_length") ? int_field(j, "word_length", where) : 1;
        PermutationAction action(std::move(ground), std::move(tables));
        std::vector<int> all(static_cast<size_t>(action.generator_count()));
        for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        return Entourage::from_group(action, std::move(all), w);
    }
    throw InvalidInputError(where + ".kind: expected 'pairs', 'metric' or 'group'");
}

json to_json(const AbstractCover& cov) {
    json members = json::object();
    for (const auto& [id, set] : cov.members()) members[id] = set;
    return json{{"ground", to_json(cov.ground())}, {"members", members}};
}

AbstractCover abstract_cover_from_json(const json& j, const GroundSet& ground,
                                       const std::string& where) {
    const json& members = field(j, "members", where);
    expect(members.is_object(), where + ".members", "expected an object");
    std::vector<std::pair<std::string, std::vector<int>>> out;
    for (auto it = members.begin(); it != members.end(); ++it)
        out.emplace_back(it.key(), int_array(it.value(), where + ".members." + it.key()));
    return AbstractCover(ground, std::move(out));
}

json to_json(const EBoxMap& f) {
    return json{{"shape", to_json(f.shape)}, {"space", to_json(f.space)}, {"table", f.table}};
}

EBoxMap ebox_from_json(const json& j, const std::string& where) {
    BoxShape shape = shape_from_json(field(j, "shape", where), where + ".shape");
    GroundSet space = ground_from_json(field(j, "space", where), where + ".space");
    auto table = int_array(field(j, "table", where), where + ".table");
    return EBoxMap(std::move(shape), std::move(space), std::move(table));
}

json to_json(const Theorem1Verdict& v) {
    if (v.branch == Theorem1Verdict::Branch::Multiplicity)
        return json{{"branch", "multiplicity"},
                    {"multiplicity", v.multiplicity},
                    {"location", v.location}};
    return json{{"branch", "contradiction"},
                {"axis", v.axis},
                {"endpoint_low", v.endpoint_low},
                {"endpoint_high", v.endpoint_high},
                {"certificate", to_json(DichotomyCertificate(*v.crossing))},
                {"component", to_json(*v.component)}};
}

json to_json(const Theorem2Verdict& v) {
    if (v.branch == Theorem2Verdict::Branch::Multiplicity)
        return json{{"branch", "multiplicity"},
                    {"multiplicity", v.multiplicity},
                    {"location", v.location},
                    {"ball_bound", v.ball_bound}};
    return json{{"branch", "contradiction"},
                {"crossing_size", v.crossing_size},
                {"ball_bound", v.ball_bound},
                {"max_image_ball", v.max_image_ball},
                {"certificate", to_json(DichotomyCertificate(*v.crossing))},
                {"component", to_json(*v.component)}};
}

std::string canonical_dump(const json& j, bool pretty) {
    return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidInputError("malformed JSON in '" + path + "': " + e.what());
    }
}

void write_file(const std::string& path, const json& j, bool pretty) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cannot write '" + path + "'");
    out << canonical_dump(j, pretty);
}

} // namespace coarsebox::io
