// Batch front-end: reads box/cover/space/action descriptions from JSON files,
// runs the solvers and demonstrators, and emits canonical JSON artifacts.
//
// Exit codes: 0 success/valid, 1 verification failure, 2 invalid input,
// 3 internal contradiction (a branch the theorems forbid; bug tripwire).

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coarsebox/certify.hpp"
#include "coarsebox/json_io.hpp"

using namespace coarsebox;
using coarsebox::io::json;

namespace {

void emit(const json& j, const std::string& output, bool pretty) {
    if (output.empty())
        std::cout << io::canonical_dump(j, pretty);
    else
        io::write_file(output, j, pretty);
}

// splitmix64; all generation randomness flows through this
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

BoxShape parse_shape(const std::string& text) {
    std::vector<int> dims;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',' || ch == 'x') {
            if (!cur.empty()) dims.push_back(std::stoi(cur));
            cur.clear();
        } else if (ch >= '0' && ch <= '9') {
            cur += ch;
        } else {
            throw InvalidInputError("bad shape '" + text + "'");
        }
    }
    return BoxShape(std::move(dims));
}

json cells_to_json(const std::vector<Cell>& cells) {
    json out = json::array();
    for (const Cell& c : cells) out.push_back(io::to_json(c));
    return out;
}

Cover generate_cover(const std::string& kind, const BoxShape& shape, int members, int side,
                     std::uint64_t seed) {
    std::vector<std::pair<std::string, std::vector<Cell>>> built;
    if (kind == "partition-cover" || kind == "random-cover") {
        if (members < 1) throw InvalidInputError("generate: --members must be >= 1");
        built.resize(static_cast<size_t>(members));
        for (int p = 0; p < members; ++p) built[static_cast<size_t>(p)].first = "m" + std::to_string(p);
        for (std::uint64_t i = 0; i < shape.cell_count(); ++i) {
            std::uint64_t h = mix(seed ^ mix(i + 1));
            auto owner = static_cast<size_t>(h % static_cast<std::uint64_t>(members));
            built[owner].second.push_back(shape.cell_at(i));
            if (kind == "random-cover" && members > 1 && (h >> 32) % 4 == 0) {
                // seeded overlap: also place the cell in a second member
                auto extra = (owner + 1 + static_cast<size_t>((h >> 16) %
                              static_cast<std::uint64_t>(members - 1))) %
                             static_cast<size_t>(members);
                built[extra].second.push_back(shape.cell_at(i));
            }
        }
    } else if (kind == "grid-cover") {
        if (side < 1) throw InvalidInputError("generate: --side must be >= 1");
        for (std::uint64_t i = 0; i < shape.cell_count(); ++i) {
            Cell c = shape.cell_at(i);
            std::string id = "b";
            for (int k = 0; k < shape.dimension(); ++k)
                id += (k ? "_" : "") + std::to_string(c[k] / side);
            auto it = std::find_if(built.begin(), built.end(),
                                   [&](const auto& m) { return m.first == id; });
            if (it == built.end()) {
                built.emplace_back(id, std::vector<Cell>{c});
            } else {
                it->second.push_back(c);
            }
        }
    } else {
        throw InvalidInputError("generate: unknown kind '" + kind + "'");
    }
    std::vector<std::pair<std::string, CellSet>> out;
    for (auto& [id, cells] : built)
        out.emplace_back(id, CellSet(shape, std::move(cells)));
    return Cover(shape, std::move(out));
}

int run(int argc, char** argv) {
    CLI::App app{"certificate-producing decision procedures for box covers and finite coarse spaces"};
    app.require_subcommand(1);

    std::string input, output, kind, shape_text;
    bool pretty = false;
    std::uint64_t seed = 0, cap = 4096;
    int members = 2, side = 2;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("--input", input, "input JSON file")->required();
        cmd->add_option("--output", output, "output JSON file (stdout when omitted)");
        cmd->add_flag("--pretty", pretty, "indent the emitted JSON");
    };

    auto* c_dich = app.add_subcommand("dichotomy", "crossing/witness certificate for a box cover");
    add_common(c_dich, true);
    auto* c_hex = app.add_subcommand("hex", "Gale Hex corollary crossing for a cover of <= n members");
    add_common(c_hex, true);
    auto* c_comp = app.add_subcommand("components", "chain components of a cell set");
    add_common(c_comp, true);
    auto* c_mult = app.add_subcommand("multiplicity", "max unit-cube multiplicity of a cover");
    add_common(c_mult, true);
    auto* c_zero = app.add_subcommand("zero-dim", "zero-dimension chain check and component cover");
    add_common(c_zero, true);
    auto* c_ebox = app.add_subcommand("ebox-verify", "check a map is an E-box");
    add_common(c_ebox, true);
    auto* c_prod = app.add_subcommand("product-demo", "product-of-chains lower-bound demonstrator");
    add_common(c_prod, true);
    auto* c_zn = app.add_subcommand("zn-demo", "torus-translation lower-bound demonstrator");
    add_common(c_zn, true);
    auto* c_verify = app.add_subcommand("verify", "re-check an emitted certificate artifact");
    add_common(c_verify, true);
    c_verify->add_option("--cap", cap, "brute-force cell cap");
    auto* c_gen = app.add_subcommand("generate", "seeded cover corpus generation");
    add_common(c_gen, false);
    c_gen->add_option("--kind", kind, "partition-cover | grid-cover | random-cover")->required();
    c_gen->add_option("--shape", shape_text, "box shape, e.g. 3x3")->required();
    c_gen->add_option("--members", members, "member count (partition/random)");
    c_gen->add_option("--side", side, "block side (grid)");
    c_gen->add_option("--seed", seed, "generation seed");

    CLI11_PARSE(app, argc, argv);

    if (c_dich->parsed() || c_hex->parsed()) {
        Cover cov = io::cover_from_json(io::parse_file(input), "cover");
        DichotomyCertificate cert =
            c_hex->parsed() ? DichotomyCertificate(hex_corollary_check(cov)) : dichotomy(cov);
        auto check = verify_certificate(cov, cert);
        if (!check.ok)
            throw InternalContradictionError("emitted certificate failed verification: " +
                                             check.violation);
        emit(json{{"cover", io::to_json(cov)}, {"certificate", io::to_json(cert)}}, output, pretty);
        return 0;
    }
    if (c_comp->parsed()) {
        CellSet a = io::cellset_from_json(io::parse_file(input), "cellset");
        json parts = json::array();
        for (const CellSet& part : chain_components(a)) parts.push_back(cells_to_json(part.cells()));
        emit(json{{"shape", io::to_json(a.shape())}, {"components", parts}}, output, pretty);
        return 0;
    }
    if (c_mult->parsed()) {
        Cover cov = io::cover_from_json(io::parse_file(input), "cover");
        UnitMultiplicity um = unit_multiplicity(cov);
        emit(json{{"count", um.count},
                  {"cube", cells_to_json(um.cube.cells())},
                  {"touched_ids", um.touched_ids}},
             output, pretty);
        return 0;
    }
    if (c_zero->parsed()) {
        json j = io::parse_file(input);
        Entourage e = io::entourage_from_json(io::field(j, "E", "zero-dim"), "E");
        Entourage f = io::entourage_from_json(io::field(j, "F", "zero-dim"), "F");
        if (!(e.ground() == f.ground()))
            throw InvalidInputError("zero-dim: E and F must share a ground set");
        ZeroDimCheck check = zero_dim_check_at_scale(e, f);
        json chain = json::array();
        for (int x : check.counterexample_chain) chain.push_back(e.ground().label(x));
        emit(json{{"holds", check.ok},
                  {"counterexample_chain", chain},
                  {"cover", io::to_json(zero_dim_cover(e))}},
             output, pretty);
        return 0;
    }
    if (c_ebox->parsed()) {
        json j = io::parse_file(input);
        EBoxMap f = io::ebox_from_json(io::field(j, "ebox", "ebox-verify"), "ebox");
        Entourage e = io::entourage_from_json(io::field(j, "E", "ebox-verify"), "E");
        EBoxCheck check = validate_ebox(f, e);
        emit(json{{"valid", check.ok}, {"diagnostic", check.diagnostic}}, output, pretty);
        return check.ok ? 0 : 1;
    }
    if (c_prod->parsed()) {
        json j = io::parse_file(input);
        const json& jchains = io::field(j, "chains", "product-demo");
        if (!jchains.is_array() || jchains.empty())
            throw InvalidInputError("product-demo: 'chains' must be a nonempty array");
        std::vector<ChainSpec> chains;
        std::vector<Entourage> bounds;
        for (const auto& jc : jchains) {
            Entourage scale = io::entourage_from_json(io::field(jc, "scale", "chain"), "chain.scale");
            const json& pts = io::field(jc, "points", "chain");
            std::vector<int> points;
            for (const auto& p : pts) points.push_back(p.get<int>());
            chains.emplace_back(std::move(points), std::move(scale));
        }
        for (const auto& jf : io::field(j, "F_parts", "product-demo"))
            bounds.push_back(io::entourage_from_json(jf, "F_parts[]"));
        std::vector<const GroundSet*> grounds;
        for (const auto& ch : chains) grounds.push_back(&ch.scale.ground());
        GroundSet product = product_ground(grounds);
        AbstractCover cov =
            io::abstract_cover_from_json(io::field(j, "cover", "product-demo"), product, "cover");
        emit(io::to_json(theorem1_demo(chains, cov, bounds)), output, pretty);
        return 0;
    }
    if (c_zn->parsed()) {
        json j = io::parse_file(input);
        ZnActionConfig cfg(io::int_field(j, "n", "zn-demo"), io::int_field(j, "m", "zn-demo"),
                           io::int_field(j, "N", "zn-demo"),
                           [&] {
                               std::vector<int> base;
                               for (const auto& v : io::field(j, "base", "zn-demo"))
                                   base.push_back(v.get<int>());
                               return base;
                           }());
        if (j.contains("cover") && j.contains("F")) {
            ZnEBox box = zn_action_ebox(cfg);
            AbstractCover cov = io::abstract_cover_from_json(j.at("cover"), box.map.space, "cover");
            Entourage f = io::entourage_from_json(j.at("F"), "F");
            emit(io::to_json(theorem2_demo(cfg, cov, f)), output, pretty);
        } else {
            ZnEBox box = zn_action_ebox(cfg);
            emit(json{{"ebox", io::to_json(box.map)},
                      {"E", io::to_json(box.scale)},
                      {"injective", box.injective},
                      {"fixed_point_free", box.translations_fixed_point_free}},
                 output, pretty);
        }
        return 0;
    }
    if (c_verify->parsed()) {
        json j = io::parse_file(input);
        Cover cov = io::cover_from_json(io::field(j, "cover", "artifact"), "artifact.cover");
        DichotomyCertificate cert = io::certificate_from_json(
            io::field(j, "certificate", "artifact"), cov.shape(), "artifact.certificate");
        auto check = verify_certificate(cov, cert);
        emit(json{{"ok", check.ok}, {"violation", check.violation}}, output, pretty);
        return check.ok ? 0 : 1;
    }
    if (c_gen->parsed()) {
        Cover cov = generate_cover(kind, parse_shape(shape_text), members, side, seed);
        json j = io::to_json(cov);
        j["meta"] = json{{"kind", kind}, {"seed", seed}};
        emit(j, output, pretty);
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InternalContradictionError& e) {
        std::cerr << "internal contradiction: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
