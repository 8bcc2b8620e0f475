#include "mpres/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mpres/errors.hpp"

namespace mpres {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

Vertex as_vertex(const json& j) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw ValidationError("expected a nonnegative integer, got " + j.dump());
    }
    auto v = j.get<unsigned long long>();
    if (v > 0xffffffffULL) {
        throw ValidationError("vertex index out of range");
    }
    return static_cast<Vertex>(v);
}

std::vector<Vertex> as_vertices(const json& j) {
    if (!j.is_array()) {
        throw ValidationError("expected an array of vertices, got " + j.dump());
    }
    std::vector<Vertex> out;
    out.reserve(j.size());
    for (const json& e : j) {
        out.push_back(as_vertex(e));
    }
    return out;
}

std::vector<std::vector<Vertex>> as_vertex_lists(const json& j) {
    if (!j.is_array()) {
        throw ValidationError("expected an array of vertex lists");
    }
    std::vector<std::vector<Vertex>> out;
    for (const json& e : j) {
        out.push_back(as_vertices(e));
    }
    return out;
}

std::string dump(const json& j) { return j.dump(1) + "\n"; }

json simplex_list(std::span<const Simplex> simplices) {
    json out = json::array();
    for (const Simplex& s : simplices) {
        out.push_back(s);
    }
    return out;
}

std::uint32_t as_prime(const json& j) {
    Vertex p = as_vertex(j);
    if (!is_prime(p)) {
        throw ValidationError(std::to_string(p) + " is not prime");
    }
    return p;
}

std::vector<Simplex> as_simplices(const json& j) {
    std::vector<Simplex> out;
    for (auto& s : as_vertex_lists(j)) {
        out.push_back(make_simplex(std::move(s)));
    }
    return out;
}

json report_value(const VerificationReport& r) {
    json checks = json::array();
    for (const Check& c : r.checks) {
        checks.push_back(json{{"name", c.name},
                              {"simplex", c.subject},
                              {"classification", c.classification},
                              {"status", c.passed ? "pass" : "fail"},
                              {"ranks", c.ranks}});
    }
    return json{{"passed", r.passed()}, {"failures", r.failure_count()}, {"checks", checks}};
}

}  // namespace

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ValidationError("cannot write " + path.string());
    }
    out << text;
}

ComplexPtr parse_complex(std::string_view text) {
    json j = parse(text);
    std::vector<std::string> labels;
    if (j.is_object() && j.contains("vertices")) {
        for (const json& label : j.at("vertices")) {
            labels.push_back(label.is_string() ? label.get<std::string>() : label.dump());
        }
    }
    std::string name = j.is_object() && j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>()
                                                                                        : std::string{};
    auto maximal = as_vertex_lists(field(j, "maximal_simplices"));
    for (const auto& list : maximal) {
        for (Vertex v : list) {
            if (!labels.empty() && v >= labels.size()) {
                throw ValidationError("vertex " + std::to_string(v) + " has no label");
            }
        }
    }
    return closure_from_maximal(maximal, std::move(labels), std::move(name));
}

ComplexPtr load_complex(const fs::path& path) { return parse_complex(read_text(path)); }

std::string complex_json(const SimplicialComplex& k) {
    json j;
    j["name"] = k.name();
    if (!k.labels().empty()) {
        j["vertices"] = k.labels();
    }
    j["maximal_simplices"] = simplex_list(k.maximal_simplices());
    return dump(j);
}

SimplicialMap parse_map(std::string_view text, ComplexPtr domain, ComplexPtr codomain) {
    return SimplicialMap(std::move(domain), std::move(codomain), as_vertices(field(parse(text), "vertex_map")));
}

SimplicialMap load_map(const fs::path& path) {
    std::string text = read_text(path);
    json j = parse(text);
    const fs::path dir = path.parent_path();
    auto domain = load_complex(dir / field(j, "domain").get<std::string>());
    auto codomain = load_complex(dir / field(j, "codomain").get<std::string>());
    return parse_map(text, domain, codomain);
}

std::string map_json(const SimplicialMap& f, const std::string& domain_ref, const std::string& codomain_ref) {
    return dump(json{{"domain", domain_ref}, {"codomain", codomain_ref}, {"vertex_map", f.vertex_map()}});
}

GroupAction parse_action(std::string_view text, ComplexPtr complex) {
    json j = parse(text);
    return GroupAction(std::move(complex), as_prime(field(j, "p")), as_vertex_lists(field(j, "generators")));
}

GroupAction load_action(const fs::path& path) {
    std::string text = read_text(path);
    auto complex = load_complex(path.parent_path() / field(parse(text), "complex").get<std::string>());
    return parse_action(text, complex);
}

std::string action_json(const GroupAction& a, const std::string& complex_ref) {
    json gens = json::array();
    for (const Permutation& g : a.generators()) {
        gens.push_back(g);
    }
    return dump(json{{"complex", complex_ref}, {"p", a.prime()}, {"generators", gens}});
}

std::string cover_json(const Cover& c) {
    json voltage = json::object();
    auto edges = c.base->simplices(1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        voltage[std::to_string(edges[e][0]) + "," + std::to_string(edges[e][1])] = c.voltage.voltages[e];
    }
    json deck = json::array();
    for (const Permutation& g : c.deck.generators()) {
        deck.push_back(g);
    }
    return dump(json{{"prime", c.prime},
                     {"rank", c.rank},
                     {"sheets", c.sheet_count},
                     {"projection", c.projection.vertex_map()},
                     {"deck_generators", deck},
                     {"voltage", voltage}});
}

std::string report_json(const VerificationReport& r) { return dump(report_value(r)); }

VerificationReport parse_report(std::string_view text) {
    json j = parse(text);
    VerificationReport r;
    for (const json& c : field(j, "checks")) {
        Check check;
        check.name = field(c, "name").get<std::string>();
        check.subject = field(c, "simplex").get<std::string>();
        check.classification = field(c, "classification").get<std::string>();
        check.passed = field(c, "status").get<std::string>() == "pass";
        for (const json& n : field(c, "ranks")) {
            check.ranks.push_back(n.get<std::size_t>());
        }
        r.checks.push_back(std::move(check));
    }
    return r;
}

void save_cover(const Cover& c, const fs::path& dir) {
    write_text(dir / "base.json", complex_json(*c.base));
    write_text(dir / "total.json", complex_json(*c.total));
    write_text(dir / "projection.json", map_json(c.projection, "total.json", "base.json"));
    write_text(dir / "action.json", action_json(c.deck, "total.json"));
    write_text(dir / "cover.json", cover_json(c));
}

void save_resolution(const ResolutionStage& s, const fs::path& dir) {
    write_text(dir / "base.json", complex_json(*s.base));
    write_text(dir / "subdivision.json", complex_json(*s.subdivision));
    write_text(dir / "total.json", complex_json(*s.total));
    write_text(dir / "orbit_map.json", map_json(s.orbit_map, "total.json", "subdivision.json"));
    write_text(dir / "action.json", action_json(s.action, "total.json"));
    write_text(dir / "report.json", report_json(s.report));
    json pieces = json::array();
    for (const ResolvedSimplex& r : s.pieces) {
        pieces.push_back(json{{"simplex", r.simplex},
                              {"rank", r.rank},
                              {"first_generator", r.first_generator},
                              {"apex", r.apex},
                              {"barycenter", r.barycenter},
                              {"boundary_vertices", r.boundary_vertices},
                              {"cover_vertices", r.cover_vertices}});
    }
    write_text(dir / "stage.json", dump(json{{"kind", "resolution"},
                                             {"prime", s.prime},
                                             {"m", s.generator_count()},
                                             {"carriers", simplex_list(s.carriers)},
                                             {"pieces", pieces}}));
}

ResolutionStage load_resolution(const fs::path& dir) {
    json meta = parse(read_text(dir / "stage.json"));
    if (field(meta, "kind") != "resolution") {
        throw ValidationError(dir.string() + " does not hold a resolution stage");
    }
    const std::uint32_t p = as_prime(field(meta, "prime"));
    auto base = load_complex(dir / "base.json");
    auto sub = load_complex(dir / "subdivision.json");
    auto total = load_complex(dir / "total.json");
    auto carriers = as_simplices(field(meta, "carriers"));
    if (carriers.size() != sub->vertex_count()) {
        throw ValidationError("carrier list does not match the subdivision");
    }
    for (const Simplex& c : carriers) {
        if (!base->contains(c)) {
            throw ValidationError("carrier " + base->simplex_label(c) + " is not a base simplex");
        }
    }
    std::vector<ResolvedSimplex> pieces;
    for (const json& j : field(meta, "pieces")) {
        ResolvedSimplex r;
        r.simplex = make_simplex(as_vertices(field(j, "simplex")));
        r.rank = field(j, "rank").get<std::size_t>();
        r.first_generator = field(j, "first_generator").get<std::size_t>();
        r.apex = as_vertex(field(j, "apex"));
        r.barycenter = as_vertex(field(j, "barycenter"));
        r.boundary_vertices = as_vertices(field(j, "boundary_vertices"));
        r.cover_vertices = as_vertices(field(j, "cover_vertices"));
        pieces.push_back(std::move(r));
    }
    GroupAction action = parse_action(read_text(dir / "action.json"), total);
    if (action.prime() != p) {
        throw ValidationError("action prime differs from the stage prime");
    }
    ResolutionStage s{p,
                      base,
                      sub,
                      std::move(carriers),
                      total,
                      std::move(action),
                      parse_map(read_text(dir / "orbit_map.json"), total, sub),
                      std::move(pieces),
                      {}};
    s.report = verify_resolution(s);
    return s;
}

void save_tower(const std::vector<TowerStage>& stages, const fs::path& dir) {
    json entries = json::array();
    for (const TowerStage& s : stages) {
        const std::string name = "stage_" + std::to_string(s.index);
        const fs::path sd = dir / name;
        json files = json::array({"complex.json", "base.json", "check_base.json", "projection.json", "action.json",
                                  "report.json", "stage.json"});
        write_text(sd / "complex.json", complex_json(*s.complex));
        write_text(sd / "base.json", complex_json(*s.base));
        write_text(sd / "check_base.json", complex_json(*s.check_base));
        write_text(sd / "projection.json", map_json(s.projection, "complex.json", "base.json"));
        write_text(sd / "action.json", action_json(s.action, "complex.json"));
        write_text(sd / "report.json", report_json(s.report));
        json meta{{"kind", "tower_stage"},
                  {"index", s.index},
                  {"prime", s.prime},
                  {"generators_per_stage", s.generators_per_stage},
                  {"carriers", simplex_list(s.carriers)}};
        if (s.refined_previous && s.bonding) {
            write_text(sd / "refined_previous.json", complex_json(*s.refined_previous->complex));
            write_text(sd / "refined_projection.json",
                       map_json(s.refined_previous->projection, "refined_previous.json", "base.json"));
            write_text(sd / "bonding_map.json", map_json(*s.bonding, "complex.json", "refined_previous.json"));
            files.push_back("refined_previous.json");
            files.push_back("refined_projection.json");
            files.push_back("bonding_map.json");
            meta["previous_carriers"] = simplex_list(s.previous_carriers);
            meta["refined_faces"] = simplex_list(s.refined_previous->faces);
        }
        write_text(sd / "stage.json", dump(meta));
        entries.push_back(json{{"index", s.index},
                               {"m_i", s.generators_per_stage.back()},
                               {"m_total", s.total_generators()},
                               {"passed", s.report.passed()},
                               {"directory", name},
                               {"files", files}});
    }
    write_text(dir / "manifest.json",
               dump(json{{"kind", "tower"},
                         {"prime", stages.empty() ? 0 : stages.front().prime},
                         {"depth", stages.size()},
                         {"convention", "new resolution pulled back over the accumulated stage"},
                         {"stages", entries}}));
}

std::vector<TowerStage> load_tower(const fs::path& dir) {
    json manifest = parse(read_text(dir / "manifest.json"));
    if (field(manifest, "kind") != "tower") {
        throw ValidationError(dir.string() + " does not hold a tower");
    }
    std::vector<TowerStage> stages;
    for (const json& entry : field(manifest, "stages")) {
        const fs::path sd = dir / field(entry, "directory").get<std::string>();
        json meta = parse(read_text(sd / "stage.json"));
        const std::uint32_t p = as_prime(field(meta, "prime"));
        auto complex = load_complex(sd / "complex.json");
        auto base = load_complex(sd / "base.json");
        auto check_base = load_complex(sd / "check_base.json");
        auto carriers = as_simplices(field(meta, "carriers"));
        if (carriers.size() != base->vertex_count()) {
            throw ValidationError("carrier list does not match the stage base");
        }
        for (const Simplex& c : carriers) {
            if (!check_base->contains(c)) {
                throw ValidationError("carrier " + check_base->simplex_label(c) + " is not a simplex");
            }
        }
        std::optional<PulledTriangulation> refined;
        std::optional<SimplicialMap> bonding;
        std::vector<Simplex> previous_carriers;
        if (meta.contains("refined_faces")) {
            auto nu = load_complex(sd / "refined_previous.json");
            refined.emplace(PulledTriangulation{nu, parse_map(read_text(sd / "refined_projection.json"), nu, base),
                                                as_simplices(field(meta, "refined_faces"))});
            bonding.emplace(parse_map(read_text(sd / "bonding_map.json"), complex, nu));
            previous_carriers = as_simplices(field(meta, "previous_carriers"));
        }
        std::vector<std::size_t> per_stage;
        for (const json& n : field(meta, "generators_per_stage")) {
            per_stage.push_back(n.get<std::size_t>());
        }
        TowerStage s{field(meta, "index").get<std::size_t>(),
                     p,
                     complex,
                     base,
                     check_base,
                     std::move(carriers),
                     parse_map(read_text(sd / "projection.json"), complex, base),
                     parse_action(read_text(sd / "action.json"), complex),
                     std::move(per_stage),
                     std::move(refined),
                     std::move(bonding),
                     std::move(previous_carriers),
                     {}};
        s.report = verify_tower_stage(s);
        stages.push_back(std::move(s));
    }
    return stages;
}

}  // namespace mpres
