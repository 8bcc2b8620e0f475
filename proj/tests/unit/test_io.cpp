#include <filesystem>
#include <map>

#include "corpus.hpp"
#include "doctest.h"
#include "mpres/errors.hpp"
#include "mpres/io.hpp"

using namespace mpres;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("mpres_unit_" + name);
    fs::remove_all(dir);
    return dir;
}

// Every regular file under `dir`, relative path -> contents.
std::map<std::string, std::string> snapshot(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(dir)) {
        if (e.is_regular_file()) {
            out[fs::relative(e.path(), dir).string()] = read_text(e.path());
        }
    }
    return out;
}

}  // namespace

TEST_CASE("complex files round-trip") {
    for (const char* name : {"torus7", "labelled_square", "theta"}) {
        auto k = corpus::load(name);
        auto again = parse_complex(complex_json(*k));
        CHECK(*again == *k);
        CHECK(complex_json(*again) == complex_json(*k));
    }
    auto square = corpus::load("labelled_square");
    CHECK(square->vertex_label(2) == "c");
    CHECK(square->simplex_label({0, 2}) == "[a,c]");
}

TEST_CASE("malformed complex files are rejected") {
    CHECK_THROWS_AS(parse_complex("{"), ValidationError);
    CHECK_THROWS_AS(parse_complex("{}"), ValidationError);
    CHECK_THROWS_AS(parse_complex(R"({"maximal_simplices": [[0, -1]]})"), ValidationError);
    CHECK_THROWS_AS(parse_complex(R"({"maximal_simplices": [[0, 0]]})"), ValidationError);
    CHECK_THROWS_AS(parse_complex(R"({"maximal_simplices": [[0, 2]]})"), ValidationError);
    CHECK_THROWS_AS(parse_complex(R"({"vertices": ["a"], "maximal_simplices": [[0, 1]]})"), ValidationError);
    CHECK_THROWS_AS(parse_complex(R"({"maximal_simplices": [["x"]]})"), ValidationError);
    CHECK_THROWS_AS(load_complex(corpus::path("missing.json")), ValidationError);
}

TEST_CASE("map and action files") {
    SimplicialMap f = load_map(corpus::path("double_cover.json"));
    CHECK(f.vertex_map() == std::vector<Vertex>{0, 1, 2, 0, 1, 2});
    CHECK(f.domain()->vertex_count() == 6);
    std::string text = map_json(f, "cycle6.json", "cycle3.json");
    CHECK(parse_map(text, f.domain(), f.codomain()).vertex_map() == f.vertex_map());

    GroupAction a = load_action(corpus::path("reflection.json"));
    CHECK(a.prime() == 2);
    CHECK(a.generator(0) == Permutation{0, 2, 1});
    CHECK(parse_action(action_json(a, "cycle3.json"), a.complex()).generators() == a.generators());
    CHECK_THROWS_AS(parse_action(R"({"p": 4, "generators": []})", a.complex()), ValidationError);
}

TEST_CASE("reports round-trip") {
    VerificationReport r;
    r.checks.push_back(Check{"star", "[0,1,2]", "iso", {1, 1, 1}, true});
    r.checks.push_back(Check{"quotient", "-", "mismatch", {7}, false});
    CHECK(parse_report(report_json(r)) == r);
    CHECK(r.failure_count() == 1);
    CHECK_FALSE(r.passed());
}

TEST_CASE("saved resolutions reload with the same report") {
    fs::path dir = scratch("resolution");
    ResolutionStage s = resolve(corpus::load("tetra_boundary"), 2);
    save_resolution(s, dir);
    ResolutionStage back = load_resolution(dir);
    CHECK(*back.total == *s.total);
    CHECK(back.action.generators() == s.action.generators());
    CHECK(back.report == s.report);
    CHECK(back.pieces.size() == s.pieces.size());

    fs::path again = scratch("resolution_again");
    save_resolution(resolve(corpus::load("tetra_boundary"), 2), again);
    CHECK(snapshot(dir) == snapshot(again));
    fs::remove_all(dir);
    fs::remove_all(again);
}

TEST_CASE("saved towers reload with the same reports") {
    fs::path dir = scratch("tower");
    auto stages = build_tower(corpus::load("triangle"), 2, 2);
    save_tower(stages, dir);
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(fs::exists(dir / "stage_2" / "bonding_map.json"));
    auto back = load_tower(dir);
    REQUIRE(back.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(back[i].report == stages[i].report);
        CHECK(*back[i].complex == *stages[i].complex);
    }
    fs::remove_all(dir);
}

TEST_CASE("cover serialization lists voltages by edge") {
    Cover c = build_cover(corpus::load("cycle3"), 2);
    fs::path dir = scratch("cover");
    save_cover(c, dir);
    std::string text = read_text(dir / "cover.json");
    CHECK(text.find("\"0,1\"") != std::string::npos);
    CHECK(text.find("\"deck_generators\"") != std::string::npos);
    CHECK(*load_complex(dir / "total.json") == *c.total);
    fs::remove_all(dir);
}
