// mpres: covers, equivariant resolutions and pull-back towers from the shell.
//
// Exit status: 0 success, 1 bad input or failed hypothesis, 2 a check failed.

#include <filesystem>
#include <iostream>
#include <new>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpres/complex.hpp"
#include "mpres/cover.hpp"
#include "mpres/errors.hpp"
#include "mpres/homology.hpp"
#include "mpres/io.hpp"
#include "mpres/random_complex.hpp"
#include "mpres/resolution.hpp"
#include "mpres/subdivision.hpp"
#include "mpres/tower.hpp"

namespace fs = std::filesystem;
using namespace mpres;

namespace {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kCheckFailed = 2;

struct Options {
    std::uint32_t prime = 2;
    int dim = -1;
    bool reduced = false;
    std::string input;
    std::string second;
    std::string output;
    std::string report = "json";
    std::size_t depth = 1;
    bool identity = false;
    std::string star;
    bool random = false;
    std::uint64_t seed = 1;
    std::size_t count = 20;
};

std::uint32_t checked_prime(std::uint32_t p) {
    if (!is_prime(p)) {
        throw ValidationError(std::to_string(p) + " is not prime");
    }
    return p;
}

int emit(const VerificationReport& r, const std::string& format) {
    std::cout << (format == "text" ? r.to_text() : report_json(r));
    return r.passed() ? kOk : kCheckFailed;
}

int run_homology(const Options& o) {
    const std::uint32_t p = checked_prime(o.prime);
    auto k = load_complex(o.input);
    std::vector<std::size_t> ranks;
    if (o.dim >= 0) {
        ranks.push_back(homology_basis(*k, o.dim, p, o.reduced).rank);
    } else {
        ranks = betti_numbers(*k, p, std::max(k->dimension(), 0), o.reduced);
    }
    if (o.report == "json") {
        std::cout << "{\"prime\": " << p << ", ";
        if (o.dim >= 0) {
            std::cout << "\"dimension\": " << o.dim << ", ";
        }
        std::cout << "\"ranks\": [";
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            std::cout << (i ? ", " : "") << ranks[i];
        }
        std::cout << "]}\n";
    } else if (o.dim >= 0) {
        std::cout << "rank " << ranks[0] << "\n";
    } else {
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            std::cout << "H" << i << " rank " << ranks[i] << "\n";
        }
    }
    return kOk;
}

int run_cover(const Options& o) {
    const std::uint32_t p = checked_prime(o.prime);
    Cover c = build_cover(load_complex(o.input), p);
    VerificationReport r = verify_cover(c, c.base->name().empty() ? "-" : c.base->name());
    if (o.output.empty()) {
        std::cout << cover_json(c);
        return r.passed() ? kOk : kCheckFailed;
    }
    save_cover(c, o.output);
    write_text(fs::path(o.output) / "report.json", report_json(r));
    return emit(r, o.report);
}

int run_resolve(const Options& o) {
    const std::uint32_t p = checked_prime(o.prime);
    auto base = load_complex(o.input);
    ResolutionStage s = o.identity ? identity_stage(base, p) : resolve(base, p);
    if (!o.output.empty()) {
        save_resolution(s, o.output);
    }
    return emit(s.report, o.report);
}

int run_tower(const Options& o) {
    const std::uint32_t p = checked_prime(o.prime);
    auto base = load_complex(o.input);
    std::vector<TowerStage> stages;
    if (o.identity) {
        stages.push_back(stage_from_resolution(identity_stage(base, p)));
    } else {
        stages = build_tower(base, p, o.depth);
    }
    if (!o.output.empty()) {
        save_tower(stages, o.output);
    }
    VerificationReport all;
    for (const TowerStage& s : stages) {
        for (Check c : s.report.checks) {
            c.name = "stage" + std::to_string(s.index) + "." + c.name;
            all.checks.push_back(std::move(c));
        }
    }
    return emit(all, o.report);
}

int run_pullback(const Options& o) {
    SimplicialMap f = load_map(o.input);
    SimplicialMap g = load_map(o.second);
    FiberProduct fp = fiber_product(f, g);
    std::cout << "vertices " << fp.complex->vertex_count() << "\n";
    for (int d = 0; d <= fp.complex->dimension(); ++d) {
        std::cout << "simplices[" << d << "] " << fp.complex->count(d) << "\n";
    }
    std::cout << "euler " << euler_characteristic(*fp.complex) << "\n";
    std::cout << "components " << connected_components(*fp.complex).count << "\n";
    if (!o.output.empty()) {
        const fs::path dir = o.output;
        write_text(dir / "complex.json", complex_json(*fp.complex));
        write_text(dir / "first.json", complex_json(*f.domain()));
        write_text(dir / "second.json", complex_json(*g.domain()));
        write_text(dir / "to_first.json", map_json(fp.to_first, "complex.json", "first.json"));
        write_text(dir / "to_second.json", map_json(fp.to_second, "complex.json", "second.json"));
    }
    return kOk;
}

Simplex parse_simplex(const std::string& text) {
    std::vector<Vertex> vs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            vs.push_back(static_cast<Vertex>(std::stoul(item)));
        } catch (const std::exception&) {
            throw ValidationError("bad simplex \"" + text + "\"");
        }
    }
    return make_simplex(std::move(vs));
}

int run_subdivide(const Options& o) {
    auto k = load_complex(o.input);
    std::string text;
    if (o.star.empty()) {
        text = complex_json(*barycentric_subdivision(*k).complex);
    } else {
        text = complex_json(*star_subdivision(*k, parse_simplex(o.star)));
    }
    if (o.output.empty()) {
        std::cout << text;
    } else {
        write_text(o.output, text);
    }
    return kOk;
}

int run_verify(const Options& o) {
    if (o.random) {
        const std::uint32_t p = checked_prime(o.prime);
        std::mt19937_64 rng(o.seed);
        RandomComplexOptions opts;
        opts.max_sheets = p == 2 ? 16 : 27;
        VerificationReport all;
        for (std::size_t i = 0; i < o.count; ++i) {
            Cover c = build_cover(random_connected_complex(rng, p, opts), p);
            for (Check& check : verify_cover(c, "random[" + std::to_string(i) + "]").checks) {
                all.checks.push_back(std::move(check));
            }
        }
        return emit(all, o.report);
    }
    if (o.input.empty()) {
        throw ValidationError("verify needs a directory or --random");
    }
    const fs::path dir = o.input;
    if (fs::exists(dir / "manifest.json")) {
        VerificationReport all;
        for (const TowerStage& s : load_tower(dir)) {
            for (Check c : s.report.checks) {
                c.name = "stage" + std::to_string(s.index) + "." + c.name;
                all.checks.push_back(std::move(c));
            }
        }
        return emit(all, o.report);
    }
    if (fs::exists(dir / "stage.json")) {
        return emit(load_resolution(dir).report, o.report);
    }
    throw ValidationError(dir.string() + " holds neither stage.json nor manifest.json");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-p covers, equivariant resolutions and pull-back towers"};
    app.require_subcommand(1);
    Options o;

    auto add_prime = [&o](CLI::App* sub) { sub->add_option("-p,--prime", o.prime, "prime modulus")->default_val(2); };
    auto add_report = [&o](CLI::App* sub) {
        sub->add_option("--report", o.report, "report format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* homology = app.add_subcommand("homology", "mod-p Betti numbers");
    add_prime(homology);
    homology->add_option("--dim", o.dim, "single dimension");
    homology->add_flag("--reduced", o.reduced, "reduced homology in dimension 0");
    homology->add_option("input", o.input, "complex file")->required();
    homology->add_option("--report", o.report, "output format")->check(CLI::IsMember({"json", "text"}));

    auto* cover = app.add_subcommand("cover", "regular Z_p^l cover killing H_1 mod p");
    add_prime(cover);
    add_report(cover);
    cover->add_option("input", o.input, "complex file")->required();
    cover->add_option("-o,--output", o.output, "output directory");

    auto* resolve_cmd = app.add_subcommand("resolve", "equivariant resolution of a complex");
    add_prime(resolve_cmd);
    add_report(resolve_cmd);
    resolve_cmd->add_option("input", o.input, "complex file")->required();
    resolve_cmd->add_option("-o,--output", o.output, "output directory");
    resolve_cmd->add_flag("--identity-stage", o.identity, "skip resolving (negative control)");

    auto* pullback = app.add_subcommand("pullback", "fiber product of two maps with a common codomain");
    pullback->add_option("first", o.input, "map file X -> Y")->required();
    pullback->add_option("second", o.second, "map file Z -> Y")->required();
    pullback->add_option("-o,--output", o.output, "output directory");

    auto* tower = app.add_subcommand("tower", "finite pull-back tower");
    add_prime(tower);
    add_report(tower);
    tower->add_option("--depth", o.depth, "number of stages")->check(CLI::Range(1, 8));
    tower->add_option("input", o.input, "complex file")->required();
    tower->add_option("-o,--output", o.output, "output directory");
    tower->add_flag("--identity-stage", o.identity, "single unresolved stage (negative control)");

    auto* subdivide = app.add_subcommand("subdivide", "barycentric or stellar subdivision");
    subdivide->add_option("input", o.input, "complex file")->required();
    subdivide->add_option("--star", o.star, "star at this simplex, e.g. 0,1,2");
    subdivide->add_option("-o,--output", o.output, "output file");

    auto* verify = app.add_subcommand("verify", "re-run the checks of a saved stage or tower");
    add_prime(verify);
    add_report(verify);
    verify->add_option("dir", o.input, "resolution or tower directory");
    verify->add_flag("--random", o.random, "check covers of seeded random complexes instead");
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--count", o.count, "random sample count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kBadInput;
    }
    if (homology->parsed() && homology->count("--report") == 0) {
        o.report = "text";
    }

    try {
        if (homology->parsed()) return run_homology(o);
        if (cover->parsed()) return run_cover(o);
        if (resolve_cmd->parsed()) return run_resolve(o);
        if (pullback->parsed()) return run_pullback(o);
        if (tower->parsed()) return run_tower(o);
        if (subdivide->parsed()) return run_subdivide(o);
        if (verify->parsed()) return run_verify(o);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis failed: " << e.what() << "\n";
        return kBadInput;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kBadInput;
        } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory (dense F_p matrices grow quadratically with the complex)\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
