#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mpres/complex.hpp"
#include "mpres/cover.hpp"
#include "mpres/group_action.hpp"
#include "mpres/report.hpp"
#include "mpres/resolution.hpp"
#include "mpres/simplicial_map.hpp"
#include "mpres/tower.hpp"

namespace mpres {

// JSON formats. Every writer is deterministic: keys in a fixed order, no
// timestamps, paths relative to the file that mentions them. Malformed input
// raises ValidationError.

ComplexPtr parse_complex(std::string_view text);
ComplexPtr load_complex(const std::filesystem::path& path);
std::string complex_json(const SimplicialComplex& k);

/// Loads a map file together with the complexes it references.
SimplicialMap load_map(const std::filesystem::path& path);
/// Reads only the vertex map of a map file, against already loaded complexes.
SimplicialMap parse_map(std::string_view text, ComplexPtr domain, ComplexPtr codomain);
std::string map_json(const SimplicialMap& f, const std::string& domain_ref, const std::string& codomain_ref);

GroupAction load_action(const std::filesystem::path& path);
GroupAction parse_action(std::string_view text, ComplexPtr complex);
std::string action_json(const GroupAction& a, const std::string& complex_ref);

/// Projection, deck generators and voltages ("u,v" keys, low vertex first).
std::string cover_json(const Cover& c);

std::string report_json(const VerificationReport& r);
VerificationReport parse_report(std::string_view text);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Writes base, total, projection, action (deck) and cover.json into `dir`.
void save_cover(const Cover& c, const std::filesystem::path& dir);

/// Directory layout: base, subdivision, total, orbit_map, action, report and
/// stage.json (carriers, per-simplex provenance).
void save_resolution(const ResolutionStage& s, const std::filesystem::path& dir);
/// Rebuilds a saved stage and recomputes its report. Per-simplex covers are not restored.
ResolutionStage load_resolution(const std::filesystem::path& dir);

/// manifest.json plus one stage_<i> directory per stage.
void save_tower(const std::vector<TowerStage>& stages, const std::filesystem::path& dir);
/// Rebuilds saved stages and recomputes their reports.
std::vector<TowerStage> load_tower(const std::filesystem::path& dir);

}  // namespace mpres
