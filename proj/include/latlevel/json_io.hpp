#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "latlevel/dual_ideal.hpp"
#include "latlevel/level_analysis.hpp"
#include "latlevel/oracle.hpp"
#include "latlevel/semilattice.hpp"

namespace latlevel {

enum class InputFormat { Auto, Covers, Sets };

/// Poset schema: {"elements": [id...], "covers": [[lo,hi]...]} or the same
/// with "leq" (any relation whose closure is the order).
Poset parse_poset(const nlohmann::json& j, int max_ground = kMaxGround);

/// SetFamily schema: {"ground": [id...], "sets": [[id...]...]}.
SetFamily parse_set_family(const nlohmann::json& j, int max_ground = kMaxGround);

/// Auto-detects the schema by key unless forced, then validates.
MeetSemilattice load_semilattice(const nlohmann::json& j, InputFormat format = InputFormat::Auto,
                                 int max_ground = kMaxGround);

nlohmann::json poset_json(const Poset& p);

/// {"valid": true, "join_irreducibles": [...], "meet_distributive": bool,
///  "witness": id|null}
nlohmann::json validation_report_json(const MeetSemilattice& L);

/// Per monomial: {"family": "i"|"ii"|"iii"|"diag", "x": [p...], "y": [q...]}
/// with 1-based indices into join_irreducibles.
nlohmann::json generators_json(const std::vector<PairMonomial>& gens);

nlohmann::json s_complex_json(const MeetSemilattice& L, const SComplex& s);

/// {"h": [...], "f_dual": [...], "a_invariant": int, "s_facets": [[p...]...],
///  "is_level": bool} — h in trimmed form.
nlohmann::json level_report_json(const LevelReport& r);

/// {"checks": [{"name": str, "pass": bool, "counterexample": any|null}...]}
nlohmann::json check_report_json(const CheckReport& r);

nlohmann::json scan_json(const ScanResult& r);

std::vector<int> subset_indices(Subset s, int base = 1);

}  // namespace latlevel
