#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "latlevel/semilattice.hpp"

namespace latlevel {

/// Canonical input files for the bundled examples. Supported names:
///   L1, L2, B3-minus-13  — fixed lattices (covers format)
///   Bn(k)                — boolean lattice of rank k
///   JP(seed)             — distributive lattice of a pseudorandom poset
/// Throws UnknownName otherwise.
nlohmann::json corpus_emit(const std::string& name);

/// Convenience: parse-and-validate a bundled example.
MeetSemilattice corpus_semilattice(const std::string& name);

/// Seeded random intersection-closed family (closure of random subsets of a
/// random ground of size 2..6), rejecting draws until the inclusion order
/// has at most max_ji join-irreducibles. Deterministic per seed.
SetFamily random_closed_family(std::uint64_t seed, int max_ji = 8);

}  // namespace latlevel
