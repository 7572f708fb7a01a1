#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latlevel/corpus.hpp"
#include "latlevel/json_io.hpp"
#include "latlevel/poset.hpp"
#include "latlevel/semilattice.hpp"

namespace fixtures {

using latlevel::MeetSemilattice;
using latlevel::Poset;
using latlevel::Subset;

using Covers = std::vector<std::pair<std::string, std::string>>;

inline Poset make_poset(std::vector<std::string> ids, const Covers& covers) {
    return Poset::from_covers(std::move(ids), covers);
}

/// The join-irreducible poset of L1: 1 isolated, 2 and 3 both below 4 and 5.
inline Poset p1() {
    return make_poset({"1", "2", "3", "4", "5"}, {{"2", "4"}, {"2", "5"}, {"3", "4"}, {"3", "5"}});
}

inline MeetSemilattice l1() { return latlevel::corpus_semilattice("L1"); }
inline MeetSemilattice l2() { return latlevel::corpus_semilattice("L2"); }
inline MeetSemilattice b3_minus_13() { return latlevel::corpus_semilattice("B3-minus-13"); }
inline MeetSemilattice boolean(int n) {
    return latlevel::corpus_semilattice("Bn(" + std::to_string(n) + ")");
}

/// Pentagon N5: 0 < a < b < 1 and 0 < c < 1; a lattice, not meet-distributive.
inline MeetSemilattice n5() {
    return MeetSemilattice::validate(make_poset(
        {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}));
}

inline MeetSemilattice singleton() {
    return MeetSemilattice::validate(make_poset({"0"}, {}));
}

inline MeetSemilattice two_chain() {
    return MeetSemilattice::validate(make_poset({"0", "a"}, {{"0", "a"}}));
}

inline MeetSemilattice chain(int k) {  // k elements
    std::vector<std::string> ids;
    Covers covers;
    for (int i = 0; i < k; ++i) {
        ids.push_back("c" + std::to_string(i));
        if (i) covers.emplace_back(ids[i - 1], ids[i]);
    }
    return MeetSemilattice::validate(make_poset(std::move(ids), covers));
}

/// V-shape 0 < a, 0 < b: a meet-semilattice that is not a lattice.
inline MeetSemilattice vee() {
    return MeetSemilattice::validate(make_poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}));
}

inline Subset subset_of(const std::vector<int>& zero_based) {
    Subset s;
    for (int i : zero_based) s = s.with(i);
    return s;
}

/// Subset of 1-based labels, as used in the worked examples.
inline Subset labels(const std::vector<int>& one_based) {
    Subset s;
    for (int i : one_based) s = s.with(i - 1);
    return s;
}

/// A meet-distributive standard corpus plus the non-meet-distributive
/// pentagon, for property tests.
inline std::vector<MeetSemilattice> property_corpus() {
    std::vector<MeetSemilattice> out;
    out.push_back(l1());
    out.push_back(l2());
    out.push_back(b3_minus_13());
    out.push_back(boolean(1));
    out.push_back(boolean(2));
    out.push_back(boolean(3));
    out.push_back(singleton());
    out.push_back(two_chain());
    out.push_back(chain(5));
    out.push_back(vee());
    out.push_back(n5());
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        out.push_back(MeetSemilattice::from_set_family(latlevel::random_closed_family(seed)));
    return out;
}

}  // namespace fixtures
