#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "latlevel/poset.hpp"
#include "latlevel/subset.hpp"

namespace latlevel {

/// Intersection-closed family of sets over a named ground set; an alternate
/// input encoding for meet-semilattices (order = inclusion, meet = set
/// intersection).
struct SetFamily {
    std::vector<std::string> ground;
    std::vector<Subset> sets;  // subsets of ground indices, input order
};

/// A validated finite meet-semilattice: every pair of elements has a unique
/// greatest lower bound and there is a unique minimum. Carries the set P of
/// join-irreducible elements (those covering exactly one element) and the
/// canonical representation ell(a) = { p in P : p <= a }, a poset ideal of P.
/// Immutable after construction; safe to query concurrently.
class MeetSemilattice {
public:
    /// Throws EmptyInput / NotMeetSemilattice. Also decides
    /// meet-distributivity eagerly (every interval [meet of N(b), b] must be
    /// boolean of rank |N(b)|) and caches the verdict with a witness.
    static MeetSemilattice validate(Poset order);

    /// Builds the inclusion order of the family and validates it; throws
    /// NotIntersectionClosed naming an offending pair. Elements are named
    /// "{g1,g2,...}" from the ground ids.
    static MeetSemilattice from_set_family(const SetFamily& family);

    const Poset& order() const { return order_; }
    int size() const { return order_.size(); }
    int bottom() const { return bottom_; }

    int meet(int a, int b) const { return meet_[a * size() + b]; }
    int meet(Subset s) const;  // fold; pre: s nonempty

    /// Join-irreducibles as L-indices, in L's element order. The t-th entry
    /// is the element that P-index t refers to everywhere downstream.
    const std::vector<int>& join_irreducibles() const { return joinirr_; }
    int ji_count() const { return static_cast<int>(joinirr_.size()); }
    const Poset& joinirr_poset() const { return ji_poset_; }

    Subset ell(int a) const { return ell_[a]; }          // subset of P-indices
    int element_with_ell(Subset s) const;                // -1 if not in the image
    Subset p_universe() const { return Subset::universe(ji_count()); }

    bool meet_distributive() const { return md_; }
    int md_witness() const { return md_witness_; }  // -1 when meet-distributive

    /// Label of P-index t in CLI/JSON output: 1-based position, matching the
    /// usual relabeling of join-irreducibles as 1..n.
    std::string p_label(int t) const { return std::to_string(t + 1); }

private:
    MeetSemilattice() = default;
    void compute_meet_distributivity();

    Poset order_;
    int bottom_ = -1;
    std::vector<int> joinirr_;
    Poset ji_poset_;
    std::vector<Subset> ell_;
    std::vector<int> meet_;  // n*n table
    std::unordered_map<Mask, int> ell_index_;
    bool md_ = true;
    int md_witness_ = -1;
};

/// Independent detector of meet-distributivity: true iff ell embeds L into
/// the distributive lattice J(P), i.e. ell(meet(a,b)) is ell(a) & ell(b),
/// the image family is intersection-closed with intersections realized
/// inside the image, and every cover of L maps to a cover of J(P) (exactly
/// one new element of P per covering step).
bool embedding_check(const MeetSemilattice& L);

/// The distributive lattice J(P) of all poset ideals of L's join-irreducible
/// poset, as a meet-semilattice over elements named by their ideals. Throws
/// TooLarge if |J(P)| would exceed the ground cap.
MeetSemilattice distributive_closure(const MeetSemilattice& L);

}  // namespace latlevel
