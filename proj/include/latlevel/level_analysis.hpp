#pragma once

#include <string>
#include <vector>

#include "latlevel/semilattice.hpp"
#include "latlevel/subset.hpp"

namespace latlevel {

/// h-vector of the Alexander dual, fixed length |P|+1 with explicit trailing
/// zeros: h_i = #{ alpha : |N(alpha)| = i }.
struct HVector {
    std::vector<long long> h;

    std::vector<long long> trimmed() const;  // trailing zeros dropped, h_0 kept
    long long sum() const;
    int max_nonzero_index() const;
    friend bool operator==(const HVector& a, const HVector& b) { return a.h == b.h; }
};

/// The complex { S(alpha) } with S(alpha) = ell(alpha) \ ell(alpha') and
/// alpha' the meet of alpha's lower neighbors (alpha' := alpha at the
/// bottom, so S(bottom) is empty).
struct SComplex {
    std::vector<Subset> faces;   // faces[a] = S(a), aligned with L
    std::vector<Subset> facets;  // maximal members, lex order
};

struct LevelReport {
    HVector h;
    std::vector<long long> f_dual;  // f_{-1} .. f_{|P|-1}
    long long a_invariant = 0;
    std::vector<Subset> s_facets;
    bool is_level = false;
};

/// Monomial in the x variables only, exponents at most 2: image of a dual
/// generator under y_p -> x_p. squared marks variables with exponent 2.
struct JMonomial {
    Subset support, squared;

    bool squarefree() const { return squared.empty(); }
    bool divides(const JMonomial& o) const {
        return support.subset_of(o.support) && squared.subset_of(o.squared);
    }
    std::string render() const;
};

// All of the following require a meet-distributive input and throw
// NotMeetDistributive naming the witness unless force is set; the counts are
// still computable on arbitrary inputs but are only certified combinatorial
// invariants of the dual in the meet-distributive case.

HVector h_vector(const MeetSemilattice& L, bool force = false);

/// f-vector of the dual from the h-vector transform,
/// f_j = sum_i C(|P|-i, |P|-j-1) h_i for j = -1..|P|-1.
std::vector<long long> f_vector_dual(const MeetSemilattice& L, bool force = false);

/// max |N(alpha)| - |P|; always <= 0.
long long a_invariant(const MeetSemilattice& L, bool force = false);

/// Throws NotSimplicial if { S(alpha) } fails closure under subsets or the
/// degree identity |S(alpha)| = |N(alpha)| (cannot happen on validated
/// meet-distributive input).
SComplex s_complex(const MeetSemilattice& L, bool force = false);

/// Levelness via purity of { S(alpha) }, bundled with h, f, a-invariant.
LevelReport is_level(const MeetSemilattice& L, bool force = false);

/// Image of theorem_generators under y_p -> x_p, minimalized.
std::vector<JMonomial> j_ideal(const MeetSemilattice& L, bool force = false);

/// Squarefree supports T with x_T outside j_ideal; equals { S(alpha) } by
/// the monomial-basis theorem. Lex order. Throws TooLarge when |P| > 20.
std::vector<Subset> standard_monomials(const MeetSemilattice& L, bool force = false);

/// Overflow-checked binomial coefficient.
long long binomial(int n, int k);

}  // namespace latlevel
