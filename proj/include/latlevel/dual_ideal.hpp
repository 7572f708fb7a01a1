#pragma once

#include <string>
#include <vector>

#include "latlevel/semilattice.hpp"
#include "latlevel/subset.hpp"

namespace latlevel {

enum class GenFamily { Diag, I, II, III };

std::string gen_family_name(GenFamily f);

/// Squarefree monomial x_A * y_B over the variables {x_p, y_p : p in P}.
/// A and B are disjoint except for the diagonal generators x_p*y_p, which
/// are stored as A = B = {p} with family Diag.
struct PairMonomial {
    Subset x, y;
    GenFamily family = GenFamily::Diag;

    int degree() const { return x.count() + y.count(); }
    bool divides(const PairMonomial& o) const { return x.subset_of(o.x) && y.subset_of(o.y); }
    bool same_monomial(const PairMonomial& o) const { return x == o.x && y == o.y; }

    std::string render() const;  // "x_2*y_1*y_3", 1-based P indices
};

/// One facet F_a of the Alexander dual: x-vertices P \ ell(a), y-vertices
/// ell(a). Always |x| + |y| = |P|.
struct Facet {
    Subset x, y;
};

/// The Alexander dual complex of L: one facet per element of L, pure of
/// dimension |P| - 1.
struct DualComplex {
    int np = 0;
    std::vector<Facet> facets;  // aligned with L's element order

    bool face_in_facet(Subset fx, Subset fy, int i) const {
        return fx.subset_of(facets[i].x) && fy.subset_of(facets[i].y);
    }
};

DualComplex dual_facets(const MeetSemilattice& L);

/// Condition (*): every alpha with B <= ell(alpha) meets A inside ell(alpha).
/// This is the membership oracle for x_A*y_B in the Stanley-Reisner ideal of
/// the dual (for disjoint A, B). Throws OverlapError if A and B intersect.
bool is_independent_pair(const MeetSemilattice& L, Subset A, Subset B);

/// Minimal generators of the Stanley-Reisner ideal of the Alexander dual via
/// the structure theorem: the diagonal squares x_p*y_p, the comparable pairs
/// x_p*y_q (p < q in P), pure antichain monomials y_B whose generated ideal
/// fits in no ell(alpha), and mixed x_p*y_B for antichains whose generated
/// ideal is not an ell-value but fits in some ell(alpha). Reduced to a
/// minimal generating set and sorted by (degree, lex A, lex B).
std::vector<PairMonomial> theorem_generators(const MeetSemilattice& L);

/// Brute-force ground truth: enumerates every disjoint pair (A, B) with B an
/// antichain of P, filters by is_independent_pair, adds the diagonal squares
/// and minimalizes. Throws TooLarge when |P| > 20.
std::vector<PairMonomial> generators_oracle(const MeetSemilattice& L);

/// Drop monomials strictly divisible by another; dedupes equal supports.
std::vector<PairMonomial> minimalize(std::vector<PairMonomial> gens);

/// Deterministic output order: degree, then lex on A, then lex on B.
void sort_generators(std::vector<PairMonomial>& gens);

}  // namespace latlevel
