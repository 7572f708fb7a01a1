#include "latlevel/semilattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "latlevel/errors.hpp"

namespace latlevel {

MeetSemilattice MeetSemilattice::validate(Poset order) {
    if (order.size() == 0) throw EmptyInput("meet-semilattice must be nonempty");

    MeetSemilattice L;
    L.order_ = std::move(order);
    const Poset& P = L.order_;
    const int n = P.size();

    if (P.minimal_elements().count() != 1) {
        const auto mins = P.minimal_elements().members();
        throw NotMeetSemilattice("no unique minimum; elements " + P.id(mins[0]) + " and " +
                                 P.id(mins[1]) + " have no common lower bound");
    }
    L.bottom_ = P.minimal_elements().min_element();

    // Meet of (a,b): the unique maximal element of down(a) & down(b).
    L.meet_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            const Subset common = P.down_set(a) & P.down_set(b);
            const Subset glb = P.maximal_elements(common);
            if (glb.count() != 1) {
                const auto tops = glb.members();
                throw NotMeetSemilattice("elements " + P.id(a) + " and " + P.id(b) +
                                         (glb.empty() ? " have no lower bound"
                                                      : " have maximal lower bounds " + P.id(tops[0]) +
                                                            " and " + P.id(tops[1])));
            }
            L.meet_[a * n + b] = L.meet_[b * n + a] = glb.min_element();
        }
    }

    // P = elements covering exactly one element, in L's element order.
    for (int a = 0; a < n; ++a)
        if (P.lower_neighbors(a).count() == 1) L.joinirr_.push_back(a);
    L.ji_poset_ = P.induced(L.joinirr_);

    L.ell_.resize(n);
    for (int a = 0; a < n; ++a) {
        Subset e;
        for (int t = 0; t < L.ji_count(); ++t)
            if (P.leq(L.joinirr_[t], a)) e = e.with(t);
        L.ell_[a] = e;
        if (!L.ell_index_.emplace(e.bits(), a).second)
            throw std::logic_error("ell not injective on a validated meet-semilattice");
    }

    L.compute_meet_distributivity();
    return L;
}

void MeetSemilattice::compute_meet_distributivity() {
    const Poset& P = order_;
    md_ = true;
    md_witness_ = -1;
    for (int b = 0; b < P.size() && md_; ++b) {
        const Subset nb = P.lower_neighbors(b);
        const int k = nb.count();
        if (k == 0) continue;  // bottom passes vacuously
        const int lo = meet(nb);
        // interval [lo, b]
        Subset interval;
        P.down_set(b).for_each([&](int g) {
            if (P.leq(lo, g)) interval = interval.with(g);
        });
        if (k >= 30 || interval.count() != (1 << k)) {
            md_ = false;
            md_witness_ = b;
            break;
        }
        // T |-> meet(T) (meet of the empty set taken as b) must be injective
        // with image exactly the interval; checked by counting distinct hits.
        const auto neighbors = nb.members();
        Subset seen;
        bool ok = true;
        for_each_submask(Subset::universe(k).bits(), [&](Subset t) {
            int m = b;
            t.for_each([&](int j) { m = meet(m, neighbors[j]); });
            if (seen.contains(m) || !interval.contains(m)) ok = false;
            seen = seen.with(m);
        });
        if (!ok || seen != interval) {
            md_ = false;
            md_witness_ = b;
        }
    }
}

int MeetSemilattice::meet(Subset s) const {
    int m = -1;
    s.for_each([&](int a) { m = m < 0 ? a : meet(m, a); });
    if (m < 0) throw std::logic_error("meet over empty subset");
    return m;
}

int MeetSemilattice::element_with_ell(Subset s) const {
    auto it = ell_index_.find(s.bits());
    return it == ell_index_.end() ? -1 : it->second;
}

MeetSemilattice MeetSemilattice::from_set_family(const SetFamily& family) {
    if (family.sets.empty()) throw EmptyInput("set family is empty");
    if (static_cast<int>(family.ground.size()) > kMaxGround)
        throw TooLarge("ground set exceeds cap " + std::to_string(kMaxGround));

    auto name = [&](Subset s) {
        std::string out = "{";
        bool first = true;
        s.for_each([&](int g) {
            if (!first) out += ",";
            out += family.ground[g];
            first = false;
        });
        return out + "}";
    };

    const int m = static_cast<int>(family.sets.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < i; ++j)
            if (family.sets[i] == family.sets[j])
                throw InvalidInput("duplicate set in family: " + name(family.sets[i]));

    std::vector<std::pair<std::string, std::string>> rel;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const Subset inter = family.sets[i] & family.sets[j];
            if (i < j) {
                bool found = false;
                for (int k = 0; k < m && !found; ++k) found = family.sets[k] == inter;
                if (!found)
                    throw NotIntersectionClosed("intersection of " + name(family.sets[i]) + " and " +
                                                name(family.sets[j]) + " = " + name(inter) +
                                                " is not in the family");
            }
            if (i != j && family.sets[i] != family.sets[j] && family.sets[i].subset_of(family.sets[j]))
                rel.emplace_back(name(family.sets[i]), name(family.sets[j]));
        }
    }

    std::vector<std::string> ids;
    ids.reserve(m);
    for (int i = 0; i < m; ++i) ids.push_back(name(family.sets[i]));
    MeetSemilattice L = validate(Poset::from_covers(std::move(ids), rel));

    // Cross-checks tying the family encoding to the abstract semilattice:
    // meets are realized by intersections, and ell agrees with direct subset
    // testing against the join-irreducible member sets.
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (family.sets[L.meet(a, b)] != (family.sets[a] & family.sets[b]))
                throw std::logic_error("meet of an intersection-closed family is not intersection");
    for (int a = 0; a < m; ++a) {
        Subset direct;
        for (int t = 0; t < L.ji_count(); ++t)
            if (family.sets[L.joinirr_[t]].subset_of(family.sets[a])) direct = direct.with(t);
        if (direct != L.ell(a)) throw std::logic_error("ell disagrees with the family representation");
    }
    return L;
}

bool embedding_check(const MeetSemilattice& L) {
    const Poset& P = L.order();
    const int n = P.size();

    // Meet-intersection identity and intersection-closure of the image, realized
    // inside the image.
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const Subset inter = L.ell(a) & L.ell(b);
            if (L.ell(L.meet(a, b)) != inter) return false;
            if (L.element_with_ell(inter) < 0) return false;
        }
    }
    // Covers of L must map to covers of J(P): one new join-irreducible per
    // step. This is the part that actually separates meet-distributive
    // inputs; the two conditions above hold for every meet-semilattice.
    for (int b = 0; b < n; ++b) {
        bool ok = true;
        P.lower_neighbors(b).for_each([&](int a) {
            if ((L.ell(b) - L.ell(a)).count() != 1) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

MeetSemilattice distributive_closure(const MeetSemilattice& L) {
    const Poset& JP = L.joinirr_poset();
    std::vector<Subset> ideals = JP.poset_ideals();
    if (static_cast<int>(ideals.size()) > kMaxGround)
        throw TooLarge("J(P) has " + std::to_string(ideals.size()) + " elements; cap is " +
                       std::to_string(kMaxGround));

    SetFamily family;
    for (int t = 0; t < JP.size(); ++t) family.ground.push_back(JP.id(t));
    family.sets = std::move(ideals);
    return MeetSemilattice::from_set_family(family);
}

}  // namespace latlevel
