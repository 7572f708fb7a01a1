#include "latlevel/dual_ideal.hpp"

#include <algorithm>

#include "latlevel/errors.hpp"

namespace latlevel {

std::string gen_family_name(GenFamily f) {
    switch (f) {
        case GenFamily::Diag: return "diag";
        case GenFamily::I: return "i";
        case GenFamily::II: return "ii";
        case GenFamily::III: return "iii";
    }
    return "?";
}

std::string PairMonomial::render() const {
    std::string out;
    x.for_each([&](int p) { out += (out.empty() ? "" : "*") + std::string("x_") + std::to_string(p + 1); });
    y.for_each([&](int q) { out += (out.empty() ? "" : "*") + std::string("y_") + std::to_string(q + 1); });
    return out.empty() ? "1" : out;
}

DualComplex dual_facets(const MeetSemilattice& L) {
    DualComplex d;
    d.np = L.ji_count();
    const Subset full = L.p_universe();
    d.facets.reserve(L.size());
    for (int a = 0; a < L.size(); ++a) d.facets.push_back({full - L.ell(a), L.ell(a)});
    return d;
}

bool is_independent_pair(const MeetSemilattice& L, Subset A, Subset B) {
    if (A.intersects(B))
        throw OverlapError("x-support and y-support overlap: " + subset_to_string(A & B));
    for (int a = 0; a < L.size(); ++a)
        if (B.subset_of(L.ell(a)) && !A.intersects(L.ell(a))) return false;
    return true;
}

void sort_generators(std::vector<PairMonomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const PairMonomial& a, const PairMonomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (a.x != b.x) return Subset::lex_less(a.x, b.x);
        return Subset::lex_less(a.y, b.y);
    });
}

std::vector<PairMonomial> minimalize(std::vector<PairMonomial> gens) {
    sort_generators(gens);  // divisors precede in degree order; equal supports dedupe
    std::vector<PairMonomial> out;
    for (const auto& g : gens) {
        bool dominated = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(g);
    }
    return out;
}

std::vector<PairMonomial> theorem_generators(const MeetSemilattice& L) {
    const Poset& P = L.joinirr_poset();
    const int m = P.size();
    std::vector<PairMonomial> gens;

    for (int p = 0; p < m; ++p)
        gens.push_back({Subset::single(p), Subset::single(p), GenFamily::Diag});
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
            if (P.less(p, q)) gens.push_back({Subset::single(p), Subset::single(q), GenFamily::I});

    P.for_each_antichain([&](Subset B) {
        const Subset gen_ideal = P.generated_ideal(B);
        if (L.element_with_ell(gen_ideal) >= 0) return;  // <B> = ell(beta): covered by families (i)/diag
        // qualifying alpha: <B> inside ell(alpha)
        int fold = -1;
        for (int a = 0; a < L.size(); ++a)
            if (gen_ideal.subset_of(L.ell(a))) fold = fold < 0 ? a : L.meet(fold, a);
        if (fold < 0) {
            gens.push_back({Subset(), B, GenFamily::II});
        } else {
            (L.ell(fold) - gen_ideal).for_each([&](int p) {
                gens.push_back({Subset::single(p), B, GenFamily::III});
            });
        }
    });

    return minimalize(std::move(gens));
}

std::vector<PairMonomial> generators_oracle(const MeetSemilattice& L) {
    const Poset& P = L.joinirr_poset();
    if (P.size() > 20) throw TooLarge("generators_oracle is exhaustive; |P| <= 20 required");
    const Subset full = L.p_universe();

    std::vector<PairMonomial> cand;
    for (int p = 0; p < P.size(); ++p)
        cand.push_back({Subset::single(p), Subset::single(p), GenFamily::Diag});
    P.for_each_antichain([&](Subset B) {
        for_each_submask((full - B).bits(), [&](Subset A) {
            if (is_independent_pair(L, A, B)) cand.push_back({A, B, GenFamily::II});
        });
    });

    return minimalize(std::move(cand));
}

}  // namespace latlevel
