#include "latlevel/level_analysis.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "latlevel/dual_ideal.hpp"
#include "latlevel/errors.hpp"

namespace latlevel {

namespace {

void require_md(const MeetSemilattice& L, bool force) {
    if (!L.meet_distributive() && !force)
        throw NotMeetDistributive("input is not meet-distributive; witness element: " +
                                  L.order().id(L.md_witness()));
}

}  // namespace

std::vector<long long> HVector::trimmed() const {
    std::vector<long long> out = h;
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

long long HVector::sum() const {
    long long s = 0;
    for (long long v : h) s += v;
    return s;
}

int HVector::max_nonzero_index() const {
    for (int i = static_cast<int>(h.size()) - 1; i >= 0; --i)
        if (h[i] != 0) return i;
    return 0;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (acc > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
            throw TooLarge("binomial coefficient overflows");
    }
    return static_cast<long long>(acc);
}

HVector h_vector(const MeetSemilattice& L, bool force) {
    require_md(L, force);
    HVector out;
    out.h.assign(L.ji_count() + 1, 0);
    for (int a = 0; a < L.size(); ++a) ++out.h[L.order().lower_neighbors(a).count()];
    return out;
}

std::vector<long long> f_vector_dual(const MeetSemilattice& L, bool force) {
    const HVector hv = h_vector(L, force);
    const int n = L.ji_count();
    std::vector<long long> f(n + 1, 0);  // f[j+1] = f_j
    for (int j = -1; j < n; ++j) {
        long long acc = 0;
        for (int i = 0; i <= j + 1; ++i) acc += binomial(n - i, n - j - 1) * hv.h[i];
        f[j + 1] = acc;
    }
    return f;
}

long long a_invariant(const MeetSemilattice& L, bool force) {
    require_md(L, force);
    int mx = 0;
    for (int a = 0; a < L.size(); ++a)
        mx = std::max(mx, L.order().lower_neighbors(a).count());
    return mx - L.ji_count();
}

SComplex s_complex(const MeetSemilattice& L, bool force) {
    require_md(L, force);
    const Poset& P = L.order();
    SComplex out;
    out.faces.resize(L.size());

    std::unordered_map<Mask, int> seen;  // S(alpha) -> alpha, for closure checks
    for (int a = 0; a < L.size(); ++a) {
        const Subset nb = P.lower_neighbors(a);
        const int lo = nb.empty() ? a : L.meet(nb);
        out.faces[a] = L.ell(a) - L.ell(lo);
        if (out.faces[a].count() != nb.count())
            throw NotSimplicial("|S(" + P.id(a) + ")| != |N(" + P.id(a) + ")|");
        if (!seen.emplace(out.faces[a].bits(), a).second)
            throw NotSimplicial("S is not injective at element " + P.id(a));
    }
    for (int a = 0; a < L.size(); ++a) {
        bool closed = true;
        for_each_submask(out.faces[a].bits(), [&](Subset t) {
            if (!seen.count(t.bits())) closed = false;
        });
        if (!closed) throw NotSimplicial("{S(alpha)} is not closed under subsets at " + P.id(a));
    }

    for (int a = 0; a < L.size(); ++a) {
        bool maximal = true;
        for (int b = 0; b < L.size() && maximal; ++b)
            if (b != a && out.faces[a].subset_of(out.faces[b])) maximal = false;
        if (maximal) out.facets.push_back(out.faces[a]);
    }
    std::sort(out.facets.begin(), out.facets.end(), Subset::lex_less);
    return out;
}

LevelReport is_level(const MeetSemilattice& L, bool force) {
    LevelReport r;
    r.h = h_vector(L, force);
    r.f_dual = f_vector_dual(L, force);
    r.a_invariant = a_invariant(L, force);
    r.s_facets = s_complex(L, force).facets;
    r.is_level = true;
    for (const Subset& f : r.s_facets)
        if (f.count() != r.s_facets.front().count()) r.is_level = false;
    return r;
}

std::string JMonomial::render() const {
    std::string out;
    support.for_each([&](int p) {
        out += (out.empty() ? "" : "*") + std::string("x_") + std::to_string(p + 1);
        if (squared.contains(p)) out += "^2";
    });
    return out.empty() ? "1" : out;
}

std::vector<JMonomial> j_ideal(const MeetSemilattice& L, bool force) {
    require_md(L, force);
    std::vector<JMonomial> gens;
    for (const PairMonomial& g : theorem_generators(L)) {
        if (g.family == GenFamily::Diag)
            gens.push_back({g.x, g.x});  // x_p * y_p -> x_p^2
        else
            gens.push_back({g.x | g.y, Subset()});
    }
    // Substitution can create new divisibilities (x_p*y_q and y_p*y_q both
    // map into squarefree x-monomials), so minimalize again.
    std::sort(gens.begin(), gens.end(), [](const JMonomial& a, const JMonomial& b) {
        const int da = a.support.count() + a.squared.count(), db = b.support.count() + b.squared.count();
        if (da != db) return da < db;
        if (a.support != b.support) return Subset::lex_less(a.support, b.support);
        return Subset::lex_less(a.squared, b.squared);
    });
    std::vector<JMonomial> out;
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

std::vector<Subset> standard_monomials(const MeetSemilattice& L, bool force) {
    const int m = L.ji_count();
    if (m > 20) throw TooLarge("standard_monomials sweeps 2^|P| supports; |P| <= 20 required");
    std::vector<Subset> squarefree_gens;
    for (const JMonomial& g : j_ideal(L, force))
        if (g.squarefree()) squarefree_gens.push_back(g.support);

    std::vector<Subset> out;
    for (std::uint64_t t = 0; t < (std::uint64_t(1) << m); ++t) {
        const Subset cand{Mask(t)};
        bool standard = true;
        for (const Subset& g : squarefree_gens)
            if (g.subset_of(cand)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(cand);
    }
    std::sort(out.begin(), out.end(), Subset::lex_less);
    return out;
}

}  // namespace latlevel
