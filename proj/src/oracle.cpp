#include "latlevel/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_set>

#include "latlevel/errors.hpp"
#include "latlevel/level_analysis.hpp"

namespace latlevel {

std::vector<long long> enumerate_faces(const DualComplex& d, int max_p) {
    if (d.np > max_p)
        throw TooLarge("face enumeration over |P| = " + std::to_string(d.np) + " exceeds bound " +
                       std::to_string(max_p));
    // Vertex masks: bit t = x_t, bit np + t = y_t. |P| <= max_p <= 31 keeps
    // the 2|P| vertices inside one word.
    std::unordered_set<std::uint64_t> faces;
    for (const Facet& f : d.facets) {
        const std::uint64_t fm = static_cast<std::uint64_t>(f.x.bits()) |
                                 (static_cast<std::uint64_t>(f.y.bits()) << d.np);
        std::uint64_t s = fm;
        while (true) {
            faces.insert(s);
            if (s == 0) break;
            s = (s - 1) & fm;
        }
    }
    std::vector<long long> f(d.np + 1, 0);
    for (std::uint64_t s : faces) ++f[mask_popcount(s)];
    return f;
}

std::vector<long long> f_to_h(const std::vector<long long>& f, int d) {
    std::vector<long long> h(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        long long acc = 0;
        for (int i = 0; i <= k; ++i) {
            const long long c = binomial(d - i, k - i) * (i < static_cast<int>(f.size()) ? f[i] : 0);
            acc += ((k - i) % 2 == 0) ? c : -c;
        }
        h[k] = acc;
    }
    return h;
}

bool CheckReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

std::string render_vec(const std::vector<long long>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

}  // namespace

CheckReport cross_check(const MeetSemilattice& L) {
    CheckReport report;
    const bool md = L.meet_distributive();
    const DualComplex dual = dual_facets(L);

    {
        CheckResult c;
        c.name = "h_formula_vs_face_enumeration";
        if (!md) {
            c.skipped = true;
            c.skip_reason = "not meet-distributive";
        } else {
            try {
                const auto counted = f_to_h(enumerate_faces(dual), L.ji_count());
                const auto formula = h_vector(L).h;
                if (counted != formula) {
                    c.pass = false;
                    c.counterexample =
                        "formula " + render_vec(formula) + " vs faces " + render_vec(counted);
                }
            } catch (const TooLarge& e) {
                c.skipped = true;
                c.skip_reason = e.what();
            }
        }
        report.checks.push_back(c);
    }
    {
        CheckResult c;
        c.name = "theorem_vs_oracle_generators";
        try {
            const auto theorem = theorem_generators(L);
            const auto oracle = generators_oracle(L);
            auto key = [](const PairMonomial& g) {
                return std::pair<Mask, Mask>(g.x.bits(), g.y.bits());
            };
            std::set<std::pair<Mask, Mask>> ts, os;
            for (const auto& g : theorem) ts.insert(key(g));
            for (const auto& g : oracle) os.insert(key(g));
            if (ts != os) {
                c.pass = false;
                for (const auto& g : theorem)
                    if (!os.count(key(g))) c.counterexample = "theorem-only " + g.render();
                for (const auto& g : oracle)
                    if (!ts.count(key(g))) c.counterexample = "oracle-only " + g.render();
            }
        } catch (const TooLarge& e) {
            c.skipped = true;
            c.skip_reason = e.what();
        }
        report.checks.push_back(c);
    }
    {
        CheckResult c;
        c.name = "standard_monomials_vs_s_complex";
        if (!md) {
            c.skipped = true;
            c.skip_reason = "not meet-distributive";
        } else {
            try {
                const auto basis = standard_monomials(L);
                std::set<Mask> sm, sc;
                for (Subset s : basis) sm.insert(s.bits());
                for (Subset s : s_complex(L).faces) sc.insert(s.bits());
                if (sm != sc) {
                    c.pass = false;
                    c.counterexample = "standard monomial sets differ (" + std::to_string(sm.size()) +
                                       " vs " + std::to_string(sc.size()) + " faces)";
                }
            } catch (const TooLarge& e) {
                c.skipped = true;
                c.skip_reason = e.what();
            }
        }
        report.checks.push_back(c);
    }
    {
        CheckResult c;
        c.name = "meet_distributivity_detectors";
        if (embedding_check(L) != md) {
            c.pass = false;
            c.counterexample = md ? "interval test passes, embedding fails"
                                  : "embedding passes, interval test fails at " +
                                        L.order().id(L.md_witness());
        }
        report.checks.push_back(c);
    }
    {
        CheckResult c;
        c.name = "generators_vs_independence";
        for (const PairMonomial& g : theorem_generators(L)) {
            // no facet may contain the generator's support
            for (int a = 0; a < L.size(); ++a)
                if (dual.face_in_facet(g.x, g.y, a)) {
                    c.pass = false;
                    c.counterexample = g.render() + " lies in facet of " + L.order().id(a);
                }
            if (g.family != GenFamily::Diag && !is_independent_pair(L, g.x, g.y)) {
                c.pass = false;
                c.counterexample = g.render() + " fails condition (*)";
            }
        }
        report.checks.push_back(c);
    }
    return report;
}

namespace {

// Strict order on n labeled points, encoded row-major: bit n*i + j set iff
// j < i. Validity: irreflexive rows, antisymmetric, transitive.
bool valid_strict_order(const std::vector<std::uint32_t>& below, int n) {
    for (int i = 0; i < n; ++i) {
        if (below[i] >> i & 1) return false;
        for (int j = 0; j < n; ++j) {
            if (!(below[i] >> j & 1)) continue;
            if (below[j] >> i & 1) return false;       // antisymmetry
            if ((below[j] & ~below[i]) != 0) return false;  // transitivity
        }
    }
    return true;
}

std::uint32_t pack(const std::vector<std::uint32_t>& below, int n) {
    std::uint32_t out = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (below[i] >> j & 1) out |= std::uint32_t(1) << (i * n + j);
    return out;
}

std::uint32_t canonical_form(const std::vector<std::uint32_t>& below, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~std::uint32_t(0);
    std::vector<std::uint32_t> relabeled(n);
    do {
        for (int i = 0; i < n; ++i) {
            std::uint32_t row = 0;
            for (int j = 0; j < n; ++j)
                if (below[i] >> j & 1) row |= std::uint32_t(1) << perm[j];
            relabeled[perm[i]] = row;
        }
        best = std::min(best, pack(relabeled, n));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

ScanResult realizability_scan(int n) {
    if (n < 1 || n > 5) throw TooLarge("realizability scan supports 1 <= n <= 5");
    ScanResult result;
    result.n = n;

    const int npairs = n * (n - 1);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) pairs.emplace_back(i, j);

    std::unordered_set<std::uint32_t> seen;
    std::set<std::vector<long long>> hset;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << npairs); ++bits) {
        std::vector<std::uint32_t> below(n, 0);
        for (int k = 0; k < npairs; ++k)
            if (bits >> k & 1) below[pairs[k].first] |= std::uint32_t(1) << pairs[k].second;
        if (!valid_strict_order(below, n)) continue;
        if (!seen.insert(canonical_form(below, n)).second) continue;
        ++result.poset_count;

        // J(P) over ground 1..n, elements = ideals as an inclusion family.
        std::vector<std::string> ids;
        std::vector<std::pair<std::string, std::string>> rel;
        for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i + 1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (below[i] >> j & 1) rel.emplace_back(ids[j], ids[i]);
        const Poset P = Poset::from_covers(ids, rel);

        SetFamily family;
        family.ground = ids;
        family.sets = P.poset_ideals();
        const MeetSemilattice J = MeetSemilattice::from_set_family(family);
        hset.insert(h_vector(J).h);
    }
    result.h_vectors.assign(hset.begin(), hset.end());
    return result;
}

}  // namespace latlevel
