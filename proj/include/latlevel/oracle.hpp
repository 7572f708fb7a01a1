#pragma once

#include <string>
#include <vector>

#include "latlevel/dual_ideal.hpp"
#include "latlevel/semilattice.hpp"

namespace latlevel {

/// Exact face counts of the dual by brute force: every subset of every facet,
/// deduplicated. Returns f_{-1}..f_{|P|-1}. Throws TooLarge when |P| exceeds
/// max_p (the sweep is |L| * 2^|P|).
std::vector<long long> enumerate_faces(const DualComplex& d, int max_p = 14);

/// Inverse of the f-from-h transform:
/// h_k = sum_{i<=k} (-1)^(k-i) C(d-i, k-i) f_{i-1}, with d = |P|.
std::vector<long long> f_to_h(const std::vector<long long>& f, int d);

struct CheckResult {
    std::string name;
    bool pass = true;
    bool skipped = false;
    std::string skip_reason;  // e.g. "not meet-distributive", oracle bound exceeded
    std::string counterexample;
};

struct CheckReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Runs the five formula-vs-brute-force comparisons:
///   1. h-vector formula vs face enumeration (meet-distributive inputs),
///   2. theorem generators vs exhaustive oracle generators,
///   3. standard monomials vs { S(alpha) } (meet-distributive inputs),
///   4. the two meet-distributivity detectors,
///   5. every emitted generator against condition (*) and the facet list.
CheckReport cross_check(const MeetSemilattice& L);

struct ScanResult {
    int n = 0;
    int poset_count = 0;
    std::vector<std::vector<long long>> h_vectors;  // deduplicated, sorted
};

/// All unlabeled posets P on n elements (canonical adjacency-matrix
/// minimization), and the deduplicated set of h-vectors of the duals of
/// their distributive lattices J(P). Throws TooLarge when n > 5.
ScanResult realizability_scan(int n);

}  // namespace latlevel
