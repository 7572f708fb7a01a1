#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latlevel/subset.hpp"

namespace latlevel {

/// Finite poset over named elements. Internally elements are dense indices
/// 0..n-1 in input order; the order relation is kept as one down-set bitmask
/// per element, so comparability tests are O(1) and subset operations are
/// word ops. Immutable after construction.
class Poset {
public:
    Poset() = default;  // the empty poset

    /// Build from any relation whose reflexive-transitive closure is the
    /// intended order (cover pairs are the typical input). Pairs are
    /// (lo, hi) meaning lo < hi. Throws CycleError if the closure is not
    /// antisymmetric, UnknownElement / InvalidInput on bad ids, TooLarge
    /// past the compiled ground cap.
    static Poset from_covers(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& relation);

    int size() const { return static_cast<int>(ids_.size()); }
    Subset universe() const { return Subset::universe(size()); }
    const std::string& id(int i) const { return ids_[i]; }
    const std::vector<std::string>& ids() const { return ids_; }
    int index(const std::string& id) const;  // throws UnknownElement

    bool leq(int a, int b) const { return down_[b].contains(a); }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    Subset down_set(int a) const { return down_[a]; }                  // { b : b <= a }
    Subset strict_down(int a) const { return down_[a].without(a); }
    Subset up_set(int a) const { return up_[a]; }
    Subset lower_neighbors(int a) const { return covers_[a]; }         // N(a)
    Subset minimal_elements() const { return minimal_; }

    bool is_antichain(Subset b) const;
    Subset generated_ideal(Subset b) const;   // <B> = union of down-sets
    Subset maximal_elements(Subset b) const;  // M(B)

    /// All antichains, emitted in index-lexicographic order (DFS that only
    /// extends with larger incomparable indices), the empty set first.
    template <typename F>
    void for_each_antichain(F&& f) const {
        extend_antichain(Subset(), 0, f);
    }
    std::vector<Subset> antichains() const;

    /// All poset ideals (down-closed subsets), index-lexicographic order.
    std::vector<Subset> poset_ideals() const;
    template <typename F>
    void for_each_ideal(F&& f) const;  // unspecified (but deterministic) order

    /// Subposet induced on the given elements, which become indices
    /// 0..k-1 in the given order and keep their ids.
    Poset induced(const std::vector<int>& elements) const;

    /// Cover pairs (lo, hi) of the Hasse diagram, ordered by (hi, lo).
    std::vector<std::pair<int, int>> cover_pairs() const;

    /// A linear extension: indices sorted by (|down|, index).
    std::vector<int> linear_extension() const;

private:
    void finish_construction();  // computes up_, covers_, minimal_

    template <typename F>
    void extend_antichain(Subset chosen, int next, F& f) const {
        f(chosen);
        for (int i = next; i < size(); ++i)
            if (!comp_[i].intersects(chosen)) extend_antichain(chosen.with(i), i + 1, f);
    }

    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<Subset> down_;    // down_[i] = { j : j <= i }
    std::vector<Subset> up_;      // up_[i]   = { j : i <= j }
    std::vector<Subset> covers_;  // lower covers
    std::vector<Subset> comp_;    // comparable elements incl. self
    Subset minimal_;
};

template <typename F>
void Poset::for_each_ideal(F&& f) const {
    const std::vector<int> topo = linear_extension();
    const int n = size();
    std::function<void(int, Subset)> rec = [&](int k, Subset chosen) {
        if (k == n) {
            f(chosen);
            return;
        }
        const int e = topo[k];
        rec(k + 1, chosen);
        if (strict_down(e).subset_of(chosen)) rec(k + 1, chosen.with(e));
    };
    rec(0, Subset());
}

}  // namespace latlevel
