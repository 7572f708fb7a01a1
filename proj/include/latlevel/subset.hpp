#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Ground sets are index sets 0..n-1 with n capped at LATLEVEL_MAX_GROUND
// (64 by default, 128 with -DLATLEVEL_MAX_GROUND=128).

#ifndef LATLEVEL_MAX_GROUND
#define LATLEVEL_MAX_GROUND 64
#endif

namespace latlevel {

#if LATLEVEL_MAX_GROUND == 64
using Mask = std::uint64_t;
#elif LATLEVEL_MAX_GROUND == 128
using Mask = unsigned __int128;
#else
#error "LATLEVEL_MAX_GROUND must be 64 or 128"
#endif

inline constexpr int kMaxGround = LATLEVEL_MAX_GROUND;

template <typename M>
constexpr int mask_popcount(M m) {
    int c = 0;
    while (m) {
        m &= m - 1;
        ++c;
    }
    return c;
}

template <typename M>
constexpr int mask_ctz(M m) {
    int c = 0;
    while (!(m & 1)) {
        m >>= 1;
        ++c;
    }
    return c;
}

/// Subset of a fixed ambient index set, bitmask semantics.
class Subset {
public:
    constexpr Subset() : bits_(0) {}
    constexpr explicit Subset(Mask bits) : bits_(bits) {}

    static constexpr Subset single(int i) { return Subset(Mask(1) << i); }
    static constexpr Subset universe(int n) {
        return n == 0 ? Subset() : Subset(~Mask(0) >> (8 * sizeof(Mask) - n));
    }

    constexpr Mask bits() const { return bits_; }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return mask_popcount(bits_); }
    constexpr int min_element() const { return mask_ctz(bits_); }  // pre: nonempty

    constexpr Subset with(int i) const { return Subset(bits_ | (Mask(1) << i)); }
    constexpr Subset without(int i) const { return Subset(bits_ & ~(Mask(1) << i)); }

    constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
    friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(Subset a, Subset b) { return a.bits_ != b.bits_; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (Mask m = bits_; m; m &= m - 1) out.push_back(mask_ctz(m));
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (Mask m = bits_; m; m &= m - 1) f(mask_ctz(m));
    }

    /// Lexicographic order on the increasing member sequences,
    /// so {} < {0} < {0,1} < {0,2} < {1}.
    static bool lex_less(Subset a, Subset b) {
        if (a.bits_ == b.bits_) return false;
        int i = mask_ctz(a.bits_ ^ b.bits_);  // members below i are shared
        if (a.contains(i)) return (b.bits_ >> i) != 0;  // b continues past i, or b is a prefix of a
        return (a.bits_ >> i) == 0;                     // a is a prefix of b, or b continues first
    }

private:
    Mask bits_;
};

struct SubsetHash {
    std::size_t operator()(Subset s) const {
        Mask m = s.bits();
        if constexpr (sizeof(Mask) > 8)
            return static_cast<std::size_t>(static_cast<std::uint64_t>(m) * 0x9e3779b97f4a7c15ULL ^
                                            static_cast<std::uint64_t>(m >> 64));
        else
            return static_cast<std::size_t>(m * 0x9e3779b97f4a7c15ULL);
    }
};

/// Enumerate all submasks of `sup` (including empty and sup itself).
template <typename F>
void for_each_submask(Mask sup, F&& f) {
    Mask s = sup;
    while (true) {
        f(Subset(s));
        if (s == 0) break;
        s = (s - 1) & sup;
    }
}

std::string subset_to_string(Subset s, int index_base = 1);

}  // namespace latlevel
