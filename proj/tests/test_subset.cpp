#include <algorithm>
#include <vector>

#include "doctest.h"
#include "latlevel/subset.hpp"

using latlevel::Subset;

TEST_CASE("subset basics") {
    Subset s = Subset::single(2).with(5);
    CHECK(s.count() == 2);
    CHECK(s.contains(2));
    CHECK(s.contains(5));
    CHECK(!s.contains(3));
    CHECK(s.members() == std::vector<int>{2, 5});
    CHECK(s.min_element() == 2);
    CHECK(Subset::universe(0).empty());
    CHECK(Subset::universe(6).count() == 6);
    CHECK(s.subset_of(Subset::universe(6)));
    CHECK((s - Subset::single(2)) == Subset::single(5));
}

TEST_CASE("lexicographic order on member sequences") {
    auto of = [](std::initializer_list<int> xs) {
        Subset s;
        for (int x : xs) s = s.with(x);
        return s;
    };
    // {} < {0} < {0,1} < {0,2} < {1} < {1,2} < {2}
    std::vector<Subset> expected = {of({}), of({0}), of({0, 1}), of({0, 2}),
                                    of({1}), of({1, 2}), of({2})};
    std::vector<Subset> shuffled = {of({1, 2}), of({0, 2}), of({2}), of({0}),
                                    of({}), of({1}), of({0, 1})};
    std::sort(shuffled.begin(), shuffled.end(), Subset::lex_less);
    CHECK(shuffled == expected);
    CHECK(!Subset::lex_less(of({1}), of({1})));
    // total strict order over all subsets of a 5-set: asymmetry and transitivity
    for (unsigned a = 0; a < 32; ++a)
        for (unsigned b = 0; b < 32; ++b) {
            const bool ab = Subset::lex_less(Subset{a}, Subset{b});
            const bool ba = Subset::lex_less(Subset{b}, Subset{a});
            CHECK((a == b ? !ab && !ba : ab != ba));
            if (!ab) continue;
            for (unsigned c = 0; c < 32; ++c)
                if (Subset::lex_less(Subset{b}, Subset{c}))
                    CHECK(Subset::lex_less(Subset{a}, Subset{c}));
        }
}

TEST_CASE("submask enumeration hits every subset once") {
    int count = 0;
    latlevel::Mask seen = 0;
    latlevel::for_each_submask(Subset::universe(4).bits(), [&](Subset s) {
        ++count;
        seen ^= (latlevel::Mask(1) << s.bits());  // works since bits < 16
    });
    CHECK(count == 16);
    CHECK(seen == Subset::universe(16).bits());
}

TEST_CASE("bit helpers work at both supported widths") {
    CHECK(latlevel::mask_popcount(std::uint64_t(0)) == 0);
    CHECK(latlevel::mask_popcount(~std::uint64_t(0)) == 64);
    CHECK(latlevel::mask_ctz(std::uint64_t(1) << 63) == 63);
    using Wide = unsigned __int128;
    const Wide hi = Wide(1) << 100;
    CHECK(latlevel::mask_popcount(hi | 1) == 2);
    CHECK(latlevel::mask_ctz(hi) == 100);
    CHECK(latlevel::mask_popcount(~Wide(0)) == 128);
}
