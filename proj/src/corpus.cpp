#include "latlevel/corpus.hpp"

#include <algorithm>
#include <random>

#include "latlevel/errors.hpp"
#include "latlevel/json_io.hpp"

namespace latlevel {

namespace {

nlohmann::json covers_file(const std::vector<std::string>& elements,
                           const std::vector<std::pair<std::string, std::string>>& covers) {
    nlohmann::json j;
    j["elements"] = elements;
    auto& arr = j["covers"] = nlohmann::json::array();
    for (const auto& [lo, hi] : covers) arr.push_back({lo, hi});
    return j;
}

std::string set_label(std::uint32_t mask) {
    if (mask == 0) return "0";
    std::string out;
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1) out += std::to_string(i + 1);
    return out;
}

nlohmann::json boolean_lattice(int rank) {
    if (rank < 0 || (std::uint64_t(1) << rank) > std::uint64_t(kMaxGround))
        throw TooLarge("Bn(" + std::to_string(rank) + ") exceeds the ground cap");
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::uint32_t s = 0; s < (std::uint32_t(1) << rank); ++s) {
        elements.push_back(set_label(s));
        for (int i = 0; i < rank; ++i)
            if (s >> i & 1) covers.emplace_back(set_label(s & ~(std::uint32_t(1) << i)), set_label(s));
    }
    return covers_file(elements, covers);
}

nlohmann::json random_jp(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = 2 + static_cast<int>(rng() % 5);  // poset on 2..6 points
    // Random strict order consistent with the identity permutation: each
    // pair i < j related with probability ~0.4, then transitively closed by
    // the Poset constructor.
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i + 1));
    std::vector<std::pair<std::string, std::string>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % 5 < 2) rel.emplace_back(ids[i], ids[j]);
    const Poset P = Poset::from_covers(ids, rel);

    const auto ideals = P.poset_ideals();
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> covers;
    for (Subset I : ideals) elements.push_back(set_label(static_cast<std::uint32_t>(I.bits())));
    for (Subset I : ideals) {
        // covers in J(P): add one element whose strict down-set is inside I
        for (int e = 0; e < n; ++e)
            if (!I.contains(e) && P.strict_down(e).subset_of(I))
                covers.emplace_back(set_label(static_cast<std::uint32_t>(I.bits())),
                                    set_label(static_cast<std::uint32_t>(I.with(e).bits())));
    }
    return covers_file(elements, covers);
}

}  // namespace

nlohmann::json corpus_emit(const std::string& name) {
    if (name == "L1") {
        return covers_file({"0", "1", "2", "3", "12", "23", "123", "234", "235", "2345"},
                           {{"0", "1"},
                            {"0", "2"},
                            {"0", "3"},
                            {"1", "12"},
                            {"2", "12"},
                            {"2", "23"},
                            {"3", "23"},
                            {"12", "123"},
                            {"23", "123"},
                            {"23", "234"},
                            {"23", "235"},
                            {"234", "2345"},
                            {"235", "2345"}});
    }
    if (name == "L2") {
        return covers_file(
            {"0", "1", "2", "3", "4", "13", "14", "23", "24", "34", "134", "234", "1234"},
            {{"0", "1"},    {"0", "2"},    {"0", "3"},    {"0", "4"},    {"1", "13"},
             {"1", "14"},   {"2", "23"},   {"2", "24"},   {"3", "13"},   {"3", "23"},
             {"3", "34"},   {"4", "14"},   {"4", "24"},   {"4", "34"},   {"13", "134"},
             {"14", "134"}, {"34", "134"}, {"23", "234"}, {"24", "234"}, {"34", "234"},
             {"134", "1234"}, {"234", "1234"}});
    }
    if (name == "B3-minus-13") {
        return covers_file({"0", "1", "2", "3", "12", "23", "123"},
                           {{"0", "1"},
                            {"0", "2"},
                            {"0", "3"},
                            {"1", "12"},
                            {"2", "12"},
                            {"2", "23"},
                            {"3", "23"},
                            {"12", "123"},
                            {"23", "123"}});
    }
    try {
        if (name.rfind("Bn(", 0) == 0 && name.back() == ')')
            return boolean_lattice(std::stoi(name.substr(3, name.size() - 4)));
        if (name.rfind("JP(", 0) == 0 && name.back() == ')')
            return random_jp(std::stoull(name.substr(3, name.size() - 4)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw UnknownName("unknown corpus name: " + name +
                      " (expected L1, L2, B3-minus-13, Bn(k) or JP(seed))");
}

MeetSemilattice corpus_semilattice(const std::string& name) {
    return load_semilattice(corpus_emit(name));
}

SetFamily random_closed_family(std::uint64_t seed, int max_ji) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0;; ++attempt) {
        const int ground = 2 + static_cast<int>(rng() % 5);
        const int base_count = 2 + static_cast<int>(rng() % (2 * ground));
        std::vector<std::uint32_t> sets;
        for (int i = 0; i < base_count; ++i)
            sets.push_back(static_cast<std::uint32_t>(rng()) & ((std::uint32_t(1) << ground) - 1));
        // close under intersection
        bool grew = true;
        while (grew) {
            grew = false;
            const std::size_t sz = sets.size();
            for (std::size_t i = 0; i < sz; ++i)
                for (std::size_t j = 0; j < i; ++j) {
                    const std::uint32_t inter = sets[i] & sets[j];
                    if (std::find(sets.begin(), sets.end(), inter) == sets.end()) {
                        sets.push_back(inter);
                        grew = true;
                    }
                }
        }
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

        SetFamily family;
        for (int g = 0; g < ground; ++g) family.ground.push_back(std::to_string(g + 1));
        for (std::uint32_t s : sets) family.sets.push_back(Subset{Mask(s)});
        const MeetSemilattice L = MeetSemilattice::from_set_family(family);
        if (L.ji_count() <= max_ji) return family;
        if (attempt > 1000) throw TooLarge("no random family under the join-irreducible bound");
    }
}

}  // namespace latlevel
