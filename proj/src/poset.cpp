#include "latlevel/poset.hpp"

#include <algorithm>

#include "latlevel/errors.hpp"

namespace latlevel {

std::string subset_to_string(Subset s, int index_base) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ",";
        out += std::to_string(i + index_base);
        first = false;
    });
    return out + "}";
}

Poset Poset::from_covers(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& relation) {
    if (static_cast<int>(elements.size()) > kMaxGround)
        throw TooLarge("poset has " + std::to_string(elements.size()) + " elements; cap is " +
                       std::to_string(kMaxGround));
    Poset p;
    p.ids_ = std::move(elements);
    for (int i = 0; i < p.size(); ++i) {
        if (!p.index_.emplace(p.ids_[i], i).second)
            throw InvalidInput("duplicate element id: " + p.ids_[i]);
    }

    const int n = p.size();
    std::vector<Subset> strictly_below(n);  // direct predecessors from the input relation
    for (const auto& [lo, hi] : relation) {
        const int a = p.index(lo), b = p.index(hi);
        if (a == b) continue;  // reflexive pairs are implicit in the order
        strictly_below[b] = strictly_below[b].with(a);
    }

    // Reflexive-transitive closure to a fixpoint.
    p.down_.resize(n);
    for (int i = 0; i < n; ++i) p.down_[i] = Subset::single(i);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            Subset acc = p.down_[i];
            strictly_below[i].for_each([&](int j) { acc = acc | p.down_[j]; });
            if (acc != p.down_[i]) {
                p.down_[i] = acc;
                changed = true;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p.down_[i].contains(j) && p.down_[j].contains(i))
                throw CycleError("cycle through elements: " + p.ids_[i] + ", " + p.ids_[j]);

    p.finish_construction();
    return p;
}

void Poset::finish_construction() {
    const int n = size();
    up_.assign(n, Subset());
    covers_.assign(n, Subset());
    comp_.assign(n, Subset());
    minimal_ = Subset();
    for (int i = 0; i < n; ++i)
        down_[i].for_each([&](int j) { up_[j] = up_[j].with(i); });
    for (int i = 0; i < n; ++i) {
        covers_[i] = maximal_elements(strict_down(i));
        comp_[i] = down_[i] | up_[i];
        if (strict_down(i).empty()) minimal_ = minimal_.with(i);
    }
}

int Poset::index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownElement("unknown element id: " + id);
    return it->second;
}

bool Poset::is_antichain(Subset b) const {
    bool ok = true;
    b.for_each([&](int i) {
        if ((comp_[i] & b) != Subset::single(i)) ok = false;
    });
    return ok;
}

Subset Poset::generated_ideal(Subset b) const {
    Subset out;
    b.for_each([&](int i) { out = out | down_[i]; });
    return out;
}

Subset Poset::maximal_elements(Subset b) const {
    // elements of b strictly below some other member are not maximal
    Subset dominated;
    b.for_each([&](int i) { dominated = dominated | strict_down(i); });
    return b - dominated;
}

std::vector<Subset> Poset::antichains() const {
    std::vector<Subset> out;
    for_each_antichain([&](Subset s) { out.push_back(s); });
    return out;
}

std::vector<Subset> Poset::poset_ideals() const {
    std::vector<Subset> out;
    for_each_ideal([&](Subset s) { out.push_back(s); });
    std::sort(out.begin(), out.end(), Subset::lex_less);
    return out;
}

std::vector<int> Poset::linear_extension() const {
    std::vector<int> topo(size());
    for (int i = 0; i < size(); ++i) topo[i] = i;
    std::sort(topo.begin(), topo.end(), [&](int a, int b) {
        const int ca = down_[a].count(), cb = down_[b].count();
        return ca != cb ? ca < cb : a < b;
    });
    return topo;
}

Poset Poset::induced(const std::vector<int>& elements) const {
    Poset q;
    std::vector<int> pos(size(), -1);
    for (int t = 0; t < static_cast<int>(elements.size()); ++t) {
        q.ids_.push_back(ids_[elements[t]]);
        q.index_.emplace(ids_[elements[t]], t);
        pos[elements[t]] = t;
    }
    q.down_.resize(elements.size());
    for (int t = 0; t < static_cast<int>(elements.size()); ++t) {
        Subset d = Subset::single(t);
        down_[elements[t]].for_each([&](int j) {
            if (pos[j] >= 0) d = d.with(pos[j]);
        });
        q.down_[t] = d;
    }
    q.finish_construction();
    return q;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        covers_[i].for_each([&](int j) { out.emplace_back(j, i); });
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second != b.second ? a.second < b.second : a.first < b.first; });
    return out;
}

}  // namespace latlevel
