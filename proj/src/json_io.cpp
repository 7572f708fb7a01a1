#include "latlevel/json_io.hpp"

#include <algorithm>

#include "latlevel/errors.hpp"

namespace latlevel {

namespace {

std::vector<std::string> parse_id_list(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (e.is_string())
            out.push_back(e.get<std::string>());
        else if (e.is_number_integer())
            out.push_back(std::to_string(e.get<long long>()));
        else
            throw InvalidInput(std::string(what) + " entries must be strings or integers");
    }
    return out;
}

}  // namespace

std::vector<int> subset_indices(Subset s, int base) {
    std::vector<int> out;
    s.for_each([&](int i) { out.push_back(i + base); });
    return out;
}

Poset parse_poset(const nlohmann::json& j, int max_ground) {
    if (!j.contains("elements")) throw InvalidInput("poset input needs an \"elements\" array");
    auto elements = parse_id_list(j["elements"], "elements");
    if (static_cast<int>(elements.size()) > max_ground)
        throw TooLarge("input has " + std::to_string(elements.size()) +
                       " elements; limit is " + std::to_string(max_ground));

    const char* key = j.contains("covers") ? "covers" : j.contains("leq") ? "leq" : nullptr;
    if (!key) throw InvalidInput("poset input needs a \"covers\" or \"leq\" array");
    std::vector<std::pair<std::string, std::string>> rel;
    for (const auto& pair : j[key]) {
        if (!pair.is_array() || pair.size() != 2)
            throw InvalidInput(std::string(key) + " entries must be [lo, hi] pairs");
        auto ids = parse_id_list(pair, key);
        rel.emplace_back(ids[0], ids[1]);
    }
    return Poset::from_covers(std::move(elements), rel);
}

SetFamily parse_set_family(const nlohmann::json& j, int max_ground) {
    if (!j.contains("ground") || !j.contains("sets"))
        throw InvalidInput("set-family input needs \"ground\" and \"sets\" arrays");
    SetFamily family;
    family.ground = parse_id_list(j["ground"], "ground");
    if (static_cast<int>(family.ground.size()) > max_ground)
        throw TooLarge("ground set has " + std::to_string(family.ground.size()) +
                       " elements; limit is " + std::to_string(max_ground));
    if (!j["sets"].is_array()) throw InvalidInput("sets must be an array of arrays");
    if (static_cast<int>(j["sets"].size()) > max_ground)
        throw TooLarge("family has " + std::to_string(j["sets"].size()) + " sets; limit is " +
                       std::to_string(max_ground));
    for (const auto& set : j["sets"]) {
        Subset s;
        for (const auto& id : parse_id_list(set, "set")) {
            auto it = std::find(family.ground.begin(), family.ground.end(), id);
            if (it == family.ground.end()) throw UnknownElement("set member not in ground: " + id);
            s = s.with(static_cast<int>(it - family.ground.begin()));
        }
        family.sets.push_back(s);
    }
    return family;
}

MeetSemilattice load_semilattice(const nlohmann::json& j, InputFormat format, int max_ground) {
    if (format == InputFormat::Auto)
        format = (j.contains("ground") || j.contains("sets")) ? InputFormat::Sets : InputFormat::Covers;
    if (format == InputFormat::Sets)
        return MeetSemilattice::from_set_family(parse_set_family(j, max_ground));
    return MeetSemilattice::validate(parse_poset(j, max_ground));
}

nlohmann::json poset_json(const Poset& p) {
    nlohmann::json j;
    j["elements"] = p.ids();
    auto& covers = j["covers"] = nlohmann::json::array();
    for (const auto& [lo, hi] : p.cover_pairs()) covers.push_back({p.id(lo), p.id(hi)});
    return j;
}

nlohmann::json validation_report_json(const MeetSemilattice& L) {
    nlohmann::json j;
    j["valid"] = true;
    auto& jis = j["join_irreducibles"] = nlohmann::json::array();
    for (int a : L.join_irreducibles()) jis.push_back(L.order().id(a));
    j["meet_distributive"] = L.meet_distributive();
    j["witness"] = L.meet_distributive() ? nlohmann::json() : nlohmann::json(L.order().id(L.md_witness()));
    return j;
}

nlohmann::json generators_json(const std::vector<PairMonomial>& gens) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : gens) {
        nlohmann::json m;
        m["family"] = gen_family_name(g.family);
        m["x"] = subset_indices(g.x);
        m["y"] = subset_indices(g.y);
        arr.push_back(m);
    }
    return arr;
}

nlohmann::json s_complex_json(const MeetSemilattice& L, const SComplex& s) {
    nlohmann::json j;
    auto& faces = j["faces"] = nlohmann::json::array();
    for (int a = 0; a < L.size(); ++a)
        faces.push_back({{"alpha", L.order().id(a)}, {"s", subset_indices(s.faces[a])}});
    auto& facets = j["s_facets"] = nlohmann::json::array();
    for (Subset f : s.facets) facets.push_back(subset_indices(f));
    return j;
}

nlohmann::json level_report_json(const LevelReport& r) {
    nlohmann::json j;
    j["h"] = r.h.trimmed();
    j["f_dual"] = r.f_dual;
    j["a_invariant"] = r.a_invariant;
    auto& facets = j["s_facets"] = nlohmann::json::array();
    for (Subset f : r.s_facets) facets.push_back(subset_indices(f));
    j["is_level"] = r.is_level;
    return j;
}

nlohmann::json check_report_json(const CheckReport& r) {
    nlohmann::json j;
    auto& checks = j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json e;
        e["name"] = c.skipped ? c.name + " [skipped: " + c.skip_reason + "]" : c.name;
        e["pass"] = c.pass;
        e["counterexample"] = c.counterexample.empty() ? nlohmann::json() : nlohmann::json(c.counterexample);
        checks.push_back(e);
    }
    return j;
}

nlohmann::json scan_json(const ScanResult& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["posets"] = r.poset_count;
    j["h_vectors"] = r.h_vectors;
    return j;
}

}  // namespace latlevel
