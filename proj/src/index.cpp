#include "phytobase/index.hpp"

#include "phytobase/text.hpp"

namespace phytobase {

IndexKeys index_keys(const PlantRecord& r) {
    IndexKeys keys;
    auto add_tokens = [&](std::string_view s) {
        for (auto& tok : text::name_tokens(s)) keys.names.insert(std::move(tok));
    };
    add_tokens(r.scientific_name);
    for (const auto& n : r.common_names) add_tokens(n);
    for (const auto& n : r.synonyms) add_tokens(n);
    for (const auto& n : r.local_names) add_tokens(n.text);

    for (const auto& code : ailment_codes(r)) keys.ailments.insert(code);
    if (!text::is_blank(r.family)) keys.families.insert(text::to_lower(text::trim(r.family)));
    for (const auto& area : r.areas_of_origin)
        if (!text::is_blank(area)) keys.origins.insert(text::to_lower(text::trim(area)));
    return keys;
}

namespace {

void post(Postings& index, const std::set<std::string>& keys, const std::string& id) {
    for (const auto& k : keys) index[k].insert(id);
}

void unpost(Postings& index, const std::set<std::string>& keys, const std::string& id) {
    for (const auto& k : keys) {
        auto it = index.find(k);
        if (it == index.end()) continue;
        it->second.erase(id);
        if (it->second.empty()) index.erase(it);
    }
}

}  // namespace

void IndexSet::add(const PlantRecord& r) {
    auto keys = index_keys(r);
    post(name_index, keys.names, r.id);
    post(ailment_index, keys.ailments, r.id);
    post(family_index, keys.families, r.id);
    post(origin_index, keys.origins, r.id);
}

void IndexSet::remove(const PlantRecord& r) {
    auto keys = index_keys(r);
    unpost(name_index, keys.names, r.id);
    unpost(ailment_index, keys.ailments, r.id);
    unpost(family_index, keys.families, r.id);
    unpost(origin_index, keys.origins, r.id);
}

bool IndexSet::empty() const {
    return name_index.empty() && ailment_index.empty() && family_index.empty() && origin_index.empty();
}

}  // namespace phytobase
