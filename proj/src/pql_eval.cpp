#include <algorithm>

#include "phytobase/pql.hpp"
#include "phytobase/status.hpp"
#include "phytobase/store.hpp"
#include "phytobase/text.hpp"

namespace phytobase::pql {

// ---- field access ------------------------------------------------------------

std::vector<std::string> field_values(const PlantRecord& r, Field f) {
    std::vector<std::string> out;
    auto add_trimmed = [&](std::string_view s) {
        if (!text::is_blank(s)) out.emplace_back(text::trim(s));
    };
    switch (f) {
        case Field::ScientificName: add_trimmed(r.scientific_name); break;
        case Field::Family: add_trimmed(r.family); break;
        case Field::CommonName: out = r.common_names; break;
        case Field::Synonym: out = r.synonyms; break;
        case Field::LocalName:
            for (const auto& n : r.local_names) out.push_back(n.text);
            break;
        case Field::Name:
            for (auto g : {Field::ScientificName, Field::CommonName, Field::Synonym, Field::LocalName})
                for (auto& v : field_values(r, g)) out.push_back(std::move(v));
            break;
        case Field::Ailment: out = ailment_codes(r); break;
        case Field::PartUsed:
            for (const auto& p : parts_used(r)) out.push_back(display_name(p));
            break;
        case Field::AreaOfOrigin:
            for (const auto& a : r.areas_of_origin) add_trimmed(a);
            break;
        case Field::Phytoconstituent: out = r.phytoconstituents; break;
        case Field::Status:
            if (auto s = record_status(r)) out.emplace_back(to_string(canonical(*s)));
            break;
        case Field::MarketStatus:
            if (r.market_status) out.emplace_back(to_string(*r.market_status));
            break;
        case Field::Description: add_trimmed(r.description); break;
        case Field::Pharmacology:
            if (r.pharmacology) add_trimmed(*r.pharmacology);
            break;
    }
    return out;
}

std::string normalize(Field f, std::string_view value) {
    try {
        switch (f) {
            case Field::PartUsed:
                if (!text::is_blank(value)) return text::to_lower(to_string(parse_plant_part(value)));
                break;
            case Field::Status: return text::to_lower(to_string(canonical(parse_paper_status(value))));
            case Field::MarketStatus: return text::to_lower(to_string(parse_market_status(value)));
            default: break;
        }
    } catch (const Error&) {
        // not a vocabulary word; compare as plain text
    }
    return text::to_lower(value);
}

// ---- matching ----------------------------------------------------------------

namespace {

bool any_equals(const std::vector<std::string>& values, Field f, const std::string& literal) {
    auto key = normalize(f, literal);
    return std::any_of(values.begin(), values.end(), [&](const auto& v) { return normalize(f, v) == key; });
}

}  // namespace

bool matches(const Expr& e, const PlantRecord& r) {
    struct Visitor {
        const PlantRecord& r;
        bool operator()(const Compare& c) const {
            bool eq = any_equals(field_values(r, c.field), c.field, literal_text(c.value));
            return c.op == CompareOp::Eq ? eq : !eq;
        }
        bool operator()(const Contains& c) const {
            auto values = field_values(r, c.field);
            return std::any_of(values.begin(), values.end(), [&](const auto& v) { return text::icontains(v, c.needle); });
        }
        bool operator()(const In& in) const {
            auto values = field_values(r, in.field);
            return std::any_of(in.values.begin(), in.values.end(),
                               [&](const auto& lit) { return any_equals(values, in.field, literal_text(lit)); });
        }
        bool operator()(const And& a) const {
            return std::all_of(a.children.begin(), a.children.end(), [&](const Expr& c) { return matches(c, r); });
        }
        bool operator()(const Or& o) const {
            return std::any_of(o.children.begin(), o.children.end(), [&](const Expr& c) { return matches(c, r); });
        }
        bool operator()(const Not& n) const { return !matches(*n.child, r); }
    };
    return std::visit(Visitor{r}, e.node);
}

// ---- index planning ------------------------------------------------------------

namespace {

using IdSet = std::set<std::string>;

bool is_name_field(Field f) {
    return f == Field::ScientificName || f == Field::CommonName || f == Field::Synonym || f == Field::LocalName ||
           f == Field::Name;
}

IdSet posting(const Postings& index, const std::string& key) {
    auto it = index.find(key);
    return it == index.end() ? IdSet{} : it->second;
}

IdSet intersect(const IdSet& a, const IdSet& b) {
    IdSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

// Superset of the records whose `f` equals `literal`, or nullopt when the
// indexes cannot narrow it.
std::optional<IdSet> equality_candidates(Field f, const std::string& literal, const IndexSet& idx) {
    switch (f) {
        case Field::Ailment: return posting(idx.ailment_index, text::to_upper(literal));
        case Field::Family: return posting(idx.family_index, text::to_lower(literal));
        case Field::AreaOfOrigin: return posting(idx.origin_index, text::to_lower(literal));
        default: break;
    }
    if (!is_name_field(f)) return std::nullopt;
    auto tokens = text::name_tokens(literal);
    if (tokens.empty()) return std::nullopt;
    auto out = posting(idx.name_index, tokens.front());
    for (std::size_t i = 1; i < tokens.size() && !out.empty(); ++i) out = intersect(out, posting(idx.name_index, tokens[i]));
    return out;
}

std::optional<IdSet> candidates(const Expr& e, const IndexSet& idx) {
    if (const auto* c = std::get_if<Compare>(&e.node)) {
        if (c->op != CompareOp::Eq) return std::nullopt;
        return equality_candidates(c->field, literal_text(c->value), idx);
    }
    if (const auto* in = std::get_if<In>(&e.node)) {
        IdSet out;
        for (const auto& v : in->values) {
            auto part = equality_candidates(in->field, literal_text(v), idx);
            if (!part) return std::nullopt;
            out.insert(part->begin(), part->end());
        }
        return out;
    }
    if (const auto* a = std::get_if<And>(&e.node)) {
        std::optional<IdSet> out;
        for (const auto& child : a->children) {
            auto part = candidates(child, idx);
            if (!part) continue;
            out = out ? intersect(*out, *part) : std::move(part);
        }
        return out;
    }
    if (const auto* o = std::get_if<Or>(&e.node)) {
        IdSet out;
        for (const auto& child : o->children) {
            auto part = candidates(child, idx);
            if (!part) return std::nullopt;
            out.insert(part->begin(), part->end());
        }
        return out;
    }
    return std::nullopt;
}

}  // namespace

std::set<std::string> select_ids(const Expr& expr, const RecordStore& store, EvalStats* stats) {
    IdSet out;
    auto narrowed = candidates(expr, store.indexes());
    if (narrowed) {
        for (const auto& id : *narrowed)
            if (const auto* r = store.find(id); r && matches(expr, *r)) out.insert(id);
    } else {
        for (const auto& [id, r] : store.records())
            if (matches(expr, *r)) out.insert(id);
    }
    if (stats) {
        stats->used_index = narrowed.has_value();
        stats->candidates = narrowed ? narrowed->size() : store.size();
    }
    return out;
}

// ---- query evaluation ----------------------------------------------------------

std::vector<std::string> ResultSet::ids() const {
    std::vector<std::string> out;
    for (const auto& row : rows) out.push_back(row.id);
    return out;
}

ResultSet evaluate_query(const Query& q, const RecordStore& store, EvalStats* stats) {
    std::vector<const PlantRecord*> hits;
    if (q.predicate) {
        for (const auto& id : select_ids(*q.predicate, store, stats)) hits.push_back(&store.get(id));
    } else {
        for (const auto& [id, r] : store.records()) hits.push_back(r.get());
        if (stats) *stats = EvalStats{false, store.size()};
    }
    // hits are in id order here

    if (q.order_by) {
        auto field = q.order_by->field;
        bool desc = q.order_by->direction == Direction::Desc;
        std::vector<std::pair<std::string, const PlantRecord*>> keyed;
        for (const auto* r : hits) keyed.emplace_back(text::to_lower(text::join(field_values(*r, field), ", ")), r);
        std::stable_sort(keyed.begin(), keyed.end(), [desc](const auto& a, const auto& b) {
            return desc ? a.first > b.first : a.first < b.first;
        });
        for (std::size_t i = 0; i < keyed.size(); ++i) hits[i] = keyed[i].second;
    }

    ResultSet rs;
    rs.columns = q.star() ? star_fields() : q.projection;
    rs.total = hits.size();
    std::size_t n = hits.size();
    if (q.limit) n = std::min<std::size_t>(n, static_cast<std::size_t>(*q.limit));
    for (std::size_t i = 0; i < n; ++i) {
        Row row{hits[i]->id, {}};
        for (auto f : rs.columns) row.values.push_back(field_values(*hits[i], f));
        rs.rows.push_back(std::move(row));
    }
    return rs;
}

// ---- structured search -----------------------------------------------------------

const std::vector<Field>& summary_fields() {
    static const std::vector<Field> fields{Field::ScientificName, Field::Family, Field::Ailment};
    return fields;
}

Query criteria_query(const SearchCriteria& criteria) {
    if (criteria.empty()) throw Error(ErrorCode::EmptyCriteria, "search needs at least one criterion");
    std::vector<Expr> terms;
    for (const auto& [field, value] : criteria) {
        bool exact = field == Field::Ailment || field == Field::PartUsed || field == Field::Status ||
                     field == Field::MarketStatus;
        if (exact)
            terms.push_back(Expr{Compare{field, CompareOp::Eq, value}});
        else
            terms.push_back(Expr{Contains{field, value}});
    }
    Query q;
    q.projection = summary_fields();
    q.predicate = terms.size() == 1 ? std::move(terms.front()) : Expr{And{std::move(terms)}};
    return q;
}

ResultSet structured_search(const SearchCriteria& criteria, const RecordStore& store) {
    return evaluate_query(criteria_query(criteria), store);
}

}  // namespace phytobase::pql
