#include <charconv>

#include "phytobase/pql.hpp"
#include "phytobase/text.hpp"

namespace phytobase::pql {

// ---- fields ----------------------------------------------------------------

namespace {

struct FieldName {
    Field field;
    std::string_view name;
};

constexpr std::array<FieldName, 14> kFields{{
    {Field::ScientificName, "scientific_name"},
    {Field::Family, "family"},
    {Field::CommonName, "common_name"},
    {Field::Synonym, "synonym"},
    {Field::LocalName, "local_name"},
    {Field::Name, "name"},
    {Field::Ailment, "ailment"},
    {Field::PartUsed, "part_used"},
    {Field::AreaOfOrigin, "area_of_origin"},
    {Field::Phytoconstituent, "phytoconstituent"},
    {Field::Status, "status"},
    {Field::MarketStatus, "market_status"},
    {Field::Description, "description"},
    {Field::Pharmacology, "pharmacology"},
}};

}  // namespace

std::string_view to_string(Field f) { return kFields[static_cast<std::size_t>(f)].name; }

std::optional<Field> parse_field(std::string_view name) {
    auto lower = text::to_lower(name);
    for (const auto& f : kFields)
        if (f.name == lower) return f.field;
    return std::nullopt;
}

bool is_prose(Field f) { return f == Field::Description || f == Field::Pharmacology; }

const std::vector<Field>& star_fields() {
    static const std::vector<Field> fields{Field::ScientificName, Field::Family,       Field::CommonName,
                                           Field::Synonym,        Field::LocalName,    Field::Ailment,
                                           Field::PartUsed,       Field::AreaOfOrigin, Field::Phytoconstituent,
                                           Field::Status,         Field::MarketStatus};
    return fields;
}

const std::vector<Field>& all_fields() {
    static const std::vector<Field> fields = [] {
        std::vector<Field> out;
        for (const auto& f : kFields) out.push_back(f.field);
        return out;
    }();
    return fields;
}

std::string literal_text(const Literal& lit) {
    if (const auto* s = std::get_if<std::string>(&lit)) return *s;
    return std::to_string(std::get<std::int64_t>(lit));
}

// ---- parser ----------------------------------------------------------------

namespace {

std::string describe(const Token& t) {
    switch (t.kind) {
        case TokenKind::Keyword: return "keyword " + t.value;
        case TokenKind::Identifier: return "identifier '" + t.text + "'";
        case TokenKind::String: return "string " + t.text;
        case TokenKind::Integer: return "integer " + t.text;
        case TokenKind::Symbol: return "'" + t.text + "'";
    }
    return t.text;
}

class Parser {
public:
    Parser(std::string_view text) : tokens_(tokenize(text)), end_(text.size()) {}

    Query query() {
        Query q;
        expect_keyword("SELECT");
        if (accept_symbol("*")) {
            // empty projection is "*"
        } else {
            q.projection.push_back(field());
            while (accept_symbol(",")) q.projection.push_back(field());
        }
        expect_keyword("FROM");
        const Token& table = next("table name");
        if (table.kind != TokenKind::Identifier || !text::iequals(table.text, "plants"))
            fail("expected table 'plants', found " + describe(table), table.span);

        if (accept_keyword("WHERE")) q.predicate = expr();
        if (accept_keyword("ORDER")) {
            expect_keyword("BY");
            OrderBy ob{field()};
            if (accept_keyword("DESC"))
                ob.direction = Direction::Desc;
            else
                accept_keyword("ASC");
            q.order_by = ob;
        }
        if (accept_keyword("LIMIT")) {
            const Token& t = next("integer");
            if (t.kind != TokenKind::Integer) fail("expected integer after LIMIT, found " + describe(t), t.span);
            std::int64_t n = 0;
            auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
            if (ec != std::errc() || n <= 0) fail("LIMIT must be a positive integer", t.span);
            q.limit = n;
        }
        if (pos_ < tokens_.size()) fail("expected end of query, found " + describe(tokens_[pos_]), tokens_[pos_].span);
        return q;
    }

private:
    Expr expr() {
        std::vector<Expr> parts{conjunction()};
        while (accept_keyword("OR")) parts.push_back(conjunction());
        if (parts.size() == 1) return std::move(parts.front());
        return Expr{Or{std::move(parts)}};
    }

    Expr conjunction() {
        std::vector<Expr> parts{unary()};
        while (accept_keyword("AND")) parts.push_back(unary());
        if (parts.size() == 1) return std::move(parts.front());
        return Expr{And{std::move(parts)}};
    }

    Expr unary() {
        if (accept_keyword("NOT")) return Expr{Not{primary()}};
        return primary();
    }

    Expr primary() {
        if (accept_symbol("(")) {
            Expr inner = expr();
            expect_symbol(")");
            return inner;
        }
        return comparison();
    }

    Expr comparison() {
        Span field_span = peek_span();
        Field f = field();
        const Token& op = next("operator");
        if (op.kind == TokenKind::Symbol && (op.text == "=" || op.text == "!=")) {
            prose_check(f, field_span);
            return Expr{Compare{f, op.text == "=" ? CompareOp::Eq : CompareOp::Ne, literal()}};
        }
        if (op.kind == TokenKind::Keyword && op.value == "CONTAINS") {
            const Token& s = next("string");
            if (s.kind != TokenKind::String) fail("expected string after CONTAINS, found " + describe(s), s.span);
            return Expr{Contains{f, s.value}};
        }
        if (op.kind == TokenKind::Keyword && op.value == "IN") {
            prose_check(f, field_span);
            expect_symbol("(");
            In in{f, {literal()}};
            while (accept_symbol(",")) in.values.push_back(literal());
            expect_symbol(")");
            return Expr{std::move(in)};
        }
        fail("expected '=', '!=', CONTAINS or IN, found " + describe(op), op.span);
    }

    Literal literal() {
        const Token& t = next("literal");
        if (t.kind == TokenKind::String) return t.value;
        if (t.kind == TokenKind::Integer) {
            std::int64_t n = 0;
            auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
            if (ec != std::errc()) fail("integer literal out of range", t.span);
            return n;
        }
        fail("expected string or integer, found " + describe(t), t.span);
    }

    Field field() {
        const Token& t = next("field name");
        if (t.kind != TokenKind::Identifier) fail("expected field name, found " + describe(t), t.span);
        auto f = parse_field(t.text);
        if (!f) throw Error(ErrorCode::UnknownField, "unknown field '" + t.text + "'", t.span);
        return *f;
    }

    void prose_check(Field f, Span span) {
        if (is_prose(f)) fail("field " + std::string(to_string(f)) + " supports only CONTAINS", span);
    }

    const Token& next(const char* what) {
        if (pos_ >= tokens_.size()) fail(std::string("expected ") + what + ", found end of query", Span{end_, end_});
        return tokens_[pos_++];
    }

    Span peek_span() const { return pos_ < tokens_.size() ? tokens_[pos_].span : Span{end_, end_}; }

    bool accept_keyword(std::string_view kw) {
        if (pos_ < tokens_.size() && tokens_[pos_].kind == TokenKind::Keyword && tokens_[pos_].value == kw) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_symbol(std::string_view sym) {
        if (pos_ < tokens_.size() && tokens_[pos_].kind == TokenKind::Symbol && tokens_[pos_].text == sym) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_keyword(std::string_view kw) {
        if (accept_keyword(kw)) return;
        const Token& t = next(std::string(kw).c_str());
        fail("expected " + std::string(kw) + ", found " + describe(t), t.span);
    }

    void expect_symbol(std::string_view sym) {
        if (accept_symbol(sym)) return;
        auto what = "'" + std::string(sym) + "'";
        const Token& t = next(what.c_str());
        fail("expected " + what + ", found " + describe(t), t.span);
    }

    [[noreturn]] void fail(const std::string& message, Span span) {
        throw Error(ErrorCode::ParseError, message, span);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t end_;
};

// ---- printer ---------------------------------------------------------------

std::string render_literal(const Literal& lit) {
    if (const auto* n = std::get_if<std::int64_t>(&lit)) return std::to_string(*n);
    return "'" + text::escape(std::get<std::string>(lit), "'") + "'";
}

bool is_leaf(const Expr& e) { return !std::holds_alternative<And>(e.node) && !std::holds_alternative<Or>(e.node) &&
                                     !std::holds_alternative<Not>(e.node); }

std::string group(const std::string& s) { return "(" + s + ")"; }

}  // namespace

Query parse_query(std::string_view text) { return Parser(text).query(); }

std::string render_expr(const Expr& e) {
    struct Visitor {
        std::string operator()(const Compare& c) const {
            return std::string(to_string(c.field)) + (c.op == CompareOp::Eq ? " = " : " != ") +
                   render_literal(c.value);
        }
        std::string operator()(const Contains& c) const {
            return std::string(to_string(c.field)) + " CONTAINS " + render_literal(c.needle);
        }
        std::string operator()(const In& in) const {
            std::vector<std::string> items;
            for (const auto& v : in.values) items.push_back(render_literal(v));
            return std::string(to_string(in.field)) + " IN (" + text::join(items, ", ") + ")";
        }
        // Parentheses only where dropping them would re-parse differently.
        std::string operator()(const And& a) const {
            std::vector<std::string> parts;
            for (const auto& c : a.children) {
                bool nested = std::holds_alternative<And>(c.node) || std::holds_alternative<Or>(c.node);
                parts.push_back(nested ? group(render_expr(c)) : render_expr(c));
            }
            return text::join(parts, " AND ");
        }
        std::string operator()(const Or& o) const {
            std::vector<std::string> parts;
            for (const auto& c : o.children) {
                bool nested = std::holds_alternative<Or>(c.node);
                parts.push_back(nested ? group(render_expr(c)) : render_expr(c));
            }
            return text::join(parts, " OR ");
        }
        std::string operator()(const Not& n) const {
            const Expr& c = *n.child;
            return "NOT " + (is_leaf(c) ? render_expr(c) : group(render_expr(c)));
        }
    };
    return std::visit(Visitor{}, e.node);
}

std::string render_query(const Query& q) {
    std::string out = "SELECT ";
    if (q.star()) {
        out += "*";
    } else {
        std::vector<std::string> names;
        for (auto f : q.projection) names.emplace_back(to_string(f));
        out += text::join(names, ", ");
    }
    out += " FROM plants";
    if (q.predicate) out += " WHERE " + render_expr(*q.predicate);
    if (q.order_by) {
        out += " ORDER BY " + std::string(to_string(q.order_by->field));
        if (q.order_by->direction == Direction::Desc) out += " DESC";
    }
    if (q.limit) out += " LIMIT " + std::to_string(*q.limit);
    return out;
}

}  // namespace phytobase::pql
