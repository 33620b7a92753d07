#pragma once
// Plant Query Language: a small SELECT dialect over the single table
// "plants", plus conjunctive structured search.
//
//   query      = "SELECT" projection "FROM" "plants"
//                [ "WHERE" expr ] [ "ORDER" "BY" field [ "ASC" | "DESC" ] ]
//                [ "LIMIT" integer ] ;
//   projection = "*" | field { "," field } ;
//   expr       = and { "OR" and } ;
//   and        = unary { "AND" unary } ;
//   unary      = [ "NOT" ] primary ;
//   primary    = "(" expr ")" | comparison ;
//   comparison = field ( "=" | "!=" ) literal
//              | field "CONTAINS" string
//              | field "IN" "(" literal { "," literal } ")" ;
//   literal    = string | integer ;
//
// Keywords are case-insensitive. Strings use ' or "; a backslash escapes
// the quote character or another backslash. All comparisons are textual
// and case-insensitive. On multi-valued fields '=' and IN hold when any
// value matches, CONTAINS when any value contains the operand; '!=' is the
// negation of '='.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phytobase/error.hpp"
#include "phytobase/record.hpp"

namespace phytobase {
class RecordStore;
}

namespace phytobase::pql {

// ---- lexer -----------------------------------------------------------------

enum class TokenKind { Keyword, Identifier, String, Integer, Symbol };

struct Token {
    TokenKind kind;
    std::string text;   // verbatim lexeme, quotes included for strings
    Span span;
    std::string value;  // keyword uppercased, string unescaped, otherwise = text

    friend bool operator==(const Token&, const Token&) = default;
};

// Throws Error(LexError) with the span of the offending input.
std::vector<Token> tokenize(std::string_view input);

// ---- fields ----------------------------------------------------------------

enum class Field {
    ScientificName,
    Family,
    CommonName,
    Synonym,
    LocalName,
    Name,  // any of the four name fields
    Ailment,
    PartUsed,
    AreaOfOrigin,
    Phytoconstituent,
    Status,
    MarketStatus,
    Description,
    Pharmacology,
};

std::string_view to_string(Field f);
std::optional<Field> parse_field(std::string_view name);
// Free-prose fields, reachable through CONTAINS only.
bool is_prose(Field f);
// Columns of "SELECT *".
const std::vector<Field>& star_fields();
const std::vector<Field>& all_fields();

// Values of a field on one record; empty when the record has none.
std::vector<std::string> field_values(const PlantRecord& record, Field f);
// Comparison key: lowercased, with enum-valued fields mapped to their
// canonical token ("Leaves" -> "leaf", "available" -> "common", "D" -> "decreased").
std::string normalize(Field f, std::string_view value);

// ---- AST -------------------------------------------------------------------

// Owning pointer with value semantics, for recursive nodes.
template <typename T>
class Box {
public:
    Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
    Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
    Box(Box&&) noexcept = default;
    Box& operator=(const Box& other) {
        ptr_ = std::make_unique<T>(*other.ptr_);
        return *this;
    }
    Box& operator=(Box&&) noexcept = default;

    const T& operator*() const { return *ptr_; }
    const T* operator->() const { return ptr_.get(); }

    friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

private:
    std::unique_ptr<T> ptr_;
};

using Literal = std::variant<std::string, std::int64_t>;
std::string literal_text(const Literal& lit);

enum class CompareOp { Eq, Ne };

struct Compare {
    Field field;
    CompareOp op;
    Literal value;
    friend bool operator==(const Compare&, const Compare&) = default;
};

struct Contains {
    Field field;
    std::string needle;
    friend bool operator==(const Contains&, const Contains&) = default;
};

struct In {
    Field field;
    std::vector<Literal> values;  // nonempty
    friend bool operator==(const In&, const In&) = default;
};

struct Expr;

struct And {
    std::vector<Expr> children;  // at least two
    friend bool operator==(const And&, const And&) = default;
};

struct Or {
    std::vector<Expr> children;  // at least two
    friend bool operator==(const Or&, const Or&) = default;
};

struct Not {
    Box<Expr> child;
    friend bool operator==(const Not&, const Not&) = default;
};

struct Expr {
    std::variant<Compare, Contains, In, And, Or, Not> node;
    friend bool operator==(const Expr&, const Expr&) = default;
};

enum class Direction { Asc, Desc };

struct OrderBy {
    Field field;
    Direction direction = Direction::Asc;
    friend bool operator==(const OrderBy&, const OrderBy&) = default;
};

struct Query {
    std::vector<Field> projection;  // empty means "*"
    std::optional<Expr> predicate;
    std::optional<OrderBy> order_by;
    std::optional<std::int64_t> limit;  // positive

    bool star() const { return projection.empty(); }
    friend bool operator==(const Query&, const Query&) = default;
};

// Throws Error(LexError), Error(ParseError) or Error(UnknownField), each with a span.
Query parse_query(std::string_view text);
std::string render_query(const Query& query);
std::string render_expr(const Expr& expr);

// ---- evaluation ------------------------------------------------------------

using Value = std::vector<std::string>;

struct Row {
    std::string id;
    std::vector<Value> values;  // parallel to ResultSet::columns
    friend bool operator==(const Row&, const Row&) = default;
};

struct ResultSet {
    std::vector<Field> columns;
    std::vector<Row> rows;
    std::size_t total = 0;  // matches before LIMIT

    std::vector<std::string> ids() const;
};

struct EvalStats {
    bool used_index = false;
    std::size_t candidates = 0;  // records checked against the predicate
};

bool matches(const Expr& expr, const PlantRecord& record);
// Ids satisfying `expr`, narrowed through the store's indexes where the
// expression allows; identical to a full scan.
std::set<std::string> select_ids(const Expr& expr, const RecordStore& store, EvalStats* stats = nullptr);

ResultSet evaluate_query(const Query& query, const RecordStore& store, EvalStats* stats = nullptr);

// field -> match value, combined with AND. Prose and free-text fields
// become CONTAINS, code and enum fields become '='.
using SearchCriteria = std::map<Field, std::string>;

// Throws Error(EmptyCriteria).
Query criteria_query(const SearchCriteria& criteria);
// Columns are fixed to scientific_name, family, ailment.
ResultSet structured_search(const SearchCriteria& criteria, const RecordStore& store);
const std::vector<Field>& summary_fields();

}  // namespace phytobase::pql
