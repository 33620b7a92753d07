#include <gtest/gtest.h>

#include "phytobase/pql.hpp"

using namespace phytobase;
using namespace phytobase::pql;

namespace {

Error error_of(std::string_view text) {
    try {
        parse_query(text);
    } catch (const Error& e) {
        return e;
    }
    ADD_FAILURE() << "parsed: " << text;
    return Error(ErrorCode::BadRequest, "none");
}

}  // namespace

TEST(Lexer, TokenKindsAndSpans) {
    auto t = tokenize("select * FROM plants WHERE ailment IN ('WI', 12) AND name != \"O'Brien\"");
    ASSERT_GE(t.size(), 16u);
    EXPECT_EQ(t[0].kind, TokenKind::Keyword);
    EXPECT_EQ(t[0].value, "SELECT");
    EXPECT_EQ(t[0].span, (Span{0, 6}));
    EXPECT_EQ(t[1].kind, TokenKind::Symbol);
    EXPECT_EQ(t[5].kind, TokenKind::Identifier);
    EXPECT_EQ(t[8].kind, TokenKind::String);
    EXPECT_EQ(t[8].value, "WI");
    EXPECT_EQ(t[10].kind, TokenKind::Integer);
    EXPECT_EQ(t.back().value, "O'Brien");
}

TEST(Lexer, Escapes) {
    auto t = tokenize(R"('it\'s \\ fine')");
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t[0].value, "it's \\ fine");
}

TEST(Lexer, Errors) {
    try {
        tokenize("name = 'open");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LexError);
        EXPECT_EQ(e.span(), (Span{7, 12}));
    }
    try {
        tokenize("name = #");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LexError);
        EXPECT_EQ(e.span(), (Span{7, 8}));
    }
}

TEST(Parser, FullQuery) {
    auto q = parse_query(
        "SELECT scientific_name, family FROM plants WHERE ailment = 'WI' OR NOT (family CONTAINS 'ceae' AND "
        "part_used IN ('root', 'leaf')) ORDER BY family DESC LIMIT 5");
    EXPECT_EQ(q.projection, (std::vector<Field>{Field::ScientificName, Field::Family}));
    ASSERT_TRUE(q.predicate);
    const auto& top = std::get<Or>(q.predicate->node);
    ASSERT_EQ(top.children.size(), 2u);
    EXPECT_EQ(std::get<Compare>(top.children[0].node), (Compare{Field::Ailment, CompareOp::Eq, std::string("WI")}));
    const auto& inner = std::get<And>(std::get<Not>(top.children[1].node).child->node);
    EXPECT_EQ(inner.children.size(), 2u);
    EXPECT_EQ(q.order_by, (OrderBy{Field::Family, Direction::Desc}));
    EXPECT_EQ(q.limit, 5);
}

TEST(Parser, PrecedenceAndFlattening) {
    auto q = parse_query("select * from PLANTS where family = 'a' and family = 'b' and family = 'c' or family = 'd'");
    const auto& top = std::get<Or>(q.predicate->node);
    EXPECT_EQ(std::get<And>(top.children[0].node).children.size(), 3u);
    EXPECT_TRUE(q.star());
}

TEST(Parser, Errors) {
    auto e = error_of("SELECT * FROM plants WHERE colour = 'green'");
    EXPECT_EQ(e.code(), ErrorCode::UnknownField);
    EXPECT_EQ(e.span(), (Span{27, 33}));

    e = error_of("SELECT * FROM plants WHERE");
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(e.span(), (Span{26, 26}));

    e = error_of("SELECT * FROM animals");
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(e.span(), (Span{14, 21}));

    EXPECT_EQ(error_of("SELECT * FROM plants LIMIT 0").code(), ErrorCode::ParseError);
    EXPECT_EQ(error_of("SELECT * FROM plants WHERE description = 'x'").code(), ErrorCode::ParseError);
    EXPECT_EQ(error_of("SELECT * FROM plants WHERE family CONTAINS 3").code(), ErrorCode::ParseError);
    EXPECT_EQ(error_of("SELECT * FROM plants extra").code(), ErrorCode::ParseError);
    EXPECT_EQ(error_of("SELECT FROM plants").code(), ErrorCode::ParseError);
    EXPECT_EQ(error_of("SELECT * FROM plants WHERE (family = 'a'").code(), ErrorCode::ParseError);
    EXPECT_EQ(error_of("SELECT * FROM plants WHERE name = 'x").code(), ErrorCode::LexError);
}

TEST(Render, MinimalParentheses) {
    auto round = [](std::string_view text) { return render_query(parse_query(text)); };
    EXPECT_EQ(round("select * from plants"), "SELECT * FROM plants");
    EXPECT_EQ(round("select family from plants where (family='a' and family='b') or family='c' order by family asc"),
              "SELECT family FROM plants WHERE family = 'a' AND family = 'b' OR family = 'c' ORDER BY family");
    EXPECT_EQ(round("select * from plants where family='a' and (family='b' or family='c')"),
              "SELECT * FROM plants WHERE family = 'a' AND (family = 'b' OR family = 'c')");
    EXPECT_EQ(round("select * from plants where not (not family = 'a') limit 3"),
              "SELECT * FROM plants WHERE NOT (NOT family = 'a') LIMIT 3");
    EXPECT_EQ(round("select * from plants where name = \"it's\""), "SELECT * FROM plants WHERE name = 'it\\'s'");
}

TEST(Fields, NamesRoundTrip) {
    for (auto f : all_fields()) EXPECT_EQ(parse_field(to_string(f)), f);
    EXPECT_EQ(parse_field("AILMENT"), Field::Ailment);
    EXPECT_EQ(parse_field("nope"), std::nullopt);
    EXPECT_TRUE(is_prose(Field::Description));
    EXPECT_FALSE(is_prose(Field::Family));
    EXPECT_EQ(normalize(Field::PartUsed, "Leaves"), "leaf");
    EXPECT_EQ(normalize(Field::Status, "available"), "common");
    EXPECT_EQ(normalize(Field::MarketStatus, "D"), "decreased");
    EXPECT_EQ(normalize(Field::Status, "Doomed"), "doomed");
}
