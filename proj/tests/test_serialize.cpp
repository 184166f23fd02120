#include <leibniz/catalog.hpp>
#include <leibniz/error.hpp>
#include <leibniz/serialize.hpp>

#include <gtest/gtest.h>

#include <string>

using namespace leibniz;
namespace cat = leibniz::catalog;

namespace {

const char* kMinimal = R"({
  "name": "tiny",
  "dim": 2,
  "basis": ["a", "b"],
  "products": [
    {"left": 0, "right": 0, "result": [{"k": 1, "c": "2/4"}]}
  ]
})";

ErrorKind kind_of(const std::string& text) {
    try {
        parse_algebra_json(text);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted: " << text;
    return ErrorKind::Verification;
}

std::string with(const std::string& products) {
    return R"({"name":"x","dim":2,"basis":["a","b"],"products":)" + products + "}";
}

}  // namespace

TEST(Serialize, ParsesMinimalDocument) {
    const auto doc = parse_algebra_json(kMinimal);
    EXPECT_EQ(doc.algebra.name(), "tiny");
    EXPECT_EQ(doc.algebra.dim(), 2u);
    EXPECT_FALSE(doc.levi.has_value());
    ASSERT_EQ(doc.algebra.structure(0, 0).size(), 1u);
    EXPECT_EQ(doc.algebra.structure(0, 0)[0].c, Rational(1, 2));
}

TEST(Serialize, RoundTripIsByteIdentical) {
    for (const auto& e : {cat::sl2(), cat::simple_sl2_leibniz(4), cat::semisimple_pair(2), cat::two_dim_solvable()}) {
        const auto text = emit_algebra_json(e.algebra, e.levi);
        const auto doc = parse_algebra_json(text);
        EXPECT_EQ(doc.algebra.products(), e.algebra.products());
        EXPECT_EQ(doc.levi, e.levi);
        EXPECT_EQ(emit_algebra_json(doc.algebra, doc.levi), text) << e.algebra.name();
    }
}

TEST(Serialize, EmittedKeyOrder) {
    const auto e = cat::simple_sl2_leibniz(2);
    const auto text = emit_algebra_json(e.algebra, e.levi);
    const auto pos = [&](const char* key) { return text.find(std::string("\"") + key + "\""); };
    EXPECT_LT(pos("name"), pos("dim"));
    EXPECT_LT(pos("dim"), pos("basis"));
    EXPECT_LT(pos("basis"), pos("products"));
    EXPECT_LT(pos("products"), pos("levi"));
    EXPECT_EQ(text.back(), '\n');
    EXPECT_NE(text.find("\"-2\""), std::string::npos);  // coefficients as strings
}

TEST(Serialize, SchemaErrors) {
    EXPECT_EQ(kind_of("{"), ErrorKind::Schema);
    EXPECT_EQ(kind_of("[]"), ErrorKind::Schema);
    EXPECT_EQ(kind_of(R"({"name":"x","dim":2,"basis":["a"],"products":[]})"), ErrorKind::Schema);
    EXPECT_EQ(kind_of(R"({"dim":2,"basis":["a","b"],"products":[]})"), ErrorKind::Schema);
    EXPECT_EQ(kind_of(with(R"([{"left":0,"right":2,"result":[]}])")), ErrorKind::Schema);
    EXPECT_EQ(kind_of(with(R"([{"left":0,"right":0,"result":[{"k":1,"c":1}]}])")), ErrorKind::Schema);
    EXPECT_EQ(kind_of(with(R"([{"left":0,"right":0,"result":[{"k":1,"c":"1/0"}]}])")), ErrorKind::Schema);
    EXPECT_EQ(kind_of(with(R"([{"left":0,"right":0,"result":[{"k":1,"c":"1"},{"k":1,"c":"2"}]}])")),
              ErrorKind::Schema);
    EXPECT_EQ(kind_of(with(R"([{"left":0,"right":0,"result":[]},{"left":0,"right":0,"result":[]}])")),
              ErrorKind::Schema);
    EXPECT_EQ(kind_of(with(R"([{"left":-1,"right":0,"result":[]}])")), ErrorKind::Schema);
    EXPECT_EQ(kind_of(R"({"name":"x","dim":2,"basis":["a","b"],"products":[],"levi":{"g":[0],"i":[1],"sl2_triples":[[0,1]]}})"),
              ErrorKind::Schema);
}

TEST(Serialize, MissingFileIsIoError) {
    try {
        load_algebra_file("/nonexistent/algebra.json");
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Io);
    }
}

TEST(Serialize, ValueEncodings) {
    EXPECT_EQ(to_json(Rational(-3, 4)).get<std::string>(), "-3/4");
    EXPECT_EQ(to_json(Vector{Rational(1), Rational(0)}).dump(), R"(["1","0"])");
    Matrix m(1, 2);
    m(0, 1) = 5;
    EXPECT_EQ(to_json(m).dump(), R"([["0","5"]])");
}
