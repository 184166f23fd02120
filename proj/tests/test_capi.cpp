#include <leibniz/leibniz.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using Json = nlohmann::json;

namespace {

struct Handle {
    lz_algebra* p = nullptr;
    ~Handle() { lz_algebra_free(p); }
};

Json take(char* s) {
    Json j = Json::parse(s);
    lz_string_free(s);
    return j;
}

}  // namespace

TEST(CApi, VersionAndStatusNames) {
    EXPECT_STREQ(lz_version(), "1.0.0");
    EXPECT_STREQ(lz_status_name(LZ_OK), "ok");
    EXPECT_STREQ(lz_status_name(LZ_ERR_SCHEMA), "schema");
    EXPECT_STREQ(lz_status_name(static_cast<lz_status>(99)), "unknown");
}

TEST(CApi, CatalogDimsAndDerivations) {
    Handle h;
    ASSERT_EQ(lz_catalog_build("simple", 2, 0, &h.p), LZ_OK);
    size_t dim = 0;
    ASSERT_EQ(lz_algebra_dim(h.p, &dim), LZ_OK);
    EXPECT_EQ(dim, 6u);
    int has = 0;
    ASSERT_EQ(lz_algebra_has_levi(h.p, &has), LZ_OK);
    EXPECT_EQ(has, 1);
    size_t der = 0, inner = 0, outer = 0;
    ASSERT_EQ(lz_derivation_dims(h.p, &der, &inner, &outer), LZ_OK);
    EXPECT_EQ(der, 5u);
    EXPECT_EQ(inner, 3u);
    EXPECT_EQ(outer, 2u);
    size_t violations = 1;
    ASSERT_EQ(lz_leibniz_violation_count(h.p, &violations), LZ_OK);
    EXPECT_EQ(violations, 0u);
}

TEST(CApi, ErrorsSetStatusAndMessage) {
    Handle h;
    EXPECT_EQ(lz_catalog_build("simple", 1, 0, &h.p), LZ_ERR_INVALID_ARGUMENT);
    EXPECT_NE(std::string(lz_last_error()), "");
    EXPECT_EQ(lz_catalog_build("nope", 1, 0, &h.p), LZ_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(lz_algebra_from_json("{", &h.p), LZ_ERR_SCHEMA);
    EXPECT_EQ(lz_algebra_load("/nonexistent.json", &h.p), LZ_ERR_IO);
    EXPECT_EQ(lz_algebra_dim(nullptr, nullptr), LZ_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(h.p, nullptr);

    ASSERT_EQ(lz_catalog_build("simple", 1, 1, &h.p), LZ_OK);
    EXPECT_STREQ(lz_last_error(), "");
}

TEST(CApi, MissingLeviForDecompose) {
    Handle h;
    ASSERT_EQ(lz_catalog_build("solvable2", 0, 0, &h.p), LZ_OK);
    char* out = nullptr;
    EXPECT_EQ(lz_report_derive(h.p, 1, 0, 0, &out), LZ_ERR_MISSING_LEVI);
    EXPECT_EQ(lz_report_modules(h.p, &out), LZ_ERR_MISSING_LEVI);
    ASSERT_EQ(lz_report_derive(h.p, 0, 0, 0, &out), LZ_OK);
    EXPECT_EQ(take(out)["dims"]["der"], 2);
}

TEST(CApi, JsonRoundTripAndSave) {
    Handle h;
    ASSERT_EQ(lz_catalog_build("pair", 1, 0, &h.p), LZ_OK);
    char* text = nullptr;
    ASSERT_EQ(lz_algebra_to_json(h.p, &text), LZ_OK);
    const std::string first = text;
    lz_string_free(text);

    Handle back;
    ASSERT_EQ(lz_algebra_from_json(first.c_str(), &back.p), LZ_OK);
    ASSERT_EQ(lz_algebra_to_json(back.p, &text), LZ_OK);
    EXPECT_EQ(first, text);
    lz_string_free(text);

    const auto path = std::filesystem::temp_directory_path() / "lz_capi_roundtrip.json";
    ASSERT_EQ(lz_algebra_save(h.p, path.c_str()), LZ_OK);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), first);
    std::filesystem::remove(path);
    EXPECT_EQ(lz_algebra_save(h.p, "/nonexistent/dir/x.json"), LZ_ERR_IO);
}

TEST(CApi, DirectSumAndReports) {
    Handle a, b, s;
    ASSERT_EQ(lz_catalog_build("simple", 2, 0, &a.p), LZ_OK);
    ASSERT_EQ(lz_catalog_build("simple", 3, 0, &b.p), LZ_OK);
    ASSERT_EQ(lz_algebra_direct_sum(a.p, b.p, &s.p), LZ_OK);
    size_t dim = 0;
    ASSERT_EQ(lz_algebra_dim(s.p, &dim), LZ_OK);
    EXPECT_EQ(dim, 13u);

    char* out = nullptr;
    ASSERT_EQ(lz_report_check(s.p, &out), LZ_OK);
    auto check = take(out);
    EXPECT_EQ(check["command"], "check");
    EXPECT_TRUE(check["ok"].get<bool>());

    ASSERT_EQ(lz_report_radical(s.p, &out), LZ_OK);
    auto radical = take(out);
    EXPECT_TRUE(radical["is_semisimple"].get<bool>());
    EXPECT_EQ(radical["simple"]["verdict"], "no");

    ASSERT_EQ(lz_report_derive(s.p, 1, 1, 7, &out), LZ_OK);
    auto derive = take(out);
    EXPECT_EQ(derive["dims"]["der"], 9);
    EXPECT_EQ(derive["probe"]["seed"], 7);
    EXPECT_EQ(derive["decomposition"].size(), 9u);

    ASSERT_EQ(lz_report_modules(s.p, &out), LZ_OK);
    EXPECT_EQ(take(out)["triples"].size(), 2u);
}
