#include "ncdup/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace ncdup;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("ncdup_test_" + name)).string();
}

} // namespace

TEST(Io, RationalForms) {
    EXPECT_EQ(rational_from_json(json("-3/6")), Rational(-1, 2));
    EXPECT_EQ(rational_from_json(json(4)), Rational(4));
    EXPECT_EQ(rational_to_json(Rational(2, 3)), json("2/3"));
    EXPECT_THROW(rational_from_json(json(0.5)), InputError);
    EXPECT_THROW(rational_from_json(json::array()), InputError);
}

TEST(Io, AlgebraRoundTrip) {
    const Algebra A = twisted_product(make_duplicate_pair(SetMap({1, 0}), DeterminingElement{{Rational(0), Rational(-1)}}));
    const Algebra B = algebra_from_json(algebra_to_json(A));
    EXPECT_EQ(A, B);
    EXPECT_EQ(B.basis(), A.basis());
}

TEST(Io, AlgebraErrors) {
    json j = algebra_to_json(set_algebra(2));
    j["dim"] = 3;
    EXPECT_THROW(algebra_from_json(j), InputError);
    j = algebra_to_json(set_algebra(2));
    j["sc"].push_back({{"i", 0}, {"j", 5}, {"k", 0}, {"c", "1"}});
    EXPECT_THROW(algebra_from_json(j), InputError);
    j = algebra_to_json(set_algebra(2));
    j["sc"][0]["c"] = "1/0";
    EXPECT_THROW(algebra_from_json(j), InputError);
    EXPECT_THROW(algebra_from_json(json::object()), InputError);
}

TEST(Io, QuiverRoundTripAndErrors) {
    const Quiver q = Quiver::from_edges(3, {{0, 1}, {2, 2}});
    const Quiver r = quiver_from_json(quiver_to_json(q));
    EXPECT_EQ(r.vertices, q.vertices);
    EXPECT_EQ(r.arrows, q.arrows);
    json bad = quiver_to_json(q);
    bad["arrows"][0]["dst"] = 9;
    EXPECT_THROW(quiver_from_json(bad), InputError);
    bad = quiver_to_json(q);
    bad["arrows"][1]["label"] = "a0";
    EXPECT_THROW(quiver_from_json(bad), InputError);
}

TEST(Io, SetMap) {
    EXPECT_EQ(setmap_from_json(json{{"n", 3}, {"phi", {1, 2, 0}}}), SetMap({1, 2, 0}));
    EXPECT_EQ(setmap_from_json(json{{"phi", {0}}}), SetMap({0}));
    EXPECT_EQ(setmap_from_json(setmap_to_json(SetMap({0, 0, 1}))), SetMap({0, 0, 1}));
    EXPECT_THROW(setmap_from_json(json{{"n", 2}, {"phi", {0}}}), InputError);
    EXPECT_THROW(setmap_from_json(json{{"phi", json::array()}}), InputError);
    EXPECT_THROW(setmap_from_json(json{{"phi", {0, 2}}}), InputError);
    EXPECT_THROW(setmap_from_json(json{{"phi", {0, -1}}}), InputError);
    EXPECT_THROW(setmap_from_json(json{{"phi", "01"}}), InputError);
}

TEST(Io, Coloration) {
    EXPECT_EQ(coloration_from_json(json{{"a", {"0", -1}}}, 2).values, (Vec{Rational(0), Rational(-1)}));
    EXPECT_THROW(coloration_from_json(json{{"a", {"0"}}}, 2), InputError);
    EXPECT_THROW(coloration_from_json(json{{"a", {"x", "0"}}}, 2), InputError);
    const json param{{"a", {{{"param", true}, {"component", {0, 1}}, {"t", "1/2"}}, "0"}}};
    EXPECT_EQ(coloration_from_json(param, 2).values, (Vec{Rational(1, 2), Rational(-3, 2)}));
    const json no_t{{"a", {"5", {{"param", true}, {"component", {0, 1}}}}}};
    EXPECT_EQ(coloration_from_json(no_t, 2).values, (Vec{Rational(0), Rational(-1)}));
    const json bad{{"a", {{{"param", true}, {"component", {1, 2}}}, "0", "0"}}};
    EXPECT_THROW(coloration_from_json(bad, 3), InputError);
    const json not_param{{"a", {{{"component", {0, 1}}}, "0"}}};
    EXPECT_THROW(coloration_from_json(not_param, 2), InputError);
}

TEST(Io, ColorationList) {
    const json j = colorations_to_json(enumerate_colorations(SetMap({1, 0})));
    EXPECT_EQ(j.at("colorations").size(), 2u);
    EXPECT_EQ(j.at("parametric").size(), 1u);
    EXPECT_EQ(j.at("parametric")[0].at("component"), json({0, 1}));
}

TEST(Io, DimTableRoundTrip) {
    DimTable t;
    t.entries = {DimCell::of(3), DimCell::crown(), DimCell::skipped()};
    t.total = TotalKind::infinite;
    const DimTable back = dimtable_from_json(dimtable_to_json(t));
    EXPECT_EQ(back.entries, t.entries);
    EXPECT_EQ(back.total, TotalKind::infinite);
    json bad = dimtable_to_json(t);
    bad["entries"][1]["flag"] = "mystery";
    EXPECT_THROW(dimtable_from_json(bad), InputError);
}

TEST(Io, CatalogKeys) {
    const json j = catalog_to_json(classify(2));
    ASSERT_EQ(j.size(), 3u);
    for (const auto& e : j) {
        for (const char* key : {"canonical_quiver", "multiplicity", "components", "parametric", "sample"})
            EXPECT_TRUE(e.contains(key)) << key;
        EXPECT_TRUE(e.at("sample").contains("phi"));
        EXPECT_TRUE(e.at("sample").contains("a"));
    }
}

TEST(Io, Files) {
    const std::string path = temp_path("roundtrip.json");
    write_json_file(path, setmap_to_json(SetMap({1, 0})));
    EXPECT_EQ(setmap_from_json(read_json_file(path)), SetMap({1, 0}));
    const std::string broken = temp_path("broken.json");
    {
        std::ofstream out(broken);
        out << "{\"phi\": [1, 0";
    }
    EXPECT_THROW(read_json_file(broken), InputError);
    EXPECT_THROW(read_json_file(temp_path("does_not_exist.json")), InputError);
    std::filesystem::remove(path);
    std::filesystem::remove(broken);
}
