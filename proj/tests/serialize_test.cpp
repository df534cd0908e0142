#include "lenz/serialize.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace lenz;

TEST(BigIntJson, SmallAsNumberLargeAsString) {
    EXPECT_TRUE(bigint_to_json(BigInt(2604)).is_number_integer());
    BigInt big = BigInt(1) << 100;
    auto j = bigint_to_json(big);
    ASSERT_TRUE(j.is_string());
    EXPECT_EQ(bigint_from_json(j), big);
    EXPECT_EQ(bigint_from_json(json(-5)), BigInt(-5));
    EXPECT_THROW(bigint_from_json(json(1.5)), domain_error);
}

TEST(PointSetJson, RoundTrip) {
    PointSet P(3);
    P.push_back(Point{{Quad3(Rational(BigInt(1), BigInt(2)), Rational(-1)), Quad3(0), Quad3::sqrt3()}});
    P.push_back(Point{{Quad3(7), Quad3(Rational(BigInt(-3), BigInt(4))), Quad3(1)}});
    auto j = to_json(P);
    EXPECT_EQ(j.at("points")[0][0].get<std::string>(), "1/2+-1*rt3");
    EXPECT_EQ(point_set_from_json(j), P);
    EXPECT_EQ(point_set_from_json(json::parse(dump(j))), P);
}

TEST(PointSetJson, AcceptsPlainRationals) {
    auto j = json::parse(R"({"dim": 2, "points": [["0", "1/2"], ["3", "-4"]]})");
    auto P = point_set_from_json(j);
    EXPECT_EQ(P[0].coords[1], Quad3(Rational(BigInt(1), BigInt(2))));
    EXPECT_EQ(P[1].coords[1], Quad3(-4));
}

TEST(PointSetJson, RejectsDuplicatesAndBadDims) {
    EXPECT_THROW(point_set_from_json(json::parse(R"({"dim": 1, "points": [["1"], ["1"]]})")), domain_error);
    EXPECT_THROW(point_set_from_json(json::parse(R"({"dim": 2, "points": [["1"]]})")), domain_error);
}

TEST(ConfigJson, RoundTripAndSchema) {
    auto cfg = build_odd_config(37, 3);
    auto j = to_json(cfg);
    EXPECT_EQ(j.at("ambient_dim"), 7);
    EXPECT_EQ(j.at("radius_sq"), "1");
    EXPECT_EQ(j.at("components")[2].at("kind"), "sphere2");
    EXPECT_EQ(j.at("components")[0].at("modulus"), 24);
    EXPECT_FALSE(j.at("components")[0].contains("radius_sq"));
    EXPECT_EQ(circle_config_from_json(json::parse(dump(j))), cfg);

    cfg.components[1].radius_sq = Rational(3);
    EXPECT_EQ(circle_config_from_json(to_json(cfg)), cfg);
}

TEST(ConfigJson, Validation) {
    EXPECT_THROW(circle_config_from_json(json::parse(
                     R"({"ambient_dim": 2, "radius_sq": "1", "components": [{"kind": "torus", "modulus": 12, "ticks": []}]})")),
                 domain_error);
    EXPECT_THROW(circle_config_from_json(json::parse(
                     R"({"ambient_dim": 2, "radius_sq": "1", "components": [{"kind": "circle", "modulus": 12, "ticks": [1, 1]}]})")),
                 domain_error);
    EXPECT_THROW(circle_config_from_json(json::parse(
                     R"({"ambient_dim": 2, "radius_sq": "1", "components": [{"kind": "circle", "modulus": 12, "ticks": [12]}]})")),
                 domain_error);
    auto unsorted = circle_config_from_json(json::parse(
        R"({"ambient_dim": 2, "radius_sq": "1", "components": [{"kind": "circle", "modulus": 12, "ticks": [5, 1]}]})"));
    EXPECT_EQ(unsorted.components[0].ticks, (std::vector<long long>{1, 5}));
}

TEST(CountReportJson, RoundTripAndCsv) {
    CountReport rep;
    rep.delta1 = 1728;
    rep.delta2 = 864;
    rep.delta3 = 12;
    rep.total = 2604;
    auto j = to_json(rep);
    EXPECT_EQ(j.dump(), R"({"delta1":1728,"delta2":864,"delta3":12,"total":2604})");
    EXPECT_EQ(count_report_from_json(j), rep);
    EXPECT_EQ(count_report_csv_header(), "delta1,delta2,delta3,total\n");
    EXPECT_EQ(to_csv_row(rep), "1728,864,12,2604\n");

    rep.side_length_sq = Rational(2);
    EXPECT_EQ(count_report_from_json(to_json(rep)), rep);

    j["total"] = 1;
    EXPECT_THROW(count_report_from_json(j), domain_error);
}

TEST(HypergraphJson, RoundTrip) {
    Hypergraph h(5, 3);
    h.add_edge({0, 1, 2});
    h.add_edge({4, 3, 2});
    auto j = to_json(h);
    EXPECT_EQ(j.dump(), R"({"edges":[[0,1,2],[2,3,4]],"k":3,"n":5})");
    EXPECT_EQ(hypergraph_from_json(j), h);
    EXPECT_THROW(hypergraph_from_json(json::parse(R"({"n": 3, "k": 3, "edges": [[0, 1, 5]]})")), domain_error);
}

TEST(FormulaJson, Shape) {
    FormulaResult res;
    res.value = 524;
    res.terms = FormulaTerms{288, 236, 0};
    res.argmax = {PartitionVector{{6, 6, 8}}};
    EXPECT_EQ(to_json(res).dump(), R"({"argmax":[[6,6,8]],"terms":{"delta1":288,"delta2":236,"delta3":0},"value":524})");
    EXPECT_EQ(argmax_cell({PartitionVector{{2, 3, 4}}, PartitionVector{{3, 3, 3}}}), "(2,3,4) (3,3,3)");
}

TEST(Files, WriteAndReadBack) {
    const auto path = (std::filesystem::temp_directory_path() / "lenz_serialize_test.json").string();
    write_text_file(path, dump(json{{"a", 1}}));
    std::ifstream in(path, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    EXPECT_EQ(text, "{\n  \"a\": 1\n}\n");
    EXPECT_EQ(read_json_file(path).at("a"), 1);
    std::remove(path.c_str());
    EXPECT_THROW(read_json_file(path), std::runtime_error);
}
