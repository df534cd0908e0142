#include "lenz/verify.hpp"

#include <gtest/gtest.h>

using namespace lenz;

TEST(Verify, EvenRangeAgrees) {
    VerifyOptions o;
    o.n_lo = 3;
    o.n_hi = 30;
    auto rep = run_verify(o);
    EXPECT_TRUE(rep.ok()) << *rep.first_mismatch();
    ASSERT_EQ(rep.rows.size(), 28u);
    for (const auto& row : rep.rows) {
        EXPECT_EQ(row.totals.count("coords"), 1u);
        EXPECT_EQ(row.totals.count("t2r"), 1u);
        EXPECT_TRUE(row.partition_attains_max.has_value());
    }
    EXPECT_EQ(rep.rows[17].n, 20);
    EXPECT_EQ(rep.rows[17].totals.at("ticks"), 524);
}

TEST(Verify, ClosedFormColumnOnlyWhenDivisible) {
    VerifyOptions o;
    o.n_lo = 35;
    o.n_hi = 36;
    auto rep = run_verify(o);
    ASSERT_TRUE(rep.ok());
    EXPECT_EQ(rep.rows[0].totals.count("cor13"), 0u);
    EXPECT_EQ(rep.rows[1].totals.at("cor13"), 2604);
}

TEST(Verify, OddDimension) {
    VerifyOptions o;
    o.n_lo = 3;
    o.n_hi = 26;
    o.odd = true;
    auto rep = run_verify(o);
    EXPECT_TRUE(rep.ok()) << *rep.first_mismatch();
    EXPECT_EQ(to_json(rep).at("dimension"), 7);
    EXPECT_FALSE(rep.rows[0].partition_attains_max.has_value());
}

TEST(Verify, FourUniform) {
    VerifyOptions o;
    o.n_lo = 8;
    o.n_hi = 14;
    o.r = 4;
    o.k = 4;
    auto rep = run_verify(o);
    EXPECT_TRUE(rep.ok()) << *rep.first_mismatch();
    for (const auto& row : rep.rows) EXPECT_EQ(row.ticks->delta3, 0);
}

TEST(Verify, RejectsBadOptions) {
    VerifyOptions o;
    o.n_lo = 9;
    o.n_hi = 3;
    EXPECT_THROW(run_verify(o), domain_error);
    o = {};
    o.r = 2;
    EXPECT_THROW(run_verify(o), domain_error);
    o = {};
    o.k = 4;
    EXPECT_THROW(run_verify(o), domain_error);
    o = {};
    o.n_lo = o.n_hi = 2;
    EXPECT_THROW(run_verify(o), domain_error);
}

TEST(Verify, ReportIsByteIdenticalAcrossWorkerCounts) {
    VerifyOptions o;
    o.n_lo = 3;
    o.n_hi = 40;
    auto one = run_verify(o);
    o.workers = 4;
    auto four = run_verify(o);
    o.workers = 0;
    auto all = run_verify(o);
    EXPECT_EQ(dump(to_json(one)), dump(to_json(four)));
    EXPECT_EQ(to_csv(one), to_csv(four));
    EXPECT_EQ(dump(to_json(one)), dump(to_json(all)));
}

TEST(Verify, CsvLayout) {
    VerifyOptions o;
    auto rep = run_verify(o);
    EXPECT_EQ(to_csv(rep),
              "n,r,k,partition,delta1,delta2,delta3,coords,ticks,closed,formula,t2r,cor13,partition_attains_max,ok\n"
              "3,3,3,\"(0,1,2)\",0,1,0,1,1,1,1,1,,true,true\n");
}
