#include <gtest/gtest.h>

#include "qtoric/epsilon.hpp"
#include "qtoric/errors.hpp"
#include "qtoric/verdict.hpp"

using namespace qtoric;

TEST(Verdict, Examples)
{
    const Case& c1 = preset("C1");
    auto v19 = verdict(c1, -19);
    EXPECT_EQ(v19.status, Status::ProvenNonzero);
    EXPECT_EQ(v19.h, 1);
    EXPECT_EQ(v19.epsilon, 1);
    EXPECT_TRUE(v19.applicable);
    ASSERT_TRUE(v19.period_sum);
    EXPECT_EQ(*v19.period_sum % 2 != 0, true);
    auto v7 = verdict(c1, -7);
    EXPECT_EQ(v7.status, Status::ForcedZero);
    EXPECT_FALSE(v7.period_sum);
    EXPECT_THROW(verdict(c1, -12), InvalidInput);
    EXPECT_EQ(verdict(preset("C4"), -51).status, Status::ProvenNonzero);
    EXPECT_EQ(verdict(preset("C2"), -4).status, Status::NotApplicable);
}

TEST(Verdict, CongruenceOnlySkipsTheOrbit)
{
    const Case& c = preset("C2");
    auto full = verdict(c, -35);
    auto quick = verdict(c, -35, {true});
    EXPECT_EQ(full.status, quick.status);
    EXPECT_EQ(full.congruence_residue, quick.congruence_residue);
    EXPECT_TRUE(full.period_sum);
    EXPECT_FALSE(quick.period_sum);
}

TEST(Verdict, Invariants)
{
    for (const auto& id : CaseRegistry::builtin().ids()) {
        const Case& c = preset(id);
        for (auto d : negative_fundamental_discriminants(3, 400)) {
            auto v = verdict(c, d);
            EXPECT_EQ(v.status == Status::ForcedZero, v.epsilon == -1) << id << " " << d;
            if (v.status == Status::ProvenNonzero) {
                ASSERT_TRUE(v.congruence_residue);
                EXPECT_NE(*v.congruence_residue, 0);
                EXPECT_NE(*v.period_sum, 0);
                EXPECT_TRUE(v.applicable);
            }
            if (v.status == Status::NotApplicable)
                EXPECT_FALSE(condition3(c, d));
        }
    }
}

TEST(Verdict, ClassConditions)
{
    EXPECT_TRUE(class_condition(preset("C1"), -19));
    EXPECT_FALSE(class_condition(preset("C1"), -15));
    EXPECT_TRUE(class_condition(preset("C4"), -51));   // h = 2, Pizer
    EXPECT_FALSE(class_condition(preset("C5"), -104)); // h = 6
    EXPECT_TRUE(class_condition(preset("C5"), -20));   // h = 2
}

TEST(Verdict, JsonRoundTrip)
{
    for (std::int64_t d : {-19, -7, -91, -35}) {
        auto v = verdict(preset("C1"), d);
        EXPECT_EQ(verdict_from_json(to_json(v)), v);
    }
    auto v = verdict(preset("C1"), -19);
    EXPECT_EQ(to_json(v), "{\"applicable\":true,\"case\":\"C1\",\"congruence_residue\":1,"
                          "\"delta\":-19,\"epsilon\":1,\"h\":1,\"period_sum\":9,"
                          "\"status\":\"ProvenNonzero\"}");
    EXPECT_THROW(verdict_from_json("{\"case\":1}"), InvalidInput);
}

TEST(Verdict, CsvRoundTripThroughJson)
{
    EXPECT_EQ(csv_header(), "case,delta,h,epsilon,applicable,congruence_residue,period_sum,status");
    for (const auto& id : CaseRegistry::builtin().ids()) {
        for (auto d : negative_fundamental_discriminants(3, 120)) {
            auto v = verdict(preset(id), d);
            auto row = verdict_from_csv(to_csv(v));
            EXPECT_EQ(row, v);
            EXPECT_EQ(verdict_from_json(to_json(row)), v);
        }
    }
    EXPECT_EQ(to_csv(verdict(preset("C1"), -7)), "C1,-7,1,-1,false,,,ForcedZero");
    EXPECT_THROW(verdict_from_csv("C1,-7,1"), InvalidInput);
    EXPECT_THROW(verdict_from_csv("C1,-7,1,-1,maybe,,,ForcedZero"), InvalidInput);
}
