#include <gtest/gtest.h>

#include "qtoric/errors.hpp"
#include "qtoric/quadratic.hpp"

using namespace qtoric;

namespace {

// Dirichlet: h = -(w/2|D|) sum_{n<|D|} chi(n) n
std::int64_t class_number_formula(std::int64_t d)
{
    std::int64_t s = 0;
    for (std::int64_t n = 1; n < -d; ++n)
        s += kronecker(d, n) * n;
    std::int64_t w = d == -3 ? 6 : (d == -4 ? 4 : 2);
    return -s * w / (2 * -d);
}

}  // namespace

TEST(Fundamental, Examples)
{
    EXPECT_TRUE(is_fundamental(-19));
    EXPECT_FALSE(is_fundamental(-12));
    EXPECT_TRUE(is_fundamental(-4));
    EXPECT_TRUE(is_fundamental(-8));
    EXPECT_TRUE(is_fundamental(-3));
    EXPECT_FALSE(is_fundamental(-16));
    EXPECT_FALSE(is_fundamental(-27));
    EXPECT_FALSE(is_fundamental(-2));
    EXPECT_THROW(require_fundamental(-12), InvalidInput);
    EXPECT_THROW(require_fundamental(5), InvalidInput);
    EXPECT_THROW(require_fundamental(-1000003), InvalidInput);
    EXPECT_NO_THROW(require_fundamental(-20));
}

TEST(Fundamental, ListIsAscendingInAbsoluteValue)
{
    auto ds = negative_fundamental_discriminants(3, 50);
    std::vector<std::int64_t> expected{-3,  -4,  -7,  -8,  -11, -15, -19, -20, -23, -24,
                                       -31, -35, -39, -40, -43, -47};
    EXPECT_EQ(ds, expected);
}

TEST(Kronecker, Examples)
{
    EXPECT_EQ(kronecker(-19, 2), -1);
    EXPECT_EQ(kronecker(-19, 19), 0);
    EXPECT_EQ(kronecker(-7, 2), 1);
    for (std::int64_t d : {-3, -4, -19, -40})
        EXPECT_EQ(kronecker(d, 1), 1);
    EXPECT_EQ(kronecker(-4, 3), -1);
    EXPECT_EQ(kronecker(-4, 2), 0);
}

TEST(Kronecker, IsMultiplicativeAndPeriodic)
{
    for (auto d : negative_fundamental_discriminants(3, 200)) {
        for (std::int64_t m = 1; m <= 30; ++m) {
            for (std::int64_t n = 1; n <= 30; ++n)
                EXPECT_EQ(kronecker(d, m * n), kronecker(d, m) * kronecker(d, n));
            EXPECT_EQ(kronecker(d, m), kronecker(d, m - d));
        }
    }
}

TEST(ClassNumber, Examples)
{
    EXPECT_EQ(class_number(-19).h, 1);
    auto f15 = class_number(-15);
    ASSERT_EQ(f15.h, 2);
    EXPECT_EQ(f15.forms[0], (ReducedForm{1, 1, 4}));
    EXPECT_EQ(f15.forms[1], (ReducedForm{2, 1, 2}));
    EXPECT_EQ(class_number(-4).h, 1);
    EXPECT_EQ(class_number(-23).h, 3);
    EXPECT_EQ(class_number(-47).h, 5);
    EXPECT_EQ(class_number(-163).h, 1);
    EXPECT_EQ(class_number(-56).h, 4);
}

TEST(ClassNumber, MatchesDirichletFormula)
{
    for (auto d : negative_fundamental_discriminants(3, 3000))
        ASSERT_EQ(class_number(d).h, class_number_formula(d)) << d;
}

TEST(ClassNumber, FormsAreReducedPrimitiveAndPrincipalFirst)
{
    for (auto d : negative_fundamental_discriminants(3, 2000)) {
        auto cg = class_number(d);
        EXPECT_EQ(cg.forms.front().a, 1) << d;
        for (const auto& f : cg.forms) {
            EXPECT_EQ(f.b * f.b - 4 * f.a * f.c, d);
            EXPECT_LE(std::llabs(f.b), f.a);
            EXPECT_LE(f.a, f.c);
            if (std::llabs(f.b) == f.a || f.a == f.c)
                EXPECT_GE(f.b, 0);
        }
    }
}

TEST(Genus, Examples)
{
    EXPECT_EQ(genus_parity(-19), Parity::Odd);
    EXPECT_EQ(genus_parity(-15), Parity::Even);
    EXPECT_EQ(genus_parity(-4), Parity::Odd);
    EXPECT_EQ(genus_parity(-8), Parity::Odd);
    EXPECT_EQ(genus_parity(-3), Parity::Odd);
}

TEST(Genus, ParityMatchesClassNumber)
{
    for (auto d : negative_fundamental_discriminants(3, 10000))
        ASSERT_EQ(genus_parity(d) == Parity::Odd, class_number(d).h % 2 == 1) << d;
}

TEST(Pizer, Examples)
{
    EXPECT_EQ(pizer_mod4(-51), PizerRule::ThreeP);
    EXPECT_EQ(class_number(-51).h, 2);
    EXPECT_FALSE(pizer_mod4(-19));
    EXPECT_FALSE(pizer_mod4(-55));
}

TEST(Pizer, ThreePNeedsPCongruentTwoModThree)
{
    // -3p = 21 mod 24 with p = 1 mod 3 gives 4 | h
    for (std::int64_t d : {-219, -291, -579}) {
        EXPECT_EQ(((d % 24) + 24) % 24, 21);
        EXPECT_EQ(class_number(d).h % 4, 0) << d;
        EXPECT_FALSE(pizer_mod4(d)) << d;
    }
}

TEST(Pizer, AssertionsMatchClassNumbers)
{
    int asserted = 0;
    for (auto d : negative_fundamental_discriminants(3, 10000)) {
        if (pizer_mod4(d)) {
            ++asserted;
            ASSERT_EQ(class_number(d).h % 4, 2) << d;
        }
    }
    EXPECT_GT(asserted, 100);
}

TEST(Ideals, RepresentativesHaveFormNorms)
{
    auto r19 = ideal_class_reps(-19);
    ASSERT_EQ(r19.size(), 1u);
    EXPECT_EQ(r19[0].norm(), 1);
    auto r15 = ideal_class_reps(-15);
    ASSERT_EQ(r15.size(), 2u);
    EXPECT_EQ(r15[0].norm(), 1);
    EXPECT_EQ(r15[1].norm(), 2);
    EXPECT_EQ(ideal_class_reps(-4).size(), 1u);
    for (auto d : negative_fundamental_discriminants(3, 500)) {
        for (const auto& I : ideal_class_reps(d)) {
            // y = -(D + b)/2 + w is integral and N(y) = a c
            EXPECT_EQ((d + I.form.b) % 2, 0);
            EXPECT_EQ(I.x[0], I.form.a);
        }
    }
}
