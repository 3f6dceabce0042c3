#include <gtest/gtest.h>

#include <random>

#include "qtoric/errors.hpp"
#include "qtoric/linalg.hpp"

using namespace qtoric;

TEST(Rational, ParsesFractionsAndIntegers)
{
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational(" 2/-4 "), Rational(-1, 2));
    EXPECT_THROW(parse_rational("1/0"), InvalidInput);
    EXPECT_THROW(parse_rational("x"), InvalidInput);
    EXPECT_EQ(to_string(Rational(-3, 4)), "-3/4");
}

TEST(Matrix, DeterminantAndInverse)
{
    RatMatrix q{{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}};
    EXPECT_EQ(determinant(q), Rational(16));
    RatMatrix inv = inverse(q);
    RatMatrix expected{{Rational(1, 2), Rational(1, 4), Rational(1, 4)},
                       {Rational(1, 4), Rational(1, 2), Rational(1, 4)},
                       {Rational(1, 4), Rational(1, 4), Rational(1, 2)}};
    EXPECT_EQ(inv, expected);
    EXPECT_EQ(q * inv, RatMatrix::identity(3));
    RatMatrix sing{{1, 2}, {2, 4}};
    EXPECT_EQ(determinant(sing), Rational(0));
    EXPECT_EQ(rank(sing), 1u);
    EXPECT_THROW(inverse(sing), MathError);
}

TEST(Matrix, KernelAndLeftSolve)
{
    RatMatrix m{{1, 1, 0}, {0, 1, 1}};
    auto ker = rational_kernel(m);
    ASSERT_EQ(ker.size(), 1u);
    auto image = row_times(ker[0], m.transpose());
    for (const auto& x : image)
        EXPECT_EQ(x, 0);
    RatVector target{2, 3, 1};
    auto x = solve_left(m, target);
    ASSERT_TRUE(x);
    EXPECT_EQ(row_times(*x, m), target);
    EXPECT_FALSE(solve_left(m, RatVector{1, 0, 0}));
}

TEST(Hnf, ReducedLowerTriangularAndSameLattice)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                m(i, j) = dist(rng);
        if (determinant(to_rational(m)) == 0)
            continue;
        IntMatrix h = hermite_normal_form(m);
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_GT(h(i, i), 0);
            for (std::size_t j = i + 1; j < 4; ++j)
                EXPECT_EQ(h(i, j), 0);
            for (std::size_t r = i + 1; r < 4; ++r) {
                EXPECT_GE(h(r, i), 0);
                EXPECT_LT(h(r, i), h(i, i));
            }
        }
        EXPECT_EQ(abs(determinant(to_rational(h))), abs(determinant(to_rational(m))));
        for (std::size_t i = 0; i < 4; ++i)
            EXPECT_TRUE(solve_integral(h, m.row(i)));
        EXPECT_EQ(hermite_normal_form(h), h);
    }
}

TEST(Hnf, LatticeBasisDropsDependentRows)
{
    IntMatrix g{{2, 0}, {0, 2}, {1, 1}, {3, 3}};
    IntMatrix b = lattice_basis(g);
    EXPECT_EQ(b.rows(), 2u);
    EXPECT_EQ(abs(determinant(to_rational(b))), Integer(2));
    EXPECT_THROW(hermite_normal_form(IntMatrix{{1, 1}, {2, 2}}), MathError);
}

TEST(Matrix, CommonDenominator)
{
    RatMatrix m{{Rational(1, 2), Rational(1, 3)}, {0, Rational(5, 4)}};
    EXPECT_EQ(common_denominator(m), Integer(12));
}
