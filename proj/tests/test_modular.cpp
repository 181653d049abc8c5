#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "acx/complexity.hpp"
#include "acx/experiments.hpp"
#include "acx/modular.hpp"

using acx::PositionConstraint;
using acx::Word;

TEST(Modulus, ExamplePositions) {
    const auto pos = acx::ModularExample::positions();
    const auto m = acx::find_modulus(pos);
    EXPECT_EQ(m.smallest_integer, 14u);
    EXPECT_TRUE(acx::is_prime(m.smallest_prime));
    EXPECT_GE(m.smallest_prime, 14u);
    EXPECT_EQ(acx::residues(pos, 14), (std::vector<std::size_t>{3, 4, 5, 7, 8, 11, 6, 9, 10, 12, 13, 0}));
}

TEST(Modulus, AgreesWithBruteForce) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::size_t> pos;
        for (std::size_t a = 0; a < 40; ++a)
            if (rng() % 5 == 0)
                pos.push_back(a);
        const auto got = acx::find_modulus(pos);
        std::size_t m = 1;
        for (;; ++m) {
            std::set<std::size_t> r;
            for (auto a : pos)
                r.insert(a % m);
            if (r.size() == pos.size())
                break;
        }
        ASSERT_EQ(got.smallest_integer, m);
        ASSERT_GE(got.smallest_prime, m);
        ASSERT_TRUE(acx::is_prime(got.smallest_prime));
    }
    EXPECT_EQ(acx::find_modulus({}).smallest_integer, 1u);
    EXPECT_EQ(acx::find_modulus({0, 1}).smallest_prime, 2u);
    EXPECT_THROW(acx::find_modulus({3, 3}), acx::error);
}

TEST(Construct, ExampleWord) {
    const Word y = acx::ModularExample::y();
    PositionConstraint c{31, acx::ModularExample::positions(), {}, 2};
    for (auto a : c.positions)
        c.bits.push_back(y[a]);
    const auto res = acx::build_low_complexity_word(c);
    EXPECT_EQ(res.m, 14u);
    EXPECT_EQ(res.template_str(), "1??10101111010");
    EXPECT_EQ(res.x.str(), "1001010111101010010101111010100");
    const auto doc = acx::to_json_value(res);
    EXPECT_EQ(doc.dump(), R"({"m":14,"z_template":"1??10101111010","x":"1001010111101010010101111010100","bound":14})");
}

TEST(Construct, AgreesAtPositionsAndIsCheap) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        PositionConstraint c;
        c.n = 1 + rng() % 24;
        for (std::size_t a = 0; a < c.n; ++a)
            if (rng() % 3 == 0) {
                c.positions.push_back(a);
                c.bits.push_back(static_cast<acx::letter>(rng() % 2));
            }
        acx::ConstructOptions opts;
        if (trial % 2)
            opts.mode = acx::ModulusMode::smallest_prime;
        const auto res = acx::build_low_complexity_word(c, opts);
        ASSERT_EQ(res.x.size(), c.n);
        for (std::size_t i = 0; i < c.positions.size(); ++i)
            ASSERT_EQ(res.x[c.positions[i]], c.bits[i]);
        if (c.n >= res.m) {
            const acx::Rational alpha(static_cast<std::int64_t>(c.n), static_cast<std::int64_t>(res.m));
            ASSERT_TRUE(acx::uniquely_accepts(acx::cyclic_witness(res.x, alpha), res.x));
        }
        if (c.n <= 14) {
            ASSERT_LE(acx::an_exact(res.x).value, res.bound);
        }
    }
}

TEST(Construct, CollisionsAndErrors) {
    PositionConstraint c{10, {0, 5}, {1, 1}, 2};
    EXPECT_EQ(acx::build_low_complexity_word(c).m, 2u);
    acx::ConstructOptions loose;
    loose.allow_consistent_collisions = true;
    EXPECT_EQ(acx::build_low_complexity_word(c, loose).m, 1u);
    PositionConstraint bad{4, {1, 2}, {0}, 2};
    EXPECT_THROW(acx::build_low_complexity_word(bad), acx::error);
    PositionConstraint out_of_range{4, {4}, {0}, 2};
    EXPECT_THROW(acx::build_low_complexity_word(out_of_range), acx::error);
    PositionConstraint letter{4, {1}, {2}, 2};
    EXPECT_THROW(acx::build_low_complexity_word(letter), acx::error);
}

TEST(Table, SmallEntriesByIndependentBruteForce) {
    // Recompute f(c, n) for n <= 5 with a direct enumeration over position
    // subsets given as index vectors.
    const auto t = acx::table_best_bound(5, 5);
    for (std::size_t n = 0; n <= 5; ++n) {
        std::vector<std::size_t> an(std::size_t{1} << n);
        for (std::size_t w = 0; w < an.size(); ++w) {
            std::vector<acx::letter> l;
            for (std::size_t i = 0; i < n; ++i)
                l.push_back(static_cast<acx::letter>((w >> i) & 1u));
            an[w] = acx::an_exact(Word(l, 2)).value;
        }
        for (std::size_t c = 0; c <= n; ++c) {
            std::size_t worst = 0;
            for (std::size_t s = 0; s < an.size(); ++s) {
                if (static_cast<std::size_t>(std::popcount(s)) != c)
                    continue;
                for (std::size_t y = 0; y < an.size(); ++y) {
                    std::size_t best = 99;
                    for (std::size_t w = 0; w < an.size(); ++w)
                        if (((w ^ y) & s) == 0)
                            best = std::min(best, an[w]);
                    worst = std::max(worst, best);
                }
            }
            ASSERT_EQ(t[c][n], worst) << c << "," << n;
        }
        for (std::size_t c = n + 1; c <= 5; ++c)
            EXPECT_FALSE(t[c][n]);
    }
}

TEST(Table, DiagonalAndTrivialRows) {
    const auto t = acx::table_best_bound(6, 6);
    for (std::size_t n = 0; n <= 6; ++n) {
        EXPECT_EQ(t[n][n], acx::hyde_bound(n));
        EXPECT_EQ(t[0][n], 1u);
        if (n >= 1) {
            EXPECT_EQ(t[1][n], 1u);
        }
    }
    EXPECT_EQ(t[2][5], 3u);
}

TEST(Table, Formatting) {
    const auto t = acx::table_best_bound(2, 3);
    EXPECT_EQ(acx::format_table(t), "c\\n 0 1 2 3\n0   1 1 1 1\n1   - 1 1 1\n2   - - 2 2\n");
    EXPECT_EQ(acx::format_table_csv(t), "c,0,1,2,3\n0,1,1,1,1\n1,-,1,1,1\n2,-,-,2,2\n");
    EXPECT_THROW(acx::table_best_bound(2, 21), acx::error);
}

TEST(NumberTheory, Primorial) {
    EXPECT_EQ(acx::primorial(0), 1);
    EXPECT_EQ(acx::primorial(1), 1);
    EXPECT_EQ(acx::primorial(10), 210);
    EXPECT_EQ(acx::primorial(30).str(), "6469693230");
    EXPECT_EQ(acx::primorial(100).str(), "2305567963945518424753102147331756070");
    EXPECT_EQ(acx::primes_up_to(30).size(), 10u);
    EXPECT_EQ(acx::primes_up_to(1'000'000).size(), 78498u);
}

TEST(NumberTheory, ThetaMatchesLogPrimorial) {
    for (std::uint64_t x : {2u, 10u, 41u, 97u, 150u}) {
        const double lp = std::log(acx::primorial(x).convert_to<double>());
        EXPECT_NEAR(acx::chebyshev_theta(x), lp, 1e-9 * lp);
    }
    EXPECT_EQ(acx::chebyshev_theta(1), 0.0);
}

TEST(NumberTheory, RosserInequality) {
    EXPECT_TRUE(acx::rosser_check(41));
    EXPECT_THROW(acx::rosser_check(40), acx::error);
    const auto sweep = acx::rosser_sweep(41, 100'000);
    EXPECT_EQ(sweep.checked, 100'000u - 40u);
    EXPECT_FALSE(sweep.first_failure);
    EXPECT_GT(sweep.min_margin, 0.0);
    // Below the threshold the inequality does fail somewhere.
    bool any_fail = false;
    for (std::uint64_t x = 2; x < 41; ++x) {
        const double xd = static_cast<double>(x);
        any_fail = any_fail || !(xd * (1 - 1 / std::log(xd)) < acx::chebyshev_theta(x));
    }
    EXPECT_TRUE(any_fail);
}

TEST(Gaps, AverageGapBound) {
    EXPECT_TRUE(acx::avg_gap_check({0, 1}).ok);
    EXPECT_DOUBLE_EQ(acx::avg_gap_check({0, 10}).average, 10.0);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<double> v;
        double x = 0;
        for (int i = 0; i < 2 + static_cast<int>(rng() % 10); ++i) {
            x += 1 + static_cast<double>(rng() % 100);
            v.push_back(x);
        }
        ASSERT_TRUE(acx::avg_gap_check(v).ok);
    }
    EXPECT_THROW(acx::avg_gap_check({1}), acx::error);
    EXPECT_THROW(acx::avg_gap_check({2, 1}), acx::error);
    EXPECT_NEAR(acx::theoretical_bound(3, std::exp(1.0)), 3.0, 1e-12);
}
