#include <gtest/gtest.h>

#include <random>

#include "acx/gf2poly.hpp"

using acx::MultilinearPoly;

namespace {

MultilinearPoly P(const char* text, std::size_t n) { return MultilinearPoly::parse(text, n); }

// Direct evaluation of the disjunction / constancy, independent of the ANF.
bool or_of(std::uint64_t mask) { return mask != 0; }

} // namespace

TEST(Poly, AlgebraExamples) {
    const auto x = MultilinearPoly::variable(2, 1), y = MultilinearPoly::variable(2, 2);
    const auto one = MultilinearPoly::constant(2, true);
    EXPECT_TRUE(((x + y) + (x + y)).is_zero());
    EXPECT_EQ(x * x, x);
    EXPECT_EQ((one + x) * (one + y), P("xy+x+y+1", 2));
    EXPECT_EQ(((one + x) * (one + y)).str(), "xy+x+y+1");
    EXPECT_THROW(x + MultilinearPoly::variable(3, 1), acx::error);
}

TEST(Poly, Evaluation) {
    const std::uint8_t both[] = {1, 1}, first[] = {1, 0};
    EXPECT_FALSE(P("x+y", 2).eval(both));
    EXPECT_TRUE(acx::or_poly(2).eval(first));
    const std::uint8_t zeros[5] = {};
    EXPECT_FALSE(acx::or_poly(5).eval(zeros));
    EXPECT_THROW(P("x+y", 2).eval(std::span<const std::uint8_t>(first, 1)), acx::error);
}

TEST(Poly, Degree) {
    EXPECT_EQ(MultilinearPoly::constant(3, true).degree(), 0u);
    EXPECT_FALSE(MultilinearPoly(3).degree());
    EXPECT_EQ(acx::degree(P("xyz+x", 3)), 3u);
    EXPECT_EQ(P("x1x4+x2", 4).degree(), 2u);
}

TEST(Poly, PrintAndParse) {
    EXPECT_EQ(acx::or_poly(2).str(), "xy+x+y");
    EXPECT_EQ(acx::or_poly(1).str(), "x");
    EXPECT_EQ(MultilinearPoly(2).str(), "0");
    EXPECT_EQ(acx::an1_poly(2).str(), "x+y+1");
    EXPECT_EQ(P("x3x1+x2+1", 4).str(), "x1x3+x2+1");
    EXPECT_EQ(P("x + x", 1), MultilinearPoly(1));
    EXPECT_EQ(P("0", 1), MultilinearPoly(1));
    EXPECT_THROW(P("x+", 2), acx::error);
    EXPECT_THROW(P("xw", 2), acx::error);
    EXPECT_THROW(P("z", 2), acx::error);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        std::vector<MultilinearPoly::monomial> monos;
        for (int i = 0; i < 6; ++i)
            monos.push_back(rng() & ((MultilinearPoly::monomial{1} << n) - 1));
        const MultilinearPoly p(n, monos);
        ASSERT_EQ(P(p.str().c_str(), n), p) << p.str();
    }
}

TEST(OrPoly, ShapeAndTruthTable) {
    for (std::size_t n = 1; n <= 16; ++n) {
        const auto p = acx::or_poly(n);
        ASSERT_EQ(p.degree(), n);
        ASSERT_EQ(p.monomials().size(), (std::size_t{1} << n) - 1);
        ASSERT_EQ(acx::or_poly_monomial_count(n), (std::uint64_t{1} << n) - 1);
    }
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto p = acx::or_poly(n);
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a)
            ASSERT_EQ(p.eval_mask(a), or_of(a));
    }
    EXPECT_EQ(acx::or_poly_degree(40), 40u);
    EXPECT_THROW(acx::or_poly(21), acx::error);
    EXPECT_THROW(acx::or_poly(0), acx::error);
}

TEST(An1Poly, IndicatorOfConstantWords) {
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto p = acx::an1_poly(n);
        ASSERT_EQ(p.degree(), n - 1) << n;
        ASSERT_EQ(acx::an1_poly_degree(n), n - 1);
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t a = 0; a <= full; ++a)
            ASSERT_EQ(p.eval_mask(a), a == 0 || a == full);
        // Every proper subset, including the empty one, appears exactly once.
        ASSERT_EQ(p.monomials().size(), full);
    }
}

TEST(Anf, PrimitiveGates) {
    const std::uint8_t and_table[] = {0, 0, 0, 1};
    EXPECT_EQ(acx::anf_from_truth_table(and_table), P("xy", 2));
    const std::uint8_t not_table[] = {1, 0};
    EXPECT_EQ(acx::anf_from_truth_table(not_table), P("x+1", 1));
    const std::uint8_t bad[] = {0, 1, 1};
    try {
        acx::anf_from_truth_table(bad);
        FAIL();
    } catch (const acx::error& e) {
        EXPECT_EQ(e.code(), acx::errc::bad_length);
    }
}

TEST(Anf, BijectionUpToFourVariables) {
    for (std::size_t n = 0; n <= 4; ++n) {
        const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
        for (std::uint64_t t = 0; t < count; ++t) {
            std::vector<std::uint8_t> table(std::size_t{1} << n);
            for (std::size_t i = 0; i < table.size(); ++i)
                table[i] = static_cast<std::uint8_t>((t >> i) & 1u);
            const auto p = acx::anf_from_truth_table(table);
            for (std::size_t i = 0; i < table.size(); ++i)
                ASSERT_EQ(p.eval_mask(i), table[i] != 0);
            ASSERT_EQ(acx::truth_table(p), table);
        }
    }
}

TEST(ZeroFunction, IffEmptyUpToThreeVariables) {
    for (std::size_t n = 0; n <= 3; ++n) {
        const std::uint64_t sets = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t s = 0; s < sets; ++s) {
            std::vector<MultilinearPoly::monomial> monos;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
                if ((s >> m) & 1u)
                    monos.push_back(m);
            const MultilinearPoly p(n, monos);
            ASSERT_EQ(acx::is_zero_function(p), monos.empty());
        }
    }
    const auto x = MultilinearPoly::variable(1, 1);
    EXPECT_TRUE(acx::is_zero_function(x * x + x));
    EXPECT_FALSE(acx::is_zero_function(acx::or_poly(3)));
    EXPECT_THROW(acx::is_zero_function(MultilinearPoly(30)), acx::error);
}

TEST(PolyProperties, DegreeOfSumAndProduct) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        auto random_poly = [&] {
            std::vector<MultilinearPoly::monomial> monos;
            for (std::size_t i = rng() % 6; i > 0; --i)
                monos.push_back(rng() & ((MultilinearPoly::monomial{1} << n) - 1));
            return MultilinearPoly(n, monos);
        };
        const auto p = random_poly(), q = random_poly();
        const auto dp = p.degree().value_or(0), dq = q.degree().value_or(0);
        if (auto d = (p + q).degree()) {
            ASSERT_LE(*d, std::max(dp, dq));
        }
        if (auto d = (p * q).degree()) {
            ASSERT_LE(*d, std::min(n, dp + dq));
        }
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
            ASSERT_EQ((p + q).eval_mask(a), p.eval_mask(a) != q.eval_mask(a));
            ASSERT_EQ((p * q).eval_mask(a), p.eval_mask(a) && q.eval_mask(a));
        }
    }
}
