#include <gtest/gtest.h>

#include <random>
#include <set>

#include "acx/experiments.hpp"
#include "acx/word.hpp"

using acx::Rational;
using acx::Word;

namespace {

Word W(const char* s, unsigned k = 0) { return Word::parse(s, k); }

// Naive references, written independently of the library's run scanning.
bool naive_has_square(const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t p = 1; i + 2 * p <= w.size(); ++p) {
            bool eq = true;
            for (std::size_t j = 0; j < p && eq; ++j)
                eq = w[i + j] == w[i + p + j];
            if (eq)
                return true;
        }
    return false;
}

// Some factor u has period p and |u| * den >= num * p.
bool naive_has_power(const Word& w, const Rational& alpha) {
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j <= w.size(); ++j)
            for (std::size_t p = 1; p <= j - i; ++p) {
                bool per = true;
                for (std::size_t t = i + p; t < j && per; ++t)
                    per = w[t] == w[t - p];
                if (per && Rational(static_cast<std::int64_t>(j - i)) >= alpha * Rational(static_cast<std::int64_t>(p)))
                    return true;
            }
    return false;
}

bool naive_overlap_free(const Word& w) {
    // No factor of length 2p+1 with period p.
    for (std::size_t p = 1; 2 * p + 1 <= w.size(); ++p)
        for (std::size_t i = 0; i + 2 * p + 1 <= w.size(); ++i) {
            bool per = true;
            for (std::size_t t = i + p; t < i + 2 * p + 1 && per; ++t)
                per = w[t] == w[t - p];
            if (per)
                return false;
        }
    return true;
}

} // namespace

TEST(Rational, ArithmeticAndParsing) {
    EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
    EXPECT_EQ(Rational::parse("2+1/8"), Rational(17, 8));
    EXPECT_EQ(Rational::parse("4"), Rational(4));
    EXPECT_EQ(Rational(6, 4).str(), "3/2");
    EXPECT_EQ((Rational(1, 3) + Rational(1, 6)), Rational(1, 2));
    EXPECT_LT(Rational(2), Rational(17, 8));
    EXPECT_THROW(Rational::parse("x/2"), acx::error);
    EXPECT_THROW(Rational::parse("1/0"), acx::error);
}

TEST(Word, ParseDefaultsAlphabetToLargestDigitPlusOne) {
    EXPECT_EQ(W("0120").k(), 3u);
    EXPECT_EQ(W("12312301234112341").k(), 5u);
    EXPECT_EQ(W("01", 4).k(), 4u);
    EXPECT_THROW(W("013", 3), acx::error);
    EXPECT_THROW(W("01a"), acx::error);
}

TEST(Word, ErrorCodes) {
    try {
        W("02", 2);
        FAIL();
    } catch (const acx::error& e) {
        EXPECT_EQ(e.code(), acx::errc::letter_out_of_range);
    }
}

TEST(Power, DefinitionExamples) {
    EXPECT_EQ(acx::power(W("0110"), Rational(3, 2)).str(), "011001");
    EXPECT_EQ(acx::power(W("01"), Rational(2)).str(), "0101");
    EXPECT_EQ(acx::power(W("012"), Rational(1)).str(), "012");
    EXPECT_EQ(acx::power(W("12210101111010"), Rational(31, 14)).str(), "1221010111101012210101111010122");
}

TEST(Power, Errors) {
    auto code = [](auto f) {
        try {
            f();
        } catch (const acx::error& e) {
            return e.code();
        }
        return acx::errc::invalid_argument;
    };
    EXPECT_EQ(code([] { acx::power(W("0110"), Rational(5, 3)); }), acx::errc::non_integral_length);
    EXPECT_EQ(code([] { acx::power(Word({}, 2), Rational(2)); }), acx::errc::empty_base);
}

TEST(Squares, Examples) {
    EXPECT_TRUE(acx::is_square(W("0101")));
    EXPECT_FALSE(acx::is_square(W("010")));
    EXPECT_FALSE(acx::is_square(Word({}, 2)));
    EXPECT_TRUE(acx::is_squarefree(W("0102")));
    const auto occ = acx::contains_square(W("0120101"));
    ASSERT_TRUE(occ);
    EXPECT_EQ(occ->start, 3u);
    EXPECT_EQ(occ->period, 2u);
}

TEST(Squares, AgreeWithNaiveScanTernaryUpTo9) {
    for (std::size_t n = 0; n <= 9; ++n)
        for (const auto& w : acx::all_words(3, n))
            ASSERT_EQ(acx::is_squarefree(w), !naive_has_square(w)) << w.str();
}

TEST(SquarefreeEnumerator, CountsAndOrder) {
    // Ternary squarefree counts for n = 0..10.
    const std::size_t expected[] = {1, 3, 6, 12, 18, 30, 42, 60, 78, 108, 144};
    for (std::size_t n = 0; n <= 10; ++n) {
        const auto words = acx::enumerate_squarefree(3, n);
        EXPECT_EQ(words.size(), expected[n]) << n;
        EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
        if (n <= 8) {
            std::size_t naive = 0;
            for (const auto& w : acx::all_words(3, n))
                naive += !naive_has_square(w);
            EXPECT_EQ(naive, expected[n]);
        }
    }
    EXPECT_TRUE(acx::enumerate_squarefree(2, 4).empty());
}

TEST(AlphaPowers, AgreeWithNaiveBinaryUpTo10) {
    const Rational alphas[] = {Rational(2), Rational(3), Rational(3, 2), Rational(5, 2), Rational(17, 8), Rational(7, 3)};
    for (std::size_t n = 0; n <= 10; ++n)
        for (const auto& w : acx::all_words(2, n))
            for (const auto& a : alphas)
                ASSERT_EQ(acx::contains_alpha_power(w, a).has_value(), naive_has_power(w, a))
                    << w.str() << " alpha " << a.str();
}

TEST(OverlapFree, ThueMorsePrefixesAndNaive) {
    std::vector<acx::letter> tm{0};
    while (tm.size() < 64) {
        const auto sz = tm.size();
        for (std::size_t i = 0; i < sz; ++i)
            tm.push_back(1 - tm[i]);
    }
    EXPECT_TRUE(acx::is_overlap_free(Word(tm, 2)));
    EXPECT_FALSE(acx::is_overlap_free(W("01010")));
    EXPECT_FALSE(acx::is_overlap_free(W("000")));
    EXPECT_TRUE(acx::is_overlap_free(W("0110")));
    EXPECT_TRUE(acx::is_overlap_free(acx::seventeen_letter_word()));
    for (std::size_t n = 0; n <= 11; ++n)
        for (const auto& w : acx::all_words(2, n))
            ASSERT_EQ(acx::is_overlap_free(w), naive_overlap_free(w)) << w.str();
}

TEST(Shuffle, InterleavesAndChecksLengths) {
    EXPECT_EQ(acx::shuffle(W("000", 2), W("111", 2)).str(), "010101");
    EXPECT_EQ(acx::shuffle(W("012"), W("210")).str(), "021120");
    try {
        acx::shuffle(W("01", 3), W("012", 3));
        FAIL();
    } catch (const acx::error& e) {
        EXPECT_EQ(e.code(), acx::errc::length_mismatch);
    }
}

TEST(Morphism, BrandenburgImages) {
    const auto& h = acx::brandenburg();
    EXPECT_EQ(h.source_k(), 6u);
    std::set<Word> distinct;
    for (acx::letter a = 0; a < 6; ++a) {
        EXPECT_EQ(h.image(a).size(), 22u);
        EXPECT_TRUE(acx::is_squarefree(h.image(a)));
        distinct.insert(h.image(a));
    }
    EXPECT_EQ(distinct.size(), 6u);
    const Word u = W("012345");
    EXPECT_EQ(h(u).size(), 6u * 22u);
    EXPECT_EQ(h(u).k(), 3u);
}

TEST(Morphism, IsAHomomorphism) {
    const auto& h = acx::brandenburg();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<acx::letter> a(rng() % 6), b(rng() % 6);
        for (auto& x : a)
            x = static_cast<acx::letter>(rng() % 6);
        for (auto& x : b)
            x = static_cast<acx::letter>(rng() % 6);
        const Word wa(a, 6), wb(b, 6);
        ASSERT_EQ(h(wa + wb), h(wa) + h(wb));
    }
}

TEST(Morphism, PreservesSquarefreenessOverSixLetters) {
    const auto& h = acx::brandenburg();
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& u : acx::enumerate_squarefree(6, n))
            ASSERT_TRUE(acx::is_squarefree(h(u))) << u.str();
}

TEST(ShuffleSets, MembersAndSquares) {
    const Word r = W("3010", 4);
    const auto members = acx::gen_An(r, 16);
    EXPECT_EQ(members.size(), 256u);
    std::size_t squares = 0;
    for (const auto& z : members) {
        EXPECT_TRUE(acx::is_in_An(r, z));
        squares += acx::is_in_Bn(r, z);
        EXPECT_EQ(acx::is_square(z), acx::contains_square(z).has_value()) << z.str();
    }
    EXPECT_EQ(squares, 16u);
    EXPECT_FALSE(acx::is_in_An(r, W("0000000000000000", 6)));
}

TEST(ShuffleSets, RejectsBadParameters) {
    EXPECT_THROW(acx::gen_An(W("30", 4), 12), acx::error);
    EXPECT_THROW(acx::gen_An(W("01", 4), 8), acx::error);
    EXPECT_THROW(acx::gen_An(W("3000", 4), 16), acx::error);
}
