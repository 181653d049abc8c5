#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acx/error.hpp"
#include "acx/rational.hpp"

namespace acx {

using letter = std::uint8_t;

/// A finite word over the alphabet [k] = {0, ..., k-1}.
class Word {
public:
    Word() = default;

    explicit Word(unsigned k) : k_(k) { check_k(); }

    Word(std::vector<letter> letters, unsigned k) : letters_(std::move(letters)), k_(k) {
        check_k();
        for (std::size_t i = 0; i < letters_.size(); ++i)
            if (letters_[i] >= k_)
                throw error(errc::letter_out_of_range,
                            "letter " + std::to_string(letters_[i]) + " at position " + std::to_string(i) +
                                " is not below alphabet size " + std::to_string(k_));
    }

    Word(std::initializer_list<letter> letters, unsigned k) : Word(std::vector<letter>(letters), k) {}

    /// Parses a digit string; k = 0 selects 1 + (largest digit present).
    static Word parse(std::string_view digits, unsigned k = 0) {
        std::vector<letter> letters;
        letters.reserve(digits.size());
        unsigned max_digit = 0;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            const char ch = digits[i];
            if (ch < '0' || ch > '9')
                throw error(errc::parse_error,
                            "character '" + std::string(1, ch) + "' at offset " + std::to_string(i) + " is not a digit");
            letters.push_back(static_cast<letter>(ch - '0'));
            max_digit = std::max<unsigned>(max_digit, letters.back());
        }
        if (k == 0)
            k = max_digit + 1;
        return Word(std::move(letters), k);
    }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    unsigned k() const noexcept { return k_; }
    letter operator[](std::size_t i) const noexcept { return letters_[i]; }
    std::span<const letter> letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    Word substr(std::size_t pos, std::size_t len) const {
        return Word(std::vector<letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                        letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)),
                    k_);
    }

    /// Same letters viewed over a (not smaller) alphabet.
    Word with_alphabet(unsigned k) const { return Word(letters_, k); }

    /// Digit-string form; letters >= 10 print as their decimal value in braces.
    std::string str() const {
        std::string out;
        out.reserve(letters_.size());
        for (letter a : letters_) {
            if (a < 10)
                out.push_back(static_cast<char>('0' + a));
            else
                out += "{" + std::to_string(a) + "}";
        }
        return out;
    }

    friend Word operator+(const Word& a, const Word& b) {
        std::vector<letter> letters(a.letters_);
        letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(letters), std::max(a.k_, b.k_));
    }

    friend bool operator==(const Word& a, const Word& b) noexcept {
        return a.k_ == b.k_ && a.letters_ == b.letters_;
    }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
        if (auto c = a.letters_ <=> b.letters_; c != 0)
            return c;
        return a.k_ <=> b.k_;
    }

private:
    void check_k() const {
        if (k_ == 0 || k_ > 256)
            throw error(errc::invalid_argument, "alphabet size must be in 1..256");
    }

    std::vector<letter> letters_;
    unsigned k_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

/// base^exponent, the exponent kept exact.
struct PowerSpec {
    Word base;
    Rational exponent;
};

/// A factor w[start, start+length) with period `period`; exponent length/period.
struct Occurrence {
    std::size_t start = 0;
    std::size_t period = 0;
    std::size_t length = 0;

    Rational exponent() const {
        return Rational(static_cast<std::int64_t>(length), static_cast<std::int64_t>(period));
    }
    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Prefix of length exponent*|base| of base repeated forever.
inline Word power(const PowerSpec& spec) {
    if (spec.base.empty())
        throw error(errc::empty_base, "power of the empty word");
    if (spec.exponent < Rational(1))
        throw error(errc::invalid_argument, "exponent must be >= 1, got " + spec.exponent.str());
    const Rational len = spec.exponent * Rational(static_cast<std::int64_t>(spec.base.size()));
    if (!len.is_integer())
        throw error(errc::non_integral_length, spec.exponent.str() + " * " + std::to_string(spec.base.size()) +
                                                   " is not an integer");
    std::vector<letter> out(static_cast<std::size_t>(len.num()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = spec.base[i % spec.base.size()];
    return Word(std::move(out), spec.base.k());
}

inline Word power(const Word& base, const Rational& exponent) { return power(PowerSpec{base, exponent}); }

namespace detail {

/// Length of the longest run starting at `start` with period `period`
/// (so the factor w[start, start+result) has period `period`).
inline std::size_t periodic_run(std::span<const letter> w, std::size_t start, std::size_t period) {
    std::size_t j = start + period;
    while (j < w.size() && w[j] == w[j - period])
        ++j;
    return std::min(j, w.size()) - start;
}

} // namespace detail

/// Leftmost, then shortest-period, square xx (x nonempty) in w.
inline std::optional<Occurrence> contains_square(const Word& w) {
    const auto s = w.letters();
    for (std::size_t start = 0; start < s.size(); ++start)
        for (std::size_t v = 1; start + 2 * v <= s.size(); ++v)
            if (std::equal(s.begin() + static_cast<std::ptrdiff_t>(start),
                           s.begin() + static_cast<std::ptrdiff_t>(start + v),
                           s.begin() + static_cast<std::ptrdiff_t>(start + v)))
                return Occurrence{start, v, 2 * v};
    return std::nullopt;
}

inline bool is_squarefree(const Word& w) { return !contains_square(w).has_value(); }

/// True iff w = xx for some nonempty x.
inline bool is_square(const Word& w) {
    const std::size_t n = w.size();
    if (n == 0 || n % 2 != 0)
        return false;
    const auto s = w.letters();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n / 2),
                      s.begin() + static_cast<std::ptrdiff_t>(n / 2));
}

/// Leftmost, then shortest-period, factor whose exponent (length/period) is
/// at least alpha. The reported length is the maximal periodic window.
inline std::optional<Occurrence> contains_alpha_power(const Word& w, const Rational& alpha) {
    if (alpha < Rational(1))
        throw error(errc::invalid_argument, "alpha must be >= 1, got " + alpha.str());
    const auto s = w.letters();
    for (std::size_t start = 0; start < s.size(); ++start)
        for (std::size_t v = 1; start + v <= s.size(); ++v) {
            const std::size_t run = detail::periodic_run(s, start, v);
            // run / v >= alpha.num / alpha.den
            if (static_cast<std::int64_t>(run) * alpha.den() >= alpha.num() * static_cast<std::int64_t>(v))
                return Occurrence{start, v, run};
        }
    return std::nullopt;
}

/// A factor of exponent > 2 exists iff some factor has the form u u u[0].
inline bool is_overlap_free(const Word& w) {
    const auto s = w.letters();
    for (std::size_t start = 0; start < s.size(); ++start)
        for (std::size_t v = 1; start + 2 * v + 1 <= s.size(); ++v)
            if (detail::periodic_run(s, start, v) >= 2 * v + 1)
                return false;
    return true;
}

/// Perfect shuffle x1 y1 x2 y2 ... of two equal-length words.
inline Word shuffle(const Word& x, const Word& y) {
    if (x.size() != y.size())
        throw error(errc::length_mismatch,
                    "shuffle of lengths " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
    std::vector<letter> out;
    out.reserve(2 * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(x[i]);
        out.push_back(y[i]);
    }
    return Word(std::move(out), std::max(x.k(), y.k()));
}

/// A morphism [source_k]* -> [target_k]*, fixed by the image of each letter.
class Morphism {
public:
    Morphism(std::vector<Word> images, unsigned target_k) : images_(std::move(images)), target_k_(target_k) {
        if (images_.empty())
            throw error(errc::invalid_argument, "morphism needs at least one source letter");
        for (auto& img : images_) {
            if (img.k() > target_k_)
                throw error(errc::alphabet_mismatch, "morphism image " + img.str() + " exceeds target alphabet");
            img = img.with_alphabet(target_k_);
        }
    }

    unsigned source_k() const noexcept { return static_cast<unsigned>(images_.size()); }
    unsigned target_k() const noexcept { return target_k_; }
    const Word& image(letter a) const { return images_.at(a); }

    Word operator()(const Word& w) const {
        std::vector<letter> out;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] >= source_k())
                throw error(errc::letter_out_of_range, "letter " + std::to_string(w[i]) + " at position " +
                                                           std::to_string(i) + " has no image");
            const auto img = images_[w[i]].letters();
            out.insert(out.end(), img.begin(), img.end());
        }
        return Word(std::move(out), target_k_);
    }

private:
    std::vector<Word> images_;
    unsigned target_k_;
};

inline Word apply_morphism(const Morphism& m, const Word& w) { return m(w); }

/// Brandenburg's squarefree-preserving morphism from [6]* to [3]*.
inline const Morphism& brandenburg() {
    static const Morphism h(
        {
            Word::parse("0102012021012102010212", 3),
            Word::parse("0102012021201210120212", 3),
            Word::parse("0102012101202101210212", 3),
            Word::parse("0102012101202120121012", 3),
            Word::parse("0102012102010210120212", 3),
            Word::parse("0102012102120210120212", 3),
        },
        3);
    return h;
}

/// Lexicographic backtracking enumeration of the squarefree words of
/// length n over [k]. Call next() until it returns nullopt.
class SquarefreeEnumerator {
public:
    SquarefreeEnumerator(unsigned k, std::size_t n) : k_(k), n_(n) {
        if (k == 0)
            throw error(errc::invalid_argument, "alphabet size must be positive");
    }

    std::optional<Word> next() {
        if (done_)
            return std::nullopt;
        if (!started_) {
            started_ = true;
            if (n_ == 0) {
                done_ = true;
                return Word(k_);
            }
            cur_.push_back(0);
            if (!settle())
                return std::nullopt;
            return Word(cur_, k_);
        }
        if (!advance())
            return std::nullopt;
        return Word(cur_, k_);
    }

private:
    // True iff cur_ has no square ending at its last letter.
    bool suffix_ok() const {
        const std::size_t len = cur_.size();
        for (std::size_t v = 1; 2 * v <= len; ++v)
            if (std::equal(cur_.end() - static_cast<std::ptrdiff_t>(2 * v), cur_.end() - static_cast<std::ptrdiff_t>(v),
                           cur_.end() - static_cast<std::ptrdiff_t>(v)))
                return false;
        return true;
    }

    // Bumps the last letter, popping exhausted positions. False when done.
    bool bump() {
        while (!cur_.empty()) {
            if (cur_.back() + 1u < k_) {
                ++cur_.back();
                return true;
            }
            cur_.pop_back();
        }
        done_ = true;
        return false;
    }

    // From a candidate prefix, moves forward to the next full-length squarefree word.
    bool settle() {
        for (;;) {
            if (!suffix_ok()) {
                if (!bump())
                    return false;
                continue;
            }
            if (cur_.size() == n_)
                return true;
            cur_.push_back(0);
        }
    }

    bool advance() { return bump() && settle(); }

    unsigned k_;
    std::size_t n_;
    std::vector<letter> cur_;
    bool started_ = false;
    bool done_ = false;
};

inline std::vector<Word> enumerate_squarefree(unsigned k, std::size_t n) {
    std::vector<Word> out;
    SquarefreeEnumerator gen(k, n);
    while (auto w = gen.next())
        out.push_back(std::move(*w));
    return out;
}

namespace detail {

inline void check_an_parameters(const Word& r, std::size_t n) {
    if (n == 0 || n % 8 != 0)
        throw error(errc::bad_length, "n must be a positive multiple of 8, got " + std::to_string(n));
    if (r.size() != n / 4)
        throw error(errc::bad_length, "|r| must be n/4 = " + std::to_string(n / 4) + ", got " +
                                          std::to_string(r.size()));
    if (r[0] != 3)
        throw error(errc::bad_prefix, "r must start with letter 3");
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] > 2)
            throw error(errc::bad_prefix, "r after its first letter must be ternary");
    if (!is_squarefree(r.substr(1, r.size() - 1).with_alphabet(std::max(3u, r.k()))))
        throw error(errc::bad_prefix, "r after its first letter must be squarefree");
}

} // namespace detail

/// The set {shuffle(rr, s) : s in {4,5}^(n/2)} over [6], in lexicographic order.
inline std::vector<Word> gen_An(const Word& r, std::size_t n) {
    detail::check_an_parameters(r, n);
    const Word rr = (r + r).with_alphabet(6);
    const std::size_t half = n / 2;
    std::vector<Word> out;
    out.reserve(std::size_t{1} << half);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << half); ++bits) {
        std::vector<letter> s(half);
        for (std::size_t i = 0; i < half; ++i)
            s[i] = static_cast<letter>(4 + ((bits >> (half - 1 - i)) & 1u));
        out.push_back(shuffle(rr, Word(std::move(s), 6)));
    }
    return out;
}

/// Membership in the shuffle set: even offsets spell rr, odd offsets are 4 or 5.
inline bool is_in_An(const Word& r, const Word& z) {
    const std::size_t n = 4 * r.size();
    if (z.size() != n)
        return false;
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (z[2 * i] != r[i % r.size()])
            return false;
        if (z[2 * i + 1] != 4 && z[2 * i + 1] != 5)
            return false;
    }
    return true;
}

/// Membership in B_n = A_n intersected with the square words.
inline bool is_in_Bn(const Word& r, const Word& z) { return is_in_An(r, z) && is_square(z); }

} // namespace acx
