#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "acx/complexity.hpp"
#include "acx/error.hpp"
#include "acx/rational.hpp"
#include "acx/word.hpp"

namespace acx {

/// Letters prescribed at strictly increasing positions of a length-n word.
struct PositionConstraint {
    std::size_t n = 0;
    std::vector<std::size_t> positions;
    std::vector<letter> bits;
    unsigned k = 2;

    void validate() const {
        if (positions.size() != bits.size())
            throw error(errc::length_mismatch, std::to_string(positions.size()) + " positions but " +
                                                   std::to_string(bits.size()) + " bits");
        for (std::size_t i = 0; i < positions.size(); ++i) {
            if (positions[i] >= n)
                throw error(errc::invalid_argument, "position " + std::to_string(positions[i]) + " >= n = " +
                                                        std::to_string(n));
            if (i > 0 && positions[i] <= positions[i - 1])
                throw error(errc::invalid_argument, "positions must be strictly increasing");
            if (bits[i] >= k)
                throw error(errc::letter_out_of_range, "bit " + std::to_string(bits[i]) + " outside alphabet");
        }
    }
};

struct ModularWitness {
    std::size_t m = 0;
    /// One cell per residue; nullopt marks an unconstrained cell.
    std::vector<std::optional<letter>> z_template;
    Word x;
    std::size_t bound = 0;

    /// Template with '?' for unconstrained cells.
    std::string template_str() const {
        std::string out;
        for (const auto& cell : z_template)
            out += cell ? std::to_string(*cell) : "?";
        return out;
    }
};

struct Modulus {
    std::size_t smallest_integer = 1;
    std::size_t smallest_prime = 2;
};

inline bool is_prime(std::uint64_t m) {
    if (m < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0)
            return false;
    return true;
}

inline std::vector<std::size_t> residues(const std::vector<std::size_t>& positions, std::size_t m) {
    if (m == 0)
        throw error(errc::invalid_argument, "modulus must be positive");
    std::vector<std::size_t> out;
    out.reserve(positions.size());
    for (auto a : positions)
        out.push_back(a % m);
    return out;
}

namespace detail {

inline bool residues_distinct(const std::vector<std::size_t>& positions, std::size_t m) {
    std::vector<char> seen(m, 0);
    for (auto a : positions) {
        if (seen[a % m])
            return false;
        seen[a % m] = 1;
    }
    return true;
}

// Colliding positions are tolerated when they prescribe the same letter.
inline bool residues_consistent(const std::vector<std::size_t>& positions, const std::vector<letter>& bits,
                                std::size_t m) {
    std::vector<int> cell(m, -1);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        int& c = cell[positions[i] % m];
        if (c >= 0 && c != bits[i])
            return false;
        c = bits[i];
    }
    return true;
}

} // namespace detail

/// Least modulus (and least prime modulus) separating all positions.
inline Modulus find_modulus(const std::vector<std::size_t>& positions) {
    for (std::size_t i = 1; i < positions.size(); ++i)
        if (positions[i] <= positions[i - 1])
            throw error(errc::invalid_argument, "positions must be strictly increasing");
    Modulus out;
    std::size_t m = 1;
    while (!detail::residues_distinct(positions, m))
        ++m;
    out.smallest_integer = m;
    std::size_t p = 2;
    while (!detail::residues_distinct(positions, p)) {
        ++p;
        while (!is_prime(p))
            ++p;
    }
    out.smallest_prime = p;
    return out;
}

enum class ModulusMode { smallest_integer, smallest_prime };

struct ConstructOptions {
    ModulusMode mode = ModulusMode::smallest_integer;
    /// Accept a modulus whose colliding positions demand the same letter.
    bool allow_consistent_collisions = false;
    /// Letter written into unconstrained cells of the concrete word.
    letter fill = 0;
};

/// Low-complexity word agreeing with the constraint: the constrained letters
/// are copied into a template of length m by residue, and the template is
/// repeated to length n.
inline ModularWitness build_low_complexity_word(const PositionConstraint& constraint,
                                                const ConstructOptions& opts = {}) {
    constraint.validate();
    if (constraint.n == 0)
        throw error(errc::invalid_argument, "n must be positive");
    if (opts.fill >= constraint.k)
        throw error(errc::letter_out_of_range, "fill letter outside alphabet");
    const auto& pos = constraint.positions;
    auto acceptable = [&](std::size_t m) {
        return opts.allow_consistent_collisions ? detail::residues_consistent(pos, constraint.bits, m)
                                                : detail::residues_distinct(pos, m);
    };
    std::size_t m = opts.mode == ModulusMode::smallest_prime ? 2 : 1;
    while (!acceptable(m)) {
        ++m;
        if (opts.mode == ModulusMode::smallest_prime)
            while (!is_prime(m))
                ++m;
    }
    ModularWitness out;
    out.m = m;
    out.z_template.assign(m, std::nullopt);
    for (std::size_t i = 0; i < pos.size(); ++i) {
        auto& cell = out.z_template[pos[i] % m];
        if (cell && *cell != constraint.bits[i])
            throw error(errc::inconsistent, "positions sharing residue " + std::to_string(pos[i] % m) +
                                                " demand different letters");
        cell = constraint.bits[i];
    }
    std::vector<letter> z(m);
    for (std::size_t r = 0; r < m; ++r)
        z[r] = out.z_template[r].value_or(opts.fill);
    const Word zw(std::move(z), constraint.k);
    if (constraint.n >= m) {
        out.x = power(zw, Rational(static_cast<std::int64_t>(constraint.n), static_cast<std::int64_t>(m)));
        out.bound = m;
    } else {
        // n < m: the template is longer than the word; the cycle on x itself suffices.
        out.x = zw.substr(0, constraint.n);
        out.bound = constraint.n;
    }
    return out;
}

inline nlohmann::ordered_json to_json_value(const ModularWitness& w) {
    nlohmann::ordered_json doc;
    doc["m"] = w.m;
    doc["z_template"] = w.template_str();
    doc["x"] = w.x.str();
    doc["bound"] = w.bound;
    return doc;
}

/// C(c,2) * ln(n); reported only.
inline double theoretical_bound(std::size_t c, double n) {
    const double pairs = static_cast<double>(c) * static_cast<double>(c - 1) / 2.0;
    return pairs * std::log(n);
}

struct GapCheck {
    double average = 0;
    double bound = 0;
    bool ok = false;
};

/// Average of the pairwise gaps a_j - a_i (i < j) against c/(2(c-1)) * (a_c - a_1).
inline GapCheck avg_gap_check(const std::vector<double>& values) {
    const std::size_t c = values.size();
    if (c < 2)
        throw error(errc::invalid_argument, "need at least two values");
    for (std::size_t i = 1; i < c; ++i)
        if (!(values[i] > values[i - 1]))
            throw error(errc::invalid_argument, "values must be strictly increasing");
    double sum = 0;
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j)
            sum += values[j] - values[i];
    GapCheck out;
    out.average = sum / (static_cast<double>(c) * static_cast<double>(c - 1) / 2.0);
    out.bound = static_cast<double>(c) / (2.0 * static_cast<double>(c - 1)) * (values.back() - values.front());
    // Equality cases (c = 2) must not fail on rounding.
    out.ok = out.average <= out.bound * (1 + 1e-12) + 1e-12;
    return out;
}

using BigInt = boost::multiprecision::cpp_int;

/// Primes <= limit by the sieve of Eratosthenes.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2)
        return out;
    std::vector<char> composite(limit + 1, 0);
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p])
            continue;
        out.push_back(p);
        for (std::uint64_t j = p * p; j <= limit; j += p)
            composite[j] = 1;
    }
    return out;
}

/// x#: product of the primes <= x.
inline BigInt primorial(std::uint64_t x) {
    BigInt out = 1;
    for (auto p : primes_up_to(x))
        out *= p;
    return out;
}

/// First Chebyshev function: sum of ln p over primes p <= x.
inline double chebyshev_theta(std::uint64_t x) {
    double sum = 0;
    for (auto p : primes_up_to(x))
        sum += std::log(static_cast<double>(p));
    return sum;
}

/// x (1 - 1/ln x) < theta(x).
inline bool rosser_check(std::uint64_t x) {
    if (x < 41)
        throw error(errc::invalid_argument, "the inequality is only claimed for x >= 41");
    const double lx = std::log(static_cast<double>(x));
    return static_cast<double>(x) * (1.0 - 1.0 / lx) < chebyshev_theta(x);
}

struct RosserSweep {
    std::uint64_t checked = 0;
    std::optional<std::uint64_t> first_failure;
    double min_margin = 0; // min of theta(x) - x(1 - 1/ln x)
};

/// rosser_check for every integer in [from, to], sharing one sieve.
inline RosserSweep rosser_sweep(std::uint64_t from, std::uint64_t to) {
    if (from < 41)
        throw error(errc::invalid_argument, "the inequality is only claimed for x >= 41");
    RosserSweep out;
    out.min_margin = std::numeric_limits<double>::infinity();
    const auto primes = primes_up_to(to);
    std::size_t next = 0;
    double theta = 0;
    for (std::uint64_t x = 2; x <= to; ++x) {
        while (next < primes.size() && primes[next] <= x)
            theta += std::log(static_cast<double>(primes[next++]));
        if (x < from)
            continue;
        ++out.checked;
        const double xd = static_cast<double>(x);
        const double margin = theta - xd * (1.0 - 1.0 / std::log(xd));
        out.min_margin = std::min(out.min_margin, margin);
        if (!(margin > 0) && !out.first_failure)
            out.first_failure = x;
    }
    return out;
}

/// Rows c = 0..c_max, columns n = 0..n_max; nullopt where c > n.
using BoundTable = std::vector<std::vector<std::optional<std::size_t>>>;

/// f(c, n) = max over position sets of size c in [0, n) and prescribed bits
/// of the least A_N over binary words of length n honouring them.
inline BoundTable table_best_bound(std::size_t c_max, std::size_t n_max, unsigned jobs = 1) {
    if (n_max > 20)
        throw error(errc::invalid_argument, "table is exhaustive over 2^n words; n_max must be <= 20");
    BoundTable table(c_max + 1, std::vector<std::optional<std::size_t>>(n_max + 1));
    SearchOptions opts;
    opts.jobs = jobs;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const std::size_t words = std::size_t{1} << n;
        // Word bit i (from the most significant end) is position i.
        std::vector<std::size_t> an(words);
        for (std::size_t w = 0; w < words; ++w) {
            std::vector<letter> l(n);
            for (std::size_t i = 0; i < n; ++i)
                l[i] = static_cast<letter>((w >> (n - 1 - i)) & 1u);
            an[w] = an_exact(Word(std::move(l), 2), opts).value;
        }
        for (std::size_t c = 0; c <= std::min(c_max, n); ++c) {
            std::size_t worst = 0;
            // Position sets as n-bit masks with c bits set (bit n-1-i for position i).
            for (std::size_t pmask = 0; pmask < words; ++pmask) {
                if (static_cast<std::size_t>(std::popcount(pmask)) != c)
                    continue;
                // Each assignment of the constrained bits is a submask of pmask.
                for (std::size_t bits = pmask;; bits = (bits - 1) & pmask) {
                    std::size_t best = std::numeric_limits<std::size_t>::max();
                    for (std::size_t w = 0; w < words; ++w)
                        if ((w & pmask) == bits)
                            best = std::min(best, an[w]);
                    worst = std::max(worst, best);
                    if (bits == 0)
                        break;
                }
            }
            table[c][n] = worst;
        }
    }
    return table;
}

/// Aligned layout: header row "c\n 0 1 ...", '-' where c > n.
inline std::string format_table(const BoundTable& t) {
    std::string out = "c\\n";
    const std::size_t cols = t.empty() ? 0 : t[0].size();
    for (std::size_t n = 0; n < cols; ++n)
        out += " " + std::to_string(n);
    out += "\n";
    for (std::size_t c = 0; c < t.size(); ++c) {
        std::string row = std::to_string(c);
        row.resize(3, ' ');
        out += row;
        for (std::size_t n = 0; n < cols; ++n)
            out += " " + (t[c][n] ? std::to_string(*t[c][n]) : std::string("-"));
        out += "\n";
    }
    return out;
}

inline std::string format_table_csv(const BoundTable& t) {
    std::string out = "c";
    const std::size_t cols = t.empty() ? 0 : t[0].size();
    for (std::size_t n = 0; n < cols; ++n)
        out += "," + std::to_string(n);
    out += "\n";
    for (std::size_t c = 0; c < t.size(); ++c) {
        out += std::to_string(c);
        for (std::size_t n = 0; n < cols; ++n)
            out += "," + (t[c][n] ? std::to_string(*t[c][n]) : std::string("-"));
        out += "\n";
    }
    return out;
}

} // namespace acx
