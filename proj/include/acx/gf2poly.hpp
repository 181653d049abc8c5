#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acx/error.hpp"

namespace acx {

/// Multilinear polynomial over GF(2) in variables x_1..x_n. A monomial is a
/// bitmask (bit i-1 for x_i, 0 for the constant 1); the polynomial is the
/// XOR of its monomials, kept sorted and duplicate-free.
class MultilinearPoly {
public:
    using monomial = std::uint64_t;
    static constexpr std::size_t max_vars = 64;

    explicit MultilinearPoly(std::size_t n = 0) : n_(n) { check_n(); }

    /// Monomials may repeat; pairs cancel.
    MultilinearPoly(std::size_t n, std::vector<monomial> monomials) : n_(n), monos_(std::move(monomials)) {
        check_n();
        for (auto m : monos_)
            if (n_ < 64 && (m >> n_) != 0)
                throw error(errc::invalid_argument, "monomial uses a variable beyond x" + std::to_string(n_));
        normalize();
    }

    static MultilinearPoly constant(std::size_t n, bool one) {
        return one ? MultilinearPoly(n, {monomial{0}}) : MultilinearPoly(n);
    }

    /// x_i, 1-based.
    static MultilinearPoly variable(std::size_t n, std::size_t i) {
        if (i == 0 || i > n)
            throw error(errc::invalid_argument, "variable index out of range");
        return MultilinearPoly(n, {monomial{1} << (i - 1)});
    }

    std::size_t arity() const noexcept { return n_; }
    const std::vector<monomial>& monomials() const noexcept { return monos_; }
    bool is_zero() const noexcept { return monos_.empty(); }

    /// Largest monomial size; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (monos_.empty())
            return std::nullopt;
        int best = 0;
        for (auto m : monos_)
            best = std::max(best, std::popcount(m));
        return static_cast<std::size_t>(best);
    }

    bool eval(std::span<const std::uint8_t> assignment) const {
        if (assignment.size() != n_)
            throw error(errc::arity_mismatch, "assignment of length " + std::to_string(assignment.size()) +
                                                  " for " + std::to_string(n_) + " variables");
        monomial ones = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (assignment[i])
                ones |= monomial{1} << i;
        return eval_mask(ones);
    }

    /// Evaluation at the point whose true variables are the bits of `ones`.
    bool eval_mask(monomial ones) const noexcept {
        bool acc = false;
        for (auto m : monos_)
            acc ^= (m & ~ones) == 0;
        return acc;
    }

    friend MultilinearPoly operator+(const MultilinearPoly& p, const MultilinearPoly& q) {
        check_same(p, q);
        std::vector<monomial> out;
        out.reserve(p.monos_.size() + q.monos_.size());
        std::set_symmetric_difference(p.monos_.begin(), p.monos_.end(), q.monos_.begin(), q.monos_.end(),
                                      std::back_inserter(out));
        MultilinearPoly r(p.n_);
        r.monos_ = std::move(out);
        return r;
    }

    /// Product with x_i^2 = x_i.
    friend MultilinearPoly operator*(const MultilinearPoly& p, const MultilinearPoly& q) {
        check_same(p, q);
        std::vector<monomial> out;
        out.reserve(p.monos_.size() * q.monos_.size());
        for (auto a : p.monos_)
            for (auto b : q.monos_)
                out.push_back(a | b);
        return MultilinearPoly(p.n_, std::move(out));
    }

    friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

    /// Sorted form: larger monomials first, ties by variable order, e.g.
    /// "xy+x+y". Up to three variables print as x, y, z; beyond that x1, x2, ...
    std::string str() const {
        if (monos_.empty())
            return "0";
        std::vector<monomial> order(monos_);
        std::sort(order.begin(), order.end(), [](monomial a, monomial b) {
            const int da = std::popcount(a), db = std::popcount(b);
            if (da != db)
                return da > db;
            // Lexicographic on the ascending index lists.
            while (a && b) {
                const int ia = std::countr_zero(a), ib = std::countr_zero(b);
                if (ia != ib)
                    return ia < ib;
                a &= a - 1;
                b &= b - 1;
            }
            return false;
        });
        std::string out;
        for (std::size_t j = 0; j < order.size(); ++j) {
            if (j)
                out += "+";
            if (order[j] == 0) {
                out += "1";
                continue;
            }
            for (std::size_t i = 0; i < n_; ++i)
                if ((order[j] >> i) & 1u)
                    out += var_name(i);
        }
        return out;
    }

    /// Accepts the printed grammar: terms joined by '+', each term "0", "1"
    /// or a product of x, y, z, x<index>.
    static MultilinearPoly parse(std::string_view text, std::size_t n) {
        std::vector<monomial> monos;
        std::size_t pos = 0;
        auto fail = [&](const std::string& what) -> void {
            throw error(errc::parse_error, "at offset " + std::to_string(pos) + ": " + what);
        };
        auto skip_space = [&] {
            while (pos < text.size() && text[pos] == ' ')
                ++pos;
        };
        for (;;) {
            skip_space();
            if (pos >= text.size())
                fail("expected a term");
            monomial m = 0;
            bool constant_zero = false;
            if (text[pos] == '0' || text[pos] == '1') {
                constant_zero = text[pos] == '0';
                ++pos;
            } else {
                bool any = false;
                while (pos < text.size() && (text[pos] == 'x' || text[pos] == 'y' || text[pos] == 'z')) {
                    std::size_t index = 0;
                    const char ch = text[pos++];
                    if (ch == 'x' && pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
                            index = index * 10 + static_cast<std::size_t>(text[pos++] - '0');
                    } else {
                        index = ch == 'x' ? 1 : ch == 'y' ? 2 : 3;
                    }
                    if (index == 0 || index > n)
                        fail("variable index " + std::to_string(index) + " outside 1.." + std::to_string(n));
                    m |= monomial{1} << (index - 1);
                    any = true;
                }
                if (!any)
                    fail("unexpected character");
            }
            if (!constant_zero)
                monos.push_back(m);
            skip_space();
            if (pos == text.size())
                break;
            if (text[pos] != '+')
                fail("expected '+'");
            ++pos;
        }
        return MultilinearPoly(n, std::move(monos));
    }

private:
    std::string var_name(std::size_t i) const {
        if (n_ <= 3)
            return std::string(1, "xyz"[i]);
        return "x" + std::to_string(i + 1);
    }

    void check_n() const {
        if (n_ > max_vars)
            throw error(errc::too_many_variables, "at most 64 variables");
    }

    static void check_same(const MultilinearPoly& p, const MultilinearPoly& q) {
        if (p.n_ != q.n_)
            throw error(errc::arity_mismatch, std::to_string(p.n_) + " vs " + std::to_string(q.n_) + " variables");
    }

    void normalize() {
        std::sort(monos_.begin(), monos_.end());
        std::vector<monomial> out;
        out.reserve(monos_.size());
        for (std::size_t i = 0; i < monos_.size();) {
            std::size_t j = i;
            while (j < monos_.size() && monos_[j] == monos_[i])
                ++j;
            if ((j - i) % 2 == 1)
                out.push_back(monos_[i]);
            i = j;
        }
        monos_ = std::move(out);
    }

    std::size_t n_;
    std::vector<monomial> monos_;
};

/// Largest arity for which dense constructions and exhaustive sweeps run.
inline constexpr std::size_t dense_limit = 20;

inline std::optional<std::size_t> degree(const MultilinearPoly& p) { return p.degree(); }

/// x_1 v ... v x_n = 1 + prod(1 + x_i): every nonempty monomial.
inline MultilinearPoly or_poly(std::size_t n) {
    if (n == 0)
        throw error(errc::invalid_argument, "n must be >= 1");
    if (n > dense_limit)
        throw error(errc::too_many_variables, "or_poly has 2^n - 1 monomials; use or_poly_monomial_count");
    std::vector<MultilinearPoly::monomial> monos;
    monos.reserve((std::size_t{1} << n) - 1);
    for (MultilinearPoly::monomial m = 1; m < (MultilinearPoly::monomial{1} << n); ++m)
        monos.push_back(m);
    return MultilinearPoly(n, std::move(monos));
}

/// Monomial count and degree of or_poly(n), without building it.
inline std::uint64_t or_poly_monomial_count(std::size_t n) { return (std::uint64_t{1} << n) - 1; }
constexpr std::size_t or_poly_degree(std::size_t n) noexcept { return n; }

/// Indicator of {0^n, 1^n}: prod x_i + prod (x_i + 1), expanded.
inline MultilinearPoly an1_poly(std::size_t n) {
    if (n == 0)
        throw error(errc::invalid_argument, "n must be >= 1");
    if (n > dense_limit)
        throw error(errc::too_many_variables, "an1_poly has 2^n - 1 monomials; use an1_poly_degree");
    MultilinearPoly all_ones = MultilinearPoly::constant(n, true);
    MultilinearPoly all_zeros = MultilinearPoly::constant(n, true);
    const auto one = MultilinearPoly::constant(n, true);
    for (std::size_t i = 1; i <= n; ++i) {
        const auto xi = MultilinearPoly::variable(n, i);
        all_ones = all_ones * xi;
        all_zeros = all_zeros * (xi + one);
    }
    return all_ones + all_zeros;
}

constexpr std::size_t an1_poly_degree(std::size_t n) noexcept { return n - 1; }

/// Truth table indexed by assignment mask (bit i-1 holds x_i).
inline std::vector<std::uint8_t> truth_table(const MultilinearPoly& p) {
    const std::size_t n = p.arity();
    if (n > dense_limit)
        throw error(errc::too_many_variables, "truth table needs 2^" + std::to_string(n) + " entries");
    std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
    for (auto m : p.monomials())
        table[m] ^= 1u;
    // Zeta transform over the subset lattice.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t mask = 0; mask < table.size(); ++mask)
            if ((mask >> i) & 1u)
                table[mask] ^= table[mask ^ (std::size_t{1} << i)];
    return table;
}

/// Algebraic normal form by the Moebius transform.
inline MultilinearPoly anf_from_truth_table(std::span<const std::uint8_t> table) {
    const std::size_t size = table.size();
    if (size == 0 || (size & (size - 1)) != 0)
        throw error(errc::bad_length, "truth table length " + std::to_string(size) + " is not a power of two");
    const auto n = static_cast<std::size_t>(std::countr_zero(size));
    if (n > dense_limit)
        throw error(errc::too_many_variables, "truth table too large");
    std::vector<std::uint8_t> coeff(table.begin(), table.end());
    for (auto& c : coeff)
        c &= 1u;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t mask = 0; mask < size; ++mask)
            if ((mask >> i) & 1u)
                coeff[mask] ^= coeff[mask ^ (std::size_t{1} << i)];
    std::vector<MultilinearPoly::monomial> monos;
    for (std::size_t mask = 0; mask < size; ++mask)
        if (coeff[mask])
            monos.push_back(mask);
    return MultilinearPoly(n, std::move(monos));
}

/// Exhaustive check that p evaluates to 0 everywhere.
inline bool is_zero_function(const MultilinearPoly& p, std::size_t limit = dense_limit) {
    if (p.arity() > limit)
        throw error(errc::too_many_variables, std::to_string(p.arity()) + " variables exceed the limit " +
                                                  std::to_string(limit));
    const std::uint64_t points = std::uint64_t{1} << p.arity();
    for (std::uint64_t ones = 0; ones < points; ++ones)
        if (p.eval_mask(ones))
            return false;
    return true;
}

} // namespace acx
