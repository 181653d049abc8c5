#pragma once

// Brute-force reference for A_N: every transition relation on q states and
// every final-state set is tried. It shares no code with the path search and
// exists to cross-check it on tiny instances.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acx/error.hpp"
#include "acx/nfa.hpp"
#include "acx/word.hpp"

namespace acx::oracle {

/// Largest relation size (q*k*q bits) the oracle will enumerate.
inline constexpr std::size_t max_relation_bits = 24;

struct Found {
    std::size_t q = 0;
    std::vector<Transition> transitions;
    std::vector<state> finals;
    std::uint64_t candidates_tried = 0;
};

namespace detail {

struct Relation {
    std::size_t q;
    unsigned k;
    std::vector<Transition> edges;
};

inline Relation decode(std::uint64_t bits, std::size_t q, unsigned k) {
    Relation r{q, k, {}};
    std::size_t bit = 0;
    for (std::size_t p = 0; p < q; ++p)
        for (unsigned a = 0; a < k; ++a)
            for (std::size_t t = 0; t < q; ++t, ++bit)
                if ((bits >> bit) & 1u)
                    r.edges.push_back({static_cast<state>(p), static_cast<letter>(a), static_cast<state>(t)});
    return r;
}

// counts[len][s] = number of walks of length len from 0 to s, clamped at 2.
inline std::vector<std::vector<std::uint32_t>> walk_counts(const Relation& r, std::size_t n_max) {
    std::vector<std::vector<std::uint32_t>> counts(n_max + 1, std::vector<std::uint32_t>(r.q, 0));
    counts[0][0] = 1;
    for (std::size_t len = 1; len <= n_max; ++len)
        for (const auto& e : r.edges)
            counts[len][e.to] = std::min<std::uint32_t>(2, counts[len][e.to] + counts[len - 1][e.from]);
    return counts;
}

// Labels of the unique walk of length len ending at `end`.
inline std::vector<letter> trace(const Relation& r, const std::vector<std::vector<std::uint32_t>>& counts,
                                 std::size_t len, state end) {
    std::vector<letter> labels(len);
    state cur = end;
    for (std::size_t step = len; step > 0; --step) {
        for (const auto& e : r.edges)
            if (e.to == cur && counts[step - 1][e.from] > 0) {
                labels[step - 1] = e.label;
                cur = e.from;
                break;
            }
    }
    return labels;
}

inline void check_feasible(std::size_t q, unsigned k) {
    if (q * k * q > max_relation_bits)
        throw error(errc::invalid_argument, "full enumeration over " + std::to_string(q) + " states and " +
                                                std::to_string(k) + " letters is infeasible");
}

} // namespace detail

/// Least q <= q_max admitting an NFA that uniquely accepts w, or nullopt.
inline std::optional<Found> minimum_states(const Word& w, std::size_t q_max) {
    const std::size_t n = w.size();
    const unsigned k = w.k();
    std::uint64_t tried = 0;
    for (std::size_t q = 1; q <= q_max; ++q) {
        detail::check_feasible(q, k);
        const std::uint64_t relations = std::uint64_t{1} << (q * k * q);
        for (std::uint64_t bits = 0; bits < relations; ++bits) {
            const auto rel = detail::decode(bits, q, k);
            const auto counts = detail::walk_counts(rel, n);
            for (std::uint64_t fmask = 1; fmask < (std::uint64_t{1} << q); ++fmask) {
                ++tried;
                std::uint32_t total = 0;
                state end = 0;
                for (std::size_t f = 0; f < q; ++f)
                    if ((fmask >> f) & 1u && counts[n][f] > 0) {
                        total += counts[n][f];
                        end = static_cast<state>(f);
                    }
                if (total != 1)
                    continue;
                const auto labels = detail::trace(rel, counts, n, end);
                if (!std::equal(labels.begin(), labels.end(), w.begin()))
                    continue;
                Found out{q, rel.edges, {}, tried};
                for (std::size_t f = 0; f < q; ++f)
                    if ((fmask >> f) & 1u)
                        out.finals.push_back(static_cast<state>(f));
                return out;
            }
        }
    }
    return std::nullopt;
}

inline Nfa to_nfa(const Found& f, unsigned k) { return Nfa(f.q, k, f.transitions, f.finals); }

/// For every word over [k] of length <= n_max that some NFA with at most
/// q_max states uniquely accepts, the least such state count. Words absent
/// from the map need more than q_max states.
inline std::map<Word, std::size_t> minimum_states_all(unsigned k, std::size_t n_max, std::size_t q_max) {
    std::map<Word, std::size_t> best;
    for (std::size_t q = 1; q <= q_max; ++q) {
        detail::check_feasible(q, k);
        const std::uint64_t relations = std::uint64_t{1} << (q * k * q);
        for (std::uint64_t bits = 0; bits < relations; ++bits) {
            const auto rel = detail::decode(bits, q, k);
            const auto counts = detail::walk_counts(rel, n_max);
            for (std::uint64_t fmask = 1; fmask < (std::uint64_t{1} << q); ++fmask)
                for (std::size_t len = 0; len <= n_max; ++len) {
                    std::uint32_t total = 0;
                    state end = 0;
                    for (std::size_t f = 0; f < q; ++f)
                        if ((fmask >> f) & 1u && counts[len][f] > 0) {
                            total += counts[len][f];
                            end = static_cast<state>(f);
                        }
                    if (total != 1)
                        continue;
                    Word w(detail::trace(rel, counts, len, end), k);
                    best.try_emplace(std::move(w), q);
                }
        }
    }
    return best;
}

} // namespace acx::oracle
