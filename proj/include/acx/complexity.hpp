#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "acx/error.hpp"
#include "acx/nfa.hpp"
#include "acx/oracle.hpp"
#include "acx/rational.hpp"
#include "acx/word.hpp"

namespace acx {

enum class SearchMode { path_induced, full_enumeration };

inline const char* to_string(SearchMode m) noexcept {
    return m == SearchMode::path_induced ? "path-induced" : "full-enumeration";
}

struct SearchOptions {
    /// First state count tried; levels below it are assumed, not searched.
    std::size_t lower_hint = 1;
    /// Optional cap; it is an error if no witness exists at or below it.
    std::optional<std::size_t> upper_hint;
    /// Worker threads for the fan-out over the top of the path tree.
    unsigned jobs = 1;
    SearchMode mode = SearchMode::path_induced;
};

struct Certificate {
    std::size_t states_ruled_out = 0;
    std::uint64_t search_nodes = 0;
    SearchMode search_mode = SearchMode::path_induced;
    std::size_t lower_hint = 1;
};

struct ComplexityResult {
    std::size_t value = 0;
    Nfa witness;
    Certificate certificate;
    /// Canonical state sequence s_0 .. s_n of the witness path.
    std::vector<state> path;
};

/// floor(n/2) + 1
constexpr std::size_t hyde_bound(std::size_t n) noexcept { return n / 2 + 1; }

namespace detail {

/// Builds the NFA consisting of exactly the transitions used along `path`
/// with the endpoint as sole final state.
inline Nfa path_induced_nfa(std::span<const letter> w, unsigned k, std::size_t q, std::span<const state> path) {
    std::vector<Transition> transitions;
    transitions.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        transitions.push_back({path[i], w[i], path[i + 1]});
    return Nfa(q, k, std::move(transitions), {path.back()});
}

/// Depth-first enumeration of canonical state sequences over exactly q
/// states. A child is pruned as soon as the prefix endpoint is reached by
/// two or more walks of the prefix length: extending each by the rest of
/// the path would give two accepting walks, and adding transitions never
/// removes walks. Walk counts are saturating bitsets per layer (reached at
/// least once / at least twice).
class PathSearch {
public:
    static constexpr std::size_t max_states = 64;

    PathSearch(std::span<const letter> w, unsigned k, std::size_t q)
        : w_(w), n_(w.size()), k_(k), q_(q), mask_(q * k, 0), ref_(q * k * q, 0), seq_(n_ + 1, 0),
          ge1_(n_ + 1, 0), ge2_(n_ + 1, 0) {
        if (q == 0 || q > max_states)
            throw error(errc::invalid_argument, "state count must be in 1..64");
        ge1_[0] = 1;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    const std::vector<state>& sequence() const noexcept { return seq_; }

    /// Collects every surviving prefix s_0..s_depth (depth <= n).
    void collect(std::size_t depth, std::vector<std::vector<state>>& out) {
        reset();
        if (depth == 0 || n_ == 0) {
            out.push_back({0});
            return;
        }
        collect_depth_ = depth;
        collect_out_ = &out;
        dfs(1);
        collect_out_ = nullptr;
    }

    /// Replays a prefix produced by collect() and searches below it.
    /// On success sequence() holds the witness path.
    bool search_from(std::span<const state> prefix) {
        reset();
        for (std::size_t i = 1; i < prefix.size(); ++i) {
            const state t = prefix[i];
            add_edge(seq_[i - 1], w_[i - 1], t);
            if (t == used_)
                ++used_;
            seq_[i] = t;
        }
        valid_upto_ = 0;
        const std::size_t depth = prefix.size() - 1;
        if (depth == n_)
            return used_ == q_ && final_ok();
        return dfs(depth + 1);
    }

private:
    void reset() {
        std::fill(mask_.begin(), mask_.end(), 0);
        std::fill(ref_.begin(), ref_.end(), 0);
        std::fill(seq_.begin(), seq_.end(), 0);
        used_ = 1;
        valid_upto_ = 0;
        ge1_[0] = 1;
        ge2_[0] = 0;
    }

    bool final_ok() {
        ensure_layers(n_);
        return ((ge2_[n_] >> seq_[n_]) & 1u) == 0;
    }

    // Returns true if the transition is new.
    bool add_edge(state p, letter a, state t) {
        auto& r = ref_[(p * k_ + a) * q_ + t];
        if (r++ == 0) {
            mask_[p * k_ + a] |= std::uint64_t{1} << t;
            return true;
        }
        return false;
    }

    bool remove_edge(state p, letter a, state t) {
        auto& r = ref_[(p * k_ + a) * q_ + t];
        if (--r == 0) {
            mask_[p * k_ + a] &= ~(std::uint64_t{1} << t);
            return true;
        }
        return false;
    }

    // A change to transitions out of p only affects layers after the first
    // layer in which p is reachable.
    void invalidate(state p) {
        const std::uint64_t bit = std::uint64_t{1} << p;
        for (std::size_t j = 0; j <= valid_upto_; ++j)
            if (ge1_[j] & bit) {
                valid_upto_ = j;
                return;
            }
    }

    void ensure_layers(std::size_t upto) {
        for (std::size_t j = valid_upto_ + 1; j <= upto; ++j) {
            std::uint64_t reach = ge1_[j - 1];
            const std::uint64_t twice = ge2_[j - 1];
            std::uint64_t n1 = 0, n2 = 0;
            while (reach) {
                const unsigned p = static_cast<unsigned>(std::countr_zero(reach));
                reach &= reach - 1;
                const std::uint64_t* row = &mask_[p * k_];
                if ((twice >> p) & 1u) {
                    for (unsigned a = 0; a < k_; ++a) {
                        n2 |= row[a];
                        n1 |= row[a];
                    }
                } else {
                    for (unsigned a = 0; a < k_; ++a) {
                        n2 |= n1 & row[a];
                        n1 |= row[a];
                    }
                }
            }
            ge1_[j] = n1;
            ge2_[j] = n2;
        }
        if (upto > valid_upto_)
            valid_upto_ = upto;
    }

    bool dfs(std::size_t i) {
        const state p = seq_[i - 1];
        const letter a = w_[i - 1];
        const std::size_t top = std::min(used_, q_ - 1);
        for (std::size_t t = 0; t <= top; ++t) {
            const std::size_t used_after = used_ + (t == used_ ? 1 : 0);
            if (n_ - i < q_ - used_after)
                continue;
            ++nodes_;
            const state ts = static_cast<state>(t);
            if (add_edge(p, a, ts))
                invalidate(p);
            const std::size_t saved_used = used_;
            used_ = used_after;
            seq_[i] = ts;
            ensure_layers(i);
            if (((ge2_[i] >> t) & 1u) == 0) {
                if (collect_out_ && i == collect_depth_) {
                    collect_out_->emplace_back(seq_.begin(), seq_.begin() + static_cast<std::ptrdiff_t>(i + 1));
                } else if (i == n_) {
                    return true;
                } else if (dfs(i + 1)) {
                    return true;
                }
            }
            used_ = saved_used;
            if (remove_edge(p, a, ts))
                invalidate(p);
        }
        return false;
    }

    std::span<const letter> w_;
    std::size_t n_;
    unsigned k_;
    std::size_t q_;
    std::vector<std::uint64_t> mask_;
    std::vector<std::uint16_t> ref_;
    std::vector<state> seq_;
    std::vector<std::uint64_t> ge1_, ge2_;
    std::size_t valid_upto_ = 0;
    std::size_t used_ = 1;
    std::uint64_t nodes_ = 0;
    std::size_t collect_depth_ = 0;
    std::vector<std::vector<state>>* collect_out_ = nullptr;
};

struct LevelOutcome {
    std::optional<std::vector<state>> path;
    std::uint64_t nodes = 0; // exact only when the level was exhausted
};

/// Searches one state count. Prefix tasks are handed out in lexicographic
/// order; the witness reported is the one from the lowest-indexed task that
/// has any, which is the lexicographically least canonical sequence.
inline LevelOutcome search_level(std::span<const letter> w, unsigned k, std::size_t q, unsigned jobs) {
    const std::size_t n = w.size();
    if (q > n + 1)
        return {};
    if (n == 0)
        return q == 1 ? LevelOutcome{std::vector<state>{0}, 1} : LevelOutcome{};

    std::vector<std::vector<state>> tasks;
    std::size_t depth = std::min<std::size_t>(n, 1);
    // Deepen the split until there is enough work to share.
    const std::size_t want = jobs <= 1 ? 1 : std::size_t{16} * jobs;
    std::uint64_t prefix_nodes = 0;
    for (;;) {
        tasks.clear();
        PathSearch splitter(w, k, q);
        splitter.collect(depth, tasks);
        prefix_nodes = splitter.nodes();
        if (tasks.size() >= want || depth >= n || depth >= 8)
            break;
        ++depth;
    }

    std::vector<std::optional<std::vector<state>>> found(tasks.size());
    std::vector<std::uint64_t> task_nodes(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

    auto worker = [&] {
        PathSearch engine(w, k, q);
        std::uint64_t before = 0;
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= tasks.size() || idx > best.load())
                return;
            before = engine.nodes();
            if (engine.search_from(tasks[idx])) {
                found[idx] = engine.sequence();
                std::size_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            }
            task_nodes[idx] = engine.nodes() - before;
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }

    LevelOutcome out;
    out.nodes = prefix_nodes;
    for (auto c : task_nodes)
        out.nodes += c;
    for (auto& f : found)
        if (f) {
            out.path = std::move(f);
            break;
        }
    return out;
}

} // namespace detail

/// Exact nondeterministic automatic complexity with witness and
/// exhaustion certificate.
inline ComplexityResult an_exact(const Word& w, const SearchOptions& opts = {}) {
    const std::size_t n = w.size();
    const std::size_t hyde = hyde_bound(n);
    const std::size_t top = opts.upper_hint ? std::min(*opts.upper_hint, hyde) : hyde;
    const std::size_t first = std::max<std::size_t>(1, opts.lower_hint);

    ComplexityResult result{0, Nfa(1, w.k(), {}, {0}), {}, {}};
    result.certificate.search_mode = opts.mode;
    result.certificate.lower_hint = first;

    if (opts.mode == SearchMode::full_enumeration) {
        const auto found = oracle::minimum_states(w, top);
        if (!found || found->q < first)
            throw error(errc::invalid_argument, "no witness with " + std::to_string(first) + ".." +
                                                    std::to_string(top) + " states");
        result.value = found->q;
        result.witness = oracle::to_nfa(*found, w.k());
        result.certificate.search_nodes = found->candidates_tried;
        result.certificate.states_ruled_out = found->q - 1;
        return result;
    }

    std::uint64_t exhausted_nodes = 0;
    for (std::size_t q = first; q <= top; ++q) {
        auto level = detail::search_level(w.letters(), w.k(), q, opts.jobs);
        if (level.path) {
            result.value = q;
            result.path = std::move(*level.path);
            result.witness = detail::path_induced_nfa(w.letters(), w.k(), q, result.path);
            result.certificate.states_ruled_out = q - 1;
            result.certificate.search_nodes = exhausted_nodes;
            return result;
        }
        exhausted_nodes += level.nodes;
    }
    throw error(errc::invalid_argument, "no uniquely accepting NFA with at most " + std::to_string(top) + " states");
}

inline nlohmann::ordered_json to_json_value(const ComplexityResult& r) {
    nlohmann::ordered_json doc;
    doc["value"] = r.value;
    doc["witness"] = to_json_value(r.witness);
    nlohmann::ordered_json cert;
    cert["states_ruled_out"] = r.certificate.states_ruled_out;
    cert["search_nodes"] = r.certificate.search_nodes;
    cert["search_mode"] = to_string(r.certificate.search_mode);
    if (r.certificate.lower_hint > 1)
        cert["lower_hint"] = r.certificate.lower_hint;
    doc["certificate"] = std::move(cert);
    return doc;
}

/// The |x|/alpha-state cycle that uniquely accepts x = z^alpha, where z is
/// the first |x|/alpha letters of x. The final state sits at offset |x| mod v.
inline Nfa cyclic_witness(const Word& x, const Rational& alpha) {
    if (alpha < Rational(1))
        throw error(errc::invalid_argument, "alpha must be >= 1");
    if (x.empty())
        throw error(errc::not_a_power, "the empty word has no period");
    const Rational v_exact = Rational(static_cast<std::int64_t>(x.size())) / alpha;
    if (!v_exact.is_integer())
        throw error(errc::not_a_power, "|x|/alpha = " + v_exact.str() + " is not an integer");
    const auto v = static_cast<std::size_t>(v_exact.num());
    for (std::size_t i = v; i < x.size(); ++i)
        if (x[i] != x[i - v])
            throw error(errc::not_a_power, x.str() + " does not have period " + std::to_string(v));
    std::vector<Transition> transitions;
    for (std::size_t i = 0; i < v; ++i)
        transitions.push_back({static_cast<state>(i), x[i], static_cast<state>((i + 1) % v)});
    return Nfa(v, x.k(), std::move(transitions), {static_cast<state>(x.size() % v)});
}

struct PowerBound {
    std::size_t bound = 0;
    Nfa witness;
};

/// Smallest period v of w, with the v-state cycle as witness (v = |w| when
/// w has no proper period).
inline PowerBound power_upper_bound(const Word& w) {
    if (w.empty())
        throw error(errc::invalid_argument, "power_upper_bound needs a nonempty word");
    const std::size_t n = w.size();
    for (std::size_t v = 1; v <= n; ++v) {
        bool periodic = true;
        for (std::size_t i = v; i < n && periodic; ++i)
            periodic = w[i] == w[i - v];
        if (periodic)
            return {v, cyclic_witness(w, Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(v)))};
    }
    return {n, cyclic_witness(w, Rational(1))}; // unreachable: v = n always works
}

/// A_N(w) > |w|/c, i.e. membership in L_{k,c}.
inline bool is_in_Lkc(std::size_t value, std::size_t length, std::size_t c) {
    if (c == 0)
        throw error(errc::invalid_argument, "c must be positive");
    return value * c > length;
}

inline bool is_in_Lkc(const Word& w, std::size_t c, const SearchOptions& opts = {}) {
    return is_in_Lkc(an_exact(w, opts).value, w.size(), c);
}

inline bool is_an_simple(std::size_t value, std::size_t length) { return value < hyde_bound(length); }

inline bool is_an_simple(const Word& w, const SearchOptions& opts = {}) {
    return is_an_simple(an_exact(w, opts).value, w.size());
}

/// Evaluates  A_N(w) <= |w|/alpha  ==>  w contains an alpha-power.
inline bool power_implication_check(const Rational& alpha, const Word& w, std::size_t value) {
    const bool low = Rational(static_cast<std::int64_t>(value)) * alpha <= Rational(static_cast<std::int64_t>(w.size()));
    return !low || contains_alpha_power(w, alpha).has_value();
}

inline bool kth_power_implication_check(std::size_t k, const Word& w, const SearchOptions& opts = {}) {
    if (k == 0)
        throw error(errc::invalid_argument, "k must be >= 1");
    return power_implication_check(Rational(static_cast<std::int64_t>(k)), w, an_exact(w, opts).value);
}

} // namespace acx
