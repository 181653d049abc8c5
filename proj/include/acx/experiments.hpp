#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "acx/complexity.hpp"
#include "acx/error.hpp"
#include "acx/gf2poly.hpp"
#include "acx/modular.hpp"
#include "acx/nfa.hpp"
#include "acx/oracle.hpp"
#include "acx/rational.hpp"
#include "acx/word.hpp"

namespace acx {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Outcome of one verification suite; `data` carries suite-specific numbers.
struct Report {
    std::string title;
    std::vector<Check> checks;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }

    void add(std::string name, bool ok, std::string detail = {}) {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }

    std::string text() const {
        std::ostringstream out;
        out << title << ": " << (passed() ? "PASS" : "FAIL") << "\n";
        for (const auto& c : checks) {
            out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
            if (!c.detail.empty())
                out << " -- " << c.detail;
            out << "\n";
        }
        return out.str();
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json doc;
        doc["title"] = title;
        doc["passed"] = passed();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : checks)
            arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        doc["checks"] = std::move(arr);
        doc["data"] = data;
        return doc;
    }
};

/// All words of length n over [k], lexicographically.
inline std::vector<Word> all_words(unsigned k, std::size_t n) {
    std::vector<Word> out;
    std::vector<letter> cur(n, 0);
    for (;;) {
        out.emplace_back(cur, k);
        std::size_t i = n;
        while (i > 0 && cur[i - 1] + 1u == k) {
            cur[i - 1] = 0;
            --i;
        }
        if (i == 0)
            break;
        ++cur[i - 1];
    }
    return out;
}

/// Accepting state sequence of the eight-state automaton on the seventeen-letter word.
inline std::vector<state> eight_state_path() { return {0, 1, 2, 0, 1, 2, 0, 3, 4, 5, 6, 7, 3, 4, 5, 6, 7, 3}; }

/// (a) the fixture NFA uniquely accepts `w` along the listed state sequence,
/// (b) 3x + 1 + 5y = 17 has only (2, 2) over the naturals,
/// (c) exhaustive search gives A_N(w) = 8.
inline Report verify_seventeen_letter_word(const Word& w = seventeen_letter_word(), bool run_exact = true, unsigned jobs = 1) {
    Report r;
    r.title = "seventeen-letter-word";
    const Nfa m = eight_state_nfa();
    {
        const auto path = eight_state_path();
        bool along = path.size() == w.size() + 1 && m.is_final(path.back());
        for (std::size_t i = 0; along && i < w.size(); ++i)
            along = std::binary_search(m.transitions().begin(), m.transitions().end(),
                                       Transition{path[i], w[i], path[i + 1]});
        const bool unique = uniquely_accepts(m, w);
        r.add("a: fixture NFA uniquely accepts w", along && unique,
              std::string("listed path ") + (along ? "valid" : "invalid") + ", unique acceptance " +
                  (unique ? "yes" : "no"));
    }
    {
        std::vector<std::pair<int, int>> solutions;
        for (int x = 0; 3 * x + 1 <= 17; ++x)
            for (int y = 0; 3 * x + 1 + 5 * y <= 17; ++y)
                if (3 * x + 1 + 5 * y == 17)
                    solutions.emplace_back(x, y);
        const bool ok = solutions == std::vector<std::pair<int, int>>{{2, 2}};
        r.add("b: 3x+1+5y=17 has the unique solution (2,2)", ok,
              std::to_string(solutions.size()) + " solution(s)");
    }
    if (run_exact) {
        SearchOptions opts;
        opts.jobs = jobs;
        const auto res = an_exact(w, opts);
        r.data["result"] = to_json_value(res);
        r.add("c: A_N(w) = 8 by exhaustive search", res.value == 8 && uniquely_accepts(res.witness, w),
              "value " + std::to_string(res.value) + ", " + std::to_string(res.certificate.states_ruled_out) +
                  " state counts ruled out in " + std::to_string(res.certificate.search_nodes) + " nodes");
    }
    r.data["word"] = w.str();
    return r;
}

/// For words over [k] of length <= n_max: squares have A_N <= |x|/2, and
/// A_N <= |x|/2 forces a square factor.
inline Report sandwich_check(std::size_t n_max = 9, unsigned k = 3, unsigned jobs = 1) {
    Report r;
    r.title = "sandwich";
    std::uint64_t words = 0, squares = 0, low = 0, repetitive = 0;
    std::vector<std::string> lower_violations, upper_violations;
    SearchOptions opts;
    opts.jobs = jobs;
    for (std::size_t n = 0; n <= n_max; ++n)
        for (const auto& x : all_words(k, n)) {
            ++words;
            const std::size_t value = an_exact(x, opts).value;
            const bool sq = is_square(x);
            const bool is_low = 2 * value <= n;
            const bool rep = !is_squarefree(x);
            squares += sq;
            low += is_low;
            repetitive += rep;
            if (sq && !is_low)
                lower_violations.push_back(x.str());
            if (is_low && !rep)
                upper_violations.push_back(x.str());
        }
    r.data["n_max"] = n_max;
    r.data["k"] = k;
    r.data["words"] = words;
    r.data["squares"] = squares;
    r.data["low"] = low;
    r.data["repetitive"] = repetitive;
    r.data["violations"] = {{"square_not_low", lower_violations}, {"low_not_repetitive", upper_violations}};
    r.add("SQ within {A_N <= |x|/2}", lower_violations.empty(),
          std::to_string(squares) + " squares, " + std::to_string(lower_violations.size()) + " violations");
    r.add("{A_N <= |x|/2} within REP", upper_violations.empty(),
          std::to_string(low) + " low words, " + std::to_string(upper_violations.size()) + " violations");
    return r;
}

/// Platform-independent word sampler: mt19937_64 (fully specified by the
/// standard) and letter = high 64 bits of draw * k.
class WordSampler {
public:
    explicit WordSampler(std::uint64_t seed) : engine_(seed) {}

    Word next(std::size_t n, unsigned k) {
        std::vector<letter> out(n);
        for (auto& a : out) {
            const unsigned __int128 wide = static_cast<unsigned __int128>(engine_()) * k;
            a = static_cast<letter>(wide >> 64);
        }
        return Word(std::move(out), k);
    }

private:
    std::mt19937_64 engine_;
};

struct SurveyReport {
    std::size_t n = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    unsigned k = 2;
    Rational epsilon{1, 2};
    /// A_N value -> number of samples.
    std::map<std::size_t, std::size_t> histogram;
    double mean_ratio = 0;
    double median_ratio = 0;
    /// Fraction of samples with |A_N / (n/2) - 1| < epsilon.
    double fraction_within = 0;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json doc;
        doc["n"] = n;
        doc["samples"] = samples;
        doc["seed"] = seed;
        doc["k"] = k;
        doc["epsilon"] = epsilon.str();
        auto dist = nlohmann::ordered_json::array();
        for (const auto& [value, count] : histogram)
            dist.push_back({{"value", value},
                            {"ratio", 2.0 * static_cast<double>(value) / static_cast<double>(n)},
                            {"count", count},
                            {"probability", static_cast<double>(count) / static_cast<double>(samples)}});
        doc["distribution"] = std::move(dist);
        doc["mean_ratio"] = mean_ratio;
        doc["median_ratio"] = median_ratio;
        doc["fraction_within"] = fraction_within;
        return doc;
    }
};

/// A_N of `samples` uniform words of length n, evaluated on `jobs` threads
/// and aggregated by sample index.
inline SurveyReport survey(std::size_t n, std::size_t samples, std::uint64_t seed, const Rational& epsilon,
                           unsigned k = 2, unsigned jobs = 1) {
    if (samples == 0)
        throw error(errc::invalid_argument, "samples must be >= 1");
    if (n == 0)
        throw error(errc::invalid_argument, "n must be >= 1");
    WordSampler sampler(seed);
    std::vector<Word> words;
    words.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i)
        words.push_back(sampler.next(n, k));

    std::vector<std::size_t> values(samples, 0);
    auto run = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < samples; i += stride)
            values[i] = an_exact(words[i]).value;
    };
    if (jobs <= 1) {
        run(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(run, j, jobs);
    }

    SurveyReport rep;
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;
    rep.k = k;
    rep.epsilon = epsilon;
    std::size_t within = 0;
    double sum = 0;
    const auto nn = static_cast<std::int64_t>(n);
    for (auto v : values) {
        ++rep.histogram[v];
        sum += 2.0 * static_cast<double>(v) / static_cast<double>(n);
        // |2v/n - 1| < eps  <=>  |2v - n| < eps * n, exactly.
        const std::int64_t diff = 2 * static_cast<std::int64_t>(v) - nn;
        if (Rational(diff < 0 ? -diff : diff) < epsilon * Rational(nn))
            ++within;
    }
    std::vector<std::size_t> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    const double mid = samples % 2 ? static_cast<double>(sorted[samples / 2])
                                   : (static_cast<double>(sorted[samples / 2 - 1]) +
                                      static_cast<double>(sorted[samples / 2])) /
                                         2.0;
    rep.mean_ratio = sum / static_cast<double>(samples);
    rep.median_ratio = 2.0 * mid / static_cast<double>(n);
    rep.fraction_within = static_cast<double>(within) / static_cast<double>(samples);
    return rep;
}

/// Items of the shuffle-set argument, exhaustively for one n:
/// (1) swapping equal-offset middle segments stays inside A_n,
/// (2) a member contains a square iff it is a square,
/// and |B_n| = 2^(n/4).
inline Report shuffle_set_check(std::size_t n) {
    Report r;
    r.title = "shuffle-set";
    if (n == 0 || n % 8 != 0)
        throw error(errc::bad_length, "n must be a positive multiple of 8");
    SquarefreeEnumerator gen(3, n / 4 - 1);
    const auto tail = gen.next();
    std::vector<letter> rl{3};
    rl.insert(rl.end(), tail->begin(), tail->end());
    const Word rw(std::move(rl), 4);
    const auto members = gen_An(rw, n);
    r.data["n"] = n;
    r.data["r"] = rw.str();
    r.data["members"] = members.size();

    std::size_t item2_bad = 0, squares = 0;
    for (const auto& z : members) {
        const bool sq = is_square(z);
        squares += sq;
        if (sq != contains_square(z).has_value())
            ++item2_bad;
    }
    r.add("item 2: contains a square iff is a square", item2_bad == 0,
          std::to_string(members.size()) + " members, " + std::to_string(item2_bad) + " counterexamples");

    std::uint64_t swaps = 0, item1_bad = 0;
    for (const auto& a : members)
        for (const auto& b : members)
            for (std::size_t pre = 0; pre < n; ++pre)
                for (std::size_t mid = 1; pre + mid <= n; ++mid) {
                    std::vector<letter> ab(a.begin(), a.end()), ba(b.begin(), b.end());
                    for (std::size_t i = pre; i < pre + mid; ++i)
                        std::swap(ab[i], ba[i]);
                    ++swaps;
                    if (!is_in_An(rw, Word(ab, 6)) || !is_in_An(rw, Word(ba, 6)))
                        ++item1_bad;
                }
    r.add("item 1: interchange closure", item1_bad == 0,
          std::to_string(swaps) + " swaps, " + std::to_string(item1_bad) + " escapes");

    const std::size_t expected = std::size_t{1} << (n / 4);
    std::size_t bn = 0;
    for (const auto& z : members)
        bn += is_in_Bn(rw, z);
    r.data["B_n"] = bn;
    r.add("|B_n| = 2^(n/4)", bn == expected && bn == squares,
          std::to_string(bn) + " vs " + std::to_string(expected));
    return r;
}

/// Path-induced search against full transition-relation enumeration for
/// every word over [k] of length <= n_max, up to q_max states.
inline Report oracle_equivalence(std::size_t n_max = 6, std::size_t q_max = 3, unsigned k = 2) {
    Report r;
    r.title = "oracle-equivalence";
    const auto oracle = oracle::minimum_states_all(k, n_max, q_max);
    std::uint64_t words = 0;
    std::vector<std::string> mismatches, unsound;
    for (std::size_t n = 0; n <= n_max; ++n)
        for (const auto& w : all_words(k, n)) {
            ++words;
            const auto res = an_exact(w);
            if (!uniquely_accepts(res.witness, w) || res.witness.q() != res.value)
                unsound.push_back(w.str());
            const auto it = oracle.find(w);
            const std::size_t expect = it == oracle.end() ? q_max + 1 : it->second;
            const std::size_t got = std::min(res.value, q_max + 1);
            if (expect != got)
                mismatches.push_back(w.str() + ": search " + std::to_string(res.value) + ", oracle " +
                                     (it == oracle.end() ? ">" + std::to_string(q_max) : std::to_string(expect)));
        }
    r.data["words"] = words;
    r.data["mismatches"] = mismatches;
    r.add("witnesses uniquely accept with value states", unsound.empty(),
          std::to_string(unsound.size()) + " unsound of " + std::to_string(words));
    r.add("path-induced minimum equals full enumeration (q <= " + std::to_string(q_max) + ")",
          mismatches.empty(), std::to_string(mismatches.size()) + " mismatches of " + std::to_string(words));
    return r;
}

struct HydeSweep {
    std::uint64_t words = 0;
    std::vector<std::size_t> max_value; // per length
    std::vector<std::string> violations;
};

/// A_N <= floor(n/2)+1 over the given words, tracking the maximum per length.
inline HydeSweep hyde_sweep(const std::vector<Word>& words) {
    HydeSweep out;
    for (const auto& w : words) {
        ++out.words;
        const std::size_t v = an_exact(w).value;
        if (out.max_value.size() <= w.size())
            out.max_value.resize(w.size() + 1, 0);
        out.max_value[w.size()] = std::max(out.max_value[w.size()], v);
        if (v > hyde_bound(w.size()))
            out.violations.push_back(w.str());
    }
    return out;
}

/// Lexicographically first word over [k] of length n with A_N = floor(n/2)+1.
inline std::optional<Word> sharpness_witness(unsigned k, std::size_t n) {
    for (const auto& w : all_words(k, n))
        if (an_exact(w).value == hyde_bound(n))
            return w;
    return std::nullopt;
}

/// Worked example of the modular construction: twelve prescribed positions in a length-31 word.
struct ModularExample {
    static std::vector<std::size_t> positions() { return {3, 4, 5, 7, 8, 11, 20, 23, 24, 26, 27, 28}; }
    static Word y() { return Word::parse("0001010110100001100100111110111", 2); }
    static Word z_printed() { return Word::parse("12210101111010", 3); }
    static Word x_printed() { return Word::parse("1221010111101012210101111010122", 3); }
};

inline Report modular_example_check() {
    Report r;
    r.title = "modular-example";
    const auto pos = ModularExample::positions();
    const Word y = ModularExample::y();
    const auto mod = find_modulus(pos);
    r.add("smallest modulus is 14", mod.smallest_integer == 14, std::to_string(mod.smallest_integer));
    const auto res = residues(pos, mod.smallest_integer);
    const std::vector<std::size_t> expected{3, 4, 5, 7, 8, 11, 6, 9, 10, 12, 13, 0};
    r.add("residues (3,4,5,7,8,11,6,9,10,12,13,0)", res == expected);

    PositionConstraint c{y.size(), pos, {}, 2};
    for (auto a : pos)
        c.bits.push_back(y[a]);
    const auto built = build_low_complexity_word(c);
    bool agrees = true;
    for (auto a : pos)
        agrees = agrees && built.x[a] == y[a];
    r.add("x agrees with y on the positions", agrees, built.x.str());
    bool template_matches = true;
    const Word zp = ModularExample::z_printed();
    for (std::size_t i = 0; i < built.m; ++i) {
        const bool free_cell = !built.z_template[i].has_value();
        template_matches = template_matches && (free_cell ? zp[i] == 2 : zp[i] == *built.z_template[i]);
    }
    r.add("template matches printed z with 2 as wildcard", template_matches, built.template_str());
    const auto alpha = Rational(static_cast<std::int64_t>(y.size()), static_cast<std::int64_t>(built.m));
    const Nfa cyc = cyclic_witness(built.x, alpha);
    r.add("cyclic witness (31/14) uniquely accepts x", cyc.q() == 14 && uniquely_accepts(cyc, built.x));
    const Word xp = ModularExample::x_printed();
    r.add("printed x is printed z ^ (31/14)", power(zp, alpha) == xp);
    r.data["m"] = built.m;
    r.data["z_template"] = built.template_str();
    r.data["x"] = built.x.str();
    return r;
}

/// Brandenburg morphism: image lengths and squarefree preservation up to length max_len.
inline Report brandenburg_check(std::size_t max_len = 6) {
    Report r;
    r.title = "brandenburg";
    const auto& h = brandenburg();
    bool lengths = h.source_k() == 6;
    for (letter a = 0; a < h.source_k(); ++a)
        lengths = lengths && h.image(a).size() == 22;
    r.add("six images of length 22", lengths);
    std::uint64_t tested = 0;
    std::vector<std::string> bad;
    for (std::size_t n = 0; n <= max_len; ++n) {
        SquarefreeEnumerator gen(3, n);
        while (auto u = gen.next()) {
            ++tested;
            if (contains_square(h(u->with_alphabet(6))))
                bad.push_back(u->str());
        }
    }
    r.add("images of squarefree ternary words are squarefree", bad.empty(),
          std::to_string(tested) + " words, " + std::to_string(bad.size()) + " failures");
    return r;
}

/// Both directions of the power implication on the sweep words plus the
/// overlap-free counterexample at alpha = 2 + 1/8.
inline Report power_implication_report(std::size_t n_max = 10) {
    Report r;
    r.title = "power-implication";
    std::uint64_t words = 0, failures = 0;
    for (std::size_t n = 0; n <= n_max; ++n)
        for (const auto& w : all_words(2, n)) {
            ++words;
            const auto v = an_exact(w).value;
            for (std::int64_t k : {2, 3})
                if (!power_implication_check(Rational(k), w, v))
                    ++failures;
        }
    r.add("(i) integer k in {2,3}: A_N <= n/k implies a k-th power", failures == 0,
          std::to_string(words) + " binary words, " + std::to_string(failures) + " failures");
    const Word w = seventeen_letter_word();
    const Rational alpha = Rational(2) + Rational(1, 8);
    const auto v = an_exact(w).value;
    const bool low = Rational(static_cast<std::int64_t>(v)) * alpha <= Rational(static_cast<std::int64_t>(w.size()));
    const bool no_power = !contains_alpha_power(w, alpha).has_value() && is_overlap_free(w);
    r.add("(ii) alpha = 17/8 fails on the 17-letter word", low && no_power && v == 8,
          "A_N = " + std::to_string(v) + ", 17/alpha = " + (Rational(17) / alpha).str() + ", overlap-free " +
              (no_power ? "yes" : "no"));
    return r;
}

inline Report gf2_check(std::size_t or_max = 16, std::size_t an1_max = 12) {
    Report r;
    r.title = "gf2";
    bool or_ok = true;
    for (std::size_t n = 1; n <= or_max; ++n)
        or_ok = or_ok && or_poly(n).degree() == n && or_poly(n).monomials().size() == or_poly_monomial_count(n);
    r.add("deg(or_poly(n)) = n, n <= " + std::to_string(or_max), or_ok);
    bool an1_ok = true;
    for (std::size_t n = 1; n <= an1_max; ++n) {
        const auto p = an1_poly(n);
        an1_ok = an1_ok && p.degree() == n - 1;
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t a = 0; a <= full && an1_ok; ++a)
            an1_ok = p.eval_mask(a) == (a == 0 || a == full);
    }
    r.add("an1_poly(n) has degree n-1 and is the indicator of constant words, n <= " + std::to_string(an1_max),
          an1_ok);
    bool zero_ok = true;
    for (std::size_t n = 0; n <= 3 && zero_ok; ++n) {
        const std::uint64_t sets = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t s = 0; s < sets && zero_ok; ++s) {
            std::vector<MultilinearPoly::monomial> monos;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
                if ((s >> m) & 1u)
                    monos.push_back(m);
            const MultilinearPoly p(n, monos);
            zero_ok = is_zero_function(p) == p.is_zero();
        }
    }
    r.add("zero function iff no monomials, all polynomials n <= 3", zero_ok);
    bool anf_ok = true;
    for (std::size_t n = 0; n <= 4 && anf_ok; ++n) {
        const std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << n);
        for (std::uint64_t t = 0; t < tables && anf_ok; ++t) {
            std::vector<std::uint8_t> table(std::size_t{1} << n);
            for (std::size_t i = 0; i < table.size(); ++i)
                table[i] = static_cast<std::uint8_t>((t >> i) & 1u);
            const auto p = anf_from_truth_table(table);
            anf_ok = truth_table(p) == table && anf_from_truth_table(truth_table(p)) == p;
        }
    }
    r.add("ANF round trip on every truth table, n <= 4", anf_ok);
    return r;
}

inline Report number_theory_check(std::uint64_t rosser_max = 1'000'000) {
    Report r;
    r.title = "number-theory";
    r.add("10# = 210", primorial(10) == 210);
    double worst = 0;
    for (std::uint64_t x = 1; x <= 200; ++x) {
        const double lp = std::log(static_cast<double>(primorial(x).convert_to<long double>()));
        const double theta = chebyshev_theta(x);
        const double rel = lp == 0 ? std::abs(theta) : std::abs(theta - lp) / lp;
        worst = std::max(worst, rel);
    }
    r.add("theta = ln(primorial) to 1e-9 relative, x <= 200", worst <= 1e-9, "worst " + std::to_string(worst));
    const auto sweep = rosser_sweep(41, rosser_max);
    std::ostringstream detail;
    detail << sweep.checked << " integers, min margin " << sweep.min_margin;
    r.add("x(1 - 1/ln x) < theta(x) for 41 <= x <= " + std::to_string(rosser_max), !sweep.first_failure,
          detail.str());
    return r;
}

/// Published best-bound values (nullopt where c > n).
inline BoundTable printed_bound_table() {
    const int rows[7][7] = {
        {1, 1, 1, 1, 1, 1, 1}, {-1, 1, 1, 1, 1, 1, 1}, {-1, -1, 2, 2, 2, 3, 3}, {-1, -1, -1, 2, 3, 3, 4},
        {-1, -1, -1, -1, 3, 3, 4}, {-1, -1, -1, -1, -1, 3, 4}, {-1, -1, -1, -1, -1, -1, 4},
    };
    BoundTable t(7, std::vector<std::optional<std::size_t>>(7));
    for (std::size_t c = 0; c < 7; ++c)
        for (std::size_t n = 0; n < 7; ++n)
            if (rows[c][n] >= 0)
                t[c][n] = static_cast<std::size_t>(rows[c][n]);
    return t;
}

inline Report table_check() {
    Report r;
    r.title = "bound-table";
    const auto computed = table_best_bound(6, 6);
    const auto printed = printed_bound_table();
    std::size_t agree = 0, defined = 0;
    std::vector<std::string> diffs;
    for (std::size_t c = 0; c < 7; ++c)
        for (std::size_t n = 0; n < 7; ++n) {
            if (!printed[c][n])
                continue;
            ++defined;
            if (computed[c][n] == printed[c][n])
                ++agree;
            else
                diffs.push_back("f(" + std::to_string(c) + "," + std::to_string(n) + ") computed " +
                                std::to_string(computed[c][n].value_or(0)) + ", printed " +
                                std::to_string(*printed[c][n]));
        }
    std::string detail = std::to_string(agree) + "/" + std::to_string(defined) + " entries agree";
    for (const auto& d : diffs)
        detail += "; " + d;
    r.add("computed table equals the printed table", diffs.empty(), detail);
    r.data["computed"] = format_table(computed);
    return r;
}

/// Every reference check that runs in seconds.
inline std::vector<Report> reference_suite(unsigned jobs = 1) {
    return {verify_seventeen_letter_word(seventeen_letter_word(), true, jobs), modular_example_check(), table_check(), brandenburg_check(),
            power_implication_report(), gf2_check(), number_theory_check(), shuffle_set_check(8)};
}

} // namespace acx
