#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "acx/error.hpp"
#include "acx/word.hpp"

namespace acx {

using state = std::uint32_t;

struct Transition {
    state from = 0;
    letter label = 0;
    state to = 0;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Saturating walk count: everything above one collapses into many.
enum class SatCount : std::uint8_t { zero = 0, one = 1, many = 2 };

inline SatCount operator+(SatCount a, SatCount b) noexcept {
    return static_cast<SatCount>(std::min(2, static_cast<int>(a) + static_cast<int>(b)));
}

inline SatCount operator*(SatCount a, SatCount b) noexcept {
    return static_cast<SatCount>(std::min(2, static_cast<int>(a) * static_cast<int>(b)));
}

inline const char* to_string(SatCount c) noexcept {
    switch (c) {
    case SatCount::zero: return "zero";
    case SatCount::one: return "one";
    case SatCount::many: return "many";
    }
    return "?";
}

/// NFA over [k] with states 0..q-1 and initial state 0. Transitions are kept
/// sorted and duplicate-free; finals likewise.
class Nfa {
public:
    Nfa(std::size_t q, unsigned k, std::vector<Transition> transitions, std::vector<state> finals)
        : q_(q), k_(k), transitions_(std::move(transitions)), finals_(std::move(finals)) {
        if (q_ == 0)
            throw error(errc::invalid_argument, "an NFA needs at least one state");
        if (k_ == 0)
            throw error(errc::invalid_argument, "alphabet size must be positive");
        for (const auto& t : transitions_) {
            if (t.from >= q_ || t.to >= q_)
                throw error(errc::invalid_argument, "transition references state outside 0.." + std::to_string(q_ - 1));
            if (t.label >= k_)
                throw error(errc::letter_out_of_range, "transition letter " + std::to_string(t.label) +
                                                           " outside alphabet of size " + std::to_string(k_));
        }
        for (state f : finals_)
            if (f >= q_)
                throw error(errc::invalid_argument, "final state " + std::to_string(f) + " outside 0.." +
                                                        std::to_string(q_ - 1));
        std::sort(transitions_.begin(), transitions_.end());
        transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
        std::sort(finals_.begin(), finals_.end());
        finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
    }

    std::size_t q() const noexcept { return q_; }
    unsigned k() const noexcept { return k_; }
    static constexpr state initial() noexcept { return 0; }
    const std::vector<Transition>& transitions() const noexcept { return transitions_; }
    const std::vector<state>& finals() const noexcept { return finals_; }

    bool is_final(state s) const noexcept { return std::binary_search(finals_.begin(), finals_.end(), s); }

    friend bool operator==(const Nfa&, const Nfa&) = default;

private:
    std::size_t q_;
    unsigned k_;
    std::vector<Transition> transitions_;
    std::vector<state> finals_;
};

/// Forward state-set propagation: does some path from 0 spelling w end in F?
inline bool accepts_spelling(const Nfa& m, const Word& w) {
    if (w.k() > m.k()) {
        for (letter a : w)
            if (a >= m.k())
                throw error(errc::alphabet_mismatch, "word letter " + std::to_string(a) +
                                                         " outside NFA alphabet of size " + std::to_string(m.k()));
    }
    std::vector<char> current(m.q(), 0), next(m.q(), 0);
    current[Nfa::initial()] = 1;
    for (letter a : w) {
        std::fill(next.begin(), next.end(), 0);
        bool any = false;
        for (const auto& t : m.transitions())
            if (t.label == a && current[t.from]) {
                next[t.to] = 1;
                any = true;
            }
        if (!any)
            return false;
        current.swap(next);
    }
    for (state f : m.finals())
        if (current[f])
            return true;
    return false;
}

/// Saturating number of length-n walks from 0 to a final state; every
/// labelled edge is a distinct choice.
inline SatCount count_length_n_accepting_paths(const Nfa& m, std::size_t n) {
    std::vector<SatCount> current(m.q(), SatCount::zero), next(m.q(), SatCount::zero);
    current[Nfa::initial()] = SatCount::one;
    for (std::size_t step = 0; step < n; ++step) {
        std::fill(next.begin(), next.end(), SatCount::zero);
        for (const auto& t : m.transitions())
            next[t.to] = next[t.to] + current[t.from];
        current.swap(next);
    }
    SatCount total = SatCount::zero;
    for (state f : m.finals())
        total = total + current[f];
    return total;
}

inline bool uniquely_accepts(const Nfa& m, const Word& w) {
    return accepts_spelling(m, w) && count_length_n_accepting_paths(m, w.size()) == SatCount::one;
}

/// Graphviz rendering: an invisible start node points at state 0, finals are
/// double circles.
inline std::string to_dot(const Nfa& m, std::string_view name = "nfa") {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=LR;\n";
    out << "  start [shape=point, style=invis];\n";
    for (std::size_t s = 0; s < m.q(); ++s)
        out << "  q" << s << " [shape=" << (m.is_final(static_cast<state>(s)) ? "doublecircle" : "circle")
            << ", label=\"q" << s << "\"];\n";
    out << "  start -> q0 [label=\"start\"];\n";
    for (const auto& t : m.transitions())
        out << "  q" << t.from << " -> q" << t.to << " [label=\"" << static_cast<unsigned>(t.label) << "\"];\n";
    out << "}\n";
    return out.str();
}

inline nlohmann::ordered_json to_json_value(const Nfa& m) {
    nlohmann::ordered_json doc;
    doc["q"] = m.q();
    doc["k"] = m.k();
    doc["initial"] = 0;
    doc["finals"] = m.finals();
    auto transitions = nlohmann::ordered_json::array();
    for (const auto& t : m.transitions())
        transitions.push_back(nlohmann::ordered_json::array({t.from, std::to_string(t.label), t.to}));
    doc["transitions"] = std::move(transitions);
    return doc;
}

/// {"q":..,"k":..,"initial":0,"finals":[..],"transitions":[[p,"a",r],..]}
inline std::string to_json(const Nfa& m) { return to_json_value(m).dump(); }

namespace detail {

[[noreturn]] inline void json_fail(const std::string& where, const std::string& what) {
    throw error(errc::parse_error, "at " + where + ": " + what);
}

} // namespace detail

template <class Json>
Nfa from_json_value(const Json& doc) {
    using detail::json_fail;
    if (!doc.is_object())
        json_fail("/", "expected an object");
    auto need_uint = [&](const Json& v, const std::string& where) -> std::uint64_t {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.template get<std::int64_t>() >= 0))
            json_fail(where, "expected a nonnegative integer");
        return v.template get<std::uint64_t>();
    };
    for (const char* key : {"q", "k", "finals", "transitions"})
        if (!doc.contains(key))
            json_fail("/", std::string("missing key \"") + key + "\"");
    const auto q = need_uint(doc["q"], "/q");
    const auto k = need_uint(doc["k"], "/k");
    if (q == 0)
        json_fail("/q", "must be positive");
    if (k == 0 || k > 256)
        json_fail("/k", "must be in 1..256");
    if (doc.contains("initial") && need_uint(doc["initial"], "/initial") != 0)
        json_fail("/initial", "initial state must be 0");
    std::vector<state> finals;
    if (!doc["finals"].is_array())
        json_fail("/finals", "expected an array");
    for (std::size_t i = 0; i < doc["finals"].size(); ++i) {
        const std::string where = "/finals/" + std::to_string(i);
        const auto f = need_uint(doc["finals"][i], where);
        if (f >= q)
            json_fail(where, "state " + std::to_string(f) + " out of range");
        finals.push_back(static_cast<state>(f));
    }
    std::vector<Transition> transitions;
    if (!doc["transitions"].is_array())
        json_fail("/transitions", "expected an array");
    for (std::size_t i = 0; i < doc["transitions"].size(); ++i) {
        const std::string where = "/transitions/" + std::to_string(i);
        const auto& t = doc["transitions"][i];
        if (!t.is_array() || t.size() != 3)
            json_fail(where, "expected [from, \"letter\", to]");
        const auto from = need_uint(t[0], where + "/0");
        const auto to = need_uint(t[2], where + "/2");
        if (!t[1].is_string())
            json_fail(where + "/1", "letter must be a string");
        const auto text = t[1].template get<std::string>();
        if (text.empty() || text.size() > 3 || !std::all_of(text.begin(), text.end(), [](char c) {
                return c >= '0' && c <= '9';
            }))
            json_fail(where + "/1", "letter must be a decimal string");
        const auto a = std::stoul(text);
        if (from >= q)
            json_fail(where + "/0", "state " + std::to_string(from) + " out of range");
        if (to >= q)
            json_fail(where + "/2", "state " + std::to_string(to) + " out of range");
        if (a >= k)
            json_fail(where + "/1", "letter " + text + " outside alphabet");
        transitions.push_back({static_cast<state>(from), static_cast<letter>(a), static_cast<state>(to)});
    }
    return Nfa(static_cast<std::size_t>(q), static_cast<unsigned>(k), std::move(transitions), std::move(finals));
}

inline Nfa from_json(std::string_view text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw error(errc::parse_error, std::string("at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    return from_json_value(doc);
}

/// The eight-state automaton accepting (123)^2 0 (12341)^2 uniquely:
/// a 3-cycle 0->1->2->0 on 1,2,3, the exit 0 -0-> 3, and a 5-cycle
/// 3->4->5->6->7->3 on 1,2,3,4,1 with final state 3.
inline Nfa eight_state_nfa() {
    return Nfa(8, 5,
               {
                   {0, 1, 1}, {1, 2, 2}, {2, 3, 0}, // 3-cycle
                   {0, 0, 3},                       // exit
                   {3, 1, 4}, {4, 2, 5}, {5, 3, 6}, {6, 4, 7}, {7, 1, 3}, // 5-cycle
               },
               {3});
}

inline Word seventeen_letter_word() { return Word::parse("12312301234112341", 5); }

} // namespace acx
