// acx: command-line front end for the automatic-complexity library.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "acx/acx.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

struct Common {
    unsigned alphabet = 0;
    bool json_out = false;
    std::string dot_path;
    unsigned jobs = 1;
};

acx::Word read_word(const std::string& text, const Common& c) { return acx::Word::parse(text, c.alphabet); }

void emit(const Common& c, const json& doc, const std::string& text) {
    if (c.json_out)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
}

void write_dot(const Common& c, const acx::Nfa& m) {
    if (c.dot_path.empty())
        return;
    std::ofstream out(c.dot_path);
    if (!out)
        throw acx::error(acx::errc::invalid_argument, "cannot write " + c.dot_path);
    out << acx::to_dot(m);
}

std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw acx::error(acx::errc::parse_error, "bad list item '" + item + "'");
        out.push_back(std::stoull(item));
    }
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json occurrence_json(const std::optional<acx::Occurrence>& occ) {
    if (!occ)
        return nullptr;
    return {{"start", occ->start},
            {"period", occ->period},
            {"length", occ->length},
            {"exponent", occ->exponent().str()}};
}

std::string nfa_text(const acx::Nfa& m) {
    std::ostringstream out;
    out << "witness: " << m.q() << " states, finals {";
    for (std::size_t i = 0; i < m.finals().size(); ++i)
        out << (i ? "," : "") << m.finals()[i];
    out << "}\n";
    for (const auto& t : m.transitions())
        out << "  " << t.from << " -" << static_cast<unsigned>(t.label) << "-> " << t.to << "\n";
    return out.str();
}

int run_verify(const std::string& suite, const Common& c) {
    std::vector<acx::Report> reports;
    if (suite == "paper")
        reports = acx::reference_suite(c.jobs);
    else if (suite == "oracle")
        reports.push_back(acx::oracle_equivalence());
    else if (suite == "sandwich")
        reports.push_back(acx::sandwich_check(9, 3, c.jobs));
    json doc = json::array();
    std::string text;
    bool ok = true;
    for (const auto& r : reports) {
        doc.push_back(r.to_json());
        text += r.text();
        ok = ok && r.passed();
    }
    emit(c, doc, text);
    return ok ? 0 : exit_domain;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nondeterministic automatic complexity toolkit", "acx"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--alphabet", common.alphabet, "Alphabet size (default 1 + largest digit)");
    app.add_flag("--json", common.json_out, "JSON output");
    app.add_option("--dot", common.dot_path, "Write the witness NFA as DOT");
    app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::string word, word2, exp_text, name = "brandenburg", positions, bits, suite = "paper", gf2_op, gf2_arg,
                                        eps_text = "1/2";
    std::size_t c_param = 2, n_param = 0, max_c = 6, max_n = 6, gf2_vars = 0, samples = 100;
    std::uint64_t x_param = 0, seed = 1;
    bool prime = false, csv = false, oracle_mode = false;

    auto* compute = app.add_subcommand("compute", "Exact A_N with witness and certificate");
    compute->add_option("word", word)->required();
    compute->add_flag("--oracle", oracle_mode, "Use full transition-relation enumeration");

    auto* bound = app.add_subcommand("bound", "Upper bound from the smallest period");
    bound->add_option("word", word)->required();

    auto* classify = app.add_subcommand("classify", "Membership in L_{k,c}");
    classify->add_option("word", word)->required();
    classify->add_option("--c", c_param)->required()->check(CLI::PositiveNumber);

    auto* simple = app.add_subcommand("simple", "A_N strictly below floor(n/2)+1");
    simple->add_option("word", word)->required();

    auto* power = app.add_subcommand("power", "Fractional power of a word");
    power->add_option("word", word)->required();
    power->add_option("--exp", exp_text)->required();

    auto* squarefree = app.add_subcommand("squarefree", "Square detection");
    squarefree->add_option("word", word)->required();

    auto* overlapfree = app.add_subcommand("overlapfree", "Overlap detection");
    overlapfree->add_option("word", word)->required();

    auto* shuffle = app.add_subcommand("shuffle", "Perfect shuffle of two words");
    shuffle->add_option("x", word)->required();
    shuffle->add_option("y", word2)->required();

    auto* morphism = app.add_subcommand("morphism", "Apply a named morphism");
    morphism->add_option("word", word)->required();
    morphism->add_option("--name", name)->check(CLI::IsMember({"brandenburg"}));

    auto* construct = app.add_subcommand("construct", "Low-complexity word agreeing at given positions");
    construct->add_option("--n", n_param)->required();
    construct->add_option("--positions", positions)->required();
    construct->add_option("--bits", bits)->required();
    construct->add_flag("--prime", prime, "Restrict the modulus to primes");

    auto* table = app.add_subcommand("table", "Best bound table by exhaustive max-min");
    table->add_option("--max-c", max_c);
    table->add_option("--max-n", max_n);
    table->add_flag("--csv", csv);

    auto* primorial = app.add_subcommand("primorial", "Product of primes <= x");
    primorial->add_option("x", x_param)->required();

    auto* theta = app.add_subcommand("theta", "Chebyshev theta and the lower-bound inequality");
    theta->add_option("x", x_param)->required();

    auto* gf2 = app.add_subcommand("gf2", "GF(2) multilinear polynomials");
    gf2->add_option("op", gf2_op)->required()->check(CLI::IsMember({"or", "an1", "degree", "anf"}));
    gf2->add_option("arg", gf2_arg, "n for or/an1, polynomial for degree, truth table bits for anf")->required();
    gf2->add_option("--vars", gf2_vars, "Variable count for degree");

    auto* survey = app.add_subcommand("survey", "Monte-Carlo distribution of A_N");
    survey->add_option("--n", n_param)->required();
    survey->add_option("--samples", samples)->check(CLI::PositiveNumber);
    survey->add_option("--seed", seed);
    survey->add_option("--eps", eps_text);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"paper", "oracle", "sandwich"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        acx::SearchOptions opts;
        opts.jobs = common.jobs;
        if (oracle_mode)
            opts.mode = acx::SearchMode::full_enumeration;

        if (app.got_subcommand(compute)) {
            const auto w = read_word(word, common);
            const auto res = acx::an_exact(w, opts);
            write_dot(common, res.witness);
            std::ostringstream text;
            text << "A_N(" << w.str() << ") = " << res.value << "\n"
                 << nfa_text(res.witness) << "certificate: all NFAs with fewer than " << res.value
                 << " states ruled out (" << res.certificate.search_nodes << " nodes, "
                 << acx::to_string(res.certificate.search_mode) << ")\n";
            emit(common, acx::to_json_value(res), text.str());
        } else if (app.got_subcommand(bound)) {
            const auto w = read_word(word, common);
            const auto b = acx::power_upper_bound(w);
            write_dot(common, b.witness);
            emit(common, {{"word", w.str()}, {"bound", b.bound}, {"witness", acx::to_json_value(b.witness)}},
                 "A_N(" + w.str() + ") <= " + std::to_string(b.bound) + "\n" + nfa_text(b.witness));
        } else if (app.got_subcommand(classify)) {
            const auto w = read_word(word, common);
            const auto res = acx::an_exact(w, opts);
            const bool in = acx::is_in_Lkc(res.value, w.size(), c_param);
            emit(common,
                 {{"word", w.str()}, {"k", w.k()}, {"c", c_param}, {"value", res.value}, {"in_L", in}},
                 "A_N = " + std::to_string(res.value) + ", in L_{" + std::to_string(w.k()) + "," +
                     std::to_string(c_param) + "}: " + yes_no(in) + "\n");
        } else if (app.got_subcommand(simple)) {
            const auto w = read_word(word, common);
            const auto res = acx::an_exact(w, opts);
            const bool s = acx::is_an_simple(res.value, w.size());
            emit(common,
                 {{"word", w.str()}, {"value", res.value}, {"hyde_bound", acx::hyde_bound(w.size())}, {"simple", s}},
                 "A_N = " + std::to_string(res.value) + ", bound " + std::to_string(acx::hyde_bound(w.size())) +
                     ", simple: " + yes_no(s) + "\n");
        } else if (app.got_subcommand(power)) {
            const auto w = read_word(word, common);
            const auto alpha = acx::Rational::parse(exp_text);
            const auto p = acx::power(w, alpha);
            emit(common, {{"base", w.str()}, {"exponent", alpha.str()}, {"power", p.str()}}, p.str() + "\n");
        } else if (app.got_subcommand(squarefree)) {
            const auto w = read_word(word, common);
            const auto occ = acx::contains_square(w);
            std::string text = "squarefree: " + yes_no(!occ) + "\n";
            if (occ)
                text += "square at " + std::to_string(occ->start) + ": " + w.substr(occ->start, occ->length).str() +
                        "\n";
            emit(common, {{"word", w.str()}, {"squarefree", !occ}, {"square", occurrence_json(occ)}}, text);
        } else if (app.got_subcommand(overlapfree)) {
            const auto w = read_word(word, common);
            const bool of = acx::is_overlap_free(w);
            emit(common, {{"word", w.str()}, {"overlap_free", of}}, "overlap-free: " + yes_no(of) + "\n");
        } else if (app.got_subcommand(shuffle)) {
            const auto x = read_word(word, common);
            const auto y = read_word(word2, common);
            const unsigned k = std::max(x.k(), y.k());
            const auto s = acx::shuffle(x.with_alphabet(k), y.with_alphabet(k));
            emit(common, {{"x", x.str()}, {"y", y.str()}, {"shuffle", s.str()}}, s.str() + "\n");
        } else if (app.got_subcommand(morphism)) {
            const auto& h = acx::brandenburg();
            auto w = read_word(word, common);
            if (w.k() > h.source_k())
                throw acx::error(acx::errc::alphabet_mismatch, "brandenburg maps words over [6]");
            const auto img = h(w.with_alphabet(h.source_k()));
            emit(common, {{"name", name}, {"word", w.str()}, {"image", img.str()}}, img.str() + "\n");
        } else if (app.got_subcommand(construct)) {
            acx::PositionConstraint c;
            c.n = n_param;
            c.positions = parse_list(positions);
            for (auto b : parse_list(bits)) {
                if (b > 255)
                    throw acx::error(acx::errc::letter_out_of_range, "bit " + std::to_string(b));
                c.bits.push_back(static_cast<acx::letter>(b));
            }
            c.k = common.alphabet ? common.alphabet : 2;
            acx::ConstructOptions co;
            if (prime)
                co.mode = acx::ModulusMode::smallest_prime;
            const auto res = acx::build_low_complexity_word(c, co);
            const auto alpha = acx::Rational(static_cast<std::int64_t>(res.x.size()),
                                             static_cast<std::int64_t>(res.bound));
            write_dot(common, acx::cyclic_witness(res.x, alpha));
            emit(common, acx::to_json_value(res),
                 "m = " + std::to_string(res.m) + "\nz = " + res.template_str() + "\nx = " + res.x.str() +
                     "\nA_N(x) <= " + std::to_string(res.bound) + "\n");
        } else if (app.got_subcommand(table)) {
            const auto t = acx::table_best_bound(max_c, max_n, common.jobs);
            if (common.json_out) {
                json rows = json::array();
                for (const auto& row : t) {
                    json r = json::array();
                    for (const auto& cell : row)
                        r.push_back(cell ? json(*cell) : json(nullptr));
                    rows.push_back(std::move(r));
                }
                std::cout << json{{"max_c", max_c}, {"max_n", max_n}, {"table", rows}}.dump(2) << "\n";
            } else {
                std::cout << (csv ? acx::format_table_csv(t) : acx::format_table(t));
            }
        } else if (app.got_subcommand(primorial)) {
            const auto p = acx::primorial(x_param).str();
            emit(common, {{"x", x_param}, {"primorial", p}}, p + "\n");
        } else if (app.got_subcommand(theta)) {
            const double t = acx::chebyshev_theta(x_param);
            json doc{{"x", x_param}, {"theta", t}};
            std::ostringstream text;
            text.precision(17);
            text << "theta(" << x_param << ") = " << t << "\n";
            if (x_param >= 41) {
                const bool ok = acx::rosser_check(x_param);
                doc["lower_bound_holds"] = ok;
                text << "x(1 - 1/ln x) < theta(x): " << yes_no(ok) << "\n";
            }
            emit(common, doc, text.str());
        } else if (app.got_subcommand(gf2)) {
            json doc{{"op", gf2_op}};
            std::string text;
            auto degree_json = [](const std::optional<std::size_t>& d) { return d ? json(*d) : json("zero polynomial"); };
            if (gf2_op == "or" || gf2_op == "an1") {
                const auto n = parse_list(gf2_arg);
                if (n.size() != 1)
                    throw acx::error(acx::errc::parse_error, "expected a single variable count");
                const bool is_or = gf2_op == "or";
                if (n[0] == 0)
                    throw acx::error(acx::errc::invalid_argument, "n must be >= 1");
                doc["n"] = n[0];
                doc["degree"] = is_or ? acx::or_poly_degree(n[0]) : acx::an1_poly_degree(n[0]);
                doc["monomials"] = acx::or_poly_monomial_count(n[0]);
                if (n[0] <= acx::dense_limit) {
                    const auto p = is_or ? acx::or_poly(n[0]) : acx::an1_poly(n[0]);
                    doc["polynomial"] = p.str();
                    doc["monomials"] = p.monomials().size();
                    text = p.str() + "\n";
                }
                text += "degree " + doc["degree"].dump() + ", " + doc["monomials"].dump() + " monomials\n";
            } else if (gf2_op == "degree") {
                const auto p = acx::MultilinearPoly::parse(gf2_arg, gf2_vars ? gf2_vars : 3);
                const auto d = p.degree();
                doc["polynomial"] = p.str();
                doc["degree"] = degree_json(d);
                text = d ? std::to_string(*d) + "\n" : "zero polynomial\n";
            } else {
                std::vector<std::uint8_t> tt;
                for (char ch : gf2_arg) {
                    if (ch != '0' && ch != '1')
                        throw acx::error(acx::errc::parse_error, "truth table must be a 0/1 string");
                    tt.push_back(static_cast<std::uint8_t>(ch - '0'));
                }
                const auto p = acx::anf_from_truth_table(tt);
                doc["polynomial"] = p.str();
                doc["degree"] = degree_json(p.degree());
                text = p.str() + "\n";
            }
            emit(common, doc, text);
        } else if (app.got_subcommand(survey)) {
            const auto eps = acx::Rational::parse(eps_text);
            const unsigned k = common.alphabet ? common.alphabet : 2;
            const auto rep = acx::survey(n_param, samples, seed, eps, k, common.jobs);
            std::ostringstream text;
            text << "n = " << rep.n << ", samples = " << rep.samples << ", seed = " << rep.seed << "\n";
            for (const auto& [value, count] : rep.histogram)
                text << "  A_N = " << value << ": " << count << "\n";
            text << "mean ratio " << rep.mean_ratio << ", median ratio " << rep.median_ratio
                 << ", fraction within " << eps.str() << ": " << rep.fraction_within << "\n";
            emit(common, rep.to_json(), text.str());
        } else if (app.got_subcommand(verify)) {
            return run_verify(suite, common);
        }
    } catch (const acx::error& e) {
        std::cerr << "acx: " << e.what() << "\n";
        return exit_domain;
    }
    return 0;
}
