/* Copyright 2026 The mzvgraph Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "mzvgraph/cli.hpp"

#include "mzvgraph/decompose.hpp"
#include "mzvgraph/graphs.hpp"
#include "mzvgraph/lyndon.hpp"
#include "mzvgraph/numerics.hpp"
#include "mzvgraph/trees.hpp"
#include "mzvgraph/verify.hpp"
#include "mzvgraph/words.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <ostream>

namespace mzvgraph::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json envelope() {
    Json j;
    j["schema"] = 1;
    return j;
}

std::string sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string bound_text(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2g", x);
    return buf;
}

std::string complex_text(std::complex<double> z) {
    if (z.imag() == 0.0) return sig12(z.real());
    if (z.real() == 0.0) return sig12(z.imag()) + "i";
    return sig12(z.real()) + (z.imag() < 0 ? " - " : " + ") + sig12(std::fabs(z.imag())) + "i";
}

Json word_sum_json(const WordSum& s) {
    Json terms = Json::array();
    for (const auto& [w, c] : s) terms.push_back(Json{{"coeff", format_rational(c)}, {"word", w.str()}});
    return terms;
}

Json tree_sum_json(const TreeSum& s) {
    Json terms = Json::array();
    for (const auto& [t, c] : s) terms.push_back(Json{{"coeff", format_rational(c)}, {"tree", t.str()}});
    return terms;
}

Word word_argument(const std::string& text, const std::string& as) {
    if (as == "composition" || (as.empty() && classify_argument(text) == ArgumentKind::composition))
        return word_from_composition(Composition::parse(text));
    Word w(text);
    if (!w.admissible()) throw UsageError("word '" + text + "' is not admissible (must start with 0 and end with 1)");
    return w;
}

Word admissible_word(const std::string& text) {
    Word w(text);
    if (!w.admissible()) throw UsageError("word '" + text + "' is not admissible (must start with 0 and end with 1)");
    return w;
}

struct Arguments {
    OutputFormat output = OutputFormat::text;
    double tolerance = 0.0;
    std::string composition, word, first, second, expression, as, format = "dot", suite;
    unsigned long prime = 0;
};

}  // namespace

ArgumentKind classify_argument(std::string_view text) {
    for (char c : text)
        if (c == ',' || (c >= '2' && c <= '9')) return ArgumentKind::composition;
    return ArgumentKind::word;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kontsevich graph weights and multiple zeta values", "mzvgraph"};
    app.require_subcommand(1);
    app.fallthrough();
    Arguments a;
    std::string output = "text";
    app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* word_cmd = app.add_subcommand("word", "Composition to binary word");
    word_cmd->add_option("composition", a.composition, "e.g. 1,2,2")->required();

    auto* comp_cmd = app.add_subcommand("composition", "Binary word to composition");
    comp_cmd->add_option("word", a.word, "admissible word, e.g. 01011")->required();

    auto* shuffle_cmd = app.add_subcommand("shuffle", "Shuffle product of two words");
    shuffle_cmd->add_option("w1", a.first)->required();
    shuffle_cmd->add_option("w2", a.second)->required();

    auto* lyndon_cmd = app.add_subcommand("lyndon", "Lyndon factorization and basis decomposition");
    lyndon_cmd->require_subcommand(1);
    auto* factor_cmd = lyndon_cmd->add_subcommand("factor", "Chen-Fox-Lyndon factorization");
    factor_cmd->add_option("word", a.word)->required();
    auto* decomp_cmd = lyndon_cmd->add_subcommand("decomp", "Shuffles of admissible Lyndon words");
    decomp_cmd->add_option("word", a.word)->required();

    auto* tree_cmd = app.add_subcommand("tree", "Syntax trees");
    tree_cmd->require_subcommand(1);
    auto* tree_eval_cmd = tree_cmd->add_subcommand("eval", "Word image of a tree expression");
    tree_eval_cmd->add_option("expr", a.expression, "e.g. \"p(e*e)\"")->required();

    auto* graph_cmd = app.add_subcommand("graph", "Kontsevich graph of a tree expression");
    graph_cmd->add_option("expr", a.expression)->required();
    graph_cmd->add_option("--format", a.format)->check(CLI::IsMember({"dot", "json"}));

    auto* eval_cmd = app.add_subcommand("eval", "Numeric value of an MZV / word");
    eval_cmd->add_option("target", a.word, "composition or word")->required();
    eval_cmd->add_option("--tol", a.tolerance)->check(CLI::Range(min_tolerance, 1.0));
    eval_cmd->add_option("--as", a.as)->check(CLI::IsMember({"composition", "word"}));

    auto* decompose_cmd = app.add_subcommand("decompose", "Tree combination with the given word image");
    decompose_cmd->add_option("target", a.word, "composition or word")->required();
    decompose_cmd->add_option("--as", a.as)->check(CLI::IsMember({"composition", "word"}));

    auto* certify_cmd = app.add_subcommand("certify", "Integer certificate for 1/p");
    certify_cmd->add_option("prime", a.prime)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
    verify_cmd->add_option("--suite", a.suite)->required()->check(CLI::IsMember(verify_suite_names()));
    verify_cmd->add_option("--tol", a.tolerance)->check(CLI::Range(min_tolerance, 1.0));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    a.output = output == "json" ? OutputFormat::json : OutputFormat::text;
    const bool json = a.output == OutputFormat::json;

    try {
        if (word_cmd->parsed()) {
            const Composition c = Composition::parse(a.composition);
            const Word w = word_from_composition(c);
            if (json) {
                Json j = envelope();
                j["composition"] = c.str();
                j["word"] = w.str();
                out << j.dump() << "\n";
            } else {
                out << w << "\n";
            }
            return exit_ok;
        }

        if (comp_cmd->parsed()) {
            const Word w = admissible_word(a.word);
            const Composition c = composition_from_word(w);
            if (json) {
                Json j = envelope();
                j["word"] = w.str();
                j["composition"] = c.str();
                out << j.dump() << "\n";
            } else {
                out << c.str() << "\n";
            }
            return exit_ok;
        }

        if (shuffle_cmd->parsed()) {
            const Word u(a.first), v(a.second);
            if (u.empty() || v.empty()) throw UsageError("words must be nonempty");
            const WordSum s = shuffle(u, v);
            if (json) {
                Json j = envelope();
                j["terms"] = word_sum_json(s);
                out << j.dump() << "\n";
            } else {
                out << format_word_sum(s);
            }
            return exit_ok;
        }

        if (factor_cmd->parsed()) {
            const Word w(a.word);
            if (w.empty()) throw UsageError("word must be nonempty");
            const auto fact = chen_fox_lyndon(w);
            if (json) {
                Json j = envelope();
                j["word"] = w.str();
                Json factors = Json::array();
                for (const auto& f : fact.factors)
                    factors.push_back(Json{{"word", f.word.str()}, {"multiplicity", f.multiplicity}});
                j["factors"] = factors;
                out << j.dump() << "\n";
            } else {
                out << fact.str() << "\n";
            }
            return exit_ok;
        }

        if (decomp_cmd->parsed()) {
            const auto d = lyndon_basis_decompose(admissible_word(a.word));
            if (json) {
                Json j = envelope();
                j["word"] = a.word;
                Json terms = Json::array();
                for (auto it = d.terms.rbegin(); it != d.terms.rend(); ++it) {
                    Json factors = Json::array();
                    for (const Word& l : it->first) factors.push_back(l.str());
                    terms.push_back(Json{{"coeff", format_rational(it->second)}, {"factors", factors}});
                }
                j["terms"] = terms;
                out << j.dump() << "\n";
            } else {
                out << format_decomposition(d);
            }
            return exit_ok;
        }

        if (tree_eval_cmd->parsed()) {
            const SyntaxTree t = parse_tree(a.expression);
            const WordSum s = tree_words(t);
            if (json) {
                Json j = envelope();
                j["tree"] = t.str();
                j["weight"] = t.weight();
                j["terms"] = word_sum_json(s);
                out << j.dump() << "\n";
            } else {
                out << format_word_sum(s);
            }
            return exit_ok;
        }

        if (graph_cmd->parsed()) {
            const KGraph g = graph_of_tree(parse_tree(a.expression));
            if (a.format == "json") {
                Json j = envelope();
                j.update(Json::parse(emit_graph(g, GraphFormat::json)));
                out << j.dump() << "\n";
            } else {
                out << emit_graph(g, GraphFormat::dot);
            }
            return exit_ok;
        }

        if (eval_cmd->parsed()) {
            const Word w = word_argument(a.word, a.as);
            const Composition c = composition_from_word(w);
            const double tol = a.tolerance > 0 ? a.tolerance : default_tolerance(w.size());
            const MzvValue zeta = eval_mzv_bounded(c, tol);
            const MzvValue value = eval_word(w, tol);
            if (json) {
                Json j = envelope();
                j["word"] = w.str();
                j["composition"] = c.str();
                j["zeta"] = zeta.value.real();
                j["zeta_error"] = zeta.abs_error_bound;
                j["value"] = Json{{"re", value.value.real()}, {"im", value.value.imag()}};
                j["error"] = value.abs_error_bound;
                out << j.dump() << "\n";
            } else {
                out << "zeta(" << c.str() << ") = " << sig12(zeta.value.real()) << " +/- "
                    << bound_text(zeta.abs_error_bound) << "\n";
                out << "L(" << w << ") = " << complex_text(value.value) << " +/- " << bound_text(value.abs_error_bound)
                    << "\n";
            }
            return exit_ok;
        }

        if (decompose_cmd->parsed()) {
            const Word w = word_argument(a.word, a.as);
            const MzvDecomposition d = decompose_mzv(composition_from_word(w));
            const bool exact = tree_words(d.trees) == WordSum(w);
            if (json) {
                Json j = envelope();
                j["word"] = w.str();
                j["composition"] = d.composition.str();
                j["terms"] = tree_sum_json(d.trees);
                j["identity"] = d.identity();
                j["check"] = exact;
                out << j.dump() << "\n";
            } else {
                out << format_tree_sum(d.trees);
                out << "identity: " << d.identity() << "\n";
                out << "check: I(trees) = 1 " << w << (exact ? " OK" : " FAILED") << "\n";
            }
            return exact ? exit_ok : exit_verification_failed;
        }

        if (certify_cmd->parsed()) {
            if (!is_prime(a.prime)) throw UsageError(std::to_string(a.prime) + " is not prime");
            const Certificate cert = unit_fraction_certificate(a.prime);
            const bool ok = check_certificate(cert);
            Json j = envelope();
            j.update(Json::parse(certificate_json(cert)));
            if (json) j["check"] = ok;
            out << j.dump() << "\n";
            if (!json) {
                out << (ok ? "CHECK OK " : "CHECK FAILED ") << format_rational(ok ? cert.target : certificate_value(cert))
                    << "\n";
            }
            return ok ? exit_ok : exit_verification_failed;
        }

        if (verify_cmd->parsed()) {
            const auto results = run_verify_suite(a.suite, a.tolerance > 0 ? a.tolerance : 1e-8);
            std::size_t failed = 0;
            for (const auto& r : results)
                if (!r.passed) ++failed;
            if (json) {
                Json j = envelope();
                j["suite"] = a.suite;
                Json list = Json::array();
                for (const auto& r : results)
                    list.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                j["results"] = list;
                j["passed"] = failed == 0;
                out << j.dump() << "\n";
            } else {
                for (const auto& r : results)
                    out << (r.passed ? "PASS " : "FAIL ") << r.name << (r.passed ? "" : ": " + r.detail) << "\n";
                out << "suite " << a.suite << ": " << results.size() - failed << " passed, " << failed << " failed\n";
            }
            return failed == 0 ? exit_ok : exit_verification_failed;
        }
    } catch (const ToleranceError& e) {
        err << "error: " << e.what() << "\n";
        return exit_verification_failed;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    err << "error: no command\n";
    return exit_usage;
}

}  // namespace mzvgraph::cli
