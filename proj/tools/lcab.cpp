// Command-line front end: term parsing, validation, duality, predicates,
// classification, Z_p linear algebra, the verification scenarios, and the
// golden-corpus replay.  Output is JSON (pretty by default, compact with
// --json); exit codes: 0 success, 1 domain error, 2 usage error.

#include "lcab/classify.hpp"
#include "lcab/dual.hpp"
#include "lcab/json_io.hpp"
#include "lcab/monolith.hpp"
#include "lcab/parse.hpp"
#include "lcab/render.hpp"
#include "lcab/validate.hpp"
#include "lcab/zp.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using lcab::json;

struct output_options {
    bool compact = false;
};

void emit(const json& j, const output_options& out) {
    if (out.compact)
        std::cout << j.dump() << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

json error_json(const std::string& kind, const std::string& message) {
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

int emit_error(const std::exception& e, const output_options& out) {
    json j;
    if (const auto* pe = dynamic_cast<const lcab::parse_error*>(&e)) {
        j = error_json("parse", pe->what());
        j["error"]["offset"] = pe->offset;
    } else if (dynamic_cast<const lcab::precision_error*>(&e)) {
        j = error_json("precision", e.what());
    } else if (dynamic_cast<const std::domain_error*>(&e)) {
        j = error_json("domain", e.what());
    } else if (dynamic_cast<const std::invalid_argument*>(&e)) {
        j = error_json("invalid", e.what());
    } else {
        j = error_json("internal", e.what());
    }
    emit(j, out);
    return 1;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

json classify_line(const std::string& line) {
    try {
        lcab::group_expr e = lcab::parse_expr(line);
        return lcab::verdict_to_json(lcab::characteristically_simple(e));
    } catch (const lcab::parse_error& pe) {
        json j = error_json("parse", pe.what());
        j["error"]["offset"] = pe.offset;
        return j;
    } catch (const std::exception& e) {
        return error_json("domain", e.what());
    }
}

int run_batch(std::istream& in, const output_options&) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            std::cout << error_json("empty", "blank input line").dump() << "\n";
        else
            std::cout << classify_line(line).dump() << "\n";
    }
    return 0;
}

int run_corpus(const std::string& path, const output_options& out) {
    std::ifstream in(path);
    if (!in) {
        emit(error_json("invalid", "cannot open corpus file '" + path + "'"), out);
        return 1;
    }
    std::size_t total = 0;
    json mismatches = json::array();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) {
            mismatches.push_back({{"line", lineno}, {"reason", "missing tab separator"}});
            continue;
        }
        std::string term = line.substr(0, tab);
        json expected = json::parse(line.substr(tab + 1), nullptr, false);
        if (expected.is_discarded()) {
            mismatches.push_back({{"line", lineno}, {"term", term}, {"reason", "unparseable expected JSON"}});
            continue;
        }
        ++total;
        json got = classify_line(term);
        if (got != expected)
            mismatches.push_back({{"line", lineno}, {"term", term}, {"expected", expected}, {"got", got}});
    }
    emit({{"total", total}, {"mismatch_count", mismatches.size()}, {"mismatches", mismatches}}, out);
    return mismatches.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for abelian l.c.s.c. groups: duality, classification, and monolith checks"};
    app.require_subcommand(1);
    output_options out;

    std::string term, batch_path, corpus_path = "data/golden_corpus.txt";
    std::int64_t precision = 64, window = 16, shift_range = 3;
    std::uint64_t seed = 1, trials = 0, p = 2, q = 4;
    std::size_t ambient = 2;
    std::string vectors_json, target_json, primes_csv, vector_csv, lambdas_csv, matrices_json;
    std::string padic_literal = "1", laurent_literal;
    std::uint64_t root_n = 2;

    auto add_json_flag = [&](CLI::App* cmd) { cmd->add_flag("--json", out.compact, "compact single-line JSON"); };

    auto* cmd_parse = app.add_subcommand("parse", "parse a term and print its AST");
    cmd_parse->add_option("term", term)->required();
    add_json_flag(cmd_parse);

    auto* cmd_validate = app.add_subcommand("validate", "check the l.c.s.c. side conditions");
    cmd_validate->add_option("term", term)->required();
    add_json_flag(cmd_validate);

    auto* cmd_dual = app.add_subcommand("dual", "Pontryagin dual of a term");
    cmd_dual->add_option("term", term)->required();
    add_json_flag(cmd_dual);

    auto* cmd_pred = app.add_subcommand("predicates", "structural predicate vector of a term");
    cmd_pred->add_option("term", term)->required();
    add_json_flag(cmd_pred);

    auto* cmd_classify = app.add_subcommand("classify", "decide characteristic simplicity");
    cmd_classify->add_option("term", term);
    cmd_classify->add_option("--batch", batch_path, "file of one term per line ('-' for stdin)");
    add_json_flag(cmd_classify);

    auto* cmd_zp = app.add_subcommand("zp", "Z_p-module linear algebra at precision p^M");
    cmd_zp->require_subcommand(1);
    auto* zp_tri = cmd_zp->add_subcommand("triangularize", "triangular basis of a summand chain");
    auto* zp_pure = cmd_zp->add_subcommand("pure", "purity of a submodule");
    auto* zp_complete = cmd_zp->add_subcommand("complete", "complete a pure submodule to an ambient basis");
    auto* zp_root = cmd_zp->add_subcommand("root", "n-th root of a vector inside a span");
    for (auto* c : {zp_tri, zp_pure, zp_complete, zp_root}) {
        c->add_option("--p", p, "prime")->capture_default_str();
        c->add_option("--precision", precision, "digits M of p^M")->default_val(32);
        c->add_option("--ambient", ambient, "ambient rank")->required();
        c->add_option("--vectors", vectors_json, "JSON array of vectors of integer strings")->required();
        add_json_flag(c);
    }
    zp_root->add_option("--target", target_json, "vector v as a JSON array")->required();
    zp_root->add_option("--n", root_n, "the multiplier")->capture_default_str();

    auto* cmd_verify = app.add_subcommand("verify", "replay a monolith construction at desk scale");
    cmd_verify->require_subcommand(1);
    auto* v_wreath = cmd_verify->add_subcommand("wreath", "AGL1(q) wr C_k normal closures");
    v_wreath->add_option("--q", q, "field size (p or p^2)")->capture_default_str();
    v_wreath->add_option("--window", window, "cyclic window k")->default_val(3);
    v_wreath->add_option("--trials", trials, "random starting elements")->default_val(100);
    v_wreath->add_option("--seed", seed)->capture_default_str();
    auto* v_laurent = cmd_verify->add_subcommand("laurent", "F_p((t)) shift-span density");
    v_laurent->add_option("--p", p)->capture_default_str();
    v_laurent->add_option("--window", window, "window N")->capture_default_str();
    v_laurent->add_option("--trials", trials)->default_val(200);
    v_laurent->add_option("--seed", seed)->capture_default_str();
    v_laurent->add_option("--g", laurent_literal, "single explicit g instead of random trials");
    auto* v_qp = cmd_verify->add_subcommand("qp-semidirect", "Q_p x| <mult by p> orbit module");
    v_qp->add_option("--p", p)->capture_default_str();
    v_qp->add_option("--shift-range", shift_range, "K")->capture_default_str();
    v_qp->add_option("--a", padic_literal, "p-adic literal")->capture_default_str();
    v_qp->add_option("--precision", precision)->capture_default_str();
    auto* v_hall = cmd_verify->add_subcommand("hall", "Hall's Q^(Z) window model");
    v_hall->add_option("--window", window, "window k")->default_val(3);
    v_hall->add_option("--primes", primes_csv, "comma-separated prime assignment");
    v_hall->add_option("--v", vector_csv, "comma-separated rational vector");
    v_hall->add_option("--trials", trials, "random vectors (overrides --v)")->default_val(1);
    v_hall->add_option("--seed", seed)->capture_default_str();
    auto* v_nogo = cmd_verify->add_subcommand("no-go", "Q^n denominator obstruction certificate");
    v_nogo->add_option("--matrices", matrices_json, "JSON: list of matrices of rational strings")->required();
    auto* v_diag = cmd_verify->add_subcommand("diagonals", "diagonal minimal subgroups of Q_p^2 x| <s>");
    v_diag->add_option("--p", p)->capture_default_str();
    v_diag->add_option("--lambdas", lambdas_csv, "comma-separated p-adic literals")->required();
    v_diag->add_option("--shift-range", shift_range, "K")->capture_default_str();
    v_diag->add_option("--precision", precision)->capture_default_str();
    for (auto* c : {v_wreath, v_laurent, v_qp, v_hall, v_nogo, v_diag}) add_json_flag(c);

    auto* cmd_corpus = app.add_subcommand("corpus", "replay the golden corpus of classified terms");
    cmd_corpus->add_option("--file", corpus_path, "corpus path")->capture_default_str();
    add_json_flag(cmd_corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_parse->parsed()) {
            lcab::group_expr e = lcab::parse_expr(term);
            emit({{"ok", true}, {"ast", lcab::expr_to_json(e)}, {"rendered", lcab::render(e)}}, out);
            return 0;
        }
        if (cmd_validate->parsed()) {
            lcab::group_expr e = lcab::parse_expr(term);
            emit(lcab::validation_report_to_json(lcab::validate(e)), out);
            return 0;
        }
        if (cmd_dual->parsed()) {
            lcab::group_expr d = lcab::dual(lcab::parse_expr(term));
            emit({{"result", lcab::render(d)}, {"ast", lcab::expr_to_json(d)}}, out);
            return 0;
        }
        if (cmd_pred->parsed()) {
            lcab::group_expr e = lcab::parse_expr(term);
            json j = lcab::predicate_vector_to_json(lcab::predicate_vector_of(e));
            j["nondense_primes"] = lcab::prime_set_to_json(lcab::nondense_primes(e));
            emit(j, out);
            return 0;
        }
        if (cmd_classify->parsed()) {
            if (!batch_path.empty()) {
                if (batch_path == "-") return run_batch(std::cin, out);
                std::ifstream in(batch_path);
                if (!in) {
                    emit(error_json("invalid", "cannot open '" + batch_path + "'"), out);
                    return 1;
                }
                return run_batch(in, out);
            }
            if (term.empty()) {
                emit(error_json("invalid", "classify needs a term or --batch"), out);
                return 2;
            }
            lcab::group_expr e = lcab::parse_expr(term);
            emit(lcab::verdict_to_json(lcab::characteristically_simple(e)), out);
            return 0;
        }
        if (cmd_zp->parsed()) {
            auto vectors = lcab::zp_vectors_from_json(json::parse(vectors_json));
            if (zp_tri->parsed()) {
                emit(lcab::zp_basis_to_json(lcab::triangular_basis(vectors, ambient, p, precision)), out);
            } else if (zp_pure->parsed()) {
                emit({{"pure", lcab::is_pure(vectors, ambient, p, precision)}}, out);
            } else if (zp_complete->parsed()) {
                emit(lcab::zp_basis_to_json(lcab::complete_to_summand(vectors, ambient, p, precision)), out);
            } else {
                lcab::zp_vector v;
                for (const auto& x : json::parse(target_json))
                    v.push_back(x.is_string() ? lcab::integer(x.get<std::string>())
                                              : lcab::integer(x.get<std::int64_t>()));
                auto w = lcab::has_root(v, root_n, vectors, p, precision);
                json j;
                j["found"] = w.has_value();
                if (w) {
                    json row = json::array();
                    for (const auto& x : *w) row.push_back(x.str());
                    j["root"] = row;
                }
                emit(j, out);
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            if (v_wreath->parsed()) {
                emit(lcab::closure_report_to_json(
                         lcab::wreath_monolith_window(q, static_cast<std::size_t>(window), trials, seed)),
                     out);
            } else if (v_laurent->parsed()) {
                if (!laurent_literal.empty()) {
                    lcab::laurent g = lcab::laurent::parse_literal(laurent_literal, p);
                    auto [rank, dim] = lcab::laurent_shift_span_rank(p, window, g);
                    emit({{"rank", rank}, {"window_dimension", dim}, {"contained", rank == dim}}, out);
                } else {
                    emit(lcab::closure_report_to_json(lcab::laurent_ideal_density(p, window, trials, seed)), out);
                }
            } else if (v_qp->parsed()) {
                lcab::padic a = lcab::padic::parse_literal(padic_literal, p, precision);
                emit(lcab::closure_report_to_json(lcab::qp_semidirect_monolith(p, shift_range, a)), out);
            } else if (v_hall->parsed()) {
                std::size_t k = static_cast<std::size_t>(window);
                std::vector<std::uint64_t> primes;
                if (primes_csv.empty()) {
                    for (std::uint64_t c = 2; primes.size() < k; ++c)
                        if (lcab::is_prime(c)) primes.push_back(c);
                } else {
                    for (const auto& s : split_list(primes_csv)) primes.push_back(std::stoull(s));
                }
                if (trials > 1) {
                    std::mt19937_64 rng(seed);
                    std::uniform_int_distribution<int> entry(-9, 9);
                    json reports = json::array();
                    bool all = true;
                    for (std::uint64_t t = 0; t < trials; ++t) {
                        std::vector<lcab::rational> v(k);
                        bool nonzero = false;
                        for (auto& x : v) nonzero |= (x = lcab::rational(entry(rng))) != 0;
                        if (!nonzero) v[0] = 1;
                        auto r = lcab::hall_window_minimality(k, primes, v);
                        all &= r.target_contained;
                        reports.push_back(lcab::closure_report_to_json(r));
                    }
                    emit({{"all_full", all}, {"trials", reports}}, out);
                } else {
                    std::vector<lcab::rational> v;
                    if (vector_csv.empty()) {
                        v.assign(k, lcab::rational(0));
                        v[0] = 1;
                    } else {
                        for (const auto& s : split_list(vector_csv)) v.push_back(lcab::parse_rational(s));
                    }
                    emit(lcab::closure_report_to_json(lcab::hall_window_minimality(k, primes, v)), out);
                }
            } else if (v_nogo->parsed()) {
                std::vector<lcab::rational_matrix> mats;
                for (const auto& jm : json::parse(matrices_json)) {
                    lcab::rational_matrix m;
                    for (const auto& jrow : jm) {
                        std::vector<lcab::rational> row;
                        for (const auto& x : jrow)
                            row.push_back(x.is_string() ? lcab::parse_rational(x.get<std::string>())
                                                        : lcab::rational(x.get<std::int64_t>()));
                        m.push_back(std::move(row));
                    }
                    mats.push_back(std::move(m));
                }
                auto cert = lcab::rational_no_go(mats);
                json j = lcab::no_go_certificate_to_json(cert);
                // the Qhat^n side follows by duality, not by a second simulation
                std::size_t n = mats.front().size();
                auto qn = lcab::canonical_form::rationals_sum(lcab::cardinal::finite(n));
                j["blocked_group"] = lcab::canonical_form_to_json(qn);
                j["dual_statement"] = lcab::canonical_form_to_json(lcab::dual_canonical(qn));
                emit(j, out);
            } else if (v_diag->parsed()) {
                std::vector<lcab::padic> lambdas;
                for (const auto& s : split_list(lambdas_csv))
                    lambdas.push_back(lcab::padic::parse_literal(s, p, precision));
                emit(lcab::closure_report_to_json(lcab::diagonal_minimals(p, lambdas, shift_range, precision)),
                     out);
            }
            return 0;
        }
        if (cmd_corpus->parsed()) return run_corpus(corpus_path, out);
    } catch (const std::exception& e) {
        return emit_error(e, out);
    }
    return 2;
}
