#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sla/extension.hpp"
#include "sla/format.hpp"

namespace sla {

// Exit codes: 0 all checks pass; 1 a check failed or a domain precondition
// was not met; 2 usage or parse errors.
enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_usage = 2 };

namespace cli_detail {

inline std::string dims_str(const std::vector<std::size_t>& dims) {
    std::ostringstream out;
    for (std::size_t i = 0; i < dims.size(); ++i)
        out << (i ? " " : "") << dims[i];
    return out.str();
}

inline std::string vec_str(const Vec& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? " " : "") << rat_str(v[i]);
    return out.str();
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

// Lazily computed per-file analysis shared by the expectation engine.
struct Analysis {
    const AlgebraFile& file;
    explicit Analysis(const AlgebraFile& f) : file(f) {}

    // Span equality helper for label-list expectations.
    bool span_matches_labels(const Subspace& space, const std::string& labels_text) const {
        const SuperAlgebra& a = file.parsed;
        Mat rows;
        for (const auto& lbl : detail::split_ws(labels_text)) {
            auto it = std::find(a.labels.begin(), a.labels.end(), lbl);
            if (it == a.labels.end())
                throw ParseError(file.path + ": expect references unknown label '" + lbl + "'");
            rows.push_back(unit_vec(a.dim(), it - a.labels.begin()));
        }
        return subspace_from_rows(rows, a.dim()) == space;
    }

    static bool diag_spans_match(const Mat& got, const std::string& text, std::size_t dim) {
        Mat want;
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ';')) {
            Vec v;
            for (const auto& tok : detail::split_ws(part))
                v.push_back(parse_rat(tok));
            if (v.size() != dim)
                return false;
            want.push_back(std::move(v));
        }
        return subspace_from_rows(got, dim) == subspace_from_rows(want, dim);
    }

    // Evaluates one expectation; returns (got, pass).
    std::pair<std::string, bool> evaluate(const std::string& key, const std::string& want) const {
        const SuperAlgebra& a = file.parsed;
        auto str_eq = [&](const std::string& got) { return std::make_pair(got, got == want); };
        if (key == "nilpotent")
            return str_eq(bool_str(is_nilpotent(a)));
        if (key == "solvable")
            return str_eq(bool_str(is_solvable(a)));
        if (key == "central_dims")
            return str_eq(dims_str(central_series(a).dims()));
        if (key == "derived_dims")
            return str_eq(dims_str(derived_series(a).dims()));
        if (key == "c0_dims")
            return str_eq(dims_str(c_sequences(a).first.dims()));
        if (key == "c1_dims")
            return str_eq(dims_str(c_sequences(a).second.dims()));
        if (key == "center_dim")
            return str_eq(std::to_string(center(a).dim()));
        if (key == "der_even_dim")
            return str_eq(std::to_string(derivation_space(a, 0).size()));
        if (key == "der_odd_dim")
            return str_eq(std::to_string(derivation_space(a, 1).size()));
        if (key == "rank")
            return str_eq(std::to_string(rank_and_torus_dim(a).first));
        if (key == "torus_dim")
            return str_eq(std::to_string(maximal_torus(a).diag_basis.size()));
        if (key == "gen_k")
            return str_eq(std::to_string(generator_space(a).k));
        if (key == "gen_s")
            return str_eq(std::to_string(generator_space(a).s));
        if (key == "max_rank")
            return str_eq(bool_str(is_maximal_rank(a)));
        if (key == "char_nilpotent")
            return str_eq(bool_str(is_characteristically_nilpotent(a)));
        if (key == "nilradical") {
            Subspace nil = nilradical_solvable(a);
            std::ostringstream got;
            got << "dim " << nil.dim();
            return {got.str(), span_matches_labels(nil, want)};
        }
        if (key == "torus_diag") {
            Torus t = maximal_torus(a);
            Mat got = t.diag_basis;
            std::ostringstream g;
            for (std::size_t i = 0; i < got.size(); ++i)
                g << (i ? "; " : "") << vec_str(got[i]);
            return {g.str(), diag_spans_match(got, want, a.dim())};
        }
        throw ParseError(file.path + ": unknown expect key '" + key + "'");
    }
};

struct CheckRow {
    std::string algebra, key, expected, got;
    bool pass = false;
};

inline std::vector<CheckRow> run_expectations(const AlgebraFile& file) {
    std::vector<CheckRow> rows;
    Analysis an(file);
    for (const auto& [key, want] : file.declared_expectations) {
        CheckRow row{file.parsed.name, key, want, "", false};
        try {
            auto [got, pass] = an.evaluate(key, want);
            row.got = got;
            row.pass = pass;
        } catch (const SlaError& e) {
            row.got = std::string("error: ") + e.what();
            row.pass = false;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace cli_detail

// Runs the tool on already-split arguments (excluding argv[0]); all output
// goes to the supplied streams so tests can capture it.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact structure-constant calculator for superalgebras"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string parity_choice = "both";
    std::string out_path;
    std::string suite = "paper";
    std::string format = "text";

    auto add_files = [&](CLI::App* sub) {
        sub->add_option("files", files, "algebra files")->required()->expected(-1);
    };
    CLI::App* c_validate = app.add_subcommand("validate", "check structure constants");
    add_files(c_validate);
    CLI::App* c_series = app.add_subcommand("series", "print descending series dims");
    add_files(c_series);
    CLI::App* c_derive = app.add_subcommand("derive", "print superderivation spaces");
    c_derive->add_option("--parity", parity_choice, "even, odd or both")
        ->check(CLI::IsMember({"even", "odd", "both"}));
    add_files(c_derive);
    CLI::App* c_torus = app.add_subcommand("torus", "print a maximal torus");
    add_files(c_torus);
    CLI::App* c_rank = app.add_subcommand("rank", "rank and maximal-rank verdict");
    add_files(c_rank);
    CLI::App* c_extend = app.add_subcommand("extend", "construct the maximal solvable extension");
    c_extend->add_option("--out", out_path, "write the model to a file");
    add_files(c_extend);
    CLI::App* c_check = app.add_subcommand("check", "run declared golden expectations");
    c_check->add_option("--suite", suite, "expectation suite name");
    add_files(c_check);
    CLI::App* c_report = app.add_subcommand("report", "tabulate golden expectations");
    c_report->add_option("--format", format, "text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}));
    add_files(c_report);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return exit_ok;
        }
        err << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (c_check->parsed() && suite != "paper") {
            err << "unknown suite '" << suite << "'\n";
            return exit_usage;
        }
        std::vector<AlgebraFile> parsed;
        for (const auto& f : files)
            parsed.push_back(parse_algebra_file(f));

        bool all_ok = true;
        if (c_validate->parsed()) {
            for (const auto& file : parsed) {
                ValidationReport rep = validate(file.parsed);
                if (rep.ok()) {
                    out << file.parsed.name << ": ok ("
                        << file.parsed.n << "|" << file.parsed.m << ")\n";
                } else {
                    all_ok = false;
                    out << file.parsed.name << ": " << rep.violations.size() << " violation(s)\n";
                    for (const auto& v : rep.violations)
                        out << "  " << v.kind << ": " << v.description << "\n";
                }
            }
        } else if (c_series->parsed()) {
            for (const auto& file : parsed) {
                const auto& a = file.parsed;
                out << a.name << "\n";
                out << "  central " << cli_detail::dims_str(central_series(a).dims()) << "\n";
                out << "  derived " << cli_detail::dims_str(derived_series(a).dims()) << "\n";
                auto cc = c_sequences(a);
                out << "  c0 " << cli_detail::dims_str(cc.first.dims()) << "\n";
                out << "  c1 " << cli_detail::dims_str(cc.second.dims()) << "\n";
            }
        } else if (c_derive->parsed()) {
            for (const auto& file : parsed) {
                const auto& a = file.parsed;
                out << a.name << "\n";
                auto print_space = [&](int parity, const char* tag) {
                    auto ders = derivation_space(a, parity);
                    out << "  " << tag << " dim=" << ders.size() << "\n";
                    for (std::size_t k = 0; k < ders.size(); ++k) {
                        out << "  d" << (k + 1) << ":";
                        bool empty = true;
                        for (std::size_t j = 0; j < a.dim(); ++j) {
                            Vec col(a.dim(), Rat(0));
                            for (std::size_t i = 0; i < a.dim(); ++i)
                                col[i] = ders[k].map[i][j];
                            if (vec_is_zero(col))
                                continue;
                            out << " " << a.labels[j] << "->";
                            bool first = true;
                            for (std::size_t i = 0; i < a.dim(); ++i) {
                                if (col[i] == 0)
                                    continue;
                                if (!first)
                                    out << "+";
                                out << rat_str(col[i]) << "*" << a.labels[i];
                                first = false;
                            }
                            empty = false;
                        }
                        if (empty)
                            out << " 0";
                        out << "\n";
                    }
                };
                if (parity_choice == "even" || parity_choice == "both")
                    print_space(0, "even");
                if (parity_choice == "odd" || parity_choice == "both")
                    print_space(1, "odd");
            }
        } else if (c_torus->parsed()) {
            for (const auto& file : parsed) {
                const auto& a = file.parsed;
                auto [rank, tdim] = rank_and_torus_dim(a);
                Torus t = maximal_torus(a);
                out << a.name << ": rank=" << rank << " torus_dim=" << t.diag_basis.size()
                    << "\n";
                for (const auto& dv : t.diag_basis)
                    out << "  diag " << cli_detail::vec_str(dv) << "\n";
            }
        } else if (c_rank->parsed()) {
            for (const auto& file : parsed) {
                const auto& a = file.parsed;
                auto [rank, tdim] = rank_and_torus_dim(a);
                GeneratorSpace g = generator_space(a);
                Torus t = maximal_torus(a);
                out << a.name << ": rank=" << rank << " torus_dim=" << t.diag_basis.size()
                    << " k=" << g.k << " s=" << g.s << " max_rank="
                    << (t.diag_basis.size() == g.k + g.s ? "yes" : "no") << "\n";
            }
        } else if (c_extend->parsed()) {
            for (const auto& file : parsed) {
                SolvableModel model = maximal_solvable_extension(file.parsed);
                const std::string text = serialize_algebra(model.algebra);
                if (!out_path.empty()) {
                    std::ofstream f(out_path);
                    if (!f)
                        throw SlaError("cannot write '" + out_path + "'");
                    f << text;
                    out << "wrote " << out_path << "\n";
                } else {
                    out << text;
                }
                out << "# q_split = " << model.q_split.first << " " << model.q_split.second
                    << "\n";
            }
        } else if (c_check->parsed()) {
            for (const auto& file : parsed) {
                auto rows = cli_detail::run_expectations(file);
                for (const auto& row : rows) {
                    if (!row.pass)
                        all_ok = false;
                    out << (row.pass ? "PASS" : "FAIL") << " " << row.algebra << " " << row.key
                        << ": expected '" << row.expected << "' got '" << row.got << "'\n";
                }
            }
            out << (all_ok ? "all expectations hold" : "some expectations failed") << "\n";
        } else if (c_report->parsed()) {
            if (format == "tsv")
                out << "algebra\tcheck\texpected\tgot\tpass\n";
            for (const auto& file : parsed) {
                auto rows = cli_detail::run_expectations(file);
                for (const auto& row : rows) {
                    if (!row.pass)
                        all_ok = false;
                    if (format == "tsv")
                        out << row.algebra << "\t" << row.key << "\t" << row.expected << "\t"
                            << row.got << "\t" << (row.pass ? "yes" : "no") << "\n";
                    else
                        out << (row.pass ? "  ok  " : " FAIL ") << row.algebra << "." << row.key
                            << "  expected=" << row.expected << "  got=" << row.got << "\n";
                }
            }
        }
        return all_ok ? exit_ok : exit_check_failed;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const SlaError& e) {
        err << e.what() << "\n";
        return exit_check_failed;
    }
}

} // namespace sla
