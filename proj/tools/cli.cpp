/*
   Copyright 2026 The omegapi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "omegapi/algebra_io.hpp"
#include "omegapi/builtin_algebras.hpp"
#include "omegapi/codim.hpp"
#include "omegapi/errors.hpp"
#include "omegapi/evaluate.hpp"
#include "omegapi/group_word.hpp"
#include "omegapi/normal_forms.hpp"
#include "omegapi/parser.hpp"
#include "omegapi/relation_sets.hpp"
#include "omegapi/word_eval.hpp"

namespace omegapi::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string builtin;
    std::string algebra_file;
    std::size_t dim = 2;
    std::string group = "s3";
    std::string field = "q";
    std::string format = "text";
    std::optional<std::size_t> bound;
    std::size_t threads = 0;
    std::size_t max_entries = SaturationOptions{}.max_entries;
};

void add_algebra_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--builtin", cfg.builtin, "built-in algebra name (see 'builtin list')");
    cmd->add_option("--algebra", cfg.algebra_file, "algebra JSON file");
    cmd->add_option("--dim", cfg.dim, "dimension for vector-space")->check(CLI::PositiveNumber);
    cmd->add_option("--group", cfg.group, "group for group-hopf: cN, sN (N <= 5), klein");
    cmd->add_option("--field", cfg.field, "q or gfp:P");
}

void add_format_option(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--format", cfg.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
}

void add_engine_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("-K,--bound", cfg.bound, "bound on intermediate objects");
    cmd->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    cmd->add_option("--max-entries", cfg.max_entries, "cap on stored span entries per source object");
}

FiniteOmegaAlgebra load(const Config& cfg) {
    if (cfg.builtin.empty() == cfg.algebra_file.empty())
        throw UsageError("give exactly one of --builtin or --algebra");
    BuiltinParams params;
    params.dim = cfg.dim;
    params.group = cfg.group;
    FiniteOmegaAlgebra alg = cfg.builtin.empty() ? load_algebra(cfg.algebra_file) : builtin_algebra(cfg.builtin, params);
    const FieldSpec field = FieldSpec::parse(cfg.field);
    if (field != alg.field()) alg = alg.with_field(field);
    return alg;
}

SaturationOptions engine_options(const Config& cfg) {
    SaturationOptions opt;
    opt.threads = cfg.threads;
    opt.max_entries = cfg.max_entries;
    return opt;
}

std::string tuple_string(const std::vector<std::size_t>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

Json sparse_json(const SparseVector<Rational>& v) {
    Json out = Json::array();
    for (const auto& [i, x] : v) out.push_back(Json::array({i, x.to_string()}));
    return out;
}

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (const auto& row : m.to_dense()) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.to_string());
        rows.push_back(std::move(r));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

void print_matrix(std::ostream& out, const Matrix& m, const std::string& format) {
    if (format == "json") {
        out << matrix_json(m).dump(2) << "\n";
    } else if (format == "csv") {
        for (const auto& row : m.to_dense()) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << row[j].to_string();
            out << "\n";
        }
    } else {
        out << m.rows() << "x" << m.cols() << "\n" << m;
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        const auto b = cur.find_first_not_of(" \t\n");
        const auto e = cur.find_last_not_of(" \t\n");
        out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    }
    return out;
}

int cmd_validate(const Config& cfg, const std::string& relations, std::ostream& out) {
    const FiniteOmegaAlgebra alg = load(cfg);
    const BraidingReport br = validate_braiding(alg.braiding_matrix());
    std::vector<RelationResult> results;
    if (!relations.empty()) {
        RelationSet set = relation_set(relations);
        results = validate_relations(alg, set.relators);
    }
    const std::size_t passed = static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const RelationResult& r) { return r.passed; }));
    const bool ok = br.passed() && passed == results.size();

    if (cfg.format == "json") {
        Json b{{"dim", br.dim},
               {"invertible", br.invertible},
               {"yang_baxter", br.yang_baxter},
               {"involutive", br.involutive},
               {"order", br.order ? Json(*br.order) : Json(nullptr)}};
        if (!br.yang_baxter) b["residual"] = matrix_json(br.residual);
        Json rel = Json::array();
        for (const auto& r : results) {
            Json j{{"name", r.name}, {"passed", r.passed}};
            if (!r.passed) {
                j["witness_input"] = r.witness_input;
                j["witness_output"] = sparse_json(r.witness_output);
            }
            rel.push_back(std::move(j));
        }
        out << Json{{"braiding", std::move(b)}, {"relations", std::move(rel)}, {"passed", ok}}.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "check,passed\n";
        out << "braiding," << (br.passed() ? "true" : "false") << "\n";
        for (const auto& r : results) out << r.name << "," << (r.passed ? "true" : "false") << "\n";
    } else {
        out << "braiding: " << (br.passed() ? "ok" : "FAILED") << " (dim " << br.dim
            << (br.invertible ? ", invertible" : ", not invertible")
            << (br.yang_baxter ? ", Yang-Baxter" : ", Yang-Baxter fails")
            << (br.involutive ? ", involutive" : ", not involutive");
        if (br.order) out << ", order " << *br.order;
        out << ")\n";
        if (!br.yang_baxter) out << "residual:\n" << br.residual;
        for (const auto& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (!r.passed) {
                out << " at input " << tuple_string(r.witness_input) << ", output";
                for (const auto& [i, x] : r.witness_output) out << " [" << i << "]=" << x.to_string();
            }
            out << "\n";
        }
        if (!relations.empty()) out << passed << "/" << results.size() << " relations passed\n";
    }
    return ok ? kPass : kFail;
}

int cmd_eval(const Config& cfg, const std::string& term, const std::string& poly, std::ostream& out) {
    if (term.empty() == poly.empty()) throw UsageError("give exactly one of --term or --poly");
    const FiniteOmegaAlgebra alg = load(cfg);
    Matrix m = term.empty() ? evaluate_poly(alg, parse_polynomial(poly, alg.signature()))
                            : evaluate(alg, parse_term(term, alg.signature()));
    print_matrix(out, m, cfg.format);
    return kPass;
}

int cmd_check(const Config& cfg, const std::string& poly, std::ostream& out) {
    if (poly.empty()) throw UsageError("--poly is required");
    const FiniteOmegaAlgebra alg = load(cfg);
    Polynomial p = parse_polynomial(poly, alg.signature());
    const auto results = validate_relations(alg, {{"poly", p}});
    const RelationResult& r = results.front();
    if (cfg.format == "json") {
        Json j{{"polynomial", to_string(p)}, {"identity", r.passed}};
        if (!r.passed) {
            j["witness_input"] = r.witness_input;
            j["witness_output"] = sparse_json(r.witness_output);
        }
        out << j.dump(2) << "\n";
    } else {
        out << (r.passed ? "identity" : "not an identity");
        if (!r.passed) {
            out << ": nonzero at input " << tuple_string(r.witness_input) << ", output";
            for (const auto& [i, x] : r.witness_output) out << " [" << i << "]=" << x.to_string();
        }
        out << "\n";
    }
    return r.passed ? kPass : kFail;
}

Json codim_json(const CodimResult& r) {
    return Json{{"m", r.m},         {"n", r.n},
                {"K", r.bound},     {"value", r.value},
                {"rank_next", r.rank_next}, {"stable", r.stable}};
}

void warn_unstable(const CodimResult& r, std::ostream& err) {
    if (r.stable) return;
    err << "warning: c(" << r.m << "," << r.n << ") is not stable: rank " << r.value << " at K=" << r.bound
        << ", rank " << r.rank_next << " at K=" << r.bound + 1 << "\n";
}

std::size_t checked_bound(const Config& cfg, std::size_t need) {
    if (cfg.bound && *cfg.bound < need)
        throw UsageError("-K " + std::to_string(*cfg.bound) + " is below the requested object " +
                         std::to_string(need));
    return need;
}

int cmd_codim(const Config& cfg, std::size_t m, std::size_t n, std::ostream& out, std::ostream& err) {
    checked_bound(cfg, std::max(m, n));
    const FiniteOmegaAlgebra alg = load(cfg);
    const CodimResult r = codim(alg, m, n, cfg.bound, engine_options(cfg));
    if (cfg.format == "json") {
        out << codim_json(r).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "m,n,K,value,rank_next,stable\n"
            << r.m << "," << r.n << "," << r.bound << "," << r.value << "," << r.rank_next << ","
            << (r.stable ? "true" : "false") << "\n";
    } else {
        out << r.value << "\n";
        out << "c(" << m << "," << n << ") = " << r.value << " at K=" << r.bound << ", "
            << (r.stable ? "stable" : "NOT stable") << " (rank " << r.rank_next << " at K=" << r.bound + 1
            << ")\n";
    }
    warn_unstable(r, err);
    return kPass;
}

int cmd_table(const Config& cfg, std::size_t max_m, std::size_t max_n, std::ostream& out, std::ostream& err) {
    checked_bound(cfg, std::max(max_m, max_n));
    const FiniteOmegaAlgebra alg = load(cfg);
    const auto grid = codim_table(alg, max_m, max_n, cfg.bound, engine_options(cfg));
    if (cfg.format == "json") {
        Json cells = Json::array();
        for (const auto& row : grid)
            for (const auto& r : row) cells.push_back(codim_json(r));
        out << cells.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "m,n,K,value,rank_next,stable\n";
        for (const auto& row : grid)
            for (const auto& r : row)
                out << r.m << "," << r.n << "," << r.bound << "," << r.value << "," << r.rank_next << ","
                    << (r.stable ? "true" : "false") << "\n";
    } else {
        std::size_t width = 3;
        for (const auto& row : grid)
            for (const auto& r : row) width = std::max(width, std::to_string(r.value).size() + 2);
        out << "K=" << grid.front().front().bound << " (* = rank still grows at K+1)\n";
        out << std::setw(4) << "m\\n";
        for (std::size_t n = 0; n <= max_n; ++n) out << std::setw(static_cast<int>(width)) << n;
        out << "\n";
        bool any_unstable = false;
        for (const auto& row : grid) {
            out << std::setw(4) << row.front().m;
            for (const auto& r : row) {
                std::string cell = std::to_string(r.value) + (r.stable ? "" : "*");
                any_unstable = any_unstable || !r.stable;
                out << std::setw(static_cast<int>(width)) << cell;
            }
            out << "\n";
        }
        if (!any_unstable) out << "all entries stable\n";
    }
    for (const auto& row : grid)
        for (const auto& r : row) warn_unstable(r, err);
    return kPass;
}

int cmd_identities(const Config& cfg, const std::string& terms_text, std::ostream& out) {
    if (terms_text.empty()) throw UsageError("--terms is required");
    const FiniteOmegaAlgebra alg = load(cfg);
    std::vector<Term> terms;
    for (const auto& t : split(terms_text, ';'))
        if (!t.empty()) terms.push_back(parse_term(t, alg.signature()));
    const auto ids = find_identities(alg, terms);
    if (cfg.format == "json") {
        Json list = Json::array();
        for (const auto& p : ids) list.push_back(to_string(p));
        out << Json{{"terms", terms.size()}, {"dimension", ids.size()}, {"identities", std::move(list)}}.dump(2)
            << "\n";
    } else {
        out << "kernel dimension " << ids.size() << " of " << terms.size() << " terms\n";
        for (const auto& p : ids) out << to_string(p) << "\n";
    }
    return kPass;
}

int cmd_normal_form(const Config& cfg, const std::string& kind, std::size_t m, const std::string& words_text,
                    std::ostream& out) {
    const GroupWord::Kind wk = kind == "phi" ? GroupWord::Kind::Free : GroupWord::Kind::FreeAbelian;
    std::vector<GroupWord> words;
    if (!words_text.empty())
        for (const auto& w : split(words_text, ',')) words.push_back(GroupWord::parse(w, wk));
    const Term t = kind == "phi" ? phi(m, words) : psi(m, words);

    WordTuple xs;
    for (std::size_t k = 1; k <= m; ++k) xs.push_back(GroupWord::generator(wk, k));
    const WordVector got = apply(t, WordVector::basis(xs, wk));
    const WordVector want = WordVector::basis(words, wk);
    const bool ok = got == want;

    if (cfg.format == "json") {
        out << Json{{"kind", kind}, {"m", m}, {"term", to_string(t)}, {"value", got.to_string()}, {"round_trip", ok}}
                   .dump(2)
            << "\n";
    } else {
        out << to_string(t) << "\n";
        out << "round-trip: " << (ok ? "pass" : "FAIL") << " (" << got.to_string() << ")\n";
    }
    return ok ? kPass : kFail;
}

int cmd_builtin_list(const Config& cfg, std::ostream& out) {
    if (cfg.format == "json") {
        Json list = Json::array();
        for (const auto& b : builtin_catalog()) list.push_back(Json{{"name", b.name}, {"description", b.description}});
        Json rel = relation_set_names();
        out << Json{{"algebras", std::move(list)}, {"relation_sets", std::move(rel)}}.dump(2) << "\n";
        return kPass;
    }
    for (const auto& b : builtin_catalog()) out << std::left << std::setw(16) << b.name << b.description << "\n";
    out << "relation sets:";
    for (const auto& r : relation_set_names()) out << " " << r;
    out << "\n";
    return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"omegapi: polynomial identities and codimensions of finite Omega-algebras", "omegapi"};
    app.require_subcommand(1);
    Config cfg;

    auto* validate = app.add_subcommand("validate", "check the braiding and a relation set");
    std::string relations;
    add_algebra_options(validate, cfg);
    add_format_option(validate, cfg);
    validate->add_option("--relations", relations, "relation set, e.g. v-hopf or v2(3)");

    auto* eval = app.add_subcommand("eval", "evaluate a term or polynomial to a matrix");
    std::string term, poly, terms, words, kind;
    add_algebra_options(eval, cfg);
    add_format_option(eval, cfg);
    eval->add_option("--term", term, "term text");
    eval->add_option("--poly", poly, "polynomial text");

    auto* check = app.add_subcommand("check", "test whether a polynomial is an identity");
    add_algebra_options(check, cfg);
    add_format_option(check, cfg);
    check->add_option("--poly", poly, "polynomial text")->required();

    std::size_t m = 0, n = 0, max_m = 0, max_n = 0;
    auto* cod = app.add_subcommand("codim", "codimension c(m,n) with stability flag");
    add_algebra_options(cod, cfg);
    add_format_option(cod, cfg);
    add_engine_options(cod, cfg);
    cod->add_option("-m", m, "domain object")->required();
    cod->add_option("-n", n, "codomain object")->required();

    auto* table = app.add_subcommand("table", "codimension grid 0..max-m x 0..max-n");
    add_algebra_options(table, cfg);
    add_format_option(table, cfg);
    add_engine_options(table, cfg);
    table->add_option("--max-m", max_m, "largest domain object")->required();
    table->add_option("--max-n", max_n, "largest codomain object")->required();

    auto* ids = app.add_subcommand("identities", "basis of identities among terms of one shape");
    add_algebra_options(ids, cfg);
    add_format_option(ids, cfg);
    ids->add_option("--terms", terms, "terms separated by ';'")->required();

    auto* nf = app.add_subcommand("normal-form", "build phi/psi terms from group words and verify them");
    add_format_option(nf, cfg);
    nf->add_option("kind", kind, "phi or psi")->required()->check(CLI::IsMember({"phi", "psi"}));
    nf->add_option("-m", m, "number of variables")->required();
    nf->add_option("--words", words, "output words separated by ',', e.g. \"x1*x2^-1, x3\"");

    auto* builtin = app.add_subcommand("builtin", "list built-in algebras and relation sets");
    std::string action;
    add_format_option(builtin, cfg);
    builtin->add_option("action", action, "list")->required()->check(CLI::IsMember({"list"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*validate) return cmd_validate(cfg, relations, out);
        if (*eval) return cmd_eval(cfg, term, poly, out);
        if (*check) return cmd_check(cfg, poly, out);
        if (*cod) return cmd_codim(cfg, m, n, out, err);
        if (*table) return cmd_table(cfg, max_m, max_n, out, err);
        if (*ids) return cmd_identities(cfg, terms, out);
        if (*nf) return cmd_normal_form(cfg, kind, m, words, out);
        if (*builtin) return cmd_builtin_list(cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace omegapi::cli
