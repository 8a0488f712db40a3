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

// Acceptance runner: `omegapi_acceptance` runs every criterion, `omegapi_acceptance N`
// runs criterion N. One PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "omegapi/builtin_algebras.hpp"
#include "omegapi/codim.hpp"
#include "omegapi/combinatorics.hpp"
#include "omegapi/evaluate.hpp"
#include "omegapi/group_word.hpp"
#include "omegapi/normal_forms.hpp"
#include "omegapi/projectors.hpp"
#include "omegapi/relation_sets.hpp"
#include "omegapi/word_eval.hpp"

namespace omegapi {
namespace {

// Collects mismatches; a criterion passes when none were recorded.
class Report {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 8) failures_.push_back(what);
        failed_ = failed_ || !ok;
    }
    bool ok() const { return !failed_; }
    std::size_t checks() const { return checks_; }
    const std::vector<std::string>& failures() const { return failures_; }
    std::ostringstream note;

private:
    std::size_t checks_ = 0;
    bool failed_ = false;
    std::vector<std::string> failures_;
};

std::string cell(std::size_t m, std::size_t n) {
    return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t fact(std::uint64_t n) { return n <= 1 ? 1 : n * fact(n - 1); }

// Σ over partitions λ of n with at most d rows of f_λ², f_λ by the hook formula.
std::uint64_t hook_oracle(std::size_t d, std::size_t n) {
    std::uint64_t total = 0;
    std::vector<std::size_t> parts;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t rest, std::size_t cap) {
        if (rest == 0) {
            if (parts.size() > d) return;
            std::uint64_t hooks = 1;
            for (std::size_t r = 0; r < parts.size(); ++r)
                for (std::size_t c = 0; c < parts[r]; ++c) {
                    std::size_t below = 0;
                    for (std::size_t r2 = r + 1; r2 < parts.size() && parts[r2] > c; ++r2) ++below;
                    hooks *= parts[r] - c + below;
                }
            const std::uint64_t f = fact(n) / hooks;
            total += f * f;
            return;
        }
        for (std::size_t p = std::min(rest, cap); p >= 1; --p) {
            parts.push_back(p);
            walk(rest - p, p);
            parts.pop_back();
        }
    };
    walk(n, n);
    return total;
}

void expect_codim(Report& rep, const CodimResult& r, std::uint64_t want) {
    rep.expect(r.value == want, "c" + cell(r.m, r.n) + " = " + std::to_string(r.value) + ", expected " +
                                    std::to_string(want));
    rep.expect(r.stable, "c" + cell(r.m, r.n) + " not stable at K=" + std::to_string(r.bound));
}

void kc2_grid(Report& rep) {
    const auto grid = codim_table(kc2_hopf(), 4, 4, 6);
    for (std::size_t m = 0; m <= 4; ++m)
        for (std::size_t n = 0; n <= 4; ++n) {
            const std::uint64_t want = (std::uint64_t{1} << (m + n)) - (std::uint64_t{1} << m) -
                                       (std::uint64_t{1} << n) + 2;
            rep.expect(grid[m][n].bound == 6, "bound " + std::to_string(grid[m][n].bound));
            expect_codim(rep, grid[m][n], want);
        }
    rep.note << "c(4,4) = " << grid[4][4].value;
}

void yd_sigma(Report& rep) {
    const auto grid = codim_table(yd_kc2_sigma(), 4, 4);
    for (std::size_t m = 0; m <= 4; ++m)
        for (std::size_t n = 0; n <= 4; ++n) {
            if (m == n && m >= 2)
                expect_codim(rep, grid[m][n], choose(2 * n, n) - 1);
            else if (m != n)
                expect_codim(rep, grid[m][n], 0);
        }
    rep.note << "diagonal " << grid[2][2].value << ", " << grid[3][3].value << ", " << grid[4][4].value
             << " at K=" << grid[0][0].bound;
}

void yd_braided(Report& rep) {
    const FiniteOmegaAlgebra alg = yd_kc2_braided();
    for (std::size_t n = 2; n <= 4; ++n) expect_codim(rep, codim(alg, n, n), choose(2 * n, n) / 2);
    expect_codim(rep, codim(alg, 1, 1), 1);
    expect_codim(rep, codim(alg, 0, 0), 1);
    rep.note << "c(4,4) = " << codim(alg, 4, 4).value;
}

void vector_spaces(Report& rep) {
    for (const auto& [d, top] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 5}, {3, 4}}) {
        const FiniteOmegaAlgebra alg = vector_space(d);
        std::vector<std::uint64_t> diag;
        for (std::size_t n = 1; n <= top; ++n) {
            const std::uint64_t want = hook_oracle(d, n);
            rep.expect(schur_weyl_codim(d, n) == want, "library Schur-Weyl value at d=" + std::to_string(d));
            const CodimResult r = codim(alg, n, n);
            expect_codim(rep, r, want);
            diag.push_back(r.value);
        }
        const auto grid = codim_table(alg, top, top);
        for (std::size_t m = 0; m <= top; ++m)
            for (std::size_t n = 0; n <= top; ++n)
                if (m != n) expect_codim(rep, grid[m][n], 0);
        rep.note << "d=" << d << ":";
        for (auto v : diag) rep.note << " " << v;
        rep.note << "; ";
    }
}

void antisymmetrizers(Report& rep) {
    for (std::size_t d : {2u, 3u}) {
        const Polynomial a = antisymmetrizer(d, d + 1);
        rep.expect(evaluate_poly(vector_space(d), a).is_zero(), "nonzero over dimension " + std::to_string(d));
        rep.expect(!evaluate_poly(vector_space(d + 1), a).is_zero(),
                   "zero over dimension " + std::to_string(d + 1));
    }
}

void all_relators(Report& rep, const FiniteOmegaAlgebra& alg, const RelationSet& set, const std::string& label) {
    for (const auto& r : validate_relations(alg, set.relators)) rep.expect(r.passed, label + ": " + r.name);
}

void identity_suites(Report& rep) {
    const FiniteOmegaAlgebra kc2 = kc2_hopf();
    const FiniteOmegaAlgebra s3 = group_hopf(symmetric_group(3));
    rep.expect(s3.dim() == 6, "S3 algebra dimension");
    all_relators(rep, kc2, v_hopf(), "kC2 v-hopf");
    all_relators(rep, s3, v_hopf(), "S3 v-hopf");
    const RelationSet c2 = c2_identities();
    rep.expect(c2.relators.size() == 4, "four order-two relators");
    all_relators(rep, kc2, c2, "kC2 order-two");
    all_relators(rep, kc2, c2_derived(), "kC2 derived");

    const Matrix c = yd_kc2_braiding();
    const BraidingReport br = validate_braiding(c);
    rep.expect(br.yang_baxter && br.invertible, "YD braiding fails Yang-Baxter");
    const Matrix c2m = mat_mul(c, c);
    rep.expect(mat_mul(c2m, c2m) == Matrix::identity(4), "tau^4 != id");
    rep.expect(c2m != Matrix::identity(4), "tau^2 == id");
    rep.note << "v-hopf " << v_hopf().relators.size() << " relators on kC2 and S3";
}

using Kind = GroupWord::Kind;

WordVector generator_input(std::size_t m, Kind kind) {
    WordTuple xs;
    for (std::size_t k = 1; k <= m; ++k) xs.push_back(GroupWord::generator(kind, k));
    return WordVector::basis(xs, kind);
}

GroupWord make_word(Kind kind, std::size_t m, const std::vector<int>& letters) {
    if (kind == Kind::Free) return GroupWord::free_word(letters);
    std::vector<std::int64_t> e(m, 0);
    for (int l : letters) e[static_cast<std::size_t>(std::abs(l)) - 1] += l > 0 ? 1 : -1;
    return GroupWord::abelian(e);
}

// Every group word in x1..xm of letter length at most len.
std::vector<GroupWord> words_up_to(std::size_t m, std::size_t len, Kind kind) {
    std::set<std::vector<int>> seen;
    std::vector<GroupWord> out;
    std::vector<int> raw;
    std::function<void()> walk = [&]() {
        const GroupWord w = make_word(kind, m, raw);
        if (w.length() == raw.size() && seen.insert(raw).second) out.push_back(w);
        if (raw.size() == len) return;
        for (int g = 1; g <= static_cast<int>(m); ++g)
            for (int l : {g, -g}) {
                raw.push_back(l);
                walk();
                raw.pop_back();
            }
    };
    walk();
    // Abelian words repeat under reordering; keep each once.
    std::vector<GroupWord> unique;
    for (const auto& w : out)
        if (std::find(unique.begin(), unique.end(), w) == unique.end()) unique.push_back(w);
    return unique;
}

bool round_trip(Kind kind, std::size_t m, const std::vector<GroupWord>& words) {
    const Term t = kind == Kind::Free ? phi(m, words) : psi(m, words);
    return apply(t, generator_input(m, kind)) == WordVector::basis(words, kind);
}

void normal_forms(Report& rep) {
    const std::vector<GroupWord> free_example{GroupWord::parse("x1*x2*x1^-1", Kind::Free),
                                              GroupWord::parse("x5*x2^-1*x1^2", Kind::Free)};
    rep.expect(round_trip(Kind::Free, 5, free_example), "free worked example");
    const std::vector<GroupWord> abelian_example{GroupWord::abelian({-2, 3, 0, 0, 0}),
                                                 GroupWord::abelian({2, -1, 0, 0, 1})};
    rep.expect(round_trip(Kind::FreeAbelian, 5, abelian_example), "abelian worked example");

    std::size_t exhaustive = 0;
    for (Kind kind : {Kind::Free, Kind::FreeAbelian})
        for (std::size_t m = 0; m <= 3; ++m) {
            const auto pool = words_up_to(m, 3, kind);
            for (std::size_t n = 0; n <= 2; ++n) {
                std::vector<std::size_t> idx(n, 0);
                while (true) {
                    std::vector<GroupWord> words;
                    for (auto i : idx) words.push_back(pool[i]);
                    ++exhaustive;
                    if (!round_trip(kind, m, words)) {
                        std::string s;
                        for (const auto& w : words) s += w.to_string() + " ";
                        rep.expect(false, "round trip m=" + std::to_string(m) + ": " + s);
                    }
                    std::size_t k = 0;
                    while (k < n && ++idx[k] == pool.size()) idx[k++] = 0;
                    if (k == n) break;
                }
            }
        }

    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<int> pick_m(4, 6), pick_n(1, 4), pick_len(0, 7);
    for (int trial = 0; trial < 100; ++trial) {
        const Kind kind = trial % 2 == 0 ? Kind::Free : Kind::FreeAbelian;
        const int m = pick_m(rng);
        std::uniform_int_distribution<int> letter(-m, m);
        std::vector<GroupWord> words;
        for (int k = pick_n(rng); k > 0; --k) {
            std::vector<int> raw;
            for (int len = pick_len(rng); len > 0; --len)
                if (int l = letter(rng); l != 0) raw.push_back(l);
            words.push_back(make_word(kind, static_cast<std::size_t>(m), raw));
        }
        rep.expect(round_trip(kind, static_cast<std::size_t>(m), words), "random case " + std::to_string(trial));
    }
    rep.note << exhaustive << " exhaustive tuples, 100 random";
}

void duality(Report& rep) {
    const FiniteOmegaAlgebra alg = kc2_hopf();
    const FiniteOmegaAlgebra dual = dualize(alg);
    const auto a = codim_table(alg, 3, 3);
    const auto b = codim_table(dual, 3, 3);
    for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = 0; n <= 3; ++n) {
            rep.expect(a[m][n].value == b[n][m].value, "c" + cell(m, n) + " = " + std::to_string(a[m][n].value) +
                                                            " but dual c" + cell(n, m) + " = " +
                                                            std::to_string(b[n][m].value));
            rep.expect(a[m][n].stable && b[n][m].stable, "unstable at " + cell(m, n));
        }
}

bool is_idempotent(const Matrix& p) { return mat_mul(p, p) == p; }

void projectors(Report& rep) {
    const FiniteOmegaAlgebra sigma = yd_kc2_sigma();
    const FiniteOmegaAlgebra braided = yd_kc2_braided();
    for (std::size_t n = 2; n <= 4; ++n) {
        const std::string at = " at n=" + std::to_string(n);
        const Matrix id = Matrix::identity(checked_power(2, n));

        // pair projectors over {sigma}
        std::vector<Matrix> ps;
        std::vector<std::pair<std::size_t, std::size_t>> idx;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                if (i != j) {
                    ps.push_back(evaluate_poly(sigma, p_ij(n, i, j)));
                    idx.emplace_back(i, j);
                }
        for (std::size_t a = 0; a < ps.size(); ++a) {
            rep.expect(is_idempotent(ps[a]), "p not idempotent" + at);
            for (std::size_t b = a + 1; b < ps.size(); ++b) {
                const Matrix ab = mat_mul(ps[a], ps[b]);
                rep.expect(ab == mat_mul(ps[b], ps[a]), "p do not commute" + at);
                if (idx[a].first == idx[b].second && idx[a].second == idx[b].first)
                    rep.expect(ab.is_zero(), "p_ij p_ji != 0" + at);
            }
        }
        Matrix split_sum = evaluate_poly(sigma, p_empty(n));
        rep.expect(is_idempotent(split_sum), "p_empty not idempotent" + at);
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
            std::set<std::size_t> in;
            for (std::size_t k = 0; k < n; ++k)
                if (mask >> k & 1) in.insert(k + 1);
            const Matrix p = evaluate_poly(sigma, p_subset(n, in));
            rep.expect(is_idempotent(p), "p_I not idempotent" + at);
            rep.expect(mat_mul(p, split_sum).is_zero(), "p_I p_empty != 0" + at);
            split_sum += p;
        }
        rep.expect(split_sum == id, "p family incomplete" + at);

        // equal/unequal projectors over the braided backend
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = i + 1; j <= n; ++j) {
                const Matrix q = evaluate_poly(braided, q_ij(n, i, j));
                const Matrix r = evaluate_poly(braided, r_ij(n, i, j));
                rep.expect(is_idempotent(q) && is_idempotent(r), "q/r not idempotent" + at);
                rep.expect(mat_mul(q, r).is_zero(), "q r != 0" + at);
                rep.expect(q + r == id, "q + r != id" + at);
                BraidWord negative = default_rho(n, i, j);
                for (int& l : negative.letters) l = -l;
                const BraidWord twisted = default_rho(n, i, j) * BraidWord{n, {1, 1}};
                rep.expect(evaluate_poly(braided, q_ij(n, i, j, negative)) == q, "q depends on the braid" + at);
                rep.expect(evaluate_poly(braided, q_ij(n, i, j, twisted)) == q, "q depends on the braid" + at);
                rep.expect(evaluate_poly(braided, r_ij(n, i, j, twisted)) == r, "r depends on the braid" + at);
            }

        std::vector<Matrix> parts{evaluate_poly(braided, q_decomp(n, {}))};
        for (const auto& s : unordered_splits(n)) parts.push_back(evaluate_poly(braided, q_decomp(n, s)));
        Matrix sum(id.rows(), id.cols());
        for (std::size_t a = 0; a < parts.size(); ++a) {
            rep.expect(is_idempotent(parts[a]), "q_I not idempotent" + at);
            for (std::size_t b = a + 1; b < parts.size(); ++b)
                rep.expect(mat_mul(parts[a], parts[b]).is_zero(), "q_I not orthogonal" + at);
            sum += parts[a];
        }
        rep.expect(sum == id, "q family incomplete" + at);
    }
}

void asymptotics(Report& rep) {
    const FiniteOmegaAlgebra alg = vector_space(2);
    for (std::size_t n = 3; n <= 5; ++n) {
        const CodimResult r = codim(alg, n, n);
        const double ratio = static_cast<double>(r.value) / (std::pow(4.0, n) * std::pow(n, -1.5));
        rep.expect(ratio >= 0.05 && ratio <= 5.0, "ratio " + std::to_string(ratio) + " at n=" + std::to_string(n));
        rep.note << "n=" << n << ": " << ratio << " ";
    }
}

struct Criterion {
    const char* name;
    void (*run)(Report&);
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {"kC2 codimension grid", kc2_grid},
        {"YD sigma codimensions", yd_sigma},
        {"YD braided codimensions", yd_braided},
        {"vector-space codimensions", vector_spaces},
        {"antisymmetrizer vanishing", antisymmetrizers},
        {"identity suites", identity_suites},
        {"normal-form round trips", normal_forms},
        {"duality symmetry", duality},
        {"projector algebra", projectors},
        {"asymptotic sanity", asymptotics},
    };
    return list;
}

bool run_one(std::size_t index) {
    const Criterion& c = criteria()[index - 1];
    Report rep;
    const auto start = std::chrono::steady_clock::now();
    try {
        c.run(rep);
    } catch (const std::exception& e) {
        rep.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (rep.ok() ? "PASS" : "FAIL") << " criterion " << index << ": " << c.name << " (" << rep.checks()
              << " checks, " << secs << " s";
    if (!rep.note.str().empty()) std::cout << "; " << rep.note.str();
    std::cout << ")\n";
    for (const auto& f : rep.failures()) std::cout << "    " << f << "\n";
    std::cout.flush();
    return rep.ok();
}

}  // namespace
}  // namespace omegapi

int main(int argc, char** argv) {
    const std::size_t count = omegapi::criteria().size();
    std::vector<std::size_t> which;
    for (int i = 1; i < argc; ++i) {
        const long k = std::strtol(argv[i], nullptr, 10);
        if (k < 1 || static_cast<std::size_t>(k) > count) {
            std::cerr << "usage: omegapi_acceptance [1.." << count << "]...\n";
            return 2;
        }
        which.push_back(static_cast<std::size_t>(k));
    }
    if (which.empty())
        for (std::size_t k = 1; k <= count; ++k) which.push_back(k);
    bool ok = true;
    for (std::size_t k : which) ok = omegapi::run_one(k) && ok;
    return ok ? 0 : 1;
}
