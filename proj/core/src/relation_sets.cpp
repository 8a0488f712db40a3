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

#include "omegapi/relation_sets.hpp"

#include <stdexcept>

#include "omegapi/combinatorics.hpp"
#include "omegapi/parser.hpp"
#include "omegapi/projectors.hpp"
#include "omegapi/word_eval.hpp"

namespace omegapi {
namespace {

void add(RelationSet& set, std::string name, const std::string& text) {
    set.relators.emplace_back(std::move(name), parse_polynomial(text, set.signature));
}

void add(RelationSet& set, std::string name, Polynomial p) { set.relators.emplace_back(std::move(name), std::move(p)); }

void add_symm(RelationSet& set) { add(set, "symm", "tau(1,1) . tau(1,1) - id(2)"); }

Polynomial mul(const Polynomial& a, const Polynomial& b) { return compose(a, b); }

std::vector<std::size_t> parse_args(std::string_view text, std::size_t expected) {
    std::vector<std::size_t> out;
    std::size_t cur = 0;
    bool have = false;
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            cur = cur * 10 + static_cast<std::size_t>(ch - '0');
            have = true;
            if (cur > 64) throw std::invalid_argument("relation set parameter too large");
        } else if (ch == ',' && have) {
            out.push_back(cur);
            cur = 0;
            have = false;
        } else if (ch != ' ') {
            throw std::invalid_argument("bad relation set parameters");
        }
    }
    if (!have) throw std::invalid_argument("bad relation set parameters");
    out.push_back(cur);
    if (out.size() != expected) throw std::invalid_argument("wrong number of relation set parameters");
    return out;
}

}  // namespace

RelationSet v_symm() {
    RelationSet s{"v-symm", {}, {}};
    add_symm(s);
    return s;
}

RelationSet v_assoc() {
    RelationSet s{"v-assoc", Signature{{"mu", 2, 1}}, {}};
    add_symm(s);
    add(s, "assoc", "mu . (mu # id(1)) - mu . (id(1) # mu)");
    return s;
}

RelationSet v_hopf() {
    RelationSet s{"v-hopf", hopf_signature(), {}};
    add_symm(s);
    add(s, "assoc", "mu . (mu # id(1)) - mu . (id(1) # mu)");
    add(s, "left-unit", "mu . (u # id(1)) - id(1)");
    add(s, "right-unit", "mu . (id(1) # u) - id(1)");
    add(s, "coassoc", "(Delta # id(1)) . Delta - (id(1) # Delta) . Delta");
    add(s, "left-counit", "(eps # id(1)) . Delta - id(1)");
    add(s, "right-counit", "(id(1) # eps) . Delta - id(1)");
    add(s, "counit-unit", "eps . u - id(0)");
    add(s, "counit-mult", "eps . mu - eps # eps");
    add(s, "comult-unit", "Delta . u - u # u");
    add(s, "bialgebra", "Delta . mu - (mu # mu) . (id(1) # tau(1,1) # id(1)) . (Delta # Delta)");
    add(s, "left-antipode", "mu . (S # id(1)) . Delta - u . eps");
    add(s, "right-antipode", "mu . (id(1) # S) . Delta - u . eps");
    return s;
}

RelationSet v_cochopf() {
    RelationSet s = v_hopf();
    s.name = "v-cochopf";
    add(s, "cocomm", "Delta - tau(1,1) . Delta");
    return s;
}

RelationSet v_commcochopf() {
    RelationSet s = v_cochopf();
    s.name = "v-commcochopf";
    add(s, "comm", "mu - mu . tau(1,1)");
    return s;
}

RelationSet c2_identities() {
    RelationSet s{"c2-identities", hopf_signature(), {}};
    add(s, "cocomm", "Delta - tau(1,1) . Delta");
    add(s, "comm", "mu - mu . tau(1,1)");
    add(s, "square", "mu . Delta - u . eps");
    Polynomial p = parse_polynomial("id(1) - u . eps", s.signature);
    Polynomial ppp = tensor(tensor(p, p), p);
    Polynomial left = mul(ppp, Polynomial(parse_term("Delta # id(1)", s.signature)));
    Polynomial right = mul(ppp, Polynomial(parse_term("id(1) # Delta", s.signature)));
    add(s, "three-leg", left - right);
    return s;
}

RelationSet c2_derived() {
    RelationSet s{"c2-derived", hopf_signature(), {}};
    Polynomial p = parse_polynomial("id(1) - u . eps", s.signature);
    Polynomial mu(parse_term("mu", s.signature));
    Polynomial delta(parse_term("Delta", s.signature));
    add(s, "square-of-augmentation", mul(mul(mu, tensor(p, p)), delta) + Rational(2) * p);
    add(s, "antipode", "S - id(1)");
    return s;
}

RelationSet v_symm_d(std::size_t d, std::size_t n) {
    RelationSet s{"v-symm-d(" + std::to_string(d) + "," + std::to_string(n) + ")", {}, {}};
    add_symm(s);
    add(s, "antisymmetrizer", antisymmetrizer(d, n));
    return s;
}

RelationSet v2(std::size_t n) {
    if (n < 2 || n > 5) throw std::invalid_argument("v2(n) is generated for 2 <= n <= 5");
    RelationSet s{"v2(" + std::to_string(n) + ")", Signature{{"sigma", 2, 2}}, {}};
    add_symm(s);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (i != j) pairs.emplace_back(i, j);
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> p;
    for (auto [i, j] : pairs) p.emplace(std::make_pair(i, j), p_ij(n, i, j));
    auto P = [&](std::size_t i, std::size_t j) -> const Polynomial& { return p.at({i, j}); };
    auto tag = [](const char* fam, std::initializer_list<std::size_t> idx) {
        std::string out = fam;
        out += "(";
        bool first = true;
        for (std::size_t x : idx) {
            if (!first) out += ",";
            out += std::to_string(x);
            first = false;
        }
        return out + ")";
    };
    for (auto [i1, j1] : pairs) {
        add(s, tag("idempotent", {i1, j1}), mul(P(i1, j1), P(i1, j1)) - P(i1, j1));
        for (std::size_t i2 = 1; i2 <= n; ++i2)
            if (i2 != i1) add(s, tag("opposed", {i1, j1, i2}), mul(P(i1, j1), P(i2, i1)));
        for (auto [i2, j2] : pairs) {
            Polynomial both = mul(P(i1, j1), P(i2, j2));
            add(s, tag("commute", {i1, j1, i2, j2}), both - mul(P(i2, j2), P(i1, j1)));
            if (i1 != j2 && i2 != j1)
                add(s, tag("exchange", {i1, j1, i2, j2}), both - mul(P(i1, j2), P(i2, j1)));
            if (i1 != j2) add(s, tag("triple", {i1, j1, i2, j2}), mul(both, P(i1, j2)) - both);
            if (i1 != i2) {
                Term swap = perm_to_term(Permutation::from_cycles(n, {{i1, i2}}));
                add(s, tag("swap-top", {i1, j1, i2, j2}), mul(both, Polynomial(swap)) - both);
            }
            if (j1 != j2) {
                Term swap = perm_to_term(Permutation::from_cycles(n, {{j1, j2}}));
                add(s, tag("swap-bottom", {i1, j1, i2, j2}), mul(both, Polynomial(swap)) - both);
            }
        }
    }
    Polynomial pe = p_empty(n);
    for (const auto& rho : Permutation::all(n)) {
        if (rho.is_identity()) continue;
        add(s, "central" + rho.to_string(), mul(pe, Polynomial(perm_to_term(rho))) - pe);
    }
    return s;
}

RelationSet v3(std::size_t n, std::uint64_t seed, std::size_t samples) {
    if (n < 2) throw std::invalid_argument("v3(n) needs n >= 2");
    RelationSet s{"v3(" + std::to_string(n) + ")", {}, {}};
    add(s, "tau-order-4", "tau(1,1) . tau(1,1) . tau(1,1) . tau(1,1) - id(2)");
    auto theta = [](const BraidWord& b) { return Polynomial(braid_to_term(b)); };

    auto pure = sample_pure_braids(n, samples, seed);
    for (std::size_t i = 1; i < n; ++i) {
        BraidWord sq{n, {static_cast<int>(i), static_cast<int>(i)}};
        for (std::size_t k = 0; k < pure.size(); ++k)
            add(s, "pure-commute(" + std::to_string(i) + ",#" + std::to_string(k) + ")",
                theta(sq * pure[k]) - theta(pure[k] * sq));
    }

    // braids whose permutation fixes i and j: pure braids times crossings
    // away from i and j
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            Polynomial q = q_ij(n, i, j);
            std::vector<BraidWord> fixing = sample_pure_braids(n, samples, seed + 7919 * i + j);
            for (std::size_t k = 1; k + 1 <= n; ++k)
                if (k != i && k + 1 != i && k != j && k + 1 != j)
                    fixing.push_back(BraidWord{n, {static_cast<int>(k)}} * fixing[fixing.size() % samples]);
            for (std::size_t k = 0; k < fixing.size(); ++k)
                add(s, "q-commute(" + std::to_string(i) + "," + std::to_string(j) + ",#" + std::to_string(k) + ")",
                    mul(q, theta(fixing[k])) - mul(theta(fixing[k]), q));
        }

    for (std::size_t i = 0; i < n; ++i) {
        std::set<std::size_t> head;
        for (std::size_t k = 1; k <= i; ++k) head.insert(k);
        Polynomial q = q_decomp(n, head);
        for (std::size_t j = 0; j + 2 <= n; ++j) {
            if (j + 1 == i) continue;
            Term cross = whisker(j, Term::braid(1, 1), n - j - 2);
            add(s, "split-absorbs(" + std::to_string(i) + "," + std::to_string(j) + ")",
                mul(q, Polynomial(cross)) - q);
        }
    }
    return s;
}

RelationSet relation_set(std::string_view name) {
    if (name == "v-symm") return v_symm();
    if (name == "v-assoc") return v_assoc();
    if (name == "v-hopf") return v_hopf();
    if (name == "v-cochopf") return v_cochopf();
    if (name == "v-commcochopf") return v_commcochopf();
    if (name == "c2-identities") return c2_identities();
    if (name == "c2-derived") return c2_derived();
    auto args = [&](std::string_view prefix, std::size_t count) -> std::optional<std::vector<std::size_t>> {
        if (name.size() < prefix.size() + 2 || name.substr(0, prefix.size()) != prefix ||
            name[prefix.size()] != '(' || name.back() != ')')
            return std::nullopt;
        return parse_args(name.substr(prefix.size() + 1, name.size() - prefix.size() - 2), count);
    };
    if (auto a = args("v2", 1)) return v2((*a)[0]);
    if (auto a = args("v3", 1)) return v3((*a)[0]);
    if (auto a = args("v-symm-d", 2)) return v_symm_d((*a)[0], (*a)[1]);
    throw std::invalid_argument("unknown relation set '" + std::string(name) + "'");
}

std::vector<std::string> relation_set_names() {
    return {"v-symm",        "v-assoc",       "v-hopf", "v-cochopf", "v-commcochopf",
            "c2-identities", "c2-derived",    "v2(n)",  "v3(n)",     "v-symm-d(d,n)"};
}

}  // namespace omegapi
