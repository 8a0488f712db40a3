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

#include "omegapi/group_word.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "omegapi/errors.hpp"

namespace omegapi {

GroupWord GroupWord::free_word(const std::vector<int>& letters) {
    GroupWord w(Kind::Free);
    for (int l : letters) {
        if (l == 0) throw std::invalid_argument("letter 0 in a group word");
        if (!w.letters_.empty() && w.letters_.back() == -l)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

GroupWord GroupWord::abelian(std::vector<std::int64_t> exponents) {
    GroupWord w(Kind::FreeAbelian);
    while (!exponents.empty() && exponents.back() == 0) exponents.pop_back();
    w.exponents_ = std::move(exponents);
    return w;
}

GroupWord GroupWord::generator(Kind kind, std::size_t k) {
    if (k == 0) throw std::invalid_argument("variables are numbered from 1");
    if (kind == Kind::Free) return free_word({static_cast<int>(k)});
    std::vector<std::int64_t> e(k, 0);
    e[k - 1] = 1;
    return abelian(std::move(e));
}

GroupWord GroupWord::parse(std::string_view text, Kind kind) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() -> long {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (digits == pos || pos - digits > 9) throw ParseError("expected a small integer", start);
        return std::strtol(std::string(text.substr(start, pos - start)).c_str(), nullptr, 10);
    };
    GroupWord out(kind);
    skip();
    if (pos == text.size()) return out;
    if (text.substr(pos) == "1") return out;
    while (true) {
        skip();
        std::size_t at = pos;
        if (pos >= text.size() || text[pos] != 'x') throw ParseError("expected a variable x<k>", at);
        ++pos;
        long k = number();
        if (k <= 0) throw ParseError("variables are numbered from 1", at);
        long e = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip();
            e = number();
        }
        GroupWord g = generator(kind, static_cast<std::size_t>(k));
        GroupWord p = e < 0 ? g.inverse() : g;
        for (long i = 0; i < std::labs(e); ++i) out = out * p;
        skip();
        if (pos == text.size()) break;
        if (text[pos] != '*') throw ParseError("expected '*'", pos);
        ++pos;
    }
    return out;
}

std::int64_t GroupWord::exponent(std::size_t k) const {
    if (kind_ == Kind::FreeAbelian) return k >= 1 && k <= exponents_.size() ? exponents_[k - 1] : 0;
    std::int64_t s = 0;
    for (int l : letters_)
        if (static_cast<std::size_t>(std::abs(l)) == k) s += l > 0 ? 1 : -1;
    return s;
}

std::size_t GroupWord::max_variable() const {
    if (kind_ == Kind::FreeAbelian) return exponents_.size();
    std::size_t m = 0;
    for (int l : letters_) m = std::max<std::size_t>(m, static_cast<std::size_t>(std::abs(l)));
    return m;
}

std::size_t GroupWord::length() const {
    if (kind_ == Kind::Free) return letters_.size();
    std::size_t s = 0;
    for (auto e : exponents_) s += static_cast<std::size_t>(std::llabs(e));
    return s;
}

GroupWord GroupWord::inverse() const {
    GroupWord w(kind_);
    if (kind_ == Kind::Free) {
        w.letters_.assign(letters_.rbegin(), letters_.rend());
        for (int& l : w.letters_) l = -l;
    } else {
        w.exponents_ = exponents_;
        for (auto& e : w.exponents_) e = -e;
    }
    return w;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    if (a.kind_ != b.kind_) throw std::invalid_argument("multiplying free and free abelian words");
    if (a.kind_ == GroupWord::Kind::Free) {
        GroupWord w = a;
        for (int l : b.letters_) {
            if (!w.letters_.empty() && w.letters_.back() == -l)
                w.letters_.pop_back();
            else
                w.letters_.push_back(l);
        }
        return w;
    }
    std::vector<std::int64_t> e(std::max(a.exponents_.size(), b.exponents_.size()), 0);
    for (std::size_t i = 0; i < a.exponents_.size(); ++i) e[i] += a.exponents_[i];
    for (std::size_t i = 0; i < b.exponents_.size(); ++i) e[i] += b.exponents_[i];
    return GroupWord::abelian(std::move(e));
}

std::string GroupWord::to_string() const {
    if (is_identity()) return "1";
    std::string out;
    auto emit = [&](std::size_t k, std::int64_t e) {
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(k);
        if (e != 1) out += "^" + std::to_string(e);
    };
    if (kind_ == Kind::FreeAbelian) {
        for (std::size_t i = 0; i < exponents_.size(); ++i)
            if (exponents_[i] != 0) emit(i + 1, exponents_[i]);
        return out;
    }
    // runs of the same letter print as powers
    for (std::size_t i = 0; i < letters_.size();) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        std::int64_t run = static_cast<std::int64_t>(j - i);
        emit(static_cast<std::size_t>(std::abs(letters_[i])), letters_[i] > 0 ? run : -run);
        i = j;
    }
    return out;
}

}  // namespace omegapi
