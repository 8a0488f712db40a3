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

#include "omegapi/signature.hpp"

#include <algorithm>

#include "omegapi/errors.hpp"

namespace omegapi {

bool is_identifier(std::string_view name) {
    if (name.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    if (!alpha(name.front())) return false;
    return std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

bool is_reserved_name(std::string_view name) { return name == "id" || name == "tau" || name == "tau_inv"; }

Signature::Signature(std::initializer_list<GeneratorSpec> generators) {
    for (const auto& g : generators) add(g);
}

Signature::Signature(std::vector<GeneratorSpec> generators) {
    for (auto& g : generators) add(std::move(g));
}

void Signature::add(GeneratorSpec generator) {
    if (!is_identifier(generator.name)) throw SignatureError("generator name '" + generator.name + "' is not an identifier");
    if (is_reserved_name(generator.name)) throw SignatureError("generator name '" + generator.name + "' is reserved");
    if (contains(generator.name)) throw SignatureError("duplicate generator '" + generator.name + "'");
    generators_.push_back(std::move(generator));
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return i;
    return std::nullopt;
}

const GeneratorSpec& Signature::at(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw SignatureError("unknown generator '" + std::string(name) + "'");
    return generators_[*i];
}

std::size_t Signature::max_coarity() const {
    std::size_t m = 0;
    for (const auto& g : generators_) m = std::max(m, g.coarity);
    return m;
}

}  // namespace omegapi
