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

#ifndef OMEGAPI_SIGNATURE_HPP
#define OMEGAPI_SIGNATURE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace omegapi {

struct GeneratorSpec {
    std::string name;
    std::size_t arity = 0;    // s(ω): number of inputs
    std::size_t coarity = 0;  // t(ω): number of outputs

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// The symbol set Ω with its input/output counts. Names are unique
// identifiers and may not shadow the structural leaves id, tau, tau_inv.
class Signature {
   public:
    Signature() = default;
    Signature(std::initializer_list<GeneratorSpec> generators);
    explicit Signature(std::vector<GeneratorSpec> generators);

    // Throws SignatureError on a reserved, malformed, or duplicate name.
    void add(GeneratorSpec generator);

    const std::vector<GeneratorSpec>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool empty() const noexcept { return generators_.empty(); }

    std::optional<std::size_t> index_of(std::string_view name) const;
    const GeneratorSpec& at(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    std::size_t max_coarity() const;

    friend bool operator==(const Signature&, const Signature&) = default;

   private:
    std::vector<GeneratorSpec> generators_;
};

bool is_identifier(std::string_view name);
bool is_reserved_name(std::string_view name);

}  // namespace omegapi

#endif
