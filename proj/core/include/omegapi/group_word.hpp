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

#ifndef OMEGAPI_GROUP_WORD_HPP
#define OMEGAPI_GROUP_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace omegapi {

/*
 * Element of the free group F(x1, x2, ...) or the free abelian group on the
 * same letters. Variables are numbered from 1.
 *
 * Free words are kept reduced as signed letters (+k is x_k, -k is x_k^-1).
 * Abelian words are exponent vectors with trailing zeros trimmed.
 */
class GroupWord {
   public:
    enum class Kind { Free, FreeAbelian };

    explicit GroupWord(Kind kind = Kind::Free) : kind_(kind) {}

    // Reduces the letters; throws std::invalid_argument on a zero letter.
    static GroupWord free_word(const std::vector<int>& letters);
    static GroupWord abelian(std::vector<std::int64_t> exponents);
    static GroupWord generator(Kind kind, std::size_t k);

    // "x1*x2*x1^-1", "x1^-2*x2^3"; "1" or "" is the identity. Throws ParseError.
    static GroupWord parse(std::string_view text, Kind kind);

    Kind kind() const noexcept { return kind_; }
    bool is_identity() const noexcept { return letters_.empty() && exponents_.empty(); }
    const std::vector<int>& letters() const noexcept { return letters_; }
    const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }
    // Exponent of x_k (1-based); for free words the total exponent sum.
    std::int64_t exponent(std::size_t k) const;
    // Largest variable index occurring, 0 for the identity.
    std::size_t max_variable() const;
    // Free: number of letters; abelian: sum of |exponents|.
    std::size_t length() const;

    GroupWord inverse() const;
    friend GroupWord operator*(const GroupWord& a, const GroupWord& b);

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend std::strong_ordering operator<=>(const GroupWord&, const GroupWord&) = default;

    std::string to_string() const;

   private:
    Kind kind_;
    std::vector<int> letters_;
    std::vector<std::int64_t> exponents_;
};

}  // namespace omegapi

#endif
