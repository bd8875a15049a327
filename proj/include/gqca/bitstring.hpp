// Copyright 2026 The gqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GQCA_BITSTRING_HPP
#define GQCA_BITSTRING_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gqca {

/// Largest chain a BitString can describe.
inline constexpr int kMaxBitStringLength = 63;

/// Bit mask of a 1-based chain site inside a basis index. Site 1 is the
/// leftmost site and the most significant bit.
constexpr uint64_t site_mask(int length, int site) {
    return uint64_t{1} << (length - site);
}

/// Value (0 or 1) of a 1-based site in a basis index. Sites 0 and length+1
/// are the fixed |0> boundary and always read 0.
constexpr int site_bit(uint64_t index, int length, int site) {
    if (site < 1 || site > length) {
        return 0;
    }
    return static_cast<int>((index >> (length - site)) & 1);
}

/// Computational-basis label of an L-site chain.
///
/// The string form reads left to right from site 1 to site L, which is also
/// the most-significant-first order of `index()`.
class BitString {
   public:
    BitString() = default;
    BitString(int length, uint64_t index);

    static BitString from_string(std::string_view text);
    static BitString zeros(int length);
    /// Sites are 1-based.
    static BitString with_flips(int length, std::span<const int> sites);

    int size() const {
        return length_;
    }
    uint64_t index() const {
        return index_;
    }
    /// 1-based; out-of-chain sites read as the fixed boundary 0.
    int bit(int site) const {
        return site_bit(index_, length_, site);
    }
    BitString flipped(int site) const;
    int popcount() const;
    std::vector<int> set_sites() const;
    std::string str() const;

    auto operator<=>(const BitString &) const = default;

   private:
    int length_ = 0;
    uint64_t index_ = 0;
};

/// Sites of `count` equally spaced isolated flips on a chain of `length`
/// sites. `count == 1` places the flip at the central site.
std::vector<int> isolated_flip_sites(int length, int count);

}  // namespace gqca

#endif  // GQCA_BITSTRING_HPP
