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

#include "gqca/bitstring.hpp"

#include <bit>

#include "gqca/errors.hpp"

namespace gqca {

namespace {

void check_length(int length) {
    if (length < 1 || length > kMaxBitStringLength) {
        throw DomainError("bit string length must be in [1, 63], got " + std::to_string(length));
    }
}

}  // namespace

BitString::BitString(int length, uint64_t index) : length_(length), index_(index) {
    check_length(length);
    if (length < 64 && (index >> length) != 0) {
        throw DomainError("basis index does not fit in " + std::to_string(length) + " bits");
    }
}

BitString BitString::from_string(std::string_view text) {
    check_length(static_cast<int>(text.size()));
    uint64_t index = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw DomainError("bit string may only contain '0' and '1': '" + std::string(text) + "'");
        }
        index = (index << 1) | static_cast<uint64_t>(c - '0');
    }
    return BitString(static_cast<int>(text.size()), index);
}

BitString BitString::zeros(int length) {
    return BitString(length, 0);
}

BitString BitString::with_flips(int length, std::span<const int> sites) {
    check_length(length);
    uint64_t index = 0;
    for (int s : sites) {
        if (s < 1 || s > length) {
            throw DomainError("flip site " + std::to_string(s) + " outside [1, " + std::to_string(length) + "]");
        }
        index |= site_mask(length, s);
    }
    return BitString(length, index);
}

BitString BitString::flipped(int site) const {
    if (site < 1 || site > length_) {
        throw DomainError("site " + std::to_string(site) + " outside the chain");
    }
    return BitString(length_, index_ ^ site_mask(length_, site));
}

int BitString::popcount() const {
    return std::popcount(index_);
}

std::vector<int> BitString::set_sites() const {
    std::vector<int> out;
    for (int s = 1; s <= length_; ++s) {
        if (bit(s)) {
            out.push_back(s);
        }
    }
    return out;
}

std::string BitString::str() const {
    std::string out(static_cast<size_t>(length_), '0');
    for (int s = 1; s <= length_; ++s) {
        if (bit(s)) {
            out[static_cast<size_t>(s - 1)] = '1';
        }
    }
    return out;
}

std::vector<int> isolated_flip_sites(int length, int count) {
    check_length(length);
    if (count < 1) {
        throw DomainError("isolated flip count must be positive");
    }
    if (count == 1) {
        return {(length + 1) / 2};
    }
    // Symmetric about the chain center with spacing ceil((L+1)/(n+1)),
    // shrunk by one when the start site would not be an integer.
    int spacing = (length + 1 + count) / (count + 1);
    if ((length + 1 - (count - 1) * spacing) % 2 != 0) {
        --spacing;
    }
    int first = (length + 1 - (count - 1) * spacing) / 2;
    if (spacing < 2 || first < 1) {
        throw DomainError("cannot place " + std::to_string(count) + " isolated flips on " + std::to_string(length) +
                          " sites");
    }
    std::vector<int> sites;
    for (int k = 0; k < count; ++k) {
        sites.push_back(first + k * spacing);
    }
    return sites;
}

}  // namespace gqca
