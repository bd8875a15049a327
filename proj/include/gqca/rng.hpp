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


#ifndef GQCA_RNG_HPP
#define GQCA_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace gqca {

/// SplitMix64 finalizer.
constexpr uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Key of an independent stream: the seed folded with each id in order, so
/// (seed, trajectory, cycle, purpose) names one stream regardless of which
/// thread consumes it.
constexpr uint64_t stream_key(uint64_t seed, std::initializer_list<uint64_t> ids) {
    uint64_t k = mix64(seed);
    for (uint64_t id : ids) {
        k = mix64(k ^ mix64(id + 0x632be59bd9b4e019ULL));
    }
    return k;
}

/// Counter-based generator: output n is mix64(key + n * golden). Satisfies
/// UniformRandomBitGenerator.
class CounterRng {
   public:
    using result_type = uint64_t;

    explicit CounterRng(uint64_t key) : key_(key) {}
    CounterRng(uint64_t seed, std::initializer_list<uint64_t> ids) : key_(stream_key(seed, ids)) {}

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<uint64_t>::max();
    }
    result_type operator()() {
        return mix64(key_ + 0x9e3779b97f4a7c15ULL * counter_++);
    }
    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }
    /// Uniform integer in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        const uint64_t limit = max() - max() % n;
        uint64_t v;
        do {
            v = (*this)();
        } while (v >= limit);
        return v % n;
    }

   private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace gqca

#endif  // GQCA_RNG_HPP
