/*
 * Copyright 2026 the gppdf developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <random>

namespace gppdf {

/// splitmix64 step; used to whiten seeds before feeding them to engines.
inline std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derive an independent stream seed from (seed, stream). Deterministic, so
/// per-observation or per-repetition work can run under any schedule and
/// still produce bit-identical results.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t s = seed ^ (0xd1b54a32d192ed03ULL * (stream + 1));
    splitmix64(s);
    return splitmix64(s);
}

/// Engine used throughout; always constructed from an explicit seed.
inline std::mt19937_64 make_engine(std::uint64_t seed)
{
    std::uint64_t s = seed;
    return std::mt19937_64(splitmix64(s));
}

} // namespace gppdf
