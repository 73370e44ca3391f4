#pragma once

#include <cstdint>

#include "qwm/graph.hpp"

namespace qwm {

/// splitmix64: tiny, seedable, identical output everywhere. Used for every
/// randomized corpus so tests and the acceptance suite are reproducible.
struct SplitMix64 {
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;

    explicit SplitMix64(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n); the modulo bias is irrelevant at the
    /// corpus sizes used here.
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

/// Random weakly connected mixed graph: a random spanning tree plus extra
/// pairs with probability ~1/3, each pair classed uniformly among
/// bidirected / forward / reverse.
MixedGraph random_connected_mixed_graph(SplitMix64& rng, int n_min, int n_max);

/// Random k-regular connected mixed graph on a prime number of vertices:
/// a circulant with k/2 random offsets (always connected when p is prime),
/// randomly oriented. k must be even and 2 <= k < p.
MixedGraph random_circulant_mixed(SplitMix64& rng, int p, int k);

} // namespace qwm
