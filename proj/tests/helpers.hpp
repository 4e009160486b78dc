#pragma once

#include <optional>
#include <random>

#include "swcap/graph.hpp"
#include "swcap/lattice.hpp"

namespace testutil {

// Random tree with Euler numbers in [lo, hi]; nullopt unless negative
// definite with det <= max_det.
inline std::optional<swcap::PlumbingGraph> random_tree(std::mt19937_64& rng, int n, int lo, int hi, long max_det) {
    swcap::PlumbingGraph g;
    std::uniform_int_distribution<int> e(lo, hi);
    for (int i = 0; i < n; ++i) g.add_vertex(e(rng));
    for (int i = 1; i < n; ++i) g.add_edge(i, static_cast<int>(rng() % static_cast<unsigned>(i)));
    if (!swcap::is_negative_definite(g)) return std::nullopt;
    swcap::Lattice lat(g);
    if (lat.det() > max_det) return std::nullopt;
    return g;
}

template <class Pred>
swcap::PlumbingGraph draw_tree(std::mt19937_64& rng, int min_n, int max_n, int lo, int hi, long max_det, Pred&& accept) {
    while (true) {
        int n = min_n + static_cast<int>(rng() % static_cast<unsigned>(max_n - min_n + 1));
        if (auto g = random_tree(rng, n, lo, hi, max_det); g && accept(*g)) return *g;
    }
}

}  // namespace testutil
