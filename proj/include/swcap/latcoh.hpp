#pragma once
// Lattice cohomology of the weight function l -> -(l, l + k + 2l')/2 on
// boxes of L, and its normalized Euler characteristic.

#include <cstdint>
#include <string>
#include <vector>

#include "swcap/lattice.hpp"

namespace swcap {

/// Weights on the lattice points origin + x, 0 <= x_v <= bound_v.
class WeightedBox {
public:
    WeightedBox(const Lattice& lat, const DualVector& l, std::vector<std::int64_t> origin, std::vector<std::int64_t> bound);

    [[nodiscard]] int dims() const { return static_cast<int>(bound_.size()); }
    [[nodiscard]] const std::vector<std::int64_t>& bound() const { return bound_; }
    [[nodiscard]] std::size_t points() const;
    [[nodiscard]] std::int64_t weight(const std::vector<std::int64_t>& x) const;
    /// Weights of all points with x_0 = x0, row-major over axes 1..s-1.
    void slice(std::int64_t x0, std::vector<std::int64_t>& out) const;
    /// All weights, row-major.
    [[nodiscard]] std::vector<std::int64_t> all_weights() const;

private:
    std::vector<std::int64_t> origin_, bound_;
    std::vector<std::int64_t> euler_, lin_;  // lin_v = 1 + star_v(l')
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> nbr_;
};

struct Betti {
    std::vector<std::int64_t> ranks;  // b_0, b_1, ...
    bool empty = true;
};

/// Betti numbers (ranks over Q, computed modulo 2^61 - 1) of the union of
/// cubes with weight <= n. Throws std::length_error above `max_cells`.
Betti sublevel_betti(const WeightedBox& box, std::int64_t n, std::size_t max_cells = 200000);

/// sum over all cubes c of the box of (-1)^{dim c} w(c).
__int128 alternating_cube_sum(const WeightedBox& box);

struct LevelInfo {
    std::int64_t level = 0;
    std::int64_t euler_char = 0;  // chi(S_n)
    std::int64_t b0 = 0;
};

struct EuOptions {
    int max_vertices = 7;
    std::int64_t max_axis = 1024;
    std::size_t max_points = std::size_t{1} << 27;
    std::size_t profile_points = std::size_t{1} << 21;  // per-level data below this size
    int confirmations = 2;
};

struct EuResult {
    bool conclusive = false;
    std::int64_t eu = 0;
    std::int64_t min_weight = 0;
    std::vector<std::int64_t> box;  // final box bound
    std::vector<LevelInfo> levels;  // empty when the box was too large
    std::int64_t rank_h0_red = 0;   // sum_n (b0(S_n) - 1)
    std::int64_t higher_alt = 0;    // sum_{q >= 1} (-1)^q rank H^q_red
    bool profile = false;
    std::string note;
};

/// eu H^*(G; k + 2l') on a growing box, accepted once `confirmations`
/// doublings leave eu, min and the per-level profile unchanged.
EuResult lattice_eu(const Lattice& lat, const DualVector& l, const EuOptions& opt = {});

/// Per-level chi and b0 on a fixed box.
std::vector<LevelInfo> level_profile(const WeightedBox& box, std::int64_t& min_weight);

}  // namespace swcap
