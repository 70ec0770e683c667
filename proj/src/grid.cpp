#include "toppling/grid.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace toppling {

GridView::GridView(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("GridView: n must be >= 2");
    heights_.assign(n, 0);
    layer_fill_.assign(2 * n + 2, 0);
}

GridView::GridView(int n, std::vector<std::int64_t> heights)
    : n_(n), heights_(std::move(heights)) {
    if (n < 2) throw std::invalid_argument("GridView: n must be >= 2");
    if (static_cast<int>(heights_.size()) != n)
        throw std::invalid_argument("GridView: height count mismatch");
    if (!std::is_sorted(heights_.begin(), heights_.end(), std::greater<>()))
        throw std::invalid_argument("GridView: heights must be nonincreasing");
    if (heights_[n - 1] < 0) throw std::invalid_argument("GridView: negative height");
    rebuild_caches();
}

void GridView::rebuild_caches() {
    total_ = 0;
    in_chips_ = 0;
    layer_fill_.assign(2 * n_ + 2, 0);
    // Column i contributes its cells to layers i .. i+h-1; accumulate with
    // a difference array.
    std::vector<std::int64_t> diff(layer_fill_.size() + 1, 0);
    for (int i = 1; i <= n_; ++i) {
        const std::int64_t h = heights_[i - 1];
        total_ += h;
        in_chips_ += std::min<std::int64_t>(h, n_ - i);
        if (h > 0) {
            diff[i] += 1;
            diff[std::min<std::int64_t>(i + h, diff.size() - 1)] -= 1;
        }
    }
    std::int64_t run = 0;
    for (std::size_t l = 0; l < layer_fill_.size(); ++l) {
        run += diff[l];
        layer_fill_[l] = run;
    }
    layer_cursor_ = 1;
}

int GridView::first_incomplete_layer() const {
    while (layer_cursor_ <= n_ - 1 && layer_fill_[layer_cursor_] == layer_cursor_)
        ++layer_cursor_;
    return layer_cursor_;
}

int GridView::place(int col) {
    if (col < 1 || col > n_) throw std::invalid_argument("place: column out of range");
    const std::int64_t h = heights_[col - 1];
    // Leftmost column of equal height.
    const auto it = std::lower_bound(heights_.begin(), heights_.end(), h, std::greater<>());
    const int idx = static_cast<int>(it - heights_.begin());
    const std::int64_t row = ++heights_[idx];
    ++total_;
    if (idx + 1 + row <= n_) ++in_chips_;
    const std::size_t layer = static_cast<std::size_t>(idx + row);
    if (layer < layer_fill_.size()) ++layer_fill_[layer];
    return idx + 1;
}

void GridView::fire() {
    if (!fire_ready()) throw std::invalid_argument("fire: column 1 below n-1");
    const std::int64_t overflow = heights_[0] - (n_ - 1);
    std::vector<std::int64_t> next(n_);
    for (int i = 0; i + 1 < n_; ++i) next[i] = heights_[i + 1] + 1;
    next[n_ - 1] = overflow;
    heights_ = std::move(next);
    if (!std::is_sorted(heights_.begin(), heights_.end(), std::greater<>())) {
        // Only possible for grids not reachable through play.
        std::sort(heights_.begin(), heights_.end(), std::greater<>());
        rebuild_caches();
    }
    // Totals, in-chips and layer counts are unchanged by a firing.
}

int row_move(const GridView& grid) {
    const std::int64_t row = grid.first_incomplete_row();
    const auto& h = grid.heights();
    const auto it = std::lower_bound(h.begin(), h.end(), row - 1, std::greater<>());
    return static_cast<int>(it - h.begin()) + 1;
}

int triangle_move(const GridView& grid) {
    const int layer = grid.first_incomplete_layer();
    for (int col = std::min(layer, grid.n()); col >= 1; --col) {
        if (grid.height(col) < layer + 1 - col) return col;
    }
    throw std::logic_error("triangle_move: incomplete layer has no empty cell");
}

namespace {

// All in-cells of the side-s square with lower-left corner (1, k+1) filled?
bool side_filled(const GridView& grid, std::int64_t k, int s) {
    const int n = grid.n();
    if (s > n) return false;
    const std::int64_t boundary = n - k - s;  // cols <= boundary capped at k+s
    const int part_a = static_cast<int>(std::min<std::int64_t>(s, std::max<std::int64_t>(boundary, 0)));
    if (part_a >= 1 && k + s >= k + 1 && grid.height(part_a) < k + s) return false;
    for (int c = part_a + 1; c <= s; ++c) {
        const std::int64_t cap = n - c;
        if (cap < k + 1) break;  // no in-cells in this or later columns
        if (grid.height(c) < cap) return false;
    }
    return true;
}

}  // namespace

int square_move(const GridView& grid, int* cached_side) {
    const int n = grid.n();
    const std::int64_t k = grid.first_incomplete_row();
    int s = cached_side ? *cached_side : 0;
    if (s < 0 || s > n) s = 0;
    while (s > 0 && !side_filled(grid, k, s)) --s;
    while (s < n && side_filled(grid, k, s + 1)) ++s;
    if (cached_side) *cached_side = s;

    for (int attempt = 0; attempt < 2; ++attempt) {
        // Column s+1, lowest unfilled cell within the first s square rows.
        if (s + 1 <= n) {
            const std::int64_t r1 = std::max<std::int64_t>(k + 1, grid.height(s + 1) + 1);
            if (r1 <= k + s && (s + 1) + r1 <= n) return s + 1;
        }
        // Otherwise the top row of S_{s+1}, left to right, in-cells only.
        const std::int64_t top = k + s + 1;
        const std::int64_t cmax = std::min<std::int64_t>(s + 1, n - top);
        if (cmax >= 1) {
            const auto& h = grid.heights();
            const auto it = std::lower_bound(h.begin(), h.end(), top - 1, std::greater<>());
            const int c0 = static_cast<int>(it - h.begin()) + 1;
            if (c0 <= cmax) return c0;
        }
        if (attempt == 0) {
            // Cache may be stale after a firing; recompute from scratch.
            s = 0;
            while (s < n && side_filled(grid, k, s + 1)) ++s;
            if (cached_side) *cached_side = s;
        }
    }
    // The square has run out of in-cells (endgame); fall back to filling
    // the bottommost incomplete row.
    return row_move(grid);
}

}  // namespace toppling
