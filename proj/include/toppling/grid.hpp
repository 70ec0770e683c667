#pragma once

#include <cstdint>
#include <vector>

namespace toppling {

// Sorted-column view of a K_n configuration.  Column i (1-based) is the
// vertex with the i-th most chips; heights are kept nonincreasing.  Cell
// (i,j) lies inside the critical triangle iff i + j <= n, so column i holds
// at most n-i in-chips; the game is over once all n(n-1)/2 in-cells are
// filled.
class GridView {
public:
    explicit GridView(int n);
    GridView(int n, std::vector<std::int64_t> heights);  // nonincreasing

    int n() const { return n_; }
    std::int64_t height(int col) const { return heights_[col - 1]; }
    const std::vector<std::int64_t>& heights() const { return heights_; }
    std::int64_t total() const { return total_; }
    std::int64_t in_chips() const { return in_chips_; }
    std::int64_t out_chips() const { return total_ - in_chips_; }
    std::int64_t critical_cells() const {
        return static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
    }
    bool game_over() const { return in_chips_ == critical_cells(); }

    // Bottommost incomplete row (1-based).
    std::int64_t first_incomplete_row() const { return heights_[n_ - 1] + 1; }
    // Least-indexed incomplete layer; layer L <= n-1 has L cells, all
    // inside the critical triangle.  Layer counts are invariant under
    // firing, so the cached cursor only ever advances.
    int first_incomplete_layer() const;

    // Add one chip to the given column.  Equal-height ties resolve to the
    // leftmost column, which keeps the heights sorted; returns the column
    // actually used (1-based).
    int place(int col);

    bool fire_ready() const { return heights_[0] >= n_ - 1; }
    // Fire the top column: with j = height(1) - (n-1), empty column 1,
    // shift the rest up-left, fill the bottom row, and put j chips in the
    // last column.  Preserves total chips, in-chips, and layer counts.
    void fire();

private:
    void rebuild_caches();
    int n_;
    std::vector<std::int64_t> heights_;
    std::int64_t total_ = 0;
    std::int64_t in_chips_ = 0;
    std::vector<std::int64_t> layer_fill_;
    mutable int layer_cursor_ = 1;
};

// Strategy moves; all return a 1-based target column and require the game
// not to be over.

// Max: leftmost empty cell in the bottommost incomplete row.
int row_move(const GridView& grid);

// Min: rightmost empty cell in the least-indexed incomplete layer.
int triangle_move(const GridView& grid);

// Min, as a response to the row strategy: grow the square with lower-left
// corner (1, k+1), k the bottommost incomplete row.  Targets the next
// unfilled in-cell of S_{s+1} in row-major order from its bottom row, where
// s is the largest side whose in-cells are all filled.  `cached_side` is a
// performance hint carried between moves; pass nullptr for a fresh
// computation.
int square_move(const GridView& grid, int* cached_side = nullptr);

}  // namespace toppling
