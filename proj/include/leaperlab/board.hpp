#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace leaperlab {

struct Cell {
    int x = 0;
    int y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;

    // canonical ordering is row-major: y first, then x
    friend auto operator<=>(const Cell& a, const Cell& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }

    Cell operator+(const Cell& o) const { return {x + o.x, y + o.y}; }
    Cell operator-(const Cell& o) const { return {x - o.x, y - o.y}; }
    Cell operator-() const { return {-x, -y}; }
};

inline int cell_parity(const Cell& c) {
    return ((c.x + c.y) % 2 + 2) % 2;
}

// Board = product of two integer intervals [x_min;x_max] x [y_min;y_max].
// Size is m x n with m rows (height) and n columns (width).
struct Board {
    int x_min = 0, x_max = 0, y_min = 0, y_max = 0;

    Board() = default;
    Board(int xmin, int xmax, int ymin, int ymax)
        : x_min(xmin), x_max(xmax), y_min(ymin), y_max(ymax) {
        if (x_min > x_max || y_min > y_max)
            throw std::invalid_argument("empty board interval");
    }

    friend bool operator==(const Board&, const Board&) = default;

    int width() const { return x_max - x_min + 1; }   // n
    int height() const { return y_max - y_min + 1; }  // m

    bool contains(const Cell& c) const {
        return c.x >= x_min && c.x <= x_max && c.y >= y_min && c.y <= y_max;
    }

    bool is_standard() const {
        int sx = x_min + x_max, sy = y_min + y_max;
        return (sx == 0 || sx == 1) && (sy == 0 || sy == 1);
    }

    // cells in canonical (y, x) order
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(static_cast<size_t>(width()) * height());
        for (int y = y_min; y <= y_max; ++y)
            for (int x = x_min; x <= x_max; ++x) out.push_back({x, y});
        return out;
    }

    Board transposed() const { return Board{y_min, y_max, x_min, x_max}; }
    Board translated(const Cell& d) const {
        return Board{x_min + d.x, x_max + d.x, y_min + d.y, y_max + d.y};
    }
    Board grown(int margin) const {
        return Board{x_min - margin, x_max + margin, y_min - margin, y_max + margin};
    }
};

// Unique standard board of size m x n (interval sums in {0, 1}).
Board standard_board(int m, int n);

// A' fits inside A'' (allows transposing A').
bool fits(const Board& a, const Board& b);
bool fits(int m1, int n1, int m2, int n2);

// A' smaller than or congruent to A'' (no transposition).
bool le(const Board& a, const Board& b);
bool le(int m1, int n1, int m2, int n2);

Board bbox(std::span<const Cell> cells);
Board ball(const Cell& center, int radius);

}  // namespace leaperlab
