#include "leaperlab/board.hpp"

#include <algorithm>

namespace leaperlab {

Board standard_board(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("board sides must be positive");
    int xmin = -((n - 1) / 2);
    int ymin = -((m - 1) / 2);
    return Board{xmin, xmin + n - 1, ymin, ymin + m - 1};
}

bool fits(int m1, int n1, int m2, int n2) {
    return (m1 <= m2 && n1 <= n2) || (n1 <= m2 && m1 <= n2);
}

bool fits(const Board& a, const Board& b) {
    return fits(a.height(), a.width(), b.height(), b.width());
}

bool le(int m1, int n1, int m2, int n2) { return m1 <= m2 && n1 <= n2; }

bool le(const Board& a, const Board& b) {
    return le(a.height(), a.width(), b.height(), b.width());
}

Board bbox(std::span<const Cell> cells) {
    if (cells.empty()) throw std::invalid_argument("bbox of empty cell set");
    int xmin = cells[0].x, xmax = cells[0].x, ymin = cells[0].y, ymax = cells[0].y;
    for (const Cell& c : cells) {
        xmin = std::min(xmin, c.x);
        xmax = std::max(xmax, c.x);
        ymin = std::min(ymin, c.y);
        ymax = std::max(ymax, c.y);
    }
    return Board{xmin, xmax, ymin, ymax};
}

Board ball(const Cell& c, int r) {
    if (r < 0) throw std::invalid_argument("negative ball radius");
    return Board{c.x - r, c.x + r, c.y - r, c.y + r};
}

}  // namespace leaperlab
