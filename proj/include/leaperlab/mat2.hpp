#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "leaperlab/board.hpp"
#include "leaperlab/leaper.hpp"

namespace leaperlab {

// 2x2 integer matrix, row-major [[a, b], [c, d]].
struct Mat2 {
    long long a = 0, b = 0, c = 0, d = 0;

    friend bool operator==(const Mat2&, const Mat2&) = default;

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    // column vector (x, y)^t = M (p, q)^t
    Cell apply(int p, int q) const {
        return {static_cast<int>(a * p + b * q), static_cast<int>(c * p + d * q)};
    }
};

// Direction matrix of a single move of l with displacement delta, i.e. the
// unique M_delta with (dx, dy)^t = M_delta (p, q)^t among the eight
// secondary intercardinal matrices.
Mat2 phi_move(const Leaper& l, const Cell& delta);

// Phi of a walk: sum of per-move direction matrices.
Mat2 phi(const Leaper& l, std::span<const Cell> walk);

bool is_closed(std::span<const Cell> walk);
bool is_balanced(const Leaper& l, std::span<const Cell> walk);

}  // namespace leaperlab
