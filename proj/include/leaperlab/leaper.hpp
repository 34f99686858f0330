#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leaperlab/board.hpp"

namespace leaperlab {

// A (p, q)-leaper, stored normalized with p <= q. At least one parameter
// must be nonzero. The wazir is (0, 1); a leaper is skew when 0 < p < q.
struct Leaper {
    int p = 0;
    int q = 1;

    Leaper() = default;
    Leaper(int a, int b);

    friend bool operator==(const Leaper&, const Leaper&) = default;
    friend auto operator<=>(const Leaper&, const Leaper&) = default;

    bool is_wazir() const { return p == 0 && q == 1; }
    bool is_skew() const { return 0 < p && p < q; }
    int sum() const { return p + q; }

    // the distinct move offsets (8 for skew leapers, fewer when degenerate)
    std::vector<Cell> moves() const;
};

enum class FreenessKind { Free, HalfFree, NonRelativelyPrime };

struct FreenessClass {
    FreenessKind kind;
    int gcd;
    long long component_count;  // components of the complete graph on Z x Z
};

FreenessClass classify(const Leaper& l);

inline bool is_skew_free(const Leaper& l) {
    return l.is_skew() && classify(l).kind == FreenessKind::Free;
}
inline bool is_skew_half_free(const Leaper& l) {
    return l.is_skew() && classify(l).kind == FreenessKind::HalfFree;
}

// distance from s to the nearest multiple of t
int mmod(int s, int t);

// Even continued fraction of q/p. Coefficients are stored innermost-first:
// coefficients[i] = c_{i+1}, signs[i] = eps_{i+1}, so the value is
// c_k + eps_{k-1}/(c_{k-1} + ... ) with k = depth(). In the free tree all
// c_i are even; in the half-free tree c_1 is odd and >= 3, the rest even.
struct Ecf {
    std::vector<int> coefficients;
    std::vector<int> signs;  // each +1 or -1, size depth()-1

    int depth() const { return static_cast<int>(coefficients.size()); }

    // exact rational value (num, den) in lowest terms, den > 0
    std::pair<long long, long long> value() const;
};

Ecf ecf(const Leaper& l);  // requires skew free or skew half-free

// Tails L_0 ... L_k (free: L_0 is the wazir; half-free: starts at N_1).
std::vector<Leaper> tails(const Leaper& l);
int depth(const Leaper& l);

enum class LiftType : uint8_t { F, G, H };

char lift_char(LiftType t);
std::optional<LiftType> lift_from_char(char c);

// f: (p, 2p+q); g: (q, 2q-p); h: (q, p+2q). Accepts the wazir (f fixes it,
// g and h both yield the knight).
Leaper lift_leaper(const Leaper& l, LiftType t);

// Unique (parent, type) with lift_leaper(parent, type) == l, or nullopt at
// the tree root (knight in the free tree, camel in the half-free tree).
std::optional<std::pair<Leaper, LiftType>> parent_and_type(const Leaper& l);

// Address in the ternary descent tree, most recent lift first.
std::string descent(const Leaper& l);

enum class TreeKind { Free, HalfFree };

Leaper tree_root(TreeKind kind);              // knight / camel
Leaper leaper_of(const std::string& word, TreeKind kind = TreeKind::Free);

// descent obtained from the ecf by the substitution rule
// (c_i -> f^{c_i/2 - 1}, minus -> g, plus -> h); half-free tree uses
// f^{(c_1-3)/2} for the innermost coefficient.
std::string descent_from_ecf(const Ecf& e, TreeKind kind = TreeKind::Free);

std::array<Leaper, 3> tree_children(const Leaper& l);

struct TreeEntry {
    Leaper leaper;
    int depth;            // ecf depth
    std::string descent;
    Ecf ecf;
};

// All tree members with p + q <= bound, sorted by (p+q, p).
std::vector<TreeEntry> tree_enumerate(int bound, TreeKind kind = TreeKind::Free);

}  // namespace leaperlab
