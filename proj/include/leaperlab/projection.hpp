#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leaperlab/board.hpp"
#include "leaperlab/leaper.hpp"

namespace leaperlab {

// Projection graph Pi(a, b, I): vertices are the integers of I, an edge
// joins u and v iff |u - v| is a (short) or b (long).
struct Projection {
    int a, b;      // 0 < a < b
    int lo, hi;    // interval [lo; hi], nonempty

    Projection(int a_, int b_, int lo_, int hi_);
    // standard interval [0; s-1]
    Projection(int a_, int b_, int s);

    int size() const { return hi - lo + 1; }
    bool contains(int v) const { return v >= lo && v <= hi; }
    bool adjacent(int u, int v) const;
    std::vector<int> neighbors(int v) const;

    // connected components; each sorted ascending, list sorted by least vertex
    std::vector<std::vector<int>> components() const;
    std::vector<int> component_of(int v) const;

    // all edges of the component containing the given sorted vertex list
    std::vector<std::pair<int, int>> edges_within(const std::vector<int>& verts) const;
};

// signature of a walk: 's' for short steps, 'l' for long ones
std::string signature(const Projection& pi, const std::vector<int>& walk);
std::string signature_steps(int a, int b, const std::vector<int>& walk);
bool complements(const std::string& sigma, const std::string& tau);

enum class WeaveKind { NonWeave, Simple, Compound };

struct WeaveClass {
    WeaveKind kind;
    bool singleton = false;
    // compound data: d long edges, subpath short-edge counts s_0..s_d, and
    // the w_{i,j} vertex labels (groups[i][j] = w_{i,j0+j} per the eps offsets)
    int long_edges = 0;
    std::vector<int> subpath_lengths;
    std::vector<std::vector<int>> groups;
    std::vector<int> group_label_start;  // j-index of the first vertex in each group
};

// classify one connected component (vertices sorted ascending)
WeaveClass classify_weave(const Projection& pi, const std::vector<int>& component);

bool is_weave(const Projection& pi, const std::vector<int>& component);

struct WeaveThresholds {
    int simple_bound;        // simple weave exists iff s < simple_bound
    int weave_bound;         // weave exists iff s < weave_bound
    int nonsingleton_lower;  // non-singleton weave exists iff lower < s < upper
    int nonsingleton_upper;
};

WeaveThresholds weave_thresholds(int p, int q);

// closed-form Lemma test: s >= a + b - gcd(a,b) + 1
bool has_unbalanced_closed_walk(const Projection& pi);
// independent decision via spanning forest + fundamental cycle step counts
bool unbalanced_closed_walk_oracle(const Projection& pi);

// Walks with complementary signatures zip into a leaper walk.
struct ZipResult {
    bool ok = false;
    std::string error;
    std::vector<Cell> walk;
};
ZipResult zip_walks(const std::vector<int>& chi, const std::vector<int>& upsilon, int a, int b);

// Unique walk whose x-projection is chi and whose y-projection stays on the
// 4-cycle u -- u+p -- u+p+q -- u+q -- u of Pi_Y, starting at (chi[0], y1).
struct FourCycleResult {
    bool ok = false;
    std::string error;
    std::vector<Cell> walk;
};
FourCycleResult walk_on_four_cycle(const Projection& pi_x, const Projection& pi_y,
                                   const std::vector<int>& chi, int u, int y1);

}  // namespace leaperlab
