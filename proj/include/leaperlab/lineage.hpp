#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "leaperlab/lift.hpp"

namespace leaperlab {

// A lineage assigns a board and a leaper graph to every leaper of a subtree
// of the descent tree, propagating the root assignment along arrows by
// lifting. Nodes are addressed by root-relative paths over {f,g,h}, applied
// left to right ("" = root, "gh" = h(g(root))).
struct LineageNode {
    std::string path;
    Leaper leaper;
    Board board;
    LeaperGraph graph;
    int parent;     // node index, -1 at the root
    LiftType via;   // arrow into this node (meaningless at the root)
};

struct PerfectSubtree {};
struct ExplicitSubtree {
    std::vector<std::string> paths;  // must be prefix-closed; "" implied
};
using SubtreeSpec = std::variant<PerfectSubtree, ExplicitSubtree>;

struct Lineage {
    bool wazir_root = false;
    std::vector<LineageNode> nodes;  // BFS order, children in f < g < h order
    int depth_limit = 0;

    const LineageNode* find(const std::string& path) const;
};

inline constexpr int kDefaultLineageDepth = 3;

// Originators: root leaper (skew free, or the wazir), root board, root graph.
// A perfect lineage requires a standard root board and a root graph that is
// a connected component with neither completion a simple weave (any board
// works for the wazir, whose originating graph is its complete graph).
Lineage build_lineage(const Leaper& root, const Board& board, const LeaperGraph& graph,
                      const SubtreeSpec& subtree, int depth_limit = kDefaultLineageDepth);

// board-size offset constants: every (r, s)-leaper node has board
// (r + s + w) x (r + s + z)
std::pair<int, int> offsets(const Lineage& lineage);

// special perfect-lineage families
std::vector<Lineage> sl_lineages(const Leaper& l, int depth_limit = kDefaultLineageDepth);
std::vector<Lineage> r_lineages(const Leaper& l, int depth_limit = kDefaultLineageDepth);
std::vector<Lineage> w_lineages(const Leaper& l, int depth_limit = kDefaultLineageDepth);

bool w_lineage_eligible(const Leaper& l);

// root boards of the R- and W-families (the Lemma constructions)
Board r_root_board(const Leaper& l);
Board w_root_board(const Leaper& l);

struct LineageCheck {
    std::string node;
    std::string check;
    bool pass;
    std::string detail;
};

struct LineageReport {
    std::vector<LineageCheck> checks;
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// memo for complete graphs shared across the lineages of one verification run
class CompleteGraphCache {
  public:
    const LeaperGraph& get(const Leaper& l, const Board& b);

  private:
    std::map<std::tuple<int, int, int, int, int, int>, std::unique_ptr<LeaperGraph>> cache_;
};

// Instance verification of the perfect-lineage theorem: every assigned graph
// is a connected component of its leaper on its board; lowering inverts
// lifting across every arrow; non-root graphs are non-weaves.
LineageReport verify_perfect_lineage(const Lineage& lineage,
                                     CompleteGraphCache* cache = nullptr);

}  // namespace leaperlab
