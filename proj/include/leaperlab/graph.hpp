#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leaperlab/board.hpp"
#include "leaperlab/leaper.hpp"
#include "leaperlab/mat2.hpp"
#include "leaperlab/projection.hpp"

namespace leaperlab {

// A leaper graph of L on A: vertices are cells, edges are L-moves between
// them. Vertices are kept sorted in (y, x) order; edges store vertex index
// pairs (i < j). Immutable after construction.
class LeaperGraph {
  public:
    LeaperGraph(Leaper l, Board a, std::vector<Cell> vertices,
                std::vector<std::pair<int, int>> edges);

    static LeaperGraph complete(const Leaper& l, const Board& a);
    // induced graph on a vertex set (all L-edges between the given cells)
    static LeaperGraph induced(const Leaper& l, const Board& a, std::vector<Cell> cells);
    // graph formed by an edge list (vertices are the endpoints)
    static LeaperGraph from_edges(const Leaper& l, const Board& a,
                                  const std::vector<std::pair<Cell, Cell>>& edges);

    const Leaper& leaper() const { return leaper_; }
    const Board& board() const { return board_; }
    const std::vector<Cell>& vertices() const { return verts_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Cell& cell(int v) const { return verts_[static_cast<size_t>(v)]; }
    std::optional<int> index_of(const Cell& c) const;
    bool has_vertex(const Cell& c) const { return index_of(c).has_value(); }
    bool has_edge(const Cell& u, const Cell& v) const;
    std::pair<Cell, Cell> edge_cells(int e) const;
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    // connected components as sorted vertex-index lists, ordered by least vertex
    const std::vector<std::vector<int>>& components() const;
    int component_id(int v) const;
    std::vector<Cell> component_cells(int comp) const;
    bool is_connected() const;  // and nonempty

    LeaperGraph translated(const Cell& d) const;

  private:
    Leaper leaper_;
    Board board_;
    std::vector<Cell> verts_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    mutable std::vector<std::vector<int>> comps_;
    mutable std::vector<int> comp_id_;
    void ensure_components() const;
};

bool is_leaper_move(const Leaper& l, const Cell& a, const Cell& b);

// --- angles ---------------------------------------------------------------

enum class AngleType {
    Zero,
    LaterallyAcute,
    DiagonallyAcute,
    Right,
    LaterallyObtuse,
    DiagonallyObtuse,
    Straight,
};

AngleType angle_type(const Leaper& l, const Cell& apex, const Cell& b1, const Cell& b2);
bool is_acute(AngleType t);
std::string angle_name(AngleType t);

// walk with every interior angle acute or zero; angular-closed also wraps
bool is_angular_walk(const Leaper& l, std::span<const Cell> walk);
bool is_angular_closed(const Leaper& l, std::span<const Cell> walk);

// --- direction rigidity ----------------------------------------------------

// A finite leaper graph is directionally rigid iff it contains an unbalanced
// closed walk; decided via spanning forest + fundamental cycles.
bool is_directionally_rigid(const LeaperGraph& g);

// an explicit unbalanced fundamental cycle, if the graph is rigid
std::optional<std::vector<Cell>> unbalanced_fundamental_cycle(const LeaperGraph& g);

enum class TransferStatus { Ok, Rigid, Collision };

struct TransferResult {
    TransferStatus status;
    std::optional<LeaperGraph> graph;     // on the target's bounding board
    std::vector<Cell> image;              // image[i] = phi(vertex i)
};

// Direction-preserving transfer of a connected flexible graph onto a target
// leaper (Lemma 1's zeta accumulation). Fails on rigid input or when two
// vertices collide for this target.
TransferResult transfer(const LeaperGraph& g, const Leaper& target);

bool direction_isomorphic(const LeaperGraph& g, const LeaperGraph& h,
                          std::span<const Cell> image);

// --- completions and weave classification ----------------------------------

Projection projection_x(const Leaper& l, const Board& a);
Projection projection_y(const Leaper& l, const Board& a);

// Pi-component containing the projection of a connected cell set
std::vector<int> comp_x(const LeaperGraph& g, int component);
std::vector<int> comp_y(const LeaperGraph& g, int component);
std::vector<int> comp_x_of_cell(const Leaper& l, const Board& a, const Cell& c);

enum class ComponentClass { Singleton, VerticalWeave, HorizontalWeave, BothWeave, NonWeave };

struct ComponentInfo {
    ComponentClass cls;
    WeaveClass x_weave;  // classification of Comp_X
    WeaveClass y_weave;  // classification of Comp_Y
};

ComponentInfo classify_component(const LeaperGraph& g, int component);
bool component_is_weave(const LeaperGraph& g, int component);

// --- angularity -------------------------------------------------------------

// Partition of the edge set into angular components (connected components of
// the angularity graph: edges joined iff they form an acute angle).
std::vector<std::vector<int>> angular_components(const LeaperGraph& g);
// no isolated vertices and a single angular component
bool is_angular(const LeaperGraph& g);

// maximal paths all of whose angles are laterally acute; every edge lies in
// exactly one zigzag
std::vector<std::vector<int>> zigzags(const LeaperGraph& g);

struct NonAngularBounds {
    int m_lower;  // exists iff m_lower < m < m_upper (m <= n) ...
    int m_upper;
    int n_lower;  // ... and n >= n_lower
};

NonAngularBounds non_angular_bounds(int p, int q);

// connected components that split into >= 2 angular components
std::vector<int> non_angular_components(const LeaperGraph& g);

// --- clovers ----------------------------------------------------------------

struct CloverSet {
    Board square;                                // standard (p+q) x (p+q)
    std::vector<std::vector<Cell>> clovers;      // vertex sets, sorted
    std::vector<std::vector<int>> classes;       // translation classes, by anchor
};

// cycles of L on the standard square of side p+q, grouped into translation
// classes anchored at the lexicographically least vertex
CloverSet clovers(const Leaper& l);

// Hamiltonian cycle of l through all given cells; fast path when the induced
// graph is itself a single cycle, backtracking otherwise.
bool hamiltonian_cycle_exists(const Leaper& l, std::span<const Cell> cells);

// --- wazir neighbourliness, connectivity ------------------------------------

std::vector<int> wazir_neighbourly_components(const LeaperGraph& g);
bool wazir_journey_exists(const LeaperGraph& g);

bool is_nontrivially_connected(const LeaperGraph& g);
bool is_biconnected(const LeaperGraph& g);

}  // namespace leaperlab
