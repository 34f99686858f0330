#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "leaperlab/graph.hpp"

namespace leaperlab {

// Lateral / diagonal / margin parameters of a lifting transformation.
// f: Lat = p+q, Dia = p; g: Lat = q-p, Dia = q; h: Lat = p+q, Dia = q.
// For the wazir, g and h coincide (Lat = Dia = Mar = 1); f is undefined.
struct LiftParams {
    LiftType type;
    int lat;
    int dia;
    int mar;  // min(lat, dia)
};

LiftParams lift_params(LiftType t, const Leaper& l);

Board lift_board(LiftType t, const Leaper& l, const Board& a);
// defined iff both sides of b exceed 2*Mar; l is the lowered (parent) leaper
std::optional<Board> lower_board_from(LiftType t, const Leaper& l, const Board& b);
// same, taking the lifted leaper m (its tree parent is the lowered leaper)
std::optional<Board> lower_board(LiftType t, const Leaper& m, const Board& b);

using Edge = std::pair<Cell, Cell>;

// cells a^E, a^NW, a^S, a^NE, a^W, a^SE, a^N, a^SW: consecutive cells are
// joined by edges of the lifted leaper, forming the matched 8-cycle
std::array<Cell, 8> octagon(const LiftParams& lp, const Cell& a);

bool is_matched(const LiftParams& lp, const Cell& a, const Edge& e);

// the (up to) eight edges of M on b matched with a
std::vector<Edge> matched_edges(LiftType t, const Leaper& l, const Cell& a, const Board& b);
std::vector<Edge> matched_edges_unbounded(LiftType t, const Leaper& l, const Cell& a);

// the two cells matched with an edge of M
std::array<Cell, 2> matched_cells(LiftType t, const Leaper& l, const Edge& e);

// edge bijection: both endpoints of the L-edge are matched with its cross-edge
Edge cross_edge(LiftType t, const Leaper& l, const Edge& l_edge);
Edge cross_edge_inverse(LiftType t, const Leaper& l, const Edge& m_edge);

// lifting cell sets and graphs
std::vector<Edge> lift_cells(LiftType t, const Leaper& l, const Board& a,
                             std::span<const Cell> cells);
LeaperGraph lift_graph(LiftType t, const Leaper& l, const Board& a, const LeaperGraph& g);

// lowering edge sets and graphs (l is the lowered leaper)
std::vector<Cell> lower_edge_set(LiftType t, const Leaper& l, const Board& b,
                                 std::span<const Edge> edges);
LeaperGraph lower_graph(LiftType t, const Leaper& l, const Board& b, const LeaperGraph& h);

// the unique cell matched with both arms of an acute angle of M
std::optional<Cell> core(LiftType t, const Leaper& l, const Cell& apex, const Cell& b1,
                         const Cell& b2);

// conjugation matrices of Lemma on matched walks: Phi(beta) = Phi(alpha) * M_t
Mat2 lift_conjugation(LiftType t);

struct MatchedWalkError {
    std::string message;
};

// Builds a closed walk of M on lift_board(A) matched with alpha. For t = f
// alpha must be angular-closed; for g, h any closed walk works.
std::variant<std::vector<Cell>, MatchedWalkError> lift_closed_walk(LiftType t, const Leaper& l,
                                                                   const Board& a,
                                                                   std::span<const Cell> alpha);

struct LoweredWalk {
    std::vector<Cell> alpha;
    std::vector<Cell> beta_shift;  // cyclic shift of beta matched with alpha
};
struct BalancedFlag {};

// Lowers an angular-closed walk of M on lift_board(A); when fewer than two
// distinct cells of A are cores of acute angles in beta, reports the
// balanced flag instead.
std::variant<LoweredWalk, BalancedFlag, MatchedWalkError> lower_closed_walk(
    LiftType t, const Leaper& l, const Board& a, std::span<const Cell> beta);

// definition-level matched-pair checker, independent of the builders
bool is_matched_walk_pair(LiftType t, const Leaper& l, std::span<const Cell> alpha,
                          std::span<const Cell> beta);

}  // namespace leaperlab
