#include "leaperlab/lift.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace leaperlab {

namespace {

Edge normalize(const Edge& e) {
    return e.second < e.first ? Edge{e.second, e.first} : e;
}

bool same_edge(const Edge& a, const Edge& b) { return normalize(a) == normalize(b); }

bool is_move_of(int small, int big, const Cell& u, const Cell& v) {
    int dx = std::abs(u.x - v.x), dy = std::abs(u.y - v.y);
    return (dx == small && dy == big) || (dx == big && dy == small);
}

}  // namespace

LiftParams lift_params(LiftType t, const Leaper& l) {
    if (l.is_wazir()) {
        if (t == LiftType::F) throw std::invalid_argument("f-lift is undefined for the wazir");
        return {t, 1, 1, 1};  // g and h coincide on the wazir
    }
    if (!l.is_skew()) throw std::invalid_argument("lift parameters need a skew leaper or the wazir");
    switch (t) {
        case LiftType::F: return {t, l.p + l.q, l.p, l.p};
        case LiftType::G: return {t, l.q - l.p, l.q, l.q - l.p};
        case LiftType::H: return {t, l.p + l.q, l.q, l.q};
    }
    throw std::logic_error("bad lift type");
}

Board lift_board(LiftType t, const Leaper& l, const Board& a) {
    return a.grown(lift_params(t, l).mar);
}

std::optional<Board> lower_board_from(LiftType t, const Leaper& l, const Board& b) {
    int mar = lift_params(t, l).mar;
    if (b.height() <= 2 * mar || b.width() <= 2 * mar) return std::nullopt;
    return b.grown(-mar);
}

std::optional<Board> lower_board(LiftType t, const Leaper& m, const Board& b) {
    auto up = parent_and_type(m);
    if (!up || up->second != t) throw std::invalid_argument("leaper is not of this lift type");
    return lower_board_from(t, up->first, b);
}

std::array<Cell, 8> octagon(const LiftParams& lp, const Cell& a) {
    int L = lp.lat, D = lp.dia;
    return {Cell{a.x + L, a.y},     Cell{a.x - D, a.y + D}, Cell{a.x, a.y - L},
            Cell{a.x + D, a.y + D}, Cell{a.x - L, a.y},     Cell{a.x + D, a.y - D},
            Cell{a.x, a.y + L},     Cell{a.x - D, a.y - D}};
}

bool is_matched(const LiftParams& lp, const Cell& a, const Edge& e) {
    auto lat_move = [&](const Cell& u, const Cell& v) { return is_move_of(0, lp.lat, u, v); };
    auto dia_move = [&](const Cell& u, const Cell& v) {
        return std::abs(u.x - v.x) == lp.dia && std::abs(u.y - v.y) == lp.dia;
    };
    return (lat_move(a, e.first) && dia_move(a, e.second)) ||
           (lat_move(a, e.second) && dia_move(a, e.first));
}

std::vector<Edge> matched_edges_unbounded(LiftType t, const Leaper& l, const Cell& a) {
    LiftParams lp = lift_params(t, l);
    auto ring = octagon(lp, a);
    std::vector<Edge> out;
    for (size_t i = 0; i < 8; ++i) out.push_back(normalize({ring[i], ring[(i + 1) % 8]}));
    return out;
}

std::vector<Edge> matched_edges(LiftType t, const Leaper& l, const Cell& a, const Board& b) {
    std::vector<Edge> out;
    for (const Edge& e : matched_edges_unbounded(t, l, a))
        if (b.contains(e.first) && b.contains(e.second)) out.push_back(e);
    return out;
}

std::array<Cell, 2> matched_cells(LiftType t, const Leaper& l, const Edge& e) {
    LiftParams lp = lift_params(t, l);
    Leaper m = lift_leaper(l, t);
    if (!is_leaper_move(m, e.first, e.second))
        throw std::invalid_argument("not an edge of the lifted leaper");
    std::set<Cell> found;
    const Cell& b1 = e.first;
    std::vector<Cell> candidates;
    for (int s : {1, -1}) {
        candidates.push_back({b1.x + s * lp.lat, b1.y});
        candidates.push_back({b1.x, b1.y + s * lp.lat});
        for (int s2 : {1, -1}) candidates.push_back({b1.x + s * lp.dia, b1.y + s2 * lp.dia});
    }
    for (const Cell& a : candidates)
        if (is_matched(lp, a, e)) found.insert(a);
    if (found.size() != 2) throw std::logic_error("edge must be matched with exactly two cells");
    auto it = found.begin();
    Cell first = *it++;
    return {first, *it};
}

Edge cross_edge(LiftType t, const Leaper& l, const Edge& l_edge) {
    if (!l.is_skew()) throw std::invalid_argument("cross-edges need a skew leaper");
    if (!is_leaper_move(l, l_edge.first, l_edge.second))
        throw std::invalid_argument("not an edge of the leaper");
    LiftParams lp = lift_params(t, l);
    std::vector<Edge> hits;
    for (const Edge& e : matched_edges_unbounded(t, l, l_edge.first))
        if (is_matched(lp, l_edge.second, e)) hits.push_back(e);
    if (hits.size() != 1) throw std::logic_error("cross-edge is not unique");
    return hits[0];
}

Edge cross_edge_inverse(LiftType t, const Leaper& l, const Edge& m_edge) {
    auto cells = matched_cells(t, l, m_edge);
    if (!is_leaper_move(l, cells[0], cells[1]))
        throw std::logic_error("matched cells do not form an edge of the lower leaper");
    return normalize({cells[0], cells[1]});
}

std::vector<Edge> lift_cells(LiftType t, const Leaper& l, const Board& a,
                             std::span<const Cell> cells) {
    Board b = lift_board(t, l, a);
    std::set<Edge> out;
    for (const Cell& c : cells)
        for (const Edge& e : matched_edges(t, l, c, b)) out.insert(e);
    return {out.begin(), out.end()};
}

LeaperGraph lift_graph(LiftType t, const Leaper& l, const Board& a, const LeaperGraph& g) {
    Board b = lift_board(t, l, a);
    Leaper m = lift_leaper(l, t);
    auto edges = lift_cells(t, l, a, g.vertices());
    return LeaperGraph::from_edges(m, b, edges);
}

std::vector<Cell> lower_edge_set(LiftType t, const Leaper& l, const Board& b,
                                 std::span<const Edge> edges) {
    auto a = lower_board_from(t, l, b);
    if (!a) throw std::invalid_argument("board too small to lower");
    std::set<Cell> cells;
    for (const Edge& e : edges)
        for (const Cell& c : matched_cells(t, l, e))
            if (a->contains(c)) cells.insert(c);
    return {cells.begin(), cells.end()};
}

LeaperGraph lower_graph(LiftType t, const Leaper& l, const Board& b, const LeaperGraph& h) {
    auto a = lower_board_from(t, l, b);
    if (!a) throw std::invalid_argument("board too small to lower");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(h.edge_count()));
    for (int e = 0; e < h.edge_count(); ++e) edges.push_back(h.edge_cells(e));
    auto cells = lower_edge_set(t, l, b, edges);
    return LeaperGraph::induced(l, *a, cells);
}

std::optional<Cell> core(LiftType t, const Leaper& l, const Cell& apex, const Cell& b1,
                         const Cell& b2) {
    auto c1 = matched_cells(t, l, {apex, b1});
    auto c2 = matched_cells(t, l, {apex, b2});
    std::optional<Cell> hit;
    for (const Cell& x : c1)
        for (const Cell& y : c2)
            if (x == y) {
                if (hit && !(*hit == x)) return std::nullopt;
                hit = x;
            }
    return hit;
}

Mat2 lift_conjugation(LiftType t) {
    switch (t) {
        case LiftType::F: return Mat2{1, 0, -2, 1};
        case LiftType::G: return Mat2{2, -1, 1, 0};
        case LiftType::H: return Mat2{-2, 1, 1, 0};
    }
    throw std::logic_error("bad lift type");
}

namespace {

// connector arcs inside the on-board part of a matched 8-cycle
struct Octagon {
    std::array<Cell, 8> cells;
    std::array<bool, 8> on_board;

    int index_of(const Cell& c) const {
        for (int i = 0; i < 8; ++i)
            if (cells[static_cast<size_t>(i)] == c) return i;
        return -1;
    }

    // walk from x to y; prefer the shorter arc, counterclockwise on ties
    std::optional<std::vector<Cell>> arc(const Cell& x, const Cell& y) const {
        int ix = index_of(x), iy = index_of(y);
        if (ix < 0 || iy < 0) return std::nullopt;
        auto try_dir = [&](int dir) -> std::optional<std::vector<Cell>> {
            std::vector<Cell> path{cells[static_cast<size_t>(ix)]};
            int cur = ix;
            for (int steps = 0; steps < 8 && cur != iy; ++steps) {
                cur = (cur + dir + 8) % 8;
                if (!on_board[static_cast<size_t>(cur)]) return std::nullopt;
                path.push_back(cells[static_cast<size_t>(cur)]);
            }
            if (cur != iy) return std::nullopt;
            return path;
        };
        auto ccw = try_dir(+1), cw = try_dir(-1);
        if (ccw && (!cw || ccw->size() <= cw->size())) return ccw;
        return cw;
    }
};

Octagon make_octagon(const LiftParams& lp, const Cell& a, const Board& b) {
    Octagon o{octagon(lp, a), {}};
    for (size_t i = 0; i < 8; ++i) o.on_board[i] = b.contains(o.cells[i]);
    return o;
}

}  // namespace

std::variant<std::vector<Cell>, MatchedWalkError> lift_closed_walk(LiftType t, const Leaper& l,
                                                                   const Board& a,
                                                                   std::span<const Cell> alpha) {
    if (!is_closed(alpha)) return MatchedWalkError{"walk is not closed"};
    for (const Cell& c : alpha)
        if (!a.contains(c)) return MatchedWalkError{"walk leaves the board"};
    if (t == LiftType::F && !is_angular_closed(l, alpha))
        return MatchedWalkError{"f-lift requires an angular-closed walk"};
    LiftParams lp = lift_params(t, l);
    Board b = lift_board(t, l, a);
    size_t k = alpha.size() - 1;
    std::vector<Edge> cross(k);
    for (size_t i = 0; i < k; ++i)
        cross[i] = cross_edge(t, l, {alpha[i], alpha[(i + 1) % k]});
    std::vector<Octagon> octs;
    octs.reserve(k);
    for (size_t i = 0; i < k; ++i) octs.push_back(make_octagon(lp, alpha[i], b));

    auto endpoint = [&](const Edge& e, int s) { return s == 0 ? e.first : e.second; };

    // entry of group i is an endpoint of cross[(i+k-1) % k]; 2-state DP per layer
    for (int s0 = 0; s0 < 2; ++s0) {
        Cell start = endpoint(cross[k - 1], s0);
        // feasible[i][s]: groups i..k-1 can be walked when entered at endpoint s
        // of cross[i-1], finishing back at `start`
        std::vector<std::array<bool, 2>> feasible(k + 1, {false, false});
        feasible[k][s0] = true;
        for (size_t i = k; i-- > 0;) {
            for (int s = 0; s < 2; ++s) {
                Cell entry = endpoint(cross[(i + k - 1) % k], s);
                for (int tgt = 0; tgt < 2 && !feasible[i][s]; ++tgt) {
                    if (!octs[i].arc(entry, endpoint(cross[i], tgt))) continue;
                    if (feasible[i + 1][1 - tgt]) feasible[i][s] = true;
                }
            }
        }
        if (!feasible[0][s0]) continue;
        // reconstruct, preferring the shorter connector on ties
        std::vector<Cell> beta{start};
        int s = s0;
        for (size_t i = 0; i < k; ++i) {
            Cell entry = endpoint(cross[(i + k - 1) % k], s);
            std::optional<int> chosen;
            size_t chosen_len = 99;
            for (int tgt = 0; tgt < 2; ++tgt) {
                auto path = octs[i].arc(entry, endpoint(cross[i], tgt));
                if (!path || !feasible[i + 1][1 - tgt]) continue;
                if (!chosen || path->size() < chosen_len) {
                    chosen = tgt;
                    chosen_len = path->size();
                }
            }
            auto path = octs[i].arc(entry, endpoint(cross[i], *chosen));
            beta.insert(beta.end(), path->begin() + 1, path->end());
            beta.push_back(endpoint(cross[i], 1 - *chosen));  // traverse the cross-edge
            s = 1 - *chosen;
        }
        if (!(beta.back() == start)) return MatchedWalkError{"lift failed to close"};
        return beta;
    }
    return MatchedWalkError{"no connector path inside the lifted board"};
}

std::variant<LoweredWalk, BalancedFlag, MatchedWalkError> lower_closed_walk(
    LiftType t, const Leaper& l, const Board& a, std::span<const Cell> beta) {
    Leaper m = lift_leaper(l, t);
    Board b = lift_board(t, l, a);
    if (!is_closed(beta)) return MatchedWalkError{"walk is not closed"};
    for (const Cell& c : beta)
        if (!b.contains(c)) return MatchedWalkError{"walk leaves the lifted board"};
    if (!is_angular_closed(m, beta)) return MatchedWalkError{"lowering needs an angular-closed walk"};
    size_t n = beta.size() - 1;  // edges
    // core of the angle between edge j and edge j+1 (cyclically)
    std::vector<std::optional<Cell>> cores(n);
    for (size_t j = 0; j < n; ++j) {
        Cell apex = beta[j + 1];
        Cell prev = beta[j];
        Cell next = beta[(j + 2 <= n) ? j + 2 : 1];
        if (prev == next) continue;  // zero angle, resolved by propagation
        auto c = core(t, l, apex, prev, next);
        if (!c) return MatchedWalkError{"acute angle without a unique core"};
        cores[j] = *c;
    }
    bool any = false;
    for (auto& c : cores) any = any || c.has_value();
    if (!any) return BalancedFlag{};  // walk bounces on a single edge
    // left-fill zero angles
    std::optional<Cell> carry;
    for (size_t pass = 0; pass < 2; ++pass)
        for (size_t j = 0; j < n; ++j) {
            if (cores[j])
                carry = cores[j];
            else
                cores[j] = carry;
        }
    std::set<Cell> distinct;
    for (auto& c : cores) distinct.insert(*c);
    if (distinct.size() <= 1) return BalancedFlag{};
    for (const Cell& c : distinct)
        if (!a.contains(c)) return MatchedWalkError{"core outside the lowered board"};
    // cores[j] sits between edge j and edge j+1, so edge e is a cross-edge
    // iff the cores on its two sides differ
    auto left_core = [&](size_t e) { return *cores[(e + n - 1) % n]; };
    auto right_core = [&](size_t e) { return *cores[e]; };
    size_t first = n;
    for (size_t e = 0; e < n && first == n; ++e)
        if (!(left_core(e) == right_core(e))) first = e;
    // shift beta to start right after the first cross-edge in walk order
    std::vector<Cell> beta_shift;
    size_t start = first + 1;  // index of b_{1,1} within beta's cells
    for (size_t j = 0; j <= n; ++j) beta_shift.push_back(beta[(start + j) % n]);
    std::vector<Cell> alpha;
    alpha.push_back(right_core(first));
    for (size_t j = 1; j <= n; ++j) {
        size_t e = (first + j) % n;
        if (!(left_core(e) == right_core(e))) alpha.push_back(right_core(e));
    }
    if (!(alpha.back() == alpha.front()))
        return MatchedWalkError{"core sequence does not close"};
    for (size_t i = 0; i + 1 < alpha.size(); ++i)
        if (!is_leaper_move(l, alpha[i], alpha[i + 1]))
            return MatchedWalkError{"consecutive cores are not a leaper move"};
    return LoweredWalk{std::move(alpha), std::move(beta_shift)};
}

bool is_matched_walk_pair(LiftType t, const Leaper& l, std::span<const Cell> alpha,
                          std::span<const Cell> beta) {
    if (!is_closed(alpha) || !is_closed(beta)) return false;
    LiftParams lp = lift_params(t, l);
    size_t k = alpha.size() - 1, n = beta.size() - 1;
    if (k == 0 || n == 0) return false;
    std::vector<Edge> cross(k);
    for (size_t i = 0; i < k; ++i) {
        cross[i] = cross_edge(t, l, {alpha[i], alpha[(i + 1) % k]});
    }
    // dp[j][i]: first j edges of beta consumed, currently inside group i
    // (group i gathers edges matched with alpha[i], then exits via cross[i])
    std::vector<std::vector<bool>> dp(n + 1, std::vector<bool>(k + 1, false));
    dp[0][0] = true;
    for (size_t j = 0; j < n; ++j) {
        Edge e = normalize({beta[j], beta[j + 1]});
        for (size_t i = 0; i <= std::min(j, k - 1); ++i) {
            if (!dp[j][i]) continue;
            if (is_matched(lp, alpha[i], e)) dp[j + 1][i] = dp[j + 1][i] || true;
            if (same_edge(e, cross[i])) dp[j + 1][i + 1] = true;
        }
    }
    return dp[n][k];
}

}  // namespace leaperlab
