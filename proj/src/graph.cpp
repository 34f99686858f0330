#include "leaperlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace leaperlab {

// --- Mat2 / Phi -------------------------------------------------------------

Mat2 phi_move(const Leaper& l, const Cell& delta) {
    if (!l.is_skew()) throw std::invalid_argument("direction matrices need a skew leaper");
    int p = l.p, q = l.q;
    int dx = delta.x, dy = delta.y;
    if (std::abs(dx) == q && std::abs(dy) == p) {
        // (dx, dy) = (sx*q, sy*p) -> [[0, sx], [sy, 0]]
        return Mat2{0, dx > 0 ? 1 : -1, dy > 0 ? 1 : -1, 0};
    }
    if (std::abs(dx) == p && std::abs(dy) == q) {
        // (dx, dy) = (sx*p, sy*q) -> [[sx, 0], [0, sy]]
        return Mat2{dx > 0 ? 1 : -1, 0, 0, dy > 0 ? 1 : -1};
    }
    throw std::invalid_argument("not a move of this leaper");
}

Mat2 phi(const Leaper& l, std::span<const Cell> walk) {
    Mat2 sum{};
    for (size_t i = 0; i + 1 < walk.size(); ++i) sum = sum + phi_move(l, walk[i + 1] - walk[i]);
    return sum;
}

bool is_closed(std::span<const Cell> walk) {
    return walk.size() >= 2 && walk.front() == walk.back();
}

bool is_balanced(const Leaper& l, std::span<const Cell> walk) {
    if (!is_closed(walk) && walk.size() > 1) throw std::invalid_argument("walk is not closed");
    return phi(l, walk).is_zero();
}

bool is_leaper_move(const Leaper& l, const Cell& a, const Cell& b) {
    int dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y);
    return (dx == l.p && dy == l.q) || (dx == l.q && dy == l.p);
}

// --- LeaperGraph ------------------------------------------------------------

LeaperGraph::LeaperGraph(Leaper l, Board a, std::vector<Cell> vertices,
                         std::vector<std::pair<int, int>> edges)
    : leaper_(l), board_(a), verts_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    for (const Cell& c : verts_)
        if (!board_.contains(c)) throw std::invalid_argument("vertex outside board");
    for (auto& [i, j] : edges_) {
        if (i == j || i < 0 || j < 0 || i >= vertex_count() || j >= vertex_count())
            throw std::invalid_argument("bad edge index");
        if (i > j) std::swap(i, j);
        if (!is_leaper_move(leaper_, verts_[i], verts_[j]))
            throw std::invalid_argument("edge is not a leaper move");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(verts_.size(), {});
    for (auto& [i, j] : edges_) {
        adj_[static_cast<size_t>(i)].push_back(j);
        adj_[static_cast<size_t>(j)].push_back(i);
    }
}

std::optional<int> LeaperGraph::index_of(const Cell& c) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), c);
    if (it != verts_.end() && *it == c) return static_cast<int>(it - verts_.begin());
    return std::nullopt;
}

bool LeaperGraph::has_edge(const Cell& u, const Cell& v) const {
    auto i = index_of(u), j = index_of(v);
    if (!i || !j) return false;
    auto [a, b] = std::minmax(*i, *j);
    return std::binary_search(edges_.begin(), edges_.end(), std::pair(a, b));
}

std::pair<Cell, Cell> LeaperGraph::edge_cells(int e) const {
    auto [i, j] = edges_[static_cast<size_t>(e)];
    return {verts_[static_cast<size_t>(i)], verts_[static_cast<size_t>(j)]};
}

LeaperGraph LeaperGraph::complete(const Leaper& l, const Board& a) {
    std::vector<Cell> cells = a.cells();
    std::sort(cells.begin(), cells.end());
    auto index = [&](const Cell& c) {
        return static_cast<int>((c.y - a.y_min) * a.width() + (c.x - a.x_min));
    };
    std::vector<std::pair<int, int>> edges;
    for (const Cell& c : cells)
        for (const Cell& m : l.moves()) {
            Cell d = c + m;
            if (a.contains(d) && c < d) edges.emplace_back(index(c), index(d));
        }
    return LeaperGraph(l, a, std::move(cells), std::move(edges));
}

LeaperGraph LeaperGraph::induced(const Leaper& l, const Board& a, std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    auto idx = [&](const Cell& c) -> int {
        auto it = std::lower_bound(cells.begin(), cells.end(), c);
        return (it != cells.end() && *it == c) ? static_cast<int>(it - cells.begin()) : -1;
    };
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < cells.size(); ++i)
        for (const Cell& m : l.moves()) {
            Cell d = cells[i] + m;
            if (cells[i] < d) {
                int j = idx(d);
                if (j >= 0) edges.emplace_back(static_cast<int>(i), j);
            }
        }
    return LeaperGraph(l, a, std::move(cells), std::move(edges));
}

LeaperGraph LeaperGraph::from_edges(const Leaper& l, const Board& a,
                                    const std::vector<std::pair<Cell, Cell>>& raw) {
    std::vector<Cell> cells;
    for (auto& [u, v] : raw) {
        cells.push_back(u);
        cells.push_back(v);
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    auto idx = [&](const Cell& c) {
        return static_cast<int>(std::lower_bound(cells.begin(), cells.end(), c) - cells.begin());
    };
    std::vector<std::pair<int, int>> edges;
    for (auto& [u, v] : raw) edges.emplace_back(idx(u), idx(v));
    return LeaperGraph(l, a, std::move(cells), std::move(edges));
}

void LeaperGraph::ensure_components() const {
    if (!comp_id_.empty() || verts_.empty()) return;
    comp_id_.assign(verts_.size(), -1);
    for (int i = 0; i < vertex_count(); ++i) {
        if (comp_id_[static_cast<size_t>(i)] >= 0) continue;
        int id = static_cast<int>(comps_.size());
        std::vector<int> stack{i}, members;
        comp_id_[static_cast<size_t>(i)] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int w : adj_[static_cast<size_t>(u)])
                if (comp_id_[static_cast<size_t>(w)] < 0) {
                    comp_id_[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        comps_.push_back(std::move(members));
    }
}

const std::vector<std::vector<int>>& LeaperGraph::components() const {
    ensure_components();
    return comps_;
}

int LeaperGraph::component_id(int v) const {
    ensure_components();
    return comp_id_[static_cast<size_t>(v)];
}

std::vector<Cell> LeaperGraph::component_cells(int comp) const {
    ensure_components();
    std::vector<Cell> out;
    for (int v : comps_[static_cast<size_t>(comp)]) out.push_back(cell(v));
    return out;
}

bool LeaperGraph::is_connected() const {
    return vertex_count() > 0 && components().size() == 1;
}

LeaperGraph LeaperGraph::translated(const Cell& d) const {
    std::vector<Cell> cells;
    cells.reserve(verts_.size());
    for (const Cell& c : verts_) cells.push_back(c + d);
    return LeaperGraph(leaper_, board_.translated(d), std::move(cells), edges_);
}

// --- angles -----------------------------------------------------------------

AngleType angle_type(const Leaper& l, const Cell& apex, const Cell& b1, const Cell& b2) {
    if (!l.is_skew()) throw std::invalid_argument("angles need a skew leaper");
    if (!is_leaper_move(l, apex, b1) || !is_leaper_move(l, apex, b2))
        throw std::invalid_argument("angle arms must be leaper moves");
    Cell u = b1 - apex, v = b2 - apex;
    if (u == v) return AngleType::Zero;
    if (u == -v) return AngleType::Straight;
    long long dot = static_cast<long long>(u.x) * v.x + static_cast<long long>(u.y) * v.y;
    if (b1.x == b2.x || b1.y == b2.y)
        return dot > 0 ? AngleType::LaterallyAcute : AngleType::LaterallyObtuse;
    if (std::abs(b1.x - b2.x) == std::abs(b1.y - b2.y))
        return dot > 0 ? AngleType::DiagonallyAcute : AngleType::DiagonallyObtuse;
    if (dot == 0) return AngleType::Right;
    throw std::logic_error("angle classification fell through");
}

bool is_acute(AngleType t) {
    return t == AngleType::LaterallyAcute || t == AngleType::DiagonallyAcute;
}

std::string angle_name(AngleType t) {
    switch (t) {
        case AngleType::Zero: return "zero";
        case AngleType::LaterallyAcute: return "laterally-acute";
        case AngleType::DiagonallyAcute: return "diagonally-acute";
        case AngleType::Right: return "right";
        case AngleType::LaterallyObtuse: return "laterally-obtuse";
        case AngleType::DiagonallyObtuse: return "diagonally-obtuse";
        case AngleType::Straight: return "straight";
    }
    return "?";
}

bool is_angular_walk(const Leaper& l, std::span<const Cell> walk) {
    for (size_t i = 1; i + 1 < walk.size(); ++i) {
        AngleType t = angle_type(l, walk[i], walk[i - 1], walk[i + 1]);
        if (!is_acute(t) && t != AngleType::Zero) return false;
    }
    return true;
}

bool is_angular_closed(const Leaper& l, std::span<const Cell> walk) {
    if (!is_closed(walk)) return false;
    if (!is_angular_walk(l, walk)) return false;
    if (walk.size() < 3) return true;
    AngleType t = angle_type(l, walk[0], walk[walk.size() - 2], walk[1]);
    return is_acute(t) || t == AngleType::Zero;
}

// --- rigidity ---------------------------------------------------------------

namespace {

struct PhiForest {
    std::vector<Mat2> zeta;
    std::vector<int> parent;
    std::vector<int> order;  // BFS order
    bool rigid = false;
    std::pair<int, int> witness_edge{-1, -1};
};

PhiForest phi_forest(const LeaperGraph& g) {
    PhiForest f;
    int n = g.vertex_count();
    f.zeta.assign(static_cast<size_t>(n), Mat2{});
    f.parent.assign(static_cast<size_t>(n), -2);
    for (int root = 0; root < n && !f.rigid; ++root) {
        if (f.parent[static_cast<size_t>(root)] != -2) continue;
        f.parent[static_cast<size_t>(root)] = -1;
        std::vector<int> queue{root};
        f.order.push_back(root);
        for (size_t qi = 0; qi < queue.size() && !f.rigid; ++qi) {
            int u = queue[qi];
            for (int w : g.adjacency()[static_cast<size_t>(u)]) {
                Mat2 step = phi_move(g.leaper(), g.cell(w) - g.cell(u));
                if (f.parent[static_cast<size_t>(w)] == -2) {
                    f.parent[static_cast<size_t>(w)] = u;
                    f.zeta[static_cast<size_t>(w)] = f.zeta[static_cast<size_t>(u)] + step;
                    queue.push_back(w);
                    f.order.push_back(w);
                } else if (!(f.zeta[static_cast<size_t>(u)] + step ==
                             f.zeta[static_cast<size_t>(w)])) {
                    f.rigid = true;
                    f.witness_edge = {u, w};
                    break;
                }
            }
        }
    }
    return f;
}

}  // namespace

bool is_directionally_rigid(const LeaperGraph& g) { return phi_forest(g).rigid; }

std::optional<std::vector<Cell>> unbalanced_fundamental_cycle(const LeaperGraph& g) {
    PhiForest f = phi_forest(g);
    if (!f.rigid) return std::nullopt;
    auto [u, w] = f.witness_edge;
    std::vector<int> pu{u}, pw{w};
    while (f.parent[static_cast<size_t>(pu.back())] >= 0)
        pu.push_back(f.parent[static_cast<size_t>(pu.back())]);
    while (f.parent[static_cast<size_t>(pw.back())] >= 0)
        pw.push_back(f.parent[static_cast<size_t>(pw.back())]);
    // trim to the last common ancestor
    while (pu.size() >= 2 && pw.size() >= 2 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
        pu.pop_back();
        pw.pop_back();
    }
    std::vector<Cell> cycle;
    for (auto it = pu.rbegin(); it != pu.rend(); ++it) cycle.push_back(g.cell(*it));
    for (int v : pw) cycle.push_back(g.cell(v));
    return cycle;
}

TransferResult transfer(const LeaperGraph& g, const Leaper& target) {
    if (!g.is_connected()) throw std::invalid_argument("transfer needs a connected graph");
    if (!target.is_skew()) throw std::invalid_argument("transfer target must be skew");
    PhiForest f = phi_forest(g);
    if (f.rigid) return {TransferStatus::Rigid, std::nullopt, {}};
    std::vector<Cell> image;
    image.reserve(f.zeta.size());
    for (const Mat2& z : f.zeta) image.push_back(z.apply(target.p, target.q));
    std::vector<Cell> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return {TransferStatus::Collision, std::nullopt, std::move(image)};
    Board b = bbox(image);
    std::vector<std::pair<Cell, Cell>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [i, j] = g.edges()[static_cast<size_t>(e)];
        edges.emplace_back(image[static_cast<size_t>(i)], image[static_cast<size_t>(j)]);
    }
    LeaperGraph h = LeaperGraph::from_edges(target, b, edges);
    // isolated vertices of g carry over even though from_edges drops them
    if (g.edge_count() == 0) h = LeaperGraph(target, b, image, {});
    return {TransferStatus::Ok, std::move(h), std::move(image)};
}

bool direction_isomorphic(const LeaperGraph& g, const LeaperGraph& h,
                          std::span<const Cell> image) {
    if (static_cast<int>(image.size()) != g.vertex_count()) return false;
    if (g.edge_count() != h.edge_count() || g.vertex_count() != h.vertex_count()) return false;
    std::vector<Cell> sorted(image.begin(), image.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted != h.vertices()) return false;
    for (auto [i, j] : g.edges()) {
        Cell gu = g.cell(i), gv = g.cell(j);
        Cell hu = image[static_cast<size_t>(i)], hv = image[static_cast<size_t>(j)];
        if (!h.has_edge(hu, hv)) return false;
        if (!(phi_move(g.leaper(), gv - gu) == phi_move(h.leaper(), hv - hu))) return false;
    }
    return true;
}

// --- completions ------------------------------------------------------------

Projection projection_x(const Leaper& l, const Board& a) {
    return Projection(l.p, l.q, a.x_min, a.x_max);
}
Projection projection_y(const Leaper& l, const Board& a) {
    return Projection(l.p, l.q, a.y_min, a.y_max);
}

std::vector<int> comp_x(const LeaperGraph& g, int component) {
    int v = g.components()[static_cast<size_t>(component)][0];
    return projection_x(g.leaper(), g.board()).component_of(g.cell(v).x);
}

std::vector<int> comp_y(const LeaperGraph& g, int component) {
    int v = g.components()[static_cast<size_t>(component)][0];
    return projection_y(g.leaper(), g.board()).component_of(g.cell(v).y);
}

std::vector<int> comp_x_of_cell(const Leaper& l, const Board& a, const Cell& c) {
    return projection_x(l, a).component_of(c.x);
}

ComponentInfo classify_component(const LeaperGraph& g, int component) {
    ComponentInfo info{};
    Projection px = projection_x(g.leaper(), g.board());
    Projection py = projection_y(g.leaper(), g.board());
    info.x_weave = classify_weave(px, comp_x(g, component));
    info.y_weave = classify_weave(py, comp_y(g, component));
    bool xw = info.x_weave.kind != WeaveKind::NonWeave;
    bool yw = info.y_weave.kind != WeaveKind::NonWeave;
    if (g.components()[static_cast<size_t>(component)].size() == 1)
        info.cls = ComponentClass::Singleton;
    else if (xw && yw)
        info.cls = ComponentClass::BothWeave;
    else if (xw)
        info.cls = ComponentClass::VerticalWeave;
    else if (yw)
        info.cls = ComponentClass::HorizontalWeave;
    else
        info.cls = ComponentClass::NonWeave;
    return info;
}

bool component_is_weave(const LeaperGraph& g, int component) {
    ComponentInfo i = classify_component(g, component);
    return i.cls == ComponentClass::VerticalWeave || i.cls == ComponentClass::HorizontalWeave ||
           i.cls == ComponentClass::BothWeave;
}

// --- angularity -------------------------------------------------------------

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

std::vector<std::vector<int>> incident_edges(const LeaperGraph& g) {
    std::vector<std::vector<int>> inc(static_cast<size_t>(g.vertex_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [i, j] = g.edges()[static_cast<size_t>(e)];
        inc[static_cast<size_t>(i)].push_back(e);
        inc[static_cast<size_t>(j)].push_back(e);
    }
    return inc;
}

}  // namespace

std::vector<std::vector<int>> angular_components(const LeaperGraph& g) {
    Dsu dsu(g.edge_count());
    auto inc = incident_edges(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& es = inc[static_cast<size_t>(v)];
        Cell apex = g.cell(v);
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j) {
                auto [a1, b1] = g.edges()[static_cast<size_t>(es[i])];
                auto [a2, b2] = g.edges()[static_cast<size_t>(es[j])];
                Cell c1 = g.cell(a1 == v ? b1 : a1);
                Cell c2 = g.cell(a2 == v ? b2 : a2);
                if (is_acute(angle_type(g.leaper(), apex, c1, c2))) dsu.unite(es[i], es[j]);
            }
    }
    std::map<int, std::vector<int>> groups;
    for (int e = 0; e < g.edge_count(); ++e) groups[dsu.find(e)].push_back(e);
    std::vector<std::vector<int>> out;
    out.reserve(groups.size());
    for (auto& [root, edges] : groups) out.push_back(std::move(edges));
    return out;
}

bool is_angular(const LeaperGraph& g) {
    if (g.vertex_count() == 0 || g.edge_count() == 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return false;
    return angular_components(g).size() == 1;
}

std::vector<std::vector<int>> zigzags(const LeaperGraph& g) {
    // the laterally acute continuation of an edge past either endpoint is
    // unique: mirror the move (slight edges flip y, steep edges flip x)
    auto continuation = [&](int at_vertex, const Cell& other) -> std::optional<int> {
        Cell apex = g.cell(at_vertex);
        Cell u = other - apex;
        Cell partner = (std::abs(u.x) == g.leaper().q) ? Cell{u.x, -u.y} : Cell{-u.x, u.y};
        Cell c = apex + partner;
        auto ci = g.index_of(c);
        if (!ci || !g.has_edge(apex, c)) return std::nullopt;
        return *ci;
    };
    auto edge_index = [&](int u, int v) {
        auto [a, b] = std::minmax(u, v);
        auto it = std::lower_bound(g.edges().begin(), g.edges().end(), std::pair(a, b));
        return static_cast<int>(it - g.edges().begin());
    };
    std::vector<bool> used(static_cast<size_t>(g.edge_count()), false);
    std::vector<std::vector<int>> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (used[static_cast<size_t>(e)]) continue;
        auto [i, j] = g.edges()[static_cast<size_t>(e)];
        // walk forward from j and backward from i
        std::vector<int> path{i, j};
        while (true) {
            auto nxt = continuation(path.back(), g.cell(path[path.size() - 2]));
            if (!nxt) break;
            path.push_back(*nxt);
        }
        std::reverse(path.begin(), path.end());
        while (true) {
            auto nxt = continuation(path.back(), g.cell(path[path.size() - 2]));
            if (!nxt) break;
            path.push_back(*nxt);
        }
        std::vector<int> zz;
        for (size_t k = 0; k + 1 < path.size(); ++k) {
            int ei = edge_index(path[k], path[k + 1]);
            zz.push_back(ei);
            used[static_cast<size_t>(ei)] = true;
        }
        std::sort(zz.begin(), zz.end());
        out.push_back(std::move(zz));
    }
    return out;
}

NonAngularBounds non_angular_bounds(int p, int q) {
    if (p < 1 || q <= p || std::gcd(p, q) != 1)
        throw std::invalid_argument("bounds need relatively prime p < q");
    if (p == 1) return {1, q + 1, 2 * q + 1};
    return {p, weave_thresholds(p, q).nonsingleton_upper, 2 * q + 1};
}

std::vector<int> non_angular_components(const LeaperGraph& g) {
    auto angular = angular_components(g);
    std::vector<int> angular_id(static_cast<size_t>(g.edge_count()), -1);
    for (size_t a = 0; a < angular.size(); ++a)
        for (int e : angular[a]) angular_id[static_cast<size_t>(e)] = static_cast<int>(a);
    std::vector<std::set<int>> per_comp(g.components().size());
    for (int e = 0; e < g.edge_count(); ++e) {
        int v = g.edges()[static_cast<size_t>(e)].first;
        per_comp[static_cast<size_t>(g.component_id(v))].insert(
            angular_id[static_cast<size_t>(e)]);
    }
    std::vector<int> out;
    for (size_t c = 0; c < per_comp.size(); ++c)
        if (per_comp[c].size() >= 2) out.push_back(static_cast<int>(c));
    return out;
}

// --- clovers ----------------------------------------------------------------

CloverSet clovers(const Leaper& l) {
    if (!is_skew_free(l)) throw std::invalid_argument("clovers need a skew free leaper");
    CloverSet out;
    out.square = standard_board(l.sum(), l.sum());
    LeaperGraph g = LeaperGraph::complete(l, out.square);
    std::map<std::vector<Cell>, int> class_of;
    for (size_t c = 0; c < g.components().size(); ++c) {
        const auto& comp = g.components()[c];
        if (comp.size() == 1) continue;
        for (int v : comp)
            if (g.degree(v) != 2) throw std::logic_error("square-board vertex of degree > 2");
        std::vector<Cell> cells = g.component_cells(static_cast<int>(c));
        Cell anchor = cells.front();  // least in (y, x) order
        std::vector<Cell> key;
        key.reserve(cells.size());
        for (const Cell& x : cells) key.push_back(x - anchor);
        int idx = static_cast<int>(out.clovers.size());
        out.clovers.push_back(std::move(cells));
        auto [it, fresh] = class_of.try_emplace(std::move(key), static_cast<int>(out.classes.size()));
        if (fresh) out.classes.emplace_back();
        out.classes[static_cast<size_t>(it->second)].push_back(idx);
    }
    return out;
}

bool hamiltonian_cycle_exists(const Leaper& l, std::span<const Cell> cells) {
    size_t n = cells.size();
    if (n < 3) return false;
    Board box = bbox(cells);
    LeaperGraph g = LeaperGraph::induced(l, box, {cells.begin(), cells.end()});
    if (g.vertex_count() != static_cast<int>(n)) return false;
    bool two_regular = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2) return false;
        if (g.degree(v) != 2) two_regular = false;
    }
    if (!g.is_connected()) return false;
    if (two_regular) return true;  // a connected 2-regular graph is the cycle itself
    // backtracking with a visited bitmask (clover checks stay <= 64 cells)
    if (n > 64) throw std::invalid_argument("hamiltonian search limited to 64 cells");
    std::vector<uint64_t> nbr(n, 0);
    for (auto [i, j] : g.edges()) {
        nbr[static_cast<size_t>(i)] |= uint64_t{1} << j;
        nbr[static_cast<size_t>(j)] |= uint64_t{1} << i;
    }
    uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    std::vector<std::pair<int, uint64_t>> stack{{0, uint64_t{1}}};
    // iterative DFS over (current vertex, visited mask) states
    std::set<std::pair<int, uint64_t>> seen;
    long long budget = 20'000'000;
    while (!stack.empty()) {
        if (--budget < 0) throw std::runtime_error("hamiltonian search budget exceeded");
        auto [cur, mask] = stack.back();
        stack.pop_back();
        if (mask == full) {
            if (nbr[static_cast<size_t>(cur)] & uint64_t{1}) return true;
            continue;
        }
        uint64_t cand = nbr[static_cast<size_t>(cur)] & ~mask;
        while (cand) {
            int nxt = std::countr_zero(cand);
            cand &= cand - 1;
            auto key = std::pair(nxt, mask | (uint64_t{1} << nxt));
            if (seen.insert(key).second) stack.push_back(key);
        }
    }
    return false;
}

// --- wazir neighbourliness, connectivity ------------------------------------

std::vector<int> wazir_neighbourly_components(const LeaperGraph& g) {
    std::set<int> hits;
    for (int v = 0; v < g.vertex_count(); ++v) {
        Cell c = g.cell(v);
        for (Cell d : {Cell{1, 0}, Cell{0, 1}}) {
            auto w = g.index_of(c + d);
            if (w && g.component_id(v) == g.component_id(*w)) hits.insert(g.component_id(v));
        }
    }
    return {hits.begin(), hits.end()};
}

bool wazir_journey_exists(const LeaperGraph& g) {
    return !wazir_neighbourly_components(g).empty();
}

bool is_nontrivially_connected(const LeaperGraph& g) {
    return g.vertex_count() >= 2 && g.is_connected();
}

bool is_biconnected(const LeaperGraph& g) {
    int n = g.vertex_count();
    if (n < 3 || !g.is_connected()) return false;
    // iterative articulation-point search
    std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0),
        parent(static_cast<size_t>(n), -1), child_count(static_cast<size_t>(n), 0);
    std::vector<size_t> next(static_cast<size_t>(n), 0);
    int timer = 0;
    std::vector<int> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        int u = stack.back();
        if (next[static_cast<size_t>(u)] < g.adjacency()[static_cast<size_t>(u)].size()) {
            int w = g.adjacency()[static_cast<size_t>(u)][next[static_cast<size_t>(u)]++];
            if (disc[static_cast<size_t>(w)] == -1) {
                parent[static_cast<size_t>(w)] = u;
                ++child_count[static_cast<size_t>(u)];
                disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                stack.push_back(w);
            } else if (w != parent[static_cast<size_t>(u)]) {
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(w)]);
            }
        } else {
            stack.pop_back();
            int p = parent[static_cast<size_t>(u)];
            if (p >= 0) {
                low[static_cast<size_t>(p)] =
                    std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(u)]);
                if (p != 0 && low[static_cast<size_t>(u)] >= disc[static_cast<size_t>(p)])
                    return false;  // p is an articulation point
            }
        }
    }
    if (child_count[0] > 1) return false;  // root articulation
    return true;
}

}  // namespace leaperlab
