#include "leaperlab/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace leaperlab {

std::string kind_name(PropertyKind k) {
    switch (k) {
        case PropertyKind::I: return "I";
        case PropertyKind::C: return "C";
        case PropertyKind::E: return "E";
        case PropertyKind::B: return "B";
        case PropertyKind::R: return "R";
        case PropertyKind::W: return "W";
    }
    return "?";
}

std::optional<PropertyKind> kind_from_name(const std::string& s) {
    if (s == "I") return PropertyKind::I;
    if (s == "C") return PropertyKind::C;
    if (s == "E") return PropertyKind::E;
    if (s == "B") return PropertyKind::B;
    if (s == "R") return PropertyKind::R;
    if (s == "W") return PropertyKind::W;
    return std::nullopt;
}

namespace {

bool no_isolated_vertices(const LeaperGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return false;
    return g.vertex_count() > 0;
}

bool edges_connected(const LeaperGraph& g) {
    // all non-isolated vertices in one component, and at least one edge
    if (g.edge_count() == 0) return false;
    int hit = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        if (hit < 0) hit = g.component_id(v);
        else if (g.component_id(v) != hit) return false;
    }
    return true;
}

}  // namespace

MonotoneProperty make_property(PropertyKind k, const Leaper& l) {
    MonotoneProperty p;
    p.name = kind_name(k);
    p.leaper = l;
    p.symmetric = true;
    switch (k) {
        case PropertyKind::I:
            p.holds = [l](int m, int n) {
                return no_isolated_vertices(LeaperGraph::complete(l, standard_board(m, n)));
            };
            break;
        case PropertyKind::C:
            p.holds = [l](int m, int n) {
                return is_nontrivially_connected(
                    LeaperGraph::complete(l, standard_board(m, n)));
            };
            break;
        case PropertyKind::E:
            p.holds = [l](int m, int n) {
                return edges_connected(LeaperGraph::complete(l, standard_board(m, n)));
            };
            break;
        case PropertyKind::B:
            p.holds = [l](int m, int n) {
                return is_biconnected(LeaperGraph::complete(l, standard_board(m, n)));
            };
            break;
        case PropertyKind::R:
            p.holds = [l](int m, int n) {
                return is_directionally_rigid(
                    LeaperGraph::complete(l, standard_board(m, n)));
            };
            break;
        case PropertyKind::W:
            p.holds = [l](int m, int n) {
                return wazir_journey_exists(LeaperGraph::complete(l, standard_board(m, n)));
            };
            break;
    }
    return p;
}

bool journey_exists(const Leaper& m, const Leaper& n, int rows, int cols) {
    int d = std::gcd(n.p, n.q);
    if (m.p % d != 0 || m.q % d != 0) return false;
    Leaper nn(n.p / d, n.q / d);
    Leaper mm = (m.p / d == 0 && m.q / d == 0) ? Leaper(0, 1) : Leaper(m.p / d, m.q / d);
    if (m.p % d == 0 && m.q % d == 0 && m.p / d == 0 && m.q / d == 0) return false;
    int rm = (rows + d - 1) / d, cm = (cols + d - 1) / d;
    LeaperGraph g = LeaperGraph::complete(nn, standard_board(rm, cm));
    for (int v = 0; v < g.vertex_count(); ++v) {
        Cell c = g.cell(v);
        for (const Cell& mv : mm.moves()) {
            auto w = g.index_of(c + mv);
            if (w && g.component_id(v) == g.component_id(*w)) return true;
        }
    }
    return false;
}

bool pattern_realizes(const std::vector<Cell>& pattern, const Leaper& n, int rows, int cols) {
    if (pattern.empty()) throw std::invalid_argument("empty pattern");
    int d = std::gcd(n.p, n.q);
    std::vector<Cell> cells = pattern;
    Cell base = *std::min_element(cells.begin(), cells.end());
    for (Cell& c : cells) c = c - base;
    if (d > 1) {
        for (const Cell& c : cells)
            if (c.x % d != 0 || c.y % d != 0) return false;
        for (Cell& c : cells) c = Cell{c.x / d, c.y / d};
        return pattern_realizes(cells, Leaper(n.p / d, n.q / d), (rows + d - 1) / d,
                                (cols + d - 1) / d);
    }
    LeaperGraph g = LeaperGraph::complete(n, standard_board(rows, cols));
    const Board& b = g.board();
    for (int y = b.y_min; y <= b.y_max; ++y)
        for (int x = b.x_min; x <= b.x_max; ++x) {
            int comp = -1;
            bool ok = true;
            for (const Cell& c : cells) {
                Cell t{x + c.x, y + c.y};
                auto v = g.index_of(t);
                if (!v) {
                    ok = false;
                    break;
                }
                int cid = g.component_id(*v);
                if (comp < 0) comp = cid;
                if (cid != comp) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
    return false;
}

MonotoneProperty journey_property(const Leaper& m, const Leaper& n) {
    MonotoneProperty p;
    p.name = "journey:" + std::to_string(m.p) + "," + std::to_string(m.q);
    p.leaper = n;
    p.symmetric = true;
    p.holds = [m, n](int rows, int cols) { return journey_exists(m, n, rows, cols); };
    return p;
}

MonotoneProperty pattern_property(const std::vector<Cell>& pattern, const Leaper& n) {
    MonotoneProperty p;
    p.name = "pattern";
    p.leaper = n;
    p.symmetric = false;
    p.holds = [pattern, n](int rows, int cols) {
        return pattern_realizes(pattern, n, rows, cols);
    };
    return p;
}

// --- scanning ----------------------------------------------------------------

std::vector<int> scan_min_widths_serial(const MonotoneProperty& p, int m_cap, int n_cap) {
    std::vector<int> min_n(static_cast<size_t>(m_cap) + 1, -1);
    for (int m = 1; m <= m_cap; ++m)
        for (int n = 1; n <= n_cap; ++n)
            if (p.holds(m, n)) {
                min_n[static_cast<size_t>(m)] = n;
                break;
            }
    return min_n;
}

std::vector<int> scan_min_widths_parallel(const MonotoneProperty& p, int m_cap, int n_cap) {
    std::vector<int> min_n(static_cast<size_t>(m_cap) + 1, -1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int m = 1; m <= m_cap; ++m) {
        for (int n = 1; n <= n_cap; ++n)
            if (p.holds(m, n)) {
                min_n[static_cast<size_t>(m)] = n;
                break;
            }
    }
    return min_n;
}

namespace {

ScanBasis frontier_to_basis(const std::vector<int>& min_n, int m_cap, int n_cap) {
    ScanBasis out;
    int best = n_cap + 1;
    for (int m = 1; m <= m_cap; ++m) {
        int n = min_n[static_cast<size_t>(m)];
        if (n < 0) continue;
        if (n < best) {
            out.basis.boards.emplace_back(m, n);
            best = n;
        }
    }
    if (out.basis.boards.empty()) {
        out.saturated = true;
        return out;
    }
    for (auto [m, n] : out.basis.boards)
        if (m == m_cap || n == n_cap) out.saturated = true;
    return out;
}

}  // namespace

ScanBasis brute_force_basis(const MonotoneProperty& p, int m_cap, int n_cap, ScanMode mode) {
    if (m_cap < 1 || n_cap < 1) throw std::invalid_argument("caps must be positive");
    auto min_n = mode == ScanMode::Serial ? scan_min_widths_serial(p, m_cap, n_cap)
                                          : scan_min_widths_parallel(p, m_cap, n_cap);
    return frontier_to_basis(min_n, m_cap, n_cap);
}

// --- theorem bases ------------------------------------------------------------

namespace {

// absorb by the fit order, close under transposes, sort as an antichain
Basis assemble(std::vector<std::pair<int, int>> raw) {
    // canonical size (min, max), dedup
    std::vector<std::pair<int, int>> canon;
    for (auto [m, n] : raw) canon.emplace_back(std::min(m, n), std::max(m, n));
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    std::vector<std::pair<int, int>> kept;
    for (size_t i = 0; i < canon.size(); ++i) {
        bool absorbed = false;
        for (size_t j = 0; j < canon.size() && !absorbed; ++j)
            if (j != i && fits(canon[j].first, canon[j].second, canon[i].first, canon[i].second))
                absorbed = true;
        if (!absorbed) kept.push_back(canon[i]);
    }
    Basis out;
    for (auto [a, b] : kept) {
        out.boards.emplace_back(a, b);
        if (a != b) out.boards.emplace_back(b, a);
    }
    std::sort(out.boards.begin(), out.boards.end());
    return out;
}

}  // namespace

Basis theorem_basis(TheoremKind k, const Leaper& l) {
    bool free = is_skew_free(l), half = is_skew_half_free(l);
    if (k == TheoremKind::RHalf) {
        if (!half) throw std::invalid_argument("half-free rigidity theorem needs a half-free leaper");
    } else if (!free) {
        throw std::invalid_argument("theorem basis needs a skew free leaper");
    }
    int p = l.p, q = l.q;
    switch (k) {
        case TheoremKind::I: return assemble({{2 * p, 2 * q}});
        case TheoremKind::C:
        case TheoremKind::B: return assemble({{p + q, 2 * q}});
        case TheoremKind::E:
            if (p == 1) return assemble({{q + 1, q + 1}});
            return assemble({{p + q, 2 * p + q - mmod(q, 2 * p)}});
        case TheoremKind::R: {
            auto ts = tails(l);  // L_0 .. L_kappa
            std::vector<std::pair<int, int>> boards;
            for (const Leaper& t : ts)
                boards.emplace_back(p + q - t.p + 1, p + q + t.q - (t.q % 2));
            return assemble(boards);
        }
        case TheoremKind::RHalf: {
            auto ts = tails(l);  // N_1 .. N_lambda
            std::vector<std::pair<int, int>> boards{{p + q, p + q}};
            for (const Leaper& t : ts)
                boards.emplace_back(p + q - t.p + 1, p + q + t.q);
            return assemble(boards);
        }
        case TheoremKind::W: {
            Ecf e = ecf(l);
            auto ts = tails(l);
            std::vector<std::pair<int, int>> boards{{p + q, p + q}};
            if (e.depth() >= 2) {
                int c1 = e.coefficients[0];
                int q2 = ts[2].q;
                boards.emplace_back(p + q - c1 + 1, p + q + q2 - 1);
            }
            if (e.depth() >= 3 && e.signs[0] == +1) {
                int c1 = e.coefficients[0];
                int q3 = ts[3].q;
                boards.emplace_back(p + q - c1, p + q + q3 - c1 - 1);
            }
            return assemble(boards);
        }
    }
    throw std::logic_error("bad theorem kind");
}

Basis theorem_basis(PropertyKind k, const Leaper& l) {
    if (k == PropertyKind::R && is_skew_half_free(l))
        return theorem_basis(TheoremKind::RHalf, l);
    switch (k) {
        case PropertyKind::I: return theorem_basis(TheoremKind::I, l);
        case PropertyKind::C: return theorem_basis(TheoremKind::C, l);
        case PropertyKind::E: return theorem_basis(TheoremKind::E, l);
        case PropertyKind::B: return theorem_basis(TheoremKind::B, l);
        case PropertyKind::R: return theorem_basis(TheoremKind::R, l);
        case PropertyKind::W: return theorem_basis(TheoremKind::W, l);
    }
    throw std::logic_error("bad property kind");
}

Basis reduced_basis(const Basis& basis) {
    // the basis of a symmetric property pairs up as transposes
    std::set<std::pair<int, int>> sizes(basis.boards.begin(), basis.boards.end());
    for (auto [m, n] : basis.boards)
        if (!sizes.count({n, m}))
            throw std::invalid_argument("basis is not transpose-symmetric");
    Basis out;
    for (auto [m, n] : basis.boards)
        if (m <= n) out.boards.emplace_back(m, n);
    return out;
}

BasisDiff diff_bases(const Basis& predicted, const ScanBasis& observed) {
    BasisDiff d;
    d.inconclusive = observed.saturated;
    std::set<std::pair<int, int>> pred(predicted.boards.begin(), predicted.boards.end());
    std::set<std::pair<int, int>> obs(observed.basis.boards.begin(),
                                      observed.basis.boards.end());
    for (auto& b : pred)
        if (!obs.count(b)) d.missing.push_back(b);
    for (auto& b : obs)
        if (!pred.count(b)) d.extra.push_back(b);
    d.equal = d.missing.empty() && d.extra.empty() && !d.inconclusive;
    return d;
}

int default_caps(const Leaper& l) { return 3 * l.sum(); }

}  // namespace leaperlab
