#include "leaperlab/lineage.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace leaperlab {

namespace {

std::string size_str(const Board& b) {
    std::ostringstream os;
    os << b.height() << "x" << b.width();
    return os.str();
}

bool completion_not_simple_weave(const WeaveClass& w) { return w.kind != WeaveKind::Simple; }

}  // namespace

const LineageNode* Lineage::find(const std::string& path) const {
    for (auto& n : nodes)
        if (n.path == path) return &n;
    return nullptr;
}

Lineage build_lineage(const Leaper& root, const Board& board, const LeaperGraph& graph,
                      const SubtreeSpec& subtree, int depth_limit) {
    if (depth_limit < 0) throw std::invalid_argument("negative depth limit");
    bool wazir = root.is_wazir();
    bool perfect = std::holds_alternative<PerfectSubtree>(subtree);
    if (!wazir && !is_skew_free(root))
        throw std::invalid_argument("lineage root must be skew free or the wazir");
    if (perfect && !wazir) {
        if (!board.is_standard())
            throw std::invalid_argument("perfect lineage needs a standard root board");
        LeaperGraph complete = LeaperGraph::complete(root, board);
        auto v0 = graph.vertex_count() > 0 ? complete.index_of(graph.vertices()[0])
                                           : std::optional<int>{};
        if (!v0) throw std::invalid_argument("root graph is not on the root board");
        int comp = complete.component_id(*v0);
        if (graph.vertices() != complete.component_cells(comp))
            throw std::invalid_argument("root graph is not a connected component");
        ComponentInfo info = classify_component(complete, comp);
        if (!completion_not_simple_weave(info.x_weave) ||
            !completion_not_simple_weave(info.y_weave))
            throw std::invalid_argument("a root completion is a simple weave");
    }
    std::set<std::string> wanted;
    if (auto* ex = std::get_if<ExplicitSubtree>(&subtree)) {
        wanted.insert("");
        for (auto& p : ex->paths)
            for (size_t i = 0; i <= p.size(); ++i) wanted.insert(p.substr(0, i));
    }
    Lineage out;
    out.wazir_root = wazir;
    out.depth_limit = depth_limit;
    out.nodes.push_back({"", root, board, graph, -1, LiftType::F});
    for (size_t qi = 0; qi < out.nodes.size(); ++qi) {
        // copy out: lift_graph may reallocate nodes
        std::string path = out.nodes[qi].path;
        Leaper leaper = out.nodes[qi].leaper;
        Board nb = out.nodes[qi].board;
        if (static_cast<int>(path.size()) >= depth_limit) continue;
        std::vector<LiftType> arrows;
        if (leaper.is_wazir()) {
            arrows = {LiftType::G};  // g and h coincide on the wazir
        } else if (perfect && path.empty() && !wazir) {
            arrows = {LiftType::G, LiftType::H};  // perfect subtrees skip the root's f-child
        } else {
            arrows = {LiftType::F, LiftType::G, LiftType::H};
        }
        for (LiftType t : arrows) {
            std::string child_path = path + lift_char(t);
            if (!perfect && !wanted.count(child_path)) continue;
            Board cb = lift_board(t, leaper, nb);
            LeaperGraph cg = lift_graph(t, leaper, nb, out.nodes[qi].graph);
            out.nodes.push_back(
                {child_path, lift_leaper(leaper, t), cb, std::move(cg),
                 static_cast<int>(qi), t});
        }
    }
    return out;
}

std::pair<int, int> offsets(const Lineage& lineage) {
    if (lineage.nodes.empty()) throw std::invalid_argument("empty lineage");
    const LineageNode& root = lineage.nodes[0];
    int w = root.board.height() - root.leaper.sum();
    int z = root.board.width() - root.leaper.sum();
    for (const auto& n : lineage.nodes) {
        if (n.board.height() != n.leaper.sum() + w || n.board.width() != n.leaper.sum() + z)
            throw std::logic_error("offset law violated; lineage construction is broken");
    }
    return {w, z};
}

std::vector<Lineage> sl_lineages(const Leaper& l, int depth_limit) {
    std::vector<Lineage> out;
    if (l.is_wazir()) {
        Board b = standard_board(1, 1);
        out.push_back(build_lineage(l, b, LeaperGraph::complete(l, b), PerfectSubtree{},
                                    depth_limit));
        return out;
    }
    if (!is_skew_free(l)) throw std::invalid_argument("SL-lineage root must be skew free");
    Board square = standard_board(l.sum(), l.sum());
    LeaperGraph g = LeaperGraph::complete(l, square);
    for (size_t c = 0; c < g.components().size(); ++c) {
        if (g.components()[c].size() != 1) continue;
        LeaperGraph singleton(l, square, {g.cell(g.components()[c][0])}, {});
        out.push_back(build_lineage(l, square, singleton, PerfectSubtree{}, depth_limit));
    }
    return out;
}

Board r_root_board(const Leaper& l) {
    if (l.is_wazir()) return standard_board(2, 1);
    return standard_board(l.q + 1, l.p + 2 * l.q - (l.q % 2));
}

std::vector<Lineage> r_lineages(const Leaper& l, int depth_limit) {
    std::vector<Lineage> out;
    Board b = r_root_board(l);
    LeaperGraph g = LeaperGraph::complete(l, b);
    if (l.is_wazir()) {
        out.push_back(build_lineage(l, b, g, PerfectSubtree{}, depth_limit));
        return out;
    }
    if (!is_skew_free(l)) throw std::invalid_argument("R-lineage root must be skew free");
    for (size_t c = 0; c < g.components().size(); ++c) {
        LeaperGraph comp = LeaperGraph::induced(l, b, g.component_cells(static_cast<int>(c)));
        if (is_directionally_rigid(comp))
            out.push_back(build_lineage(l, b, comp, PerfectSubtree{}, depth_limit));
    }
    return out;
}

bool w_lineage_eligible(const Leaper& l) {
    if (l.is_wazir()) return true;
    if (!is_skew_free(l)) return false;
    Ecf e = ecf(l);
    return e.depth() == 2 || (e.depth() == 3 && e.signs[0] == +1);
}

Board w_root_board(const Leaper& l) {
    if (l.is_wazir()) return standard_board(1, 1);
    Ecf e = ecf(l);
    if (e.depth() == 2) return standard_board(l.q + 1, l.p + 2 * l.q - 1);
    if (e.depth() == 3 && e.signs[0] == +1) {
        int c1 = e.coefficients[0];
        return standard_board(l.p + l.q - c1, l.p + 2 * l.q - c1 - 1);
    }
    throw std::invalid_argument("W-lineage requested for an ineligible leaper");
}

std::vector<Lineage> w_lineages(const Leaper& l, int depth_limit) {
    std::vector<Lineage> out;
    Board b = w_root_board(l);
    LeaperGraph g = LeaperGraph::complete(l, b);
    if (l.is_wazir()) {
        out.push_back(build_lineage(l, b, g, PerfectSubtree{}, depth_limit));
        return out;
    }
    for (int c : wazir_neighbourly_components(g)) {
        LeaperGraph comp = LeaperGraph::induced(l, b, g.component_cells(c));
        out.push_back(build_lineage(l, b, comp, PerfectSubtree{}, depth_limit));
    }
    return out;
}

const LeaperGraph& CompleteGraphCache::get(const Leaper& l, const Board& b) {
    auto key = std::tuple(l.p, l.q, b.x_min, b.x_max, b.y_min, b.y_max);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, std::make_unique<LeaperGraph>(LeaperGraph::complete(l, b)))
                 .first;
    return *it->second;
}

LineageReport verify_perfect_lineage(const Lineage& lineage, CompleteGraphCache* cache) {
    LineageReport report;
    CompleteGraphCache local;
    CompleteGraphCache& memo = cache ? *cache : local;
    for (const auto& n : lineage.nodes) {
        std::string where = n.path.empty() ? "(root)" : n.path;
        // the assigned graph is a connected component of its leaper on its board
        const LeaperGraph& complete = memo.get(n.leaper, n.board);
        bool comp_ok = false;
        std::string detail;
        if (n.graph.vertex_count() == 0) {
            detail = "assigned graph is empty";
        } else if (auto v0 = complete.index_of(n.graph.vertices()[0])) {
            int comp = complete.component_id(*v0);
            comp_ok = n.graph.vertices() == complete.component_cells(comp);
            if (comp_ok) {
                // an induced component also fixes the edge set
                LeaperGraph induced =
                    LeaperGraph::induced(n.leaper, n.board, n.graph.vertices());
                comp_ok = induced.edges() == n.graph.edges();
                if (!comp_ok) detail = "edge set differs from the induced component";
            } else {
                detail = "vertex set differs from the containing component";
            }
        } else {
            detail = "graph vertex missing from the board";
        }
        report.checks.push_back(
            {where, "connected-component", comp_ok,
             comp_ok ? size_str(n.board) : detail});
        // non-root graphs are non-weaves
        if (n.parent >= 0 && comp_ok) {
            auto v0 = complete.index_of(n.graph.vertices()[0]);
            ComponentInfo info = classify_component(complete, complete.component_id(*v0));
            bool nw = info.cls == ComponentClass::NonWeave;
            report.checks.push_back({where, "non-weave", nw,
                                     nw ? "" : "lifted graph classified as a weave"});
        }
        // lowering inverts lifting across the arrow into this node
        if (n.parent >= 0) {
            const LineageNode& up = lineage.nodes[static_cast<size_t>(n.parent)];
            LeaperGraph lowered = lower_graph(n.via, up.leaper, n.board, n.graph);
            bool inv = lowered.vertices() == up.graph.vertices() &&
                       lowered.edges() == up.graph.edges();
            report.checks.push_back(
                {where, "lower-inverts-lift", inv,
                 inv ? "" : "lowered graph differs from the parent assignment"});
        }
    }
    return report;
}

}  // namespace leaperlab
