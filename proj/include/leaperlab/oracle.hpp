#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leaperlab/graph.hpp"

namespace leaperlab {

// A monotone board property of a leaper, evaluated on standard boards.
struct MonotoneProperty {
    std::string name;
    Leaper leaper;
    bool symmetric;
    std::function<bool(int m, int n)> holds;
};

enum class PropertyKind { I, C, E, B, R, W };

std::string kind_name(PropertyKind k);
std::optional<PropertyKind> kind_from_name(const std::string& s);

// the built-in property oracles (complete-graph predicates)
MonotoneProperty make_property(PropertyKind k, const Leaper& l);

// journeys and patterns (gcd-scaling reduction applied first)
bool journey_exists(const Leaper& m, const Leaper& n, int rows, int cols);
bool pattern_realizes(const std::vector<Cell>& pattern, const Leaper& n, int rows, int cols);
MonotoneProperty journey_property(const Leaper& m, const Leaper& n);
MonotoneProperty pattern_property(const std::vector<Cell>& pattern, const Leaper& n);

// Basis: the antichain of minimal standard boards of a monotone property,
// ordered with strictly increasing heights and strictly decreasing widths.
struct Basis {
    std::vector<std::pair<int, int>> boards;  // (m, n)

    friend bool operator==(const Basis&, const Basis&) = default;
};

struct ScanBasis {
    Basis basis;
    bool saturated = false;  // the Pareto frontier touched the scan caps
};

enum class ScanMode { Serial, Parallel };

// Exact Pareto frontier of P within the given caps: for each height, the
// minimal width with P, deduplicated into an antichain. The parallel kernel
// splits the height rows across OpenMP threads; results are identical to the
// serial reference by construction.
ScanBasis brute_force_basis(const MonotoneProperty& p, int m_cap, int n_cap,
                            ScanMode mode = ScanMode::Parallel);

// per-height minimal widths (the scan kernel itself); -1 where P never holds
std::vector<int> scan_min_widths_serial(const MonotoneProperty& p, int m_cap, int n_cap);
std::vector<int> scan_min_widths_parallel(const MonotoneProperty& p, int m_cap, int n_cap);

// closed-form bases of the minimal-board theorems
enum class TheoremKind { I, C, E, B, R, W, RHalf };

Basis theorem_basis(TheoremKind k, const Leaper& l);
// dispatches R to the half-free variant when l is half-free
Basis theorem_basis(PropertyKind k, const Leaper& l);

Basis reduced_basis(const Basis& basis);

struct BasisDiff {
    bool equal = false;
    bool inconclusive = false;  // observed scan was saturated
    std::vector<std::pair<int, int>> missing;  // predicted but not observed
    std::vector<std::pair<int, int>> extra;    // observed but not predicted
};

BasisDiff diff_bases(const Basis& predicted, const ScanBasis& observed);

// default scan caps: 3(p+q) per side
int default_caps(const Leaper& l);

}  // namespace leaperlab
