#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "jointgf/secondary.hpp"

namespace jointgf {

// Explicit diagram of a joint structure: two vertex rows R_1..R_n (top) and
// S_1..S_m (bottom), interior arcs within a row, exterior arcs between rows.
// All indices are 1-based. Invariants for a valid pre-structure:
//   - each vertex occurs in at most one arc across all three sets,
//   - interior arcs of a row are mutually noncrossing,
//   - exterior arcs are order-preserving: k < l implies k' < l'.
// A joint structure is additionally zigzag-free.
struct JointDiagram {
    int top_size = 0;
    int bottom_size = 0;
    std::vector<std::pair<int, int>> top_arcs;       // (i, j) with i < j
    std::vector<std::pair<int, int>> bottom_arcs;    // (i', j') with i' < j'
    std::vector<std::pair<int, int>> exterior_arcs;  // (k, k'): R_k -- S_k'
};

// Checks the pre-structure invariants above (degrees, noncrossing interior
// rows, order-preserving exterior arcs, index ranges).
bool pre_structure_valid(const JointDiagram& d);

// True iff no two dependent interior arcs (one top, one bottom, sharing an
// exterior descendant) fail to subsume one another. An arc subsumes another
// when every exterior descendant of the latter is also a descendant of the
// former.
bool zigzag_free(const JointDiagram& d);

// Exhaustive count of secondary structures on n vertices under (sigma,
// lambda), by backtracking over noncrossing partial matchings. Throws
// CapacityError past the cap.
std::uint64_t count_secondary_structures(int n, int sigma, int lambda, int cap = 22);

struct JointEnumerationOptions {
    bool require_zigzag_free = true;  // drop to count raw pre-structures
    int cap = 16;                     // on n + m
};

// Exhaustive counts of joint structures on (n, m) vertices under params,
// stratified by the number h of exterior arcs.
std::map<int, std::uint64_t> count_joint_structures(
    int n, int m, const StructureParams& params, const JointEnumerationOptions& options = {});

// Visits every joint structure on (n, m); used by the counting wrapper and
// by decomposition round-trip tests.
void for_each_joint_structure(int n, int m, const StructureParams& params,
                              const JointEnumerationOptions& options,
                              const std::function<void(const JointDiagram&)>& visit);

// Exhaustive counts of shapes by (t1, t2, h): diagrams in which every vertex
// lies in exactly one arc, no two interior arcs and no two exterior arcs are
// parallel neighbours (all stacks have length exactly one), the diagram is
// zigzag-free, and every interior arc has at least one exterior descendant.
std::map<std::array<int, 3>, std::uint64_t> count_shapes(int max_arcs, int cap = 7);

// One block of the unique decomposition into tight structures and maximal
// secondary segments. Tight blocks span both rows; segment blocks live on a
// single row (the unused row's span is (0, -1)).
struct DecompositionBlock {
    enum class Type {
        LoneExteriorArc,   // a single exterior arc and nothing else
        TopArcSpanned,     // spanned by a top interior arc only
        BottomArcSpanned,  // spanned by a bottom interior arc only
        BothArcsSpanned,   // spanned on both rows
        TopSegment,        // maximal exterior-free interval of the top row
        BottomSegment,     // maximal exterior-free interval of the bottom row
    };
    Type type;
    int top_lo = 0, top_hi = -1;
    int bottom_lo = 0, bottom_hi = -1;

    bool tight() const {
        return type != Type::TopSegment && type != Type::BottomSegment;
    }
    bool operator==(const DecompositionBlock&) const = default;
};

// The unique decomposition of a joint structure, ordered left to right.
// Every exterior arc lies in exactly one tight block, the blocks partition
// both vertex rows, and no arc crosses a block boundary.
std::vector<DecompositionBlock> tight_decomposition(const JointDiagram& d);

// Maximal intervals of a row free of exterior-arc endpoints (secondary
// segments in the definitional sense; the decomposition keeps only those
// lying outside every tight block).
std::vector<std::pair<int, int>> exterior_free_intervals(const JointDiagram& d, bool top_row);

} // namespace jointgf
