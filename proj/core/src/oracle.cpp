#include "jointgf/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "jointgf/errors.hpp"

namespace jointgf {

namespace {

using ArcList = std::vector<std::pair<int, int>>;

// Visits every noncrossing partial matching on [1..n] with arc length
// >= lambda, by scanning positions left to right; each position is left
// unpaired, closes the innermost open arc, or opens a new one. Closing only
// the innermost open arc makes noncrossing automatic and visits every
// matching exactly once. exact_arcs < 0 means "any number of arcs".
void visit_matchings(int n, int lambda, int exact_arcs,
                     const std::function<void(const ArcList&)>& visit) {
    ArcList arcs;
    std::vector<int> open;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos > n) {
            if (open.empty() && (exact_arcs < 0 || static_cast<int>(arcs.size()) == exact_arcs))
                visit(arcs);
            return;
        }
        if (static_cast<int>(open.size()) > n - pos + 1)
            return;  // not enough positions left to close
        self(self, pos + 1);  // unpaired
        if (!open.empty() && pos - open.back() >= lambda) {
            const int i = open.back();
            open.pop_back();
            arcs.emplace_back(i, pos);
            self(self, pos + 1);
            arcs.pop_back();
            open.push_back(i);
        }
        if (exact_arcs < 0 ||
            static_cast<int>(arcs.size() + open.size()) < exact_arcs) {
            open.push_back(pos);
            self(self, pos + 1);
            open.pop_back();
        }
    };
    rec(rec, 1);
}

bool arc_present(const ArcList& sorted_arcs, int i, int j) {
    return std::binary_search(sorted_arcs.begin(), sorted_arcs.end(), std::make_pair(i, j));
}

// every maximal run of parallel interior arcs (i,j),(i+1,j-1),... has
// length >= sigma
bool interior_stacks_ok(const ArcList& arcs, int sigma) {
    if (sigma <= 1)
        return true;
    ArcList sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [i, j] : sorted) {
        if (arc_present(sorted, i - 1, j + 1))
            continue;  // not the outermost arc of its run
        int len = 1;
        while (arc_present(sorted, i + len, j - len))
            ++len;
        if (len < sigma)
            return false;
    }
    return true;
}

// every maximal run of parallel exterior arcs (k,k'),(k+1,k'+1),... has
// length >= tau; expects arcs sorted by top endpoint
bool exterior_stacks_ok(const ArcList& ext, int tau) {
    if (tau <= 1)
        return true;
    std::size_t i = 0;
    while (i < ext.size()) {
        std::size_t j = i + 1;
        while (j < ext.size() && ext[j].first == ext[j - 1].first + 1 &&
               ext[j].second == ext[j - 1].second + 1)
            ++j;
        if (static_cast<int>(j - i) < tau)
            return false;
        i = j;
    }
    return true;
}

std::vector<std::uint64_t> descendant_masks(const ArcList& arcs, const ArcList& ext,
                                            bool top_side) {
    std::vector<std::uint64_t> masks(arcs.size(), 0);
    for (std::size_t a = 0; a < arcs.size(); ++a)
        for (std::size_t e = 0; e < ext.size(); ++e) {
            const int endpoint = top_side ? ext[e].first : ext[e].second;
            if (arcs[a].first < endpoint && endpoint < arcs[a].second)
                masks[a] |= std::uint64_t(1) << e;
        }
    return masks;
}

struct RowChoice {
    ArcList arcs;
    std::vector<int> free_vertices;
};

std::vector<RowChoice> row_choices(int n, int sigma, int lambda, int exact_arcs = -1) {
    std::vector<RowChoice> out;
    visit_matchings(n, lambda, exact_arcs, [&](const ArcList& arcs) {
        if (!interior_stacks_ok(arcs, sigma))
            return;
        RowChoice c;
        c.arcs = arcs;
        std::sort(c.arcs.begin(), c.arcs.end());
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& [i, j] : arcs)
            used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = 1;
        for (int v = 1; v <= n; ++v)
            if (!used[static_cast<std::size_t>(v)])
                c.free_vertices.push_back(v);
        out.push_back(std::move(c));
    });
    return out;
}

} // namespace

bool pre_structure_valid(const JointDiagram& d) {
    if (d.top_size < 0 || d.bottom_size < 0)
        return false;
    std::vector<int> top_degree(static_cast<std::size_t>(d.top_size) + 1, 0);
    std::vector<int> bottom_degree(static_cast<std::size_t>(d.bottom_size) + 1, 0);
    auto in_top = [&](int v) { return v >= 1 && v <= d.top_size; };
    auto in_bottom = [&](int v) { return v >= 1 && v <= d.bottom_size; };
    auto row_ok = [](const ArcList& arcs, std::vector<int>& degree,
                     const std::function<bool(int)>& in_range) {
        for (const auto& [i, j] : arcs) {
            if (!in_range(i) || !in_range(j) || i >= j)
                return false;
            ++degree[static_cast<std::size_t>(i)];
            ++degree[static_cast<std::size_t>(j)];
        }
        // noncrossing: no strict interleaving i1 < i2 < j1 < j2
        for (std::size_t a = 0; a < arcs.size(); ++a)
            for (std::size_t b = a + 1; b < arcs.size(); ++b) {
                const auto& [i1, j1] = arcs[a];
                const auto& [i2, j2] = arcs[b];
                if ((i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1))
                    return false;
            }
        return true;
    };
    if (!row_ok(d.top_arcs, top_degree, in_top) ||
        !row_ok(d.bottom_arcs, bottom_degree, in_bottom))
        return false;
    ArcList ext = d.exterior_arcs;
    std::sort(ext.begin(), ext.end());
    for (std::size_t e = 0; e < ext.size(); ++e) {
        const auto& [k, kp] = ext[e];
        if (!in_top(k) || !in_bottom(kp))
            return false;
        ++top_degree[static_cast<std::size_t>(k)];
        ++bottom_degree[static_cast<std::size_t>(kp)];
        if (e > 0 && ext[e - 1].second >= kp)
            return false;  // order preservation
    }
    for (int v = 1; v <= d.top_size; ++v)
        if (top_degree[static_cast<std::size_t>(v)] > 1)
            return false;
    for (int v = 1; v <= d.bottom_size; ++v)
        if (bottom_degree[static_cast<std::size_t>(v)] > 1)
            return false;
    return true;
}

bool zigzag_free(const JointDiagram& d) {
    if (d.exterior_arcs.size() > 64)
        throw CapacityError("zigzag check supports at most 64 exterior arcs");
    if (d.top_arcs.empty() || d.bottom_arcs.empty() || d.exterior_arcs.empty())
        return true;
    const auto top = descendant_masks(d.top_arcs, d.exterior_arcs, true);
    const auto bottom = descendant_masks(d.bottom_arcs, d.exterior_arcs, false);
    for (const std::uint64_t tm : top)
        for (const std::uint64_t bm : bottom) {
            if ((tm & bm) == 0)
                continue;  // independent pair
            if ((bm & ~tm) != 0 && (tm & ~bm) != 0)
                return false;  // dependent, neither subsumes the other
        }
    return true;
}

std::uint64_t count_secondary_structures(int n, int sigma, int lambda, int cap) {
    if (n < 0)
        throw PreconditionError("n >= 0 violated");
    StructureParams p;
    p.sigma = sigma;
    p.lambda = lambda;
    validate(p);
    if (n > cap)
        throw CapacityError("n <= " + std::to_string(cap) + " violated (n=" +
                            std::to_string(n) + ")");
    std::uint64_t count = 0;
    visit_matchings(n, lambda, -1, [&](const ArcList& arcs) {
        if (interior_stacks_ok(arcs, sigma))
            ++count;
    });
    return count;
}

void for_each_joint_structure(int n, int m, const StructureParams& params,
                              const JointEnumerationOptions& options,
                              const std::function<void(const JointDiagram&)>& visit) {
    validate(params);
    if (n < 0 || m < 0)
        throw PreconditionError("n, m >= 0 violated");
    if (n + m > options.cap)
        throw CapacityError("n + m <= " + std::to_string(options.cap) + " violated (n+m=" +
                            std::to_string(n + m) + ")");
    const auto tops = row_choices(n, params.sigma, params.lambda);
    const auto bottoms = row_choices(m, params.sigma, params.lambda);

    JointDiagram d;
    d.top_size = n;
    d.bottom_size = m;
    ArcList ext;
    for (const RowChoice& t : tops)
        for (const RowChoice& b : bottoms) {
            d.top_arcs = t.arcs;
            d.bottom_arcs = b.arcs;
            const auto& ft = t.free_vertices;
            const auto& fb = b.free_vertices;
            auto emit = [&]() {
                if (!exterior_stacks_ok(ext, params.tau))
                    return;
                d.exterior_arcs = ext;
                if (options.require_zigzag_free && !zigzag_free(d))
                    return;
                visit(d);
            };
            // extend the (sorted) exterior matching by pairs of still-free
            // vertices; order preservation is built into the index sweep
            auto rec = [&](auto&& self, std::size_t ti, std::size_t bi) -> void {
                emit();
                for (std::size_t i = ti; i < ft.size(); ++i)
                    for (std::size_t j = bi; j < fb.size(); ++j) {
                        ext.emplace_back(ft[i], fb[j]);
                        self(self, i + 1, j + 1);
                        ext.pop_back();
                    }
            };
            rec(rec, 0, 0);
        }
}

std::map<int, std::uint64_t> count_joint_structures(int n, int m,
                                                    const StructureParams& params,
                                                    const JointEnumerationOptions& options) {
    std::map<int, std::uint64_t> counts;
    for_each_joint_structure(n, m, params, options, [&](const JointDiagram& d) {
        ++counts[static_cast<int>(d.exterior_arcs.size())];
    });
    return counts;
}

std::map<std::array<int, 3>, std::uint64_t> count_shapes(int max_arcs, int cap) {
    if (max_arcs < 0)
        throw PreconditionError("max_arcs >= 0 violated");
    if (max_arcs > cap)
        throw CapacityError("max_arcs <= " + std::to_string(cap) + " violated (max_arcs=" +
                            std::to_string(max_arcs) + ")");
    std::map<std::array<int, 3>, std::uint64_t> counts;
    for (int t1 = 0; t1 <= max_arcs; ++t1)
        for (int t2 = 0; t1 + t2 <= max_arcs; ++t2)
            for (int h = 0; t1 + t2 + h <= max_arcs; ++h) {
                const int n = 2 * t1 + h;
                const int m = 2 * t2 + h;
                // every vertex is in exactly one arc, so the h exterior arcs
                // connect the free vertices of both rows in order
                const auto tops = row_choices(n, 1, 1, t1);
                const auto bottoms = row_choices(m, 1, 1, t2);
                std::uint64_t count = 0;
                JointDiagram d;
                d.top_size = n;
                d.bottom_size = m;
                for (const RowChoice& t : tops)
                    for (const RowChoice& b : bottoms) {
                        d.top_arcs = t.arcs;
                        d.bottom_arcs = b.arcs;
                        d.exterior_arcs.clear();
                        for (int e = 0; e < h; ++e)
                            d.exterior_arcs.emplace_back(t.free_vertices[static_cast<std::size_t>(e)],
                                                         b.free_vertices[static_cast<std::size_t>(e)]);
                        // all stacks have length exactly one
                        auto lone_arcs = [](const ArcList& arcs) {
                            ArcList sorted = arcs;
                            std::sort(sorted.begin(), sorted.end());
                            for (const auto& [i, j] : sorted)
                                if (arc_present(sorted, i + 1, j - 1))
                                    return false;
                            return true;
                        };
                        if (!lone_arcs(d.top_arcs) || !lone_arcs(d.bottom_arcs))
                            continue;
                        bool parallel_ext = false;
                        for (std::size_t e = 1; e < d.exterior_arcs.size(); ++e)
                            if (d.exterior_arcs[e].first == d.exterior_arcs[e - 1].first + 1 &&
                                d.exterior_arcs[e].second == d.exterior_arcs[e - 1].second + 1)
                                parallel_ext = true;
                        if (parallel_ext)
                            continue;
                        // every interior arc needs an exterior descendant
                        const auto tmask = descendant_masks(d.top_arcs, d.exterior_arcs, true);
                        const auto bmask = descendant_masks(d.bottom_arcs, d.exterior_arcs, false);
                        if (std::any_of(tmask.begin(), tmask.end(),
                                        [](std::uint64_t v) { return v == 0; }) ||
                            std::any_of(bmask.begin(), bmask.end(),
                                        [](std::uint64_t v) { return v == 0; }))
                            continue;
                        if (!zigzag_free(d))
                            continue;
                        ++count;
                    }
                if (count > 0)
                    counts[{t1, t2, h}] = count;
            }
    return counts;
}

namespace {

struct RawBlock {
    int top_lo, top_hi, bottom_lo, bottom_hi;
    std::uint64_t members;
};

// closes a block under: exterior arcs touching a span, interior ancestors of
// member exterior arcs, and exterior descendants of interior arcs lying
// inside a span
void close_block(RawBlock& b, const JointDiagram& d) {
    const auto& E = d.exterior_arcs;
    bool changed = true;
    auto absorb_ext = [&](std::size_t e) {
        if (b.members & (std::uint64_t(1) << e))
            return;
        b.members |= std::uint64_t(1) << e;
        b.top_lo = std::min(b.top_lo, E[e].first);
        b.top_hi = std::max(b.top_hi, E[e].first);
        b.bottom_lo = std::min(b.bottom_lo, E[e].second);
        b.bottom_hi = std::max(b.bottom_hi, E[e].second);
        changed = true;
    };
    while (changed) {
        changed = false;
        for (std::size_t e = 0; e < E.size(); ++e) {
            if (b.members & (std::uint64_t(1) << e))
                continue;
            if ((E[e].first >= b.top_lo && E[e].first <= b.top_hi) ||
                (E[e].second >= b.bottom_lo && E[e].second <= b.bottom_hi))
                absorb_ext(e);
        }
        for (std::size_t e = 0; e < E.size(); ++e) {
            if (!(b.members & (std::uint64_t(1) << e)))
                continue;
            for (const auto& [i, j] : d.top_arcs)
                if (i < E[e].first && E[e].first < j) {
                    if (i < b.top_lo || j > b.top_hi) {
                        b.top_lo = std::min(b.top_lo, i);
                        b.top_hi = std::max(b.top_hi, j);
                        changed = true;
                    }
                }
            for (const auto& [i, j] : d.bottom_arcs)
                if (i < E[e].second && E[e].second < j) {
                    if (i < b.bottom_lo || j > b.bottom_hi) {
                        b.bottom_lo = std::min(b.bottom_lo, i);
                        b.bottom_hi = std::max(b.bottom_hi, j);
                        changed = true;
                    }
                }
        }
        for (const auto& [i, j] : d.top_arcs)
            if (i >= b.top_lo && j <= b.top_hi)
                for (std::size_t e = 0; e < E.size(); ++e)
                    if (i < E[e].first && E[e].first < j)
                        absorb_ext(e);
        for (const auto& [i, j] : d.bottom_arcs)
            if (i >= b.bottom_lo && j <= b.bottom_hi)
                for (std::size_t e = 0; e < E.size(); ++e)
                    if (i < E[e].second && E[e].second < j)
                        absorb_ext(e);
    }
}

std::vector<std::pair<int, int>> uncovered_intervals(int size,
                                                     const std::vector<std::pair<int, int>>& covered) {
    std::vector<char> taken(static_cast<std::size_t>(size) + 1, 0);
    for (const auto& [lo, hi] : covered)
        for (int v = lo; v <= hi; ++v)
            taken[static_cast<std::size_t>(v)] = 1;
    std::vector<std::pair<int, int>> out;
    int v = 1;
    while (v <= size) {
        if (taken[static_cast<std::size_t>(v)]) {
            ++v;
            continue;
        }
        int end = v;
        while (end + 1 <= size && !taken[static_cast<std::size_t>(end) + 1])
            ++end;
        out.emplace_back(v, end);
        v = end + 1;
    }
    return out;
}

} // namespace

std::vector<DecompositionBlock> tight_decomposition(const JointDiagram& d) {
    if (!pre_structure_valid(d))
        throw PreconditionError("valid joint diagram violated");
    const auto& E = d.exterior_arcs;
    if (E.size() > 64)
        throw CapacityError("decomposition supports at most 64 exterior arcs");

    std::vector<RawBlock> blocks;
    std::uint64_t assigned = 0;
    for (std::size_t e = 0; e < E.size(); ++e) {
        if (assigned & (std::uint64_t(1) << e))
            continue;
        RawBlock b{E[e].first, E[e].first, E[e].second, E[e].second,
                   std::uint64_t(1) << e};
        close_block(b, d);
        assigned |= b.members;
        blocks.push_back(b);
    }
    // overlapping closures belong to the same tight structure
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t a = 0; a < blocks.size() && !merged; ++a)
            for (std::size_t b = a + 1; b < blocks.size() && !merged; ++b) {
                const bool top_overlap = blocks[a].top_lo <= blocks[b].top_hi &&
                                         blocks[b].top_lo <= blocks[a].top_hi;
                const bool bottom_overlap = blocks[a].bottom_lo <= blocks[b].bottom_hi &&
                                            blocks[b].bottom_lo <= blocks[a].bottom_hi;
                if (top_overlap || bottom_overlap) {
                    blocks[a].top_lo = std::min(blocks[a].top_lo, blocks[b].top_lo);
                    blocks[a].top_hi = std::max(blocks[a].top_hi, blocks[b].top_hi);
                    blocks[a].bottom_lo = std::min(blocks[a].bottom_lo, blocks[b].bottom_lo);
                    blocks[a].bottom_hi = std::max(blocks[a].bottom_hi, blocks[b].bottom_hi);
                    blocks[a].members |= blocks[b].members;
                    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(b));
                    close_block(blocks[a], d);
                    merged = true;
                }
            }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const RawBlock& a, const RawBlock& b) { return a.top_lo < b.top_lo; });
    for (std::size_t i = 1; i < blocks.size(); ++i)
        if (blocks[i - 1].bottom_lo >= blocks[i].bottom_lo)
            throw std::logic_error("tight blocks out of order across rows");

    std::vector<DecompositionBlock> typed;
    typed.reserve(blocks.size());
    std::vector<std::pair<int, int>> top_covered, bottom_covered;
    for (const RawBlock& b : blocks) {
        DecompositionBlock block;
        block.top_lo = b.top_lo;
        block.top_hi = b.top_hi;
        block.bottom_lo = b.bottom_lo;
        block.bottom_hi = b.bottom_hi;
        const bool top_spanned =
            std::find(d.top_arcs.begin(), d.top_arcs.end(),
                      std::make_pair(b.top_lo, b.top_hi)) != d.top_arcs.end();
        const bool bottom_spanned =
            std::find(d.bottom_arcs.begin(), d.bottom_arcs.end(),
                      std::make_pair(b.bottom_lo, b.bottom_hi)) != d.bottom_arcs.end();
        if (top_spanned && bottom_spanned)
            block.type = DecompositionBlock::Type::BothArcsSpanned;
        else if (top_spanned)
            block.type = DecompositionBlock::Type::TopArcSpanned;
        else if (bottom_spanned)
            block.type = DecompositionBlock::Type::BottomArcSpanned;
        else if (b.top_lo == b.top_hi && b.bottom_lo == b.bottom_hi)
            block.type = DecompositionBlock::Type::LoneExteriorArc;
        else
            throw std::logic_error("tight block spanned by no arc");
        typed.push_back(block);
        top_covered.emplace_back(b.top_lo, b.top_hi);
        bottom_covered.emplace_back(b.bottom_lo, b.bottom_hi);
    }

    const auto top_segments = uncovered_intervals(d.top_size, top_covered);
    const auto bottom_segments = uncovered_intervals(d.bottom_size, bottom_covered);

    // interleave: before each tight block, the segments entirely to its left
    std::vector<DecompositionBlock> out;
    std::size_t ts = 0, bs = 0;
    auto emit_segments_before = [&](int top_limit, int bottom_limit) {
        while (ts < top_segments.size() && top_segments[ts].second < top_limit) {
            DecompositionBlock seg;
            seg.type = DecompositionBlock::Type::TopSegment;
            seg.top_lo = top_segments[ts].first;
            seg.top_hi = top_segments[ts].second;
            out.push_back(seg);
            ++ts;
        }
        while (bs < bottom_segments.size() && bottom_segments[bs].second < bottom_limit) {
            DecompositionBlock seg;
            seg.type = DecompositionBlock::Type::BottomSegment;
            seg.bottom_lo = bottom_segments[bs].first;
            seg.bottom_hi = bottom_segments[bs].second;
            out.push_back(seg);
            ++bs;
        }
    };
    for (const DecompositionBlock& block : typed) {
        emit_segments_before(block.top_lo, block.bottom_lo);
        out.push_back(block);
    }
    emit_segments_before(d.top_size + 1, d.bottom_size + 1);
    return out;
}

std::vector<std::pair<int, int>> exterior_free_intervals(const JointDiagram& d, bool top_row) {
    std::vector<std::pair<int, int>> endpoints;
    for (const auto& [k, kp] : d.exterior_arcs) {
        const int v = top_row ? k : kp;
        endpoints.emplace_back(v, v);
    }
    return uncovered_intervals(top_row ? d.top_size : d.bottom_size, endpoints);
}

} // namespace jointgf
