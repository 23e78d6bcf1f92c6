#pragma once

// Constructive bijection between (s_1..s_r)-colored n-cycles and arrangements
// of S = {(i,j) : 1 <= i <= r, 1 <= j <= s_i} into an (r-1)-term sequence plus
// an (n-r+1)-element cycle, assembled from three invertible steps:
//
//   ColoredCycle --step1--> TouredDigraph --step2--> EulerStructure --step3--> SequenceCyclePair
//
// and the extension to colored subsets through marked strips.
//
// Edge ids are 0-based indices into the owning edge vector. Vertices, colors,
// labels and ordinals are 1-based.

#include "colored.hpp"
#include "permutation.hpp"

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cycprod {

enum class BijectionErrorKind {
    malformed,
    inconsistent_tours,
    wiring_not_spanning,
    last_exits_not_arborescence,
};

inline const char* to_string(BijectionErrorKind k) {
    switch (k) {
        case BijectionErrorKind::malformed: return "malformed";
        case BijectionErrorKind::inconsistent_tours: return "inconsistent_tours";
        case BijectionErrorKind::wiring_not_spanning: return "wiring_not_spanning";
        case BijectionErrorKind::last_exits_not_arborescence: return "last_exits_not_arborescence";
    }
    return "unknown";
}

class BijectionError : public std::invalid_argument {
public:
    BijectionError(BijectionErrorKind kind, const std::string& what)
        : std::invalid_argument(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    BijectionErrorKind kind() const { return kind_; }

private:
    BijectionErrorKind kind_;
};

/// An element (color, ordinal) of the ground set S.
struct Element {
    int color = 0;
    int ordinal = 0;
    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

// --- step 1 types ---------------------------------------------------------

/// Edge of the digraph obtained by identifying same-colored vertices of the
/// cycle digraph of sigma. `circled` is the element the edge leaves from;
/// `uncircled` is its position along sigma counted from the edge leaving 1.
struct LabeledEdge {
    int tail = 0;
    int head = 0;
    int uncircled = 0;
    int circled = 0;
    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
    friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Degree-(s_1..s_r) digraph with doubly labeled edges; edges[x-1] carries circled label x.
struct LabeledDigraph {
    int vertices = 0;
    std::vector<LabeledEdge> edges;
    friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;
};

/// Two Eulerian tours sharing their first edge. `first` lists edges by circled
/// label and supplies the wirings; `second` lists them by uncircled label and
/// supplies the exit orderings.
struct EulerianTourPair {
    std::vector<int> first;
    std::vector<int> second;
    friend bool operator==(const EulerianTourPair&, const EulerianTourPair&) = default;
};

struct TouredDigraph {
    LabeledDigraph graph;
    EulerianTourPair tours;
    friend bool operator==(const TouredDigraph&, const TouredDigraph&) = default;
};

// --- step 2 types ---------------------------------------------------------

struct DigraphEdge {
    int tail = 0;
    int head = 0;
    friend bool operator==(const DigraphEdge&, const DigraphEdge&) = default;
};

/// Root vertex, a wiring at every vertex and an exit ordering at every vertex.
/// wiring[e] is the outgoing edge at head(e) paired with the incoming edge e.
/// exit_order[i-1] lists vertex i's outgoing edges from first to last exit.
struct EulerStructure {
    int root = 0;
    std::vector<DigraphEdge> edges;
    std::vector<std::vector<int>> exit_order;
    std::vector<int> wiring;

    int vertices() const { return static_cast<int>(exit_order.size()); }
    int size() const { return static_cast<int>(edges.size()); }

    std::vector<int> svector() const {
        std::vector<int> s;
        for (const auto& order : exit_order) s.push_back(static_cast<int>(order.size()));
        return s;
    }

    int last_exit(int vertex) const { return exit_order[vertex - 1].back(); }

    /// (tail, rank of the edge in its tail's exit ordering).
    Element label(int edge) const {
        const int tail = edges[edge].tail;
        const auto& order = exit_order[tail - 1];
        auto it = std::find(order.begin(), order.end(), edge);
        return {tail, static_cast<int>(it - order.begin()) + 1};
    }

    /// The pairing at one vertex as (incoming, outgoing) edges, sorted by incoming id.
    std::vector<std::pair<int, int>> wiring_at(int vertex) const {
        std::vector<std::pair<int, int>> out;
        for (int e = 0; e < size(); ++e)
            if (edges[e].head == vertex) out.emplace_back(e, wiring[e]);
        return out;
    }

    friend bool operator==(const EulerStructure&, const EulerStructure&) = default;
};

// --- step 3 types ---------------------------------------------------------

/// (r-1)-term sequence and (n-r+1)-element cycle partitioning S. The cycle is
/// stored rotated so that its minimum element comes first.
struct SequenceCyclePair {
    std::vector<int> svector;
    std::vector<Element> sequence;
    std::vector<Element> cycle;
    friend bool operator==(const SequenceCyclePair&, const SequenceCyclePair&) = default;
    friend auto operator<=>(const SequenceCyclePair&, const SequenceCyclePair&) = default;
};

inline void canonicalize_cycle(std::vector<Element>& cycle) {
    if (cycle.empty()) return;
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
}

// --- validation -----------------------------------------------------------

namespace detail {

inline bool is_permutation_of_range(const std::vector<int>& v, int lo, int count) {
    if (static_cast<int>(v.size()) != count) return false;
    std::vector<char> seen(static_cast<std::size_t>(count), 0);
    for (int x : v) {
        if (x < lo || x >= lo + count || seen[x - lo]) return false;
        seen[x - lo] = 1;
    }
    return true;
}

inline bool is_closed_tour(const LabeledDigraph& g, const std::vector<int>& tour) {
    const int n = static_cast<int>(g.edges.size());
    if (!is_permutation_of_range(tour, 0, n)) return false;
    for (int i = 0; i < n; ++i) {
        if (g.edges[tour[i]].head != g.edges[tour[(i + 1) % n]].tail) return false;
    }
    return true;
}

}  // namespace detail

/// Throws BijectionError unless the tour pair is consistent with the labels.
inline void check_toured_digraph(const TouredDigraph& td) {
    const auto& g = td.graph;
    const int n = static_cast<int>(g.edges.size());
    const int r = g.vertices;
    if (n < 1 || r < 1 || r > n) throw BijectionError(BijectionErrorKind::malformed, "need 1 <= vertices <= edges");
    std::vector<int> out(static_cast<std::size_t>(r), 0), in(static_cast<std::size_t>(r), 0);
    std::vector<int> circled, uncircled;
    for (const auto& e : g.edges) {
        if (e.tail < 1 || e.tail > r || e.head < 1 || e.head > r)
            throw BijectionError(BijectionErrorKind::malformed, "edge endpoint out of range");
        ++out[e.tail - 1];
        ++in[e.head - 1];
        circled.push_back(e.circled);
        uncircled.push_back(e.uncircled);
    }
    for (int i = 0; i < r; ++i) {
        if (out[i] == 0 || out[i] != in[i])
            throw BijectionError(BijectionErrorKind::malformed, "vertex degrees not balanced and positive");
    }
    if (!detail::is_permutation_of_range(circled, 1, n) || !detail::is_permutation_of_range(uncircled, 1, n))
        throw BijectionError(BijectionErrorKind::malformed, "labels are not permutations of 1..n");
    for (int x = 1; x <= n; ++x) {
        if (g.edges[x - 1].circled != x)
            throw BijectionError(BijectionErrorKind::malformed, "edges must be indexed by circled label");
    }
    const auto& t = td.tours;
    if (!detail::is_closed_tour(g, t.first) || !detail::is_closed_tour(g, t.second))
        throw BijectionError(BijectionErrorKind::inconsistent_tours, "tour is not Eulerian");
    for (int i = 0; i < n; ++i) {
        if (g.edges[t.first[i]].circled != i + 1 || g.edges[t.second[i]].uncircled != i + 1)
            throw BijectionError(BijectionErrorKind::inconsistent_tours, "tour order disagrees with labels");
    }
    if (t.first[0] != t.second[0])
        throw BijectionError(BijectionErrorKind::inconsistent_tours, "tours start at different edges");
}

/// Empty when all invariants hold; otherwise the first defect found.
inline std::optional<BijectionErrorKind> structure_defect(const EulerStructure& e) {
    const int n = e.size();
    const int r = e.vertices();
    using K = BijectionErrorKind;
    if (n < 1 || r < 1 || e.root < 1 || e.root > r || static_cast<int>(e.wiring.size()) != n) return K::malformed;
    std::vector<int> in(static_cast<std::size_t>(r), 0);
    for (const auto& edge : e.edges) {
        if (edge.tail < 1 || edge.tail > r || edge.head < 1 || edge.head > r) return K::malformed;
        ++in[edge.head - 1];
    }
    std::vector<char> listed(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= r; ++v) {
        const auto& order = e.exit_order[v - 1];
        if (order.empty() || static_cast<int>(order.size()) != in[v - 1]) return K::malformed;
        for (int id : order) {
            if (id < 0 || id >= n || listed[id] || e.edges[id].tail != v) return K::malformed;
            listed[id] = 1;
        }
    }
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int id = 0; id < n; ++id) {
        int next = e.wiring[id];
        if (next < 0 || next >= n || used[next] || e.edges[next].tail != e.edges[id].head) return K::malformed;
        used[next] = 1;
    }
    int length = 0;
    int cur = 0;
    do {
        cur = e.wiring[cur];
        ++length;
    } while (cur != 0);
    if (length != n) return K::wiring_not_spanning;
    // Every non-root vertex must reach the root along last exits within r-1 steps.
    for (int v = 1; v <= r; ++v) {
        int x = v;
        int steps = 0;
        while (x != e.root && steps < r) {
            x = e.edges[e.last_exit(x)].head;
            ++steps;
        }
        if (x != e.root) return K::last_exits_not_arborescence;
    }
    return std::nullopt;
}

inline void check_structure(const EulerStructure& e) {
    if (auto defect = structure_defect(e)) {
        throw BijectionError(*defect, "EulerStructure invariant violated");
    }
}

/// Throws unless sequence and cycle partition S for the given s-vector.
inline void check_sequence_cycle_pair(const SequenceCyclePair& p) {
    const int r = static_cast<int>(p.svector.size());
    if (r < 1) throw BijectionError(BijectionErrorKind::malformed, "empty s-vector");
    int n = 0;
    for (int s : p.svector) {
        if (s < 1) throw BijectionError(BijectionErrorKind::malformed, "s-vector entries must be positive");
        n += s;
    }
    if (static_cast<int>(p.sequence.size()) != r - 1 || static_cast<int>(p.cycle.size()) != n - r + 1)
        throw BijectionError(BijectionErrorKind::malformed, "sequence/cycle lengths must be r-1 and n-r+1");
    std::vector<std::vector<char>> seen(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) seen[i].assign(static_cast<std::size_t>(p.svector[i]), 0);
    auto mark = [&](const Element& x) {
        if (x.color < 1 || x.color > r || x.ordinal < 1 || x.ordinal > p.svector[x.color - 1] ||
            seen[x.color - 1][x.ordinal - 1])
            throw BijectionError(BijectionErrorKind::malformed, "element outside S or repeated");
        seen[x.color - 1][x.ordinal - 1] = 1;
    };
    for (const auto& x : p.sequence) mark(x);
    for (const auto& x : p.cycle) mark(x);
}

// --- step 1 ---------------------------------------------------------------

inline TouredDigraph step1_forward(const ColoredCycle& c) {
    if (!validate_colored_cycle(c)) throw BijectionError(BijectionErrorKind::malformed, "not a colored cycle");
    const int n = c.size();
    std::vector<int> along;  // 1, sigma(1), sigma^2(1), ...
    for (int x = 1; static_cast<int>(along.size()) < n; x = c.sigma(x)) along.push_back(x);
    TouredDigraph td;
    td.graph.vertices = c.num_colors();
    td.graph.edges.resize(static_cast<std::size_t>(n));
    for (int pos = 1; pos <= n; ++pos) {
        const int x = along[pos - 1];
        td.graph.edges[x - 1] = {c.color_of(x), c.color_of(c.sigma(x)), pos, x};
    }
    td.tours.first.resize(static_cast<std::size_t>(n));
    std::iota(td.tours.first.begin(), td.tours.first.end(), 0);
    for (int pos = 1; pos <= n; ++pos) td.tours.second.push_back(along[pos - 1] - 1);
    return td;
}

inline ColoredCycle step1_inverse(const TouredDigraph& td) {
    check_toured_digraph(td);
    const auto& edges = td.graph.edges;
    const int n = static_cast<int>(edges.size());
    std::vector<int> along;
    for (int e : td.tours.second) along.push_back(edges[e].circled);
    ColoredCycle c{Permutation::from_cycle(n, along), std::vector<int>(static_cast<std::size_t>(n))};
    for (const auto& e : edges) c.colors[e.circled - 1] = e.tail;
    if (!validate_colored_cycle(c))
        throw BijectionError(BijectionErrorKind::inconsistent_tours, "labels do not describe a colored cycle");
    return c;
}

// --- step 2 ---------------------------------------------------------------

inline EulerStructure step2_forward(const TouredDigraph& td) {
    check_toured_digraph(td);
    const auto& g = td.graph;
    const int n = static_cast<int>(g.edges.size());
    const int r = g.vertices;

    // Exit ranks from the second tour fix canonical ids: vertex-major, rank-minor.
    std::vector<std::vector<int>> exits_old(static_cast<std::size_t>(r));
    for (int e : td.tours.second) exits_old[g.edges[e].tail - 1].push_back(e);
    std::vector<int> renumber(static_cast<std::size_t>(n));
    EulerStructure out;
    out.root = g.edges[td.tours.first[0]].tail;
    out.exit_order.resize(static_cast<std::size_t>(r));
    out.edges.resize(static_cast<std::size_t>(n));
    int next_id = 0;
    for (int v = 1; v <= r; ++v) {
        for (int old : exits_old[v - 1]) {
            renumber[old] = next_id;
            out.edges[next_id] = {g.edges[old].tail, g.edges[old].head};
            out.exit_order[v - 1].push_back(next_id);
            ++next_id;
        }
    }
    out.wiring.resize(static_cast<std::size_t>(n));
    const auto& wt = td.tours.first;
    for (int i = 0; i < n; ++i) out.wiring[renumber[wt[i]]] = renumber[wt[(i + 1) % n]];
    return out;
}

inline TouredDigraph step2_inverse(const EulerStructure& e) {
    check_structure(e);
    const int n = e.size();
    const int r = e.vertices();
    const int start = e.exit_order[e.root - 1].front();

    std::vector<int> first;
    for (int cur = start; static_cast<int>(first.size()) < n; cur = e.wiring[cur]) first.push_back(cur);

    // Greedy traversal: from the root, always leave by the first unused exit.
    std::vector<int> second;
    std::vector<std::size_t> next_exit(static_cast<std::size_t>(r), 0);
    int at = e.root;
    while (static_cast<int>(second.size()) < n) {
        auto& k = next_exit[at - 1];
        if (k == e.exit_order[at - 1].size())
            throw BijectionError(BijectionErrorKind::last_exits_not_arborescence, "greedy traversal stalled");
        const int edge = e.exit_order[at - 1][k++];
        second.push_back(edge);
        at = e.edges[edge].head;
    }

    std::vector<int> circled(static_cast<std::size_t>(n)), uncircled(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        circled[first[i]] = i + 1;
        uncircled[second[i]] = i + 1;
    }
    TouredDigraph td;
    td.graph.vertices = r;
    td.graph.edges.resize(static_cast<std::size_t>(n));
    for (int id = 0; id < n; ++id)
        td.graph.edges[circled[id] - 1] = {e.edges[id].tail, e.edges[id].head, uncircled[id], circled[id]};
    for (int id : first) td.tours.first.push_back(circled[id] - 1);
    for (int id : second) td.tours.second.push_back(circled[id] - 1);
    return td;
}

// --- step 3 ---------------------------------------------------------------

inline SequenceCyclePair step3_forward(const EulerStructure& e) {
    check_structure(e);
    const int n = e.size();
    const int r = e.vertices();
    SequenceCyclePair out;
    out.svector = e.svector();

    // The label skipped for a tree edge is that of the edge it is wired into.
    std::vector<char> skipped(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= r; ++v)
        if (v != e.root) skipped[e.wiring[e.last_exit(v)]] = 1;

    const int start = e.exit_order[e.root - 1].front();
    int cur = start;
    do {
        if (!skipped[cur]) out.cycle.push_back(e.label(cur));
        cur = e.wiring[cur];
    } while (cur != start);
    canonicalize_cycle(out.cycle);

    std::vector<int> parent(static_cast<std::size_t>(r) + 1, 0);
    std::vector<int> children(static_cast<std::size_t>(r) + 1, 0);
    for (int v = 1; v <= r; ++v) {
        if (v == e.root) continue;
        parent[v] = e.edges[e.last_exit(v)].head;
        ++children[parent[v]];
    }
    std::vector<char> removed(static_cast<std::size_t>(r) + 1, 0);
    for (int step = 0; step < r - 1; ++step) {
        int leaf = 1;
        while (leaf == e.root || removed[leaf] || children[leaf] != 0) ++leaf;
        out.sequence.push_back(e.label(e.wiring[e.last_exit(leaf)]));
        removed[leaf] = 1;
        --children[parent[leaf]];
    }
    return out;
}

inline EulerStructure step3_inverse(const SequenceCyclePair& p) {
    check_sequence_cycle_pair(p);
    const auto& s = p.svector;
    const int r = static_cast<int>(s.size());
    const int n = std::accumulate(s.begin(), s.end(), 0);

    // Rebuild the last-exit tree: the vertex removed at each step is the
    // smallest one still present that does not occur later in the sequence.
    std::vector<std::optional<Element>> tree_label(static_cast<std::size_t>(r) + 1);
    std::vector<int> pending(static_cast<std::size_t>(r) + 1, 0);
    for (const auto& x : p.sequence) ++pending[x.color];
    std::vector<char> removed(static_cast<std::size_t>(r) + 1, 0);
    for (const auto& x : p.sequence) {
        int leaf = 1;
        while (removed[leaf] || pending[leaf] != 0) ++leaf;
        tree_label[leaf] = x;
        removed[leaf] = 1;
        --pending[x.color];
    }
    int root = 1;
    while (removed[root]) ++root;

    std::vector<int> offset(static_cast<std::size_t>(r) + 1, 0);
    for (int v = 1; v < r; ++v) offset[v + 1] = offset[v] + s[v - 1];
    auto id_of = [&](const Element& x) { return offset[x.color] + x.ordinal - 1; };
    auto is_tree_edge = [&](const Element& x) { return x.color != root && x.ordinal == s[x.color - 1]; };

    std::vector<Element> wiring_order;
    for (const auto& y : p.cycle) {
        wiring_order.push_back(y);
        Element cur = y;
        while (is_tree_edge(cur)) {
            cur = *tree_label[cur.color];
            wiring_order.push_back(cur);
            if (static_cast<int>(wiring_order.size()) > n)
                throw BijectionError(BijectionErrorKind::malformed, "tree labels do not form a forest");
        }
    }
    if (static_cast<int>(wiring_order.size()) != n)
        throw BijectionError(BijectionErrorKind::malformed, "wiring reconstruction did not cover S");

    EulerStructure e;
    e.root = root;
    e.edges.resize(static_cast<std::size_t>(n));
    e.exit_order.resize(static_cast<std::size_t>(r));
    e.wiring.resize(static_cast<std::size_t>(n));
    for (int v = 1; v <= r; ++v)
        for (int j = 1; j <= s[v - 1]; ++j) e.exit_order[v - 1].push_back(offset[v] + j - 1);
    for (int i = 0; i < n; ++i) {
        const Element& x = wiring_order[i];
        const Element& y = wiring_order[(i + 1) % n];
        e.edges[id_of(x)] = {x.color, y.color};
        e.wiring[id_of(x)] = id_of(y);
    }
    check_structure(e);
    return e;
}

// --- full chain -----------------------------------------------------------

inline SequenceCyclePair full_bijection(const ColoredCycle& c) {
    return step3_forward(step2_forward(step1_forward(c)));
}

inline ColoredCycle full_inverse(const SequenceCyclePair& p) {
    return step1_inverse(step2_inverse(step3_inverse(p)));
}

/// Calls f for every (sequence, cycle) arrangement of S for this s-vector.
template <class F>
void for_each_sequence_cycle_pair(const std::vector<int>& svector, F&& f) {
    const int r = static_cast<int>(svector.size());
    std::vector<Element> ground;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= svector[i - 1]; ++j) ground.push_back({i, j});
    const int n = static_cast<int>(ground.size());
    // Each permutation of S split as sequence + (cycle starting at its minimum)
    // hits every arrangement exactly once.
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        int first_cycle = r - 1;
        bool min_first = true;
        for (int i = first_cycle + 1; i < n; ++i)
            if (idx[i] < idx[first_cycle]) min_first = false;
        if (!min_first) continue;
        SequenceCyclePair p{svector, {}, {}};
        for (int i = 0; i < first_cycle; ++i) p.sequence.push_back(ground[idx[i]]);
        for (int i = first_cycle; i < n; ++i) p.cycle.push_back(ground[idx[i]]);
        f(p);
    } while (std::next_permutation(idx.begin(), idx.end()));
}

// --- extension to colored subsets ----------------------------------------

/// Marked strip obtained by cutting the cycle before 1 and stably sorting
/// colors, paired with the underlying colored cycle.
struct ExtendedImage {
    ColoredStrip strip;
    ColoredCycle cycle;
    friend bool operator==(const ExtendedImage&, const ExtendedImage&) = default;
};

inline ExtendedImage extended_forward(const ColoredSubsetInstance& inst) {
    const ColoredCycle& c = inst.base;
    if (!validate_colored_cycle(c)) throw BijectionError(BijectionErrorKind::malformed, "not a colored cycle");
    const int n = c.size();
    const std::vector<int> s = svector_of(c);
    std::vector<int> offset(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) offset[i + 1] = offset[i] + s[i];

    std::vector<char> in_subset(static_cast<std::size_t>(n) + 1, 0);
    for (int x : inst.subset) {
        if (x < 1 || x > n || in_subset[x]) throw BijectionError(BijectionErrorKind::malformed, "bad subset");
        in_subset[x] = 1;
    }
    ExtendedImage out{ColoredStrip::from_blocks(s), c};
    std::vector<int> marks;
    std::vector<int> seen_of_color(s.size(), 0);
    int x = 1;
    for (int step = 0; step < n; ++step, x = c.sigma(x)) {
        const int col = c.color_of(x);
        const int pos = offset[col - 1] + (++seen_of_color[col - 1]);
        if (in_subset[x]) marks.push_back(pos);
    }
    std::sort(marks.begin(), marks.end());
    out.strip.marked = std::move(marks);
    return out;
}

inline ColoredSubsetInstance extended_inverse(const ExtendedImage& img) {
    const ColoredCycle& c = img.cycle;
    if (!validate_colored_cycle(c)) throw BijectionError(BijectionErrorKind::malformed, "not a colored cycle");
    if (!validate_strip(img.strip) || !img.strip.marked || img.strip.block_sizes() != svector_of(c))
        throw BijectionError(BijectionErrorKind::malformed, "strip does not match the cycle's s-vector");
    const int n = c.size();
    // by_position[p-1] = element shown at strip position p
    const std::vector<int> s = svector_of(c);
    std::vector<int> offset(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) offset[i + 1] = offset[i] + s[i];
    std::vector<int> by_position(static_cast<std::size_t>(n));
    std::vector<int> seen_of_color(s.size(), 0);
    int x = 1;
    for (int step = 0; step < n; ++step, x = c.sigma(x)) {
        const int col = c.color_of(x);
        by_position[offset[col - 1] + seen_of_color[col - 1]++] = x;
    }
    ColoredSubsetInstance inst{c, {}};
    for (int p : *img.strip.marked) inst.subset.push_back(by_position[p - 1]);
    std::sort(inst.subset.begin(), inst.subset.end());
    return inst;
}

/// Plain (r+k)-colored (n+t)-strip, the t colors carrying marks, and a
/// t-colored k-strip recording how many marks each of those colors carries.
struct StripTriple {
    ColoredStrip plain;
    std::vector<int> color_subset;
    ColoredStrip marks_per_color;
    friend bool operator==(const StripTriple&, const StripTriple&) = default;
};

inline StripTriple strip_forward(const ColoredStrip& strip) {
    if (!validate_strip(strip) || !strip.marked || strip.marked->empty())
        throw BijectionError(BijectionErrorKind::malformed, "expected a strip with a nonempty marked subset");
    const int r = strip.num_colors();
    std::vector<char> is_marked(static_cast<std::size_t>(strip.size()) + 1, 0);
    for (int p : *strip.marked) is_marked[p] = 1;

    std::vector<int> marks(static_cast<std::size_t>(r) + 1, 0);
    for (int p : *strip.marked) ++marks[strip.colors[p - 1]];

    // Boxes labeled with the running count of marks in their color; colors
    // carrying marks get an extra leading box labeled 0. Each distinct
    // (color, label) pair becomes one color of the plain strip.
    StripTriple out;
    int plain_color = 0;
    int last_color = 0;
    int last_label = -1;
    int running = 0;
    auto emit = [&](int color, int label) {
        if (color != last_color || label != last_label) ++plain_color;
        out.plain.colors.push_back(plain_color);
        last_color = color;
        last_label = label;
    };
    for (int p = 1; p <= strip.size(); ++p) {
        const int color = strip.colors[p - 1];
        if (color != last_color) {
            running = 0;
            if (marks[color] > 0) emit(color, 0);
        }
        if (is_marked[p]) ++running;
        emit(color, running);
    }
    for (int color = 1; color <= r; ++color) {
        if (marks[color] == 0) continue;
        out.color_subset.push_back(color);
        out.marks_per_color.colors.insert(out.marks_per_color.colors.end(), static_cast<std::size_t>(marks[color]),
                                          static_cast<int>(out.color_subset.size()));
    }
    return out;
}

inline ColoredStrip strip_inverse(const StripTriple& triple) {
    const ColoredStrip& plain = triple.plain;
    const ColoredStrip& small = triple.marks_per_color;
    if (!validate_strip(plain) || !validate_strip(small) || plain.marked || small.marked)
        throw BijectionError(BijectionErrorKind::malformed, "component strips must be plain valid strips");
    const int k = small.size();
    const int t = small.num_colors();
    const int r = plain.num_colors() - k;
    if (static_cast<int>(triple.color_subset.size()) != t)
        throw BijectionError(BijectionErrorKind::malformed, "color subset size differs from the k-strip's colors");
    if (r < 1) throw BijectionError(BijectionErrorKind::malformed, "plain strip has too few colors");
    for (std::size_t i = 0; i < triple.color_subset.size(); ++i) {
        const int c = triple.color_subset[i];
        if (c < 1 || c > r || (i > 0 && triple.color_subset[i - 1] >= c))
            throw BijectionError(BijectionErrorKind::malformed, "color subset must be increasing within 1..r");
    }
    const std::vector<int> plain_blocks = plain.block_sizes();
    const std::vector<int> small_blocks = small.block_sizes();

    ColoredStrip out;
    out.marked.emplace();
    std::size_t plain_index = 0;
    std::size_t subset_index = 0;
    for (int color = 1; color <= r; ++color) {
        int top_label = 0;
        const bool carries = subset_index < triple.color_subset.size() && triple.color_subset[subset_index] == color;
        if (carries) top_label = small_blocks[subset_index++];
        for (int label = 0; label <= top_label; ++label) {
            if (plain_index == plain_blocks.size())
                throw BijectionError(BijectionErrorKind::malformed, "plain strip has too few blocks");
            int boxes = plain_blocks[plain_index++];
            if (label == 0 && carries) --boxes;  // drop the added leading box
            for (int b = 0; b < boxes; ++b) {
                out.colors.push_back(color);
                if (label > 0 && b == 0) out.marked->push_back(out.size());
            }
        }
    }
    if (plain_index != plain_blocks.size())
        throw BijectionError(BijectionErrorKind::malformed, "plain strip has unused blocks");
    return out;
}

}  // namespace cycprod
