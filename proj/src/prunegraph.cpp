#include "casesweep/prunegraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace casesweep {

namespace {

constexpr std::int64_t kRedWeight = 1;

std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

void check_graph_width(unsigned k, const char* what) {
    if (k < 2) {
        throw DomainError(std::string(what) + " needs at least 2 digits, got " + std::to_string(k));
    }
    if (k > kMaxGraphWidth) {
        throw BudgetError(std::string(what) + " is capped at " + std::to_string(kMaxGraphWidth) + " digits");
    }
}

// Edges of G_k, appended to `edges`.
void append_gk_edges(unsigned k, PruneLevel ell, std::int64_t blue_weight, std::vector<Edge>& edges) {
    const std::uint64_t low = pow2(k - 1) - 1;
    const std::uint64_t top = pow2(k) - 1;
    for (std::uint64_t m = low; m < top; ++m) {
        edges.push_back({m, m + 1, EdgeColor::blue, blue_weight});
        edges.push_back({prune(m, ell), m, EdgeColor::red, kRedWeight});
    }
}

std::string edge_text(const Edge& e) {
    return std::to_string(e.src) + "->" + std::to_string(e.dst) + " (" + std::string(color_name(e.color)) + ")";
}

} // namespace

std::string_view color_name(EdgeColor c) noexcept { return c == EdgeColor::blue ? "blue" : "red"; }

WeightedDag::WeightedDag(PruneLevel ell, std::int64_t blue_weight, std::vector<std::uint64_t> nodes,
                         std::vector<Edge> edges)
    : ell_(ell), blue_weight_(blue_weight), nodes_(std::move(nodes)), edges_(std::move(edges)) {
    std::sort(nodes_.begin(), nodes_.end());
    nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
    std::sort(edges_.begin(), edges_.end());

    for (const auto& e : edges_) {
        if (e.src >= e.dst) {
            throw std::invalid_argument("edge " + edge_text(e) + " does not go from a smaller to a larger node");
        }
        if (!has_node(e.src) || !has_node(e.dst)) {
            throw std::invalid_argument("edge " + edge_text(e) + " touches a node outside the graph");
        }
    }

    in_offsets_.assign(nodes_.size() + 1, 0);
    for (const auto& e : edges_) ++in_offsets_[index_of(e.dst) + 1];
    std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());
    in_edge_ids_.resize(edges_.size());
    auto cursor = in_offsets_;
    // edges_ is sorted by src first, so each bucket comes out ordered by (src, color)
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        in_edge_ids_[cursor[index_of(edges_[i].dst)]++] = i;
    }
}

bool WeightedDag::has_node(std::uint64_t v) const noexcept {
    return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

std::size_t WeightedDag::index_of(std::uint64_t v) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
    if (it == nodes_.end() || *it != v) {
        throw DomainError("node " + std::to_string(v) + " is not in the graph");
    }
    return static_cast<std::size_t>(it - nodes_.begin());
}

std::vector<Edge> WeightedDag::in_edges(std::uint64_t v) const {
    const auto i = index_of(v);
    std::vector<Edge> out;
    for (auto p = in_offsets_[i]; p < in_offsets_[i + 1]; ++p) out.push_back(edges_[in_edge_ids_[p]]);
    return out;
}

std::vector<Edge> WeightedDag::out_edges(std::uint64_t v) const {
    auto lo = std::lower_bound(edges_.begin(), edges_.end(), v, [](const Edge& e, std::uint64_t s) { return e.src < s; });
    auto hi = std::upper_bound(lo, edges_.end(), v, [](std::uint64_t s, const Edge& e) { return s < e.src; });
    return {lo, hi};
}

void WeightedDag::check_edge_rules() const {
    for (const auto& e : edges_) {
        if (e.color == EdgeColor::blue) {
            if (e.dst != e.src + 1 || e.weight != blue_weight_) {
                throw std::logic_error("blue edge " + edge_text(e) + " breaks the decrement rule");
            }
        } else if (e.src != prune(e.dst, ell_) || e.weight != kRedWeight) {
            throw std::logic_error("red edge " + edge_text(e) + " does not start at P(" + std::to_string(e.dst) + ")");
        }
    }
    if (!nodes_.empty() && nodes_.front() == 0 && in_offsets_[1] != 0) {
        throw std::logic_error("node 0 has an incoming edge");
    }
}

WeightedDag build_gk(unsigned k, PruneLevel ell, std::int64_t blue_weight) {
    check_graph_width(k, "G_k");
    std::vector<std::uint64_t> nodes{0};
    for (std::uint64_t m = pow2(k - 1) - 1; m <= pow2(k) - 1; ++m) nodes.push_back(m);
    std::vector<Edge> edges;
    edges.reserve(2 * (pow2(k - 1)));
    append_gk_edges(k, ell, blue_weight, edges);
    WeightedDag g(ell, blue_weight, std::move(nodes), std::move(edges));
    g.check_edge_rules();
    return g;
}

WeightedDag build_joined(unsigned n, PruneLevel ell, std::int64_t blue_weight) {
    check_graph_width(n, "joined graph");
    std::vector<std::uint64_t> nodes(pow2(n));
    std::iota(nodes.begin(), nodes.end(), std::uint64_t{0});
    std::vector<Edge> edges;
    edges.reserve(2 * pow2(n));
    for (unsigned k = 2; k <= n; ++k) append_gk_edges(k, ell, blue_weight, edges);
    WeightedDag g(ell, blue_weight, std::move(nodes), std::move(edges));
    g.check_edge_rules();
    return g;
}

WeightedDag build_run_graph(unsigned n, PruneLevel ell, std::int64_t blue_weight) {
    const auto joined = build_joined(n, ell, blue_weight);
    std::vector<Edge> edges(joined.edges().begin(), joined.edges().end());
    edges.push_back({0, 1, EdgeColor::blue, blue_weight});
    return WeightedDag(ell, blue_weight, {joined.nodes().begin(), joined.nodes().end()}, std::move(edges));
}

const BoxRange& BoxBounds::box(unsigned which) const {
    if (which < 1 || which > boxes.size()) {
        throw DomainError("box " + std::to_string(which) + " does not exist for l = " + std::to_string(ell));
    }
    return boxes[which - 1];
}

BoxBounds box_bounds(unsigned k, PruneLevel ell) {
    const auto p = pow2;
    if (k > kMaxWidth) {
        throw DomainError("box bounds need k <= " + std::to_string(kMaxWidth));
    }
    if (ell.value() == 1) {
        if (k < 3) throw DomainError("boxes of the l = 1 graph need k >= 3");
        return {k, 1,
                {{p(k) - p(k - 2) - 1, p(k) - 1},
                 {p(k - 1) - 1, p(k) - p(k - 2) - 2}}};
    }
    if (ell.value() == 2) {
        if (k < 4) throw DomainError("boxes of the l = 2 graph need k >= 4");
        return {k, 2,
                {{p(k) - p(k - 2) - 1, p(k) - 1},
                 {p(k) - p(k - 2) - p(k - 4) - 1, p(k) - p(k - 2) - 2},
                 {p(k) - p(k - 2) - p(k - 3) - 1, p(k) - p(k - 2) - p(k - 4) - 2},
                 {p(k - 1) - 1, p(k) - p(k - 2) - p(k - 3) - 2}}};
    }
    throw DomainError("boxes are only defined for l = 1 and l = 2");
}

WeightedDag induced_subgraph(const WeightedDag& g, const std::function<bool(std::uint64_t)>& keep) {
    std::vector<std::uint64_t> nodes;
    for (auto v : g.nodes()) {
        if (keep(v)) nodes.push_back(v);
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (keep(e.src) && keep(e.dst)) edges.push_back(e);
    }
    return WeightedDag(g.ell(), g.blue_weight(), std::move(nodes), std::move(edges));
}

WeightedDag induced_box(const WeightedDag& g, const BoxBounds& b, unsigned which) {
    const auto range = b.box(which);
    return induced_subgraph(g, [range](std::uint64_t v) { return v == 0 || range.contains(v); });
}

std::optional<PathResult> max_weight_path(const WeightedDag& g, std::uint64_t src, std::uint64_t dst) {
    const auto s = g.index_of(src);
    const auto t = g.index_of(dst);
    if (t < s) {
        return std::nullopt;
    }
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    const auto nodes = g.nodes();
    std::vector<std::int64_t> best(t + 1, 0);
    std::vector<bool> reached(t + 1, false);
    std::vector<std::size_t> via(t + 1, kNone); // edge index of the chosen incoming edge
    reached[s] = true;

    const auto edges = g.edges();
    for (std::size_t i = s + 1; i <= t; ++i) {
        for (const auto& e : g.in_edges(nodes[i])) {
            const auto u = g.index_of(e.src);
            if (u < s || !reached[u]) continue;
            const auto cand = best[u] + e.weight;
            if (!reached[i] || cand > best[i]) {
                reached[i] = true;
                best[i] = cand;
                auto it = std::lower_bound(edges.begin(), edges.end(), e);
                via[i] = static_cast<std::size_t>(it - edges.begin());
            }
        }
    }
    if (!reached[t]) {
        return std::nullopt;
    }

    PathResult result;
    result.weight = best[t];
    for (std::size_t i = t; i != s;) {
        const auto& e = edges[via[i]];
        result.path.nodes.push_back(e.dst);
        result.path.colors.push_back(e.color);
        (e.color == EdgeColor::blue ? result.blue_count : result.red_count) += 1;
        i = g.index_of(e.src);
    }
    result.path.nodes.push_back(src);
    std::reverse(result.path.nodes.begin(), result.path.nodes.end());
    std::reverse(result.path.colors.begin(), result.path.colors.end());
    return result;
}

std::int64_t joined_max_weight(unsigned n, PruneLevel ell, std::int64_t blue_weight) {
    if (n < 2) {
        throw DomainError("joined graph needs n >= 2");
    }
    if (n > kMaxImplicitWidth) {
        throw BudgetError("implicit sweep is capped at n = " + std::to_string(kMaxImplicitWidth));
    }
    const std::uint64_t top = pow2(n) - 1;
    std::vector<std::int64_t> best(top + 1);
    best[0] = 0;
    // every node 1 .. top is reachable from 0 (red 0 -> 1, then the blue chain)
    for (std::uint64_t m = 1; m <= top; ++m) {
        auto value = std::numeric_limits<std::int64_t>::min();
        if (m >= 2) value = best[m - 1] + blue_weight;
        if (m < top) value = std::max(value, best[prune(m, ell)] + kRedWeight);
        best[m] = value;
    }
    return best[top];
}

std::uint64_t count_paths(const WeightedDag& g, std::uint64_t src, std::uint64_t dst) {
    const auto s = g.index_of(src);
    const auto t = g.index_of(dst);
    if (t < s) return 0;
    const auto nodes = g.nodes();
    std::vector<std::uint64_t> ways(t + 1, 0);
    ways[s] = 1;
    for (std::size_t i = s + 1; i <= t; ++i) {
        for (const auto& e : g.in_edges(nodes[i])) {
            const auto u = g.index_of(e.src);
            if (u < s) continue;
            if (__builtin_add_overflow(ways[i], ways[u], &ways[i])) {
                throw BudgetError("path count exceeds 64 bits");
            }
        }
    }
    return ways[t];
}

std::int64_t path_weight(const GraphPath& path, std::int64_t blue_weight) noexcept {
    std::int64_t w = 0;
    for (auto c : path.colors) w += c == EdgeColor::blue ? blue_weight : kRedWeight;
    return w;
}

namespace {

// Throws PathError unless src -> dst with `color` is an edge of the run graph
// whose top node is `top`.
void check_run_edge(std::uint64_t src, std::uint64_t dst, EdgeColor color, std::uint64_t top, PruneLevel ell) {
    if (dst == 0 || dst > top) {
        throw PathError("step into " + std::to_string(dst) + " leaves the case range");
    }
    if (color == EdgeColor::blue) {
        if (src + 1 != dst) {
            throw PathError("blue step " + std::to_string(src) + "->" + std::to_string(dst) + " is not a decrement");
        }
    } else {
        if (dst == top) {
            throw PathError("the top case " + std::to_string(top) + " has no red edge (it must be in S)");
        }
        if (prune(dst, ell) != src) {
            throw PathError("red step " + std::to_string(src) + "->" + std::to_string(dst) + " does not start at P(" +
                            std::to_string(dst) + ")");
        }
    }
}

} // namespace

GraphPath run_to_path(const RunOutcome& outcome, PruneLevel ell) {
    if (outcome.trace.empty()) {
        throw PathError("empty trace");
    }
    const std::uint64_t top = outcome.trace.front().value;
    if (top < 3 || (top & (top + 1)) != 0) {
        throw PathError("trace does not start at 2^n - 1 with n >= 2");
    }
    GraphPath path;
    path.nodes.push_back(0);
    for (auto it = outcome.trace.rbegin(); it != outcome.trace.rend(); ++it) {
        const auto color = it->solved ? EdgeColor::blue : EdgeColor::red;
        check_run_edge(path.nodes.back(), it->value, color, top, ell);
        path.nodes.push_back(it->value);
        path.colors.push_back(color);
    }
    return path;
}

SolutionSet path_to_solution_set(const GraphPath& path, unsigned n, PruneLevel ell) {
    if (n < 2 || n > kMaxSetWidth) {
        throw DomainError("path width must be in [2, " + std::to_string(kMaxSetWidth) + "]");
    }
    const std::uint64_t top = pow2(n) - 1;
    if (path.nodes.size() < 2 || path.colors.size() + 1 != path.nodes.size()) {
        throw PathError("path needs at least one step and one color per step");
    }
    if (path.nodes.front() != 0 || path.nodes.back() != top) {
        throw PathError("path must run from 0 to " + std::to_string(top));
    }
    std::vector<std::uint64_t> members;
    for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
        check_run_edge(path.nodes[i], path.nodes[i + 1], path.colors[i], top, ell);
        if (path.colors[i] == EdgeColor::blue) members.push_back(path.nodes[i + 1]);
    }
    return SolutionSet(n, members);
}

std::optional<std::int64_t> minimal_f(unsigned n, PruneLevel ell, std::int64_t f_max) {
    if (f_max < 2) {
        throw DomainError("minimal_f needs f_max >= 2");
    }
    // the max weight only falls as f grows, so the first hit is the answer
    for (std::int64_t f = 1; f <= f_max; ++f) {
        if (joined_max_weight(n, ell, -(f - 1)) <= 0) return f;
    }
    return std::nullopt;
}

} // namespace casesweep
