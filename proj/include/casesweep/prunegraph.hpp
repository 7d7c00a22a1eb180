#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "casesweep/bitcase.hpp"
#include "casesweep/efficiency.hpp"
#include "casesweep/errors.hpp"

namespace casesweep {

/// Largest k (or n) for an explicitly materialized graph.
inline constexpr unsigned kMaxGraphWidth = 24;

/// Largest n for the implicit longest-path sweep over the joined graph.
inline constexpr unsigned kMaxImplicitWidth = 26;

/// Blue: decrement step (case in S). Red: prune skip (case not in S).
enum class EdgeColor : std::uint8_t { blue, red };

[[nodiscard]] std::string_view color_name(EdgeColor c) noexcept;

struct Edge {
    std::uint64_t src;
    std::uint64_t dst;
    EdgeColor color;
    std::int64_t weight;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable two-color DAG whose numeric node order is a topological order.
///
/// Nodes are kept ascending and edges sorted by (src, dst, color, weight).
/// Parallel edges of different colors are legal: when P_l(m) = m - 1 both a
/// blue and a red edge run from m - 1 to m, and they stand for different runs.
class WeightedDag {
  public:
    /// Throws std::invalid_argument if an edge points backwards, touches a
    /// node outside `nodes`, or enters node 0.
    WeightedDag(PruneLevel ell, std::int64_t blue_weight, std::vector<std::uint64_t> nodes, std::vector<Edge> edges);

    [[nodiscard]] PruneLevel ell() const noexcept { return ell_; }
    [[nodiscard]] std::int64_t blue_weight() const noexcept { return blue_weight_; }
    [[nodiscard]] std::span<const std::uint64_t> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

    [[nodiscard]] bool has_node(std::uint64_t v) const noexcept;
    /// Position of v in nodes(); v must be a node.
    [[nodiscard]] std::size_t index_of(std::uint64_t v) const;
    /// Incoming edges of v ordered by (src, color).
    [[nodiscard]] std::vector<Edge> in_edges(std::uint64_t v) const;
    [[nodiscard]] std::vector<Edge> out_edges(std::uint64_t v) const;

    /// Checks the construction rules: blue edges join consecutive cases with the
    /// graph's blue weight, red edges run from P_l(dst) with weight +1.
    /// Throws std::logic_error on the first violation.
    void check_edge_rules() const;

    friend bool operator==(const WeightedDag& a, const WeightedDag& b) {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

  private:
    PruneLevel ell_;
    std::int64_t blue_weight_;
    std::vector<std::uint64_t> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> in_offsets_; // CSR over node positions
    std::vector<std::size_t> in_edge_ids_;
};

/// G_k: nodes {0} U [2^(k-1) - 1, 2^k - 1]; blue m -> m+1 and red P_l(m) -> m
/// for 2^(k-1) - 1 <= m < 2^k - 1. Requires 2 <= k <= kMaxGraphWidth.
[[nodiscard]] WeightedDag build_gk(unsigned k, PruneLevel ell, std::int64_t blue_weight);

/// G_2 U ... U G_n over nodes 0 .. 2^n - 1.
[[nodiscard]] WeightedDag build_joined(unsigned n, PruneLevel ell, std::int64_t blue_weight);

/// The joined graph plus the blue edge 0 -> 1 (case 1 in S). Its 0 -> 2^n - 1
/// paths are in one-to-one correspondence with the valid solution sets.
[[nodiscard]] WeightedDag build_run_graph(unsigned n, PruneLevel ell, std::int64_t blue_weight);

/// Inclusive node interval of one box.
struct BoxRange {
    std::uint64_t bottom;
    std::uint64_t top;

    [[nodiscard]] bool contains(std::uint64_t v) const noexcept { return bottom <= v && v <= top; }
    friend bool operator==(const BoxRange&, const BoxRange&) = default;
};

/// Box boundaries of G_k: two boxes for l = 1 (k >= 3), four for l = 2 (k >= 4).
/// boxes[0] is B_1 (the top box), boxes[i] sits directly below boxes[i-1].
struct BoxBounds {
    unsigned k;
    unsigned ell;
    std::vector<BoxRange> boxes;

    /// 1-based box access; throws DomainError for an unknown box.
    [[nodiscard]] const BoxRange& box(unsigned which) const;
};

[[nodiscard]] BoxBounds box_bounds(unsigned k, PruneLevel ell);

/// Subgraph induced by the nodes accepted by `keep`.
[[nodiscard]] WeightedDag induced_subgraph(const WeightedDag& g, const std::function<bool(std::uint64_t)>& keep);

/// Induced subgraph on {0} U box `which` (1-based).
[[nodiscard]] WeightedDag induced_box(const WeightedDag& g, const BoxBounds& b, unsigned which);

/// A walk through the graph with the color of every step, so parallel
/// blue/red edges stay distinguishable. colors.size() == nodes.size() - 1.
struct GraphPath {
    std::vector<std::uint64_t> nodes;
    std::vector<EdgeColor> colors;

    friend bool operator==(const GraphPath&, const GraphPath&) = default;
};

struct PathResult {
    std::int64_t weight = 0;
    GraphPath path;
    std::uint64_t blue_count = 0;
    std::uint64_t red_count = 0;
};

/// Maximum-weight src -> dst path by DP in ascending node order; ties go to the
/// smallest predecessor (then blue before red). nullopt when dst is unreachable.
/// Throws DomainError if src or dst is not a node.
[[nodiscard]] std::optional<PathResult> max_weight_path(const WeightedDag& g, std::uint64_t src, std::uint64_t dst);

/// Max path weight 0 -> 2^n - 1 of the joined graph without materializing it:
/// DP over predecessor queries m - 1 (blue) and P_l(m) (red).
[[nodiscard]] std::int64_t joined_max_weight(unsigned n, PruneLevel ell, std::int64_t blue_weight);

/// Number of distinct src -> dst paths (parallel edges count separately).
/// Throws BudgetError if the count overflows 64 bits.
[[nodiscard]] std::uint64_t count_paths(const WeightedDag& g, std::uint64_t src, std::uint64_t dst);

/// Sum of edge weights along a path, with red = +1 and blue = blue_weight.
[[nodiscard]] std::int64_t path_weight(const GraphPath& path, std::int64_t blue_weight) noexcept;

/// Reverses a run's trace into a 0 -> 2^n - 1 path of the run graph. Throws
/// PathError if some step is not an edge (the run came from an invalid set).
[[nodiscard]] GraphPath run_to_path(const RunOutcome& outcome, PruneLevel ell);

/// The set {dst of every blue step}. Throws PathError unless `path` is a
/// 0 -> 2^n - 1 path of the run graph.
[[nodiscard]] SolutionSet path_to_solution_set(const GraphPath& path, unsigned n, PruneLevel ell);

/// Smallest f in [1, f_max] whose joined graph (blue = -(f - 1)) has max weight <= 0.
/// Throws DomainError for f_max < 2.
[[nodiscard]] std::optional<std::int64_t> minimal_f(unsigned n, PruneLevel ell, std::int64_t f_max);

} // namespace casesweep
