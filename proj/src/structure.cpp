#include "casesweep/structure.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <sstream>

namespace casesweep {

namespace {

constexpr std::int64_t kBlue = -1;

std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

Edge blue(std::uint64_t src, std::uint64_t dst) { return {src, dst, EdgeColor::blue, kBlue}; }
Edge red(std::uint64_t src, std::uint64_t dst) { return {src, dst, EdgeColor::red, 1}; }

// Plain node set + edge multiset; the two sides of a claim.
struct Part {
    std::vector<std::uint64_t> nodes;
    std::vector<Edge> edges;

    void normalize() {
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        std::sort(edges.begin(), edges.end());
    }

    void remove_edge(const Edge& e) {
        auto it = std::find(edges.begin(), edges.end(), e);
        if (it != edges.end()) edges.erase(it);
    }

    void add_edge(const Edge& e) {
        edges.push_back(e);
        nodes.push_back(e.src);
        nodes.push_back(e.dst);
    }
};

Part as_part(const WeightedDag& g) {
    return {{g.nodes().begin(), g.nodes().end()}, {g.edges().begin(), g.edges().end()}};
}

Part relabel(const Part& p, const std::function<std::uint64_t(std::uint64_t)>& map) {
    Part out;
    for (auto v : p.nodes) out.nodes.push_back(map(v));
    for (auto e : p.edges) {
        e.src = map(e.src);
        e.dst = map(e.dst);
        out.edges.push_back(e);
    }
    return out;
}

// Adds `offset` to every nonzero node.
Part shift(const Part& p, std::uint64_t offset) {
    return relabel(p, [offset](std::uint64_t v) { return v == 0 ? 0 : v + offset; });
}

Part induced(const WeightedDag& g, const std::function<bool(std::uint64_t)>& keep) {
    return as_part(induced_subgraph(g, keep));
}

// {0} U range U every source of an edge entering the range; edges = those entering edges.
Part in_edge_closure(const WeightedDag& g, const BoxRange& range) {
    Part out;
    out.nodes.push_back(0);
    for (auto v : g.nodes()) {
        if (range.contains(v)) out.nodes.push_back(v);
    }
    for (const auto& e : g.edges()) {
        if (range.contains(e.dst)) out.add_edge(e);
    }
    return out;
}

// Edges accepted by `pick`, with their endpoints as the node set.
Part edge_selection(const WeightedDag& g, const std::function<bool(const Edge&)>& pick) {
    Part out;
    for (const auto& e : g.edges()) {
        if (pick(e)) out.add_edge(e);
    }
    return out;
}

Part from_edges(std::initializer_list<Edge> edges) {
    Part out;
    for (const auto& e : edges) out.add_edge(e);
    return out;
}

StructureCheck compare(StructureClaim claim, unsigned k, PruneLevel ell, Part actual, Part expected) {
    actual.normalize();
    expected.normalize();
    StructureCheck check{};
    check.claim = claim;
    check.k = k;
    check.ell = ell.value();
    std::set_difference(expected.nodes.begin(), expected.nodes.end(), actual.nodes.begin(), actual.nodes.end(),
                        std::back_inserter(check.missing_nodes));
    std::set_difference(actual.nodes.begin(), actual.nodes.end(), expected.nodes.begin(), expected.nodes.end(),
                        std::back_inserter(check.extra_nodes));
    std::set_difference(expected.edges.begin(), expected.edges.end(), actual.edges.begin(), actual.edges.end(),
                        std::back_inserter(check.missing_edges));
    std::set_difference(actual.edges.begin(), actual.edges.end(), expected.edges.begin(), expected.edges.end(),
                        std::back_inserter(check.extra_edges));
    check.passed = check.missing_nodes.empty() && check.extra_nodes.empty() && check.missing_edges.empty() &&
                   check.extra_edges.empty();
    return check;
}

StructureCheck check_level_one(unsigned k, StructureClaim claim) {
    const PruneLevel ell(1);
    switch (claim) {
    case StructureClaim::box1_recursion: {
        const auto next = build_gk(k + 1, ell, kBlue);
        const auto b = box_bounds(k + 1, ell);
        const auto i_b = b.box(1).bottom;
        auto expected = shift(as_part(build_gk(k, ell, kBlue)), pow2(k));
        expected.remove_edge(red(0, i_b));
        expected.add_edge(red(b.box(2).bottom, i_b));
        expected.add_edge(blue(b.box(2).top, i_b));
        return compare(claim, k, ell, in_edge_closure(next, b.box(1)), expected);
    }
    case StructureClaim::box2_recursion: {
        const auto next = build_gk(k + 1, ell, kBlue);
        const auto b = box_bounds(k + 1, ell);
        const auto top = pow2(k) - 1;
        auto expected = shift(induced(build_gk(k, ell, kBlue), [top](std::uint64_t v) { return v != top; }),
                              pow2(k - 1));
        return compare(claim, k, ell, as_part(induced_box(next, b, 2)), expected);
    }
    case StructureClaim::zero_edges: {
        const auto g = build_gk(k, ell, kBlue);
        return compare(claim, k, ell, edge_selection(g, [](const Edge& e) { return e.src == 0; }),
                       from_edges({red(0, pow2(k - 1) - 1)}));
    }
    case StructureClaim::cross_box_edges: {
        const auto g = build_gk(k, ell, kBlue);
        const auto b = box_bounds(k, ell);
        const auto one = b.box(1);
        const auto two = b.box(2);
        return compare(claim, k, ell,
                       edge_selection(g, [&](const Edge& e) { return two.contains(e.src) && one.contains(e.dst); }),
                       from_edges({blue(two.top, one.bottom), red(two.bottom, one.bottom)}));
    }
    default:
        break;
    }
    throw DomainError("claim " + std::string(claim_name(claim)) + " is not stated for l = 1");
}

StructureCheck check_level_two(unsigned k, StructureClaim claim) {
    const PruneLevel ell(2);
    switch (claim) {
    case StructureClaim::box1_recursion: {
        const auto next = build_gk(k + 1, ell, kBlue);
        const auto b = box_bounds(k + 1, ell);
        auto expected = shift(as_part(build_gk(k, ell, kBlue)), pow2(k));
        expected.add_edge(blue(b.box(2).top, b.box(1).bottom));
        return compare(claim, k, ell, in_edge_closure(next, b.box(1)), expected);
    }
    case StructureClaim::box2_recursion: {
        const auto cur = build_gk(k, ell, kBlue);
        const auto next = build_gk(k + 1, ell, kBlue);
        const auto bk = box_bounds(k, ell);
        const auto bn = box_bounds(k + 1, ell);
        const BoxRange upper{bk.box(3).bottom, bk.box(2).top};
        const auto iv_k = bk.box(4).bottom;
        const auto iv_n = bn.box(4).bottom;
        auto part = induced(cur, [&](std::uint64_t v) { return v == 0 || v == iv_k || upper.contains(v); });
        auto expected = relabel(part, [&](std::uint64_t v) -> std::uint64_t {
            if (v == 0) return 0;
            if (v == iv_k) return iv_n;
            return v + 3 * pow2(k - 2);
        });
        const auto two = bn.box(2);
        auto actual = induced(next, [&](std::uint64_t v) { return v == 0 || v == iv_n || two.contains(v); });
        return compare(claim, k, ell, actual, expected);
    }
    case StructureClaim::box3_recursion: {
        const auto cur = build_gk(k, ell, kBlue);
        const auto next = build_gk(k + 1, ell, kBlue);
        const auto bk = box_bounds(k, ell);
        const auto bn = box_bounds(k + 1, ell);
        const auto iii_b = bn.box(3).bottom;
        auto expected = shift(as_part(induced_box(cur, bk, 4)), 3 * pow2(k - 2));
        expected.remove_edge(red(0, iii_b));
        expected.add_edge(red(bn.box(4).bottom, iii_b));
        expected.add_edge(blue(bn.box(4).top, iii_b));
        return compare(claim, k, ell, in_edge_closure(next, bn.box(3)), expected);
    }
    case StructureClaim::box4_recursion: {
        const auto cur = build_gk(k, ell, kBlue);
        const auto next = build_gk(k + 1, ell, kBlue);
        const auto bk = box_bounds(k, ell);
        const auto bn = box_bounds(k + 1, ell);
        const BoxRange lower{bk.box(4).bottom, bk.box(2).top};
        auto expected = shift(induced(cur, [&](std::uint64_t v) { return v == 0 || lower.contains(v); }), pow2(k - 1));
        return compare(claim, k, ell, as_part(induced_box(next, bn, 4)), expected);
    }
    case StructureClaim::zero_edges: {
        const auto g = build_gk(k, ell, kBlue);
        const auto b = box_bounds(k, ell);
        const BoxRange lower{b.box(4).bottom, b.box(2).top};
        return compare(claim, k, ell,
                       edge_selection(g, [&](const Edge& e) { return e.src == 0 && lower.contains(e.dst); }),
                       from_edges({red(0, b.box(4).bottom)}));
    }
    case StructureClaim::cross_box_edges: {
        const auto g = build_gk(k, ell, kBlue);
        const auto b = box_bounds(k, ell);
        const auto one = b.box(1);
        return compare(claim, k, ell,
                       edge_selection(g,
                                      [&](const Edge& e) {
                                          return one.contains(e.dst) && e.src != 0 && !one.contains(e.src);
                                      }),
                       from_edges({blue(b.box(2).top, one.bottom)}));
    }
    }
    throw DomainError("unknown claim");
}

void append_edges(std::ostringstream& os, const char* label, const std::vector<Edge>& edges) {
    for (const auto& e : edges) {
        os << label << ' ' << e.src << "->" << e.dst << ' ' << color_name(e.color) << " w=" << e.weight << '\n';
    }
}

} // namespace

std::string_view claim_name(StructureClaim claim) noexcept {
    switch (claim) {
    case StructureClaim::box1_recursion: return "box1-recursion";
    case StructureClaim::box2_recursion: return "box2-recursion";
    case StructureClaim::box3_recursion: return "box3-recursion";
    case StructureClaim::box4_recursion: return "box4-recursion";
    case StructureClaim::zero_edges: return "zero-edges";
    case StructureClaim::cross_box_edges: return "cross-box-edges";
    }
    return "?";
}

std::optional<unsigned> claim_min_k(StructureClaim claim, PruneLevel ell) noexcept {
    if (ell.value() == 1) {
        switch (claim) {
        case StructureClaim::box1_recursion:
        case StructureClaim::box2_recursion:
        case StructureClaim::zero_edges: return 2;
        case StructureClaim::cross_box_edges: return 3;
        default: return std::nullopt;
        }
    }
    if (ell.value() == 2) {
        return claim == StructureClaim::box1_recursion ? 3U : 4U;
    }
    return std::nullopt;
}

std::string StructureCheck::diff() const {
    std::ostringstream os;
    for (auto v : missing_nodes) os << "- node " << v << '\n';
    for (auto v : extra_nodes) os << "+ node " << v << '\n';
    append_edges(os, "- edge", missing_edges);
    append_edges(os, "+ edge", extra_edges);
    return os.str();
}

StructureCheck verify_structure(unsigned k, PruneLevel ell, StructureClaim claim) {
    const auto k_min = claim_min_k(claim, ell);
    if (!k_min) {
        throw DomainError("claim " + std::string(claim_name(claim)) + " is not stated for l = " +
                          std::to_string(ell.value()));
    }
    if (k < *k_min || k > kMaxStructureK) {
        throw DomainError("claim " + std::string(claim_name(claim)) + " needs " + std::to_string(*k_min) +
                          " <= k <= " + std::to_string(kMaxStructureK) + ", got " + std::to_string(k));
    }
    return ell.value() == 1 ? check_level_one(k, claim) : check_level_two(k, claim);
}

std::vector<StructureCheck> verify_all_structure(unsigned k_max, PruneLevel ell) {
    std::vector<StructureCheck> out;
    for (auto claim : kAllClaims) {
        const auto k_min = claim_min_k(claim, ell);
        if (!k_min) continue;
        for (unsigned k = *k_min; k <= k_max; ++k) out.push_back(verify_structure(k, ell, claim));
    }
    return out;
}

} // namespace casesweep
