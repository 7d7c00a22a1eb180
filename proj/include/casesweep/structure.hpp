#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casesweep/prunegraph.hpp"

namespace casesweep {

/// Structural claims about the recursive build-up of G_{k+1} from G_k.
///
/// l = 1:
///   box1_recursion   B_1 of G_{k+1} = G_k + 2^k, red 0 -> I_b swapped for red II_b -> I_b,
///                    plus blue II_t -> I_b                                       (k >= 2)
///   box2_recursion   B_2 of G_{k+1} = (G_k minus its top node) + 2^(k-1)          (k >= 2)
///   zero_edges       the only edge out of 0 in G_k goes to II_b                    (k >= 2)
///   cross_box_edges  B_2 -> B_1 edges of G_k are exactly blue II_t -> I_b and
///                    red II_b -> I_b                                              (k >= 3)
/// l = 2:
///   box1_recursion   B_1 of G_{k+1} = G_k + 2^k plus blue II_t -> I_b              (k >= 3)
///   box2_recursion   B_2 U {IV_b} of G_{k+1} = B_2 U B_3 U {IV_b} of G_k, with
///                    3*2^(k-2) added on [III_b, II_t] and IV_b mapped to IV_b      (k >= 4)
///   box3_recursion   B_3 of G_{k+1} = B_4 of G_k + 3*2^(k-2), red 0 -> III_b swapped
///                    for red IV_b -> III_b, plus blue IV_t -> III_b                (k >= 4)
///   box4_recursion   B_4 of G_{k+1} = B_2 U B_3 U B_4 of G_k + 2^(k-1)              (k >= 4)
///   zero_edges       no edge from 0 into B_2 U B_3; one edge from 0 into B_4,
///                    ending at IV_b                                               (k >= 4)
///   cross_box_edges  the only edge into B_1 from outside it is blue II_t -> I_b    (k >= 4)
///
/// A box "with edits" is compared against the incoming-edge closure of the box
/// (every edge ending inside it), so edges arriving from other boxes are checked
/// too. Offsets apply to nonzero nodes only; node 0 is fixed.
enum class StructureClaim { box1_recursion, box2_recursion, box3_recursion, box4_recursion, zero_edges, cross_box_edges };

inline constexpr StructureClaim kAllClaims[] = {StructureClaim::box1_recursion, StructureClaim::box2_recursion,
                                                StructureClaim::box3_recursion, StructureClaim::box4_recursion,
                                                StructureClaim::zero_edges,     StructureClaim::cross_box_edges};

[[nodiscard]] std::string_view claim_name(StructureClaim claim) noexcept;

/// Smallest k the claim is stated for at this prune level; nullopt if the
/// claim does not exist for the level.
[[nodiscard]] std::optional<unsigned> claim_min_k(StructureClaim claim, PruneLevel ell) noexcept;

/// Largest k any claim can be checked at (G_{k+1} must stay materializable).
inline constexpr unsigned kMaxStructureK = kMaxGraphWidth - 1;

struct StructureCheck {
    StructureClaim claim;
    unsigned k;
    unsigned ell;
    bool passed = false;
    std::vector<std::uint64_t> missing_nodes; ///< expected but absent
    std::vector<std::uint64_t> extra_nodes;   ///< present but not expected
    std::vector<Edge> missing_edges;
    std::vector<Edge> extra_edges;

    /// Human-readable symmetric difference; empty when passed.
    [[nodiscard]] std::string diff() const;
};

/// Builds both sides of the claim and compares node sets and edge multisets.
/// Throws DomainError outside the claim's k range or for an unsupported level.
[[nodiscard]] StructureCheck verify_structure(unsigned k, PruneLevel ell, StructureClaim claim);

/// Every claim of the level over its stated range up to k_max.
[[nodiscard]] std::vector<StructureCheck> verify_all_structure(unsigned k_max, PruneLevel ell);

} // namespace casesweep
