#pragma once

#include <compare>
#include <cstdint>
#include <exception>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "casesweep/bitcase.hpp"
#include "casesweep/errors.hpp"

namespace casesweep {

/// Largest n for which a SolutionSet can be materialized (2^n membership bits).
inline constexpr unsigned kMaxSetWidth = 24;

/// Largest n for exhaustive subset enumeration: 2^(2^n - 1) - 1 subsets.
inline constexpr unsigned kMaxEnumerationWidth = 4;

/// A nonempty set of cases drawn from {1, ..., 2^n - 1}, stored as a bitset.
class SolutionSet {
  public:
    /// Throws DomainError on an empty member list, a zero member, or a member >= 2^n.
    SolutionSet(unsigned n, std::span<const std::uint64_t> members);
    SolutionSet(unsigned n, std::initializer_list<std::uint64_t> members)
        : SolutionSet(n, std::span<const std::uint64_t>(members.begin(), members.size())) {}

    /// Every case 1 .. 2^n - 1.
    [[nodiscard]] static SolutionSet full(unsigned n);

    /// Members from a bitmask with bit m set for member m (n <= 6).
    [[nodiscard]] static SolutionSet from_mask(unsigned n, std::uint64_t mask);

    [[nodiscard]] unsigned width() const noexcept { return n_; }
    [[nodiscard]] std::uint64_t top() const noexcept { return (std::uint64_t{1} << n_) - 1; }
    [[nodiscard]] bool contains(std::uint64_t m) const noexcept {
        return m < (std::uint64_t{1} << n_) && ((words_[m >> 6] >> (m & 63)) & 1U) != 0;
    }
    [[nodiscard]] std::size_t size() const noexcept { return size_; }

    /// Ascending member list.
    [[nodiscard]] std::vector<std::uint64_t> members() const;

    /// Bitmask of the member set; only meaningful for n <= 6.
    [[nodiscard]] std::uint64_t mask() const;

    friend bool operator==(const SolutionSet&, const SolutionSet&) = default;

  private:
    SolutionSet() = default;
    void insert(std::uint64_t m);

    unsigned n_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// One loop iteration of the sweep: the case checked and whether it had a solution.
struct CaseCheck {
    std::uint64_t value;
    bool solved;

    friend bool operator==(const CaseCheck&, const CaseCheck&) = default;
};

struct RunOutcome {
    std::uint64_t found = 0;   ///< R: checked cases that were in S
    std::uint64_t checked = 0; ///< C: total cases checked
    std::vector<CaseCheck> trace;

    [[nodiscard]] std::vector<std::uint64_t> trace_values() const;

    friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

/// C rewritten against a candidate ratio f: C = f * R + p.
struct ParNumber {
    std::int64_t f;
    std::int64_t p;
};

/// Exact nonnegative rational in lowest terms.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    [[nodiscard]] static Ratio make(std::int64_t num, std::int64_t den);
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Ratio&, const Ratio&) = default;
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        __extension__ using wide = __int128;
        const wide lhs = static_cast<wide>(a.num) * b.den;
        const wide rhs = static_cast<wide>(b.num) * a.den;
        return lhs <=> rhs;
    }
};

/// Runs the prune-driven sweep from 2^n - 1 down to 0, asking `oracle` about
/// each case. Case 0 is never queried. Any exception escaping the oracle
/// aborts the sweep and is rethrown as OracleError naming the case.
template <class Oracle>
[[nodiscard]] std::vector<CaseCheck> run_prune_sweep(unsigned n, PruneLevel ell, Oracle&& oracle) {
    if (n < 2 || n > kMaxWidth) {
        throw DomainError("sweep width must be in [2, " + std::to_string(kMaxWidth) + "]");
    }
    std::vector<CaseCheck> checks;
    std::uint64_t j = (std::uint64_t{1} << n) - 1;
    while (j > 0) {
        bool solved = false;
        try {
            solved = static_cast<bool>(oracle(j));
        } catch (const OracleError&) {
            throw;
        } catch (const std::exception& e) {
            throw OracleError(j, e.what());
        }
        checks.push_back({j, solved});
        j = solved ? j - 1 : prune(j, ell);
    }
    return checks;
}

/// The counting algorithm: (R, C) and the trace of checked cases.
[[nodiscard]] RunOutcome run_efficiency(unsigned n, PruneLevel ell, const SolutionSet& s);

/// True iff the sweep finds every member of s.
[[nodiscard]] bool is_valid(unsigned n, PruneLevel ell, const SolutionSet& s);

[[nodiscard]] ParNumber par_number(const RunOutcome& outcome, std::int64_t f);

struct ValidSet {
    SolutionSet set;
    RunOutcome outcome;

    [[nodiscard]] Ratio ratio() const;
};

/// All valid sets for n <= kMaxEnumerationWidth, ascending by member bitmask.
/// `jobs` threads share the subset space; the result does not depend on it.
[[nodiscard]] std::vector<ValidSet> enumerate_valid_sets(unsigned n, PruneLevel ell, unsigned jobs = 1);

struct RatioWitness {
    Ratio ratio;
    ValidSet witness;
};

/// Maximum C/R over all valid sets; ties go to the smallest bitmask.
[[nodiscard]] RatioWitness max_ratio_bruteforce(unsigned n, PruneLevel ell, unsigned jobs = 1);

} // namespace casesweep
