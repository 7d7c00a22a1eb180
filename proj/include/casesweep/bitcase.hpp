#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "casesweep/errors.hpp"

namespace casesweep {

/// Largest supported case width; keeps 2^width in a 64-bit word.
inline constexpr unsigned kMaxWidth = 62;

/// Largest k accepted by verify_prefix_lemmas.
inline constexpr unsigned kMaxLemmaDigits = 24;

/// Pruning aggressiveness l >= 1.
class PruneLevel {
  public:
    explicit PruneLevel(unsigned level) : level_(level) {
        if (level == 0) {
            throw DomainError("prune level must be >= 1");
        }
    }

    [[nodiscard]] unsigned value() const noexcept { return level_; }

    friend bool operator==(PruneLevel, PruneLevel) = default;

  private:
    unsigned level_;
};

/// A sign case: an integer read as a width-digit binary string.
class CaseIndex {
  public:
    CaseIndex(std::uint64_t value, unsigned width);

    [[nodiscard]] std::uint64_t value() const noexcept { return value_; }
    [[nodiscard]] unsigned width() const noexcept { return width_; }

    /// Zero-padded width-digit binary string, most significant digit first.
    [[nodiscard]] std::string to_binary() const;

    friend bool operator==(const CaseIndex&, const CaseIndex&) = default;

  private:
    std::uint64_t value_;
    unsigned width_;
};

/// The pruning function: clear every bit strictly right of the l-th zero
/// (counting from bit 0, with unbounded zero padding on the left), then
/// subtract one, clamping at zero. Throws DomainError for m = 0.
[[nodiscard]] std::uint64_t prune(std::uint64_t m, PruneLevel ell);

[[nodiscard]] inline CaseIndex prune(const CaseIndex& m, PruneLevel ell) {
    return CaseIndex(prune(m.value(), ell), m.width());
}

/// Bit position of the l-th zero of m counting from the right, or nullopt
/// when that zero lies beyond bit 63 (inside the implicit padding).
[[nodiscard]] std::optional<unsigned> nth_zero_position(std::uint64_t m, unsigned ell) noexcept;

/// Number of binary digits of m; 0 has length 0.
[[nodiscard]] unsigned bit_length(std::uint64_t m) noexcept;

/// k-digit zero-padded binary representation. Throws DomainError if m >= 2^k.
[[nodiscard]] std::string to_binary(std::uint64_t m, unsigned k);

/// True iff the k-digit representation of m begins with `prefix` (a string
/// of '0'/'1'). Throws DomainError if m >= 2^k or the prefix is longer than k.
[[nodiscard]] bool has_prefix(std::uint64_t m, unsigned k, std::string_view prefix);

/// One of the four binary-prefix lemmas over leading digits.
enum class PrefixLemma { leading_one, leading_10, leading_101, leading_100 };

/// Inclusive interval [low, high] of m that a prefix lemma covers at k digits,
/// together with the prefix it asserts. Empty (nullopt) below the lemma's k minimum.
struct LemmaInterval {
    std::uint64_t low;
    std::uint64_t high;
    std::string_view prefix;
};

[[nodiscard]] std::optional<LemmaInterval> lemma_interval(PrefixLemma lemma, unsigned k);

[[nodiscard]] std::string_view lemma_name(PrefixLemma lemma) noexcept;

struct LemmaResult {
    PrefixLemma lemma;
    bool passed = true;
    unsigned digits_checked = 0;     ///< number of k values with a nonempty interval
    std::uint64_t values_checked = 0;
    std::optional<std::pair<unsigned, std::uint64_t>> counterexample; ///< first failing (k, m)
};

struct PrefixLemmaReport {
    unsigned k_max = 0;
    std::vector<LemmaResult> lemmas;

    [[nodiscard]] bool all_passed() const noexcept;
};

/// Exhaustively checks every prefix lemma for 1 <= k <= k_max.
/// Throws BudgetError when k_max > kMaxLemmaDigits.
[[nodiscard]] PrefixLemmaReport verify_prefix_lemmas(unsigned k_max);

} // namespace casesweep
