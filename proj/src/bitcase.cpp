#include "casesweep/bitcase.hpp"

#include <bit>

namespace casesweep {

CaseIndex::CaseIndex(std::uint64_t value, unsigned width) : value_(value), width_(width) {
    if (width == 0 || width > kMaxWidth) {
        throw DomainError("case width must be in [1, " + std::to_string(kMaxWidth) + "], got " +
                          std::to_string(width));
    }
    if (value >> width != 0) {
        throw DomainError("case " + std::to_string(value) + " does not fit in " + std::to_string(width) +
                          " digits");
    }
}

std::string CaseIndex::to_binary() const { return casesweep::to_binary(value_, width_); }

std::optional<unsigned> nth_zero_position(std::uint64_t m, unsigned ell) noexcept {
    std::uint64_t zeros = ~m;
    if (ell == 0 || ell > static_cast<unsigned>(std::popcount(zeros))) {
        return std::nullopt;
    }
    for (unsigned i = 1; i < ell; ++i) {
        zeros &= zeros - 1;
    }
    return static_cast<unsigned>(std::countr_zero(zeros));
}

std::uint64_t prune(std::uint64_t m, PruneLevel ell) {
    if (m == 0) {
        throw DomainError("prune is defined for m >= 1");
    }
    const auto pos = nth_zero_position(m, ell.value());
    if (!pos) {
        return 0;
    }
    // bit *pos of m is zero, so masking off the low bits leaves it alone
    const std::uint64_t kept = m & ~((std::uint64_t{1} << *pos) - 1);
    return kept == 0 ? 0 : kept - 1;
}

unsigned bit_length(std::uint64_t m) noexcept { return static_cast<unsigned>(std::bit_width(m)); }

std::string to_binary(std::uint64_t m, unsigned k) {
    if (k < 64 && (m >> k) != 0) {
        throw DomainError(std::to_string(m) + " has more than " + std::to_string(k) + " binary digits");
    }
    std::string out(k, '0');
    for (unsigned i = 0; i < k && i < 64; ++i) {
        if ((m >> i) & 1U) {
            out[k - 1 - i] = '1';
        }
    }
    return out;
}

bool has_prefix(std::uint64_t m, unsigned k, std::string_view prefix) {
    if (prefix.size() > k) {
        throw DomainError("prefix longer than digit count");
    }
    if (k > 64 || (k < 64 && (m >> k) != 0)) {
        throw DomainError(std::to_string(m) + " has more than " + std::to_string(k) + " binary digits");
    }
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        const unsigned bit = k - 1 - static_cast<unsigned>(i);
        const char digit = ((m >> bit) & 1U) ? '1' : '0';
        if (prefix[i] != '0' && prefix[i] != '1') {
            throw DomainError("prefix must contain only '0' and '1'");
        }
        if (prefix[i] != digit) {
            return false;
        }
    }
    return true;
}

std::optional<LemmaInterval> lemma_interval(PrefixLemma lemma, unsigned k) {
    if (k == 0 || k > kMaxWidth) {
        return std::nullopt;
    }
    const auto p = [](unsigned e) { return std::uint64_t{1} << e; };
    switch (lemma) {
    case PrefixLemma::leading_one:
        return LemmaInterval{p(k - 1), p(k) - 1, "1"};
    case PrefixLemma::leading_10:
        if (k < 2) return std::nullopt;
        return LemmaInterval{p(k - 1), p(k) - p(k - 2) - 1, "10"};
    case PrefixLemma::leading_101:
        if (k < 3) return std::nullopt;
        return LemmaInterval{p(k) - p(k - 2) - p(k - 3), p(k) - p(k - 2) - 1, "101"};
    case PrefixLemma::leading_100:
        if (k < 3) return std::nullopt;
        return LemmaInterval{p(k - 1), p(k) - p(k - 2) - p(k - 3) - 1, "100"};
    }
    return std::nullopt;
}

std::string_view lemma_name(PrefixLemma lemma) noexcept {
    switch (lemma) {
    case PrefixLemma::leading_one: return "leading-1";
    case PrefixLemma::leading_10: return "leading-10";
    case PrefixLemma::leading_101: return "leading-101";
    case PrefixLemma::leading_100: return "leading-100";
    }
    return "?";
}

bool PrefixLemmaReport::all_passed() const noexcept {
    for (const auto& l : lemmas) {
        if (!l.passed) return false;
    }
    return true;
}

PrefixLemmaReport verify_prefix_lemmas(unsigned k_max) {
    if (k_max > kMaxLemmaDigits) {
        throw BudgetError("prefix lemma sweep is limited to k <= " + std::to_string(kMaxLemmaDigits));
    }
    PrefixLemmaReport report;
    report.k_max = k_max;
    for (auto lemma : {PrefixLemma::leading_one, PrefixLemma::leading_10, PrefixLemma::leading_101,
                       PrefixLemma::leading_100}) {
        LemmaResult result{};
        result.lemma = lemma;
        for (unsigned k = 1; k <= k_max && result.passed; ++k) {
            const auto interval = lemma_interval(lemma, k);
            if (!interval || interval->low > interval->high) {
                continue;
            }
            ++result.digits_checked;
            for (std::uint64_t m = interval->low; m <= interval->high; ++m) {
                ++result.values_checked;
                if (!has_prefix(m, k, interval->prefix)) {
                    result.passed = false;
                    result.counterexample = std::pair{k, m};
                    break;
                }
            }
        }
        report.lemmas.push_back(result);
    }
    return report;
}

} // namespace casesweep
