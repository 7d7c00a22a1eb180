#include "casesweep/efficiency.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

namespace casesweep {

namespace {

void check_set_width(unsigned n) {
    if (n < 2 || n > kMaxSetWidth) {
        throw DomainError("solution set width must be in [2, " + std::to_string(kMaxSetWidth) + "], got " +
                          std::to_string(n));
    }
}

struct Counts {
    std::uint64_t found = 0;
    std::uint64_t checked = 0;
};

// Counting loop over a member bitmask; used by the exhaustive sweep where
// building a SolutionSet per subset would dominate.
Counts count_mask(unsigned n, PruneLevel ell, std::uint64_t mask) {
    Counts c;
    std::uint64_t j = (std::uint64_t{1} << n) - 1;
    while (j > 0) {
        ++c.checked;
        if ((mask >> j) & 1U) {
            ++c.found;
            --j;
        } else {
            j = prune(j, ell);
        }
    }
    return c;
}

} // namespace

SolutionSet::SolutionSet(unsigned n, std::span<const std::uint64_t> members) {
    check_set_width(n);
    n_ = n;
    words_.assign(std::max<std::size_t>(1, (std::size_t{1} << n) / 64), 0);
    if (members.empty()) {
        throw DomainError("solution set must be nonempty");
    }
    for (auto m : members) {
        if (m == 0) {
            throw DomainError("case 0 never has a solution and cannot be a member");
        }
        if (m >= (std::uint64_t{1} << n)) {
            throw DomainError("member " + std::to_string(m) + " exceeds 2^" + std::to_string(n) + " - 1");
        }
        insert(m);
    }
}

SolutionSet SolutionSet::full(unsigned n) {
    check_set_width(n);
    SolutionSet s;
    s.n_ = n;
    s.words_.assign(std::max<std::size_t>(1, (std::size_t{1} << n) / 64), ~std::uint64_t{0});
    s.words_[0] &= ~std::uint64_t{1};
    if (n < 6) {
        s.words_[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
    }
    s.size_ = (std::size_t{1} << n) - 1;
    return s;
}

SolutionSet SolutionSet::from_mask(unsigned n, std::uint64_t mask) {
    if (n > 6) {
        throw DomainError("bitmask construction needs n <= 6");
    }
    std::vector<std::uint64_t> members;
    for (std::uint64_t m = 0; m < 64; ++m) {
        if ((mask >> m) & 1U) members.push_back(m);
    }
    return SolutionSet(n, members);
}

void SolutionSet::insert(std::uint64_t m) {
    auto& word = words_[m >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (m & 63);
    if ((word & bit) == 0) {
        word |= bit;
        ++size_;
    }
}

std::vector<std::uint64_t> SolutionSet::members() const {
    std::vector<std::uint64_t> out;
    out.reserve(size_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
            out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
        }
    }
    return out;
}

std::uint64_t SolutionSet::mask() const {
    if (n_ > 6) {
        throw DomainError("bitmask view needs n <= 6");
    }
    return words_[0];
}

std::vector<std::uint64_t> RunOutcome::trace_values() const {
    std::vector<std::uint64_t> out;
    out.reserve(trace.size());
    for (const auto& c : trace) out.push_back(c.value);
    return out;
}

Ratio Ratio::make(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0) {
        throw DomainError("ratio needs num >= 0 and den > 0");
    }
    const auto g = std::gcd(num, den);
    return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

std::string Ratio::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

RunOutcome run_efficiency(unsigned n, PruneLevel ell, const SolutionSet& s) {
    if (s.width() != n) {
        throw DomainError("solution set width does not match n");
    }
    RunOutcome out;
    std::uint64_t j = (std::uint64_t{1} << n) - 1;
    while (j > 0) {
        ++out.checked;
        if (s.contains(j)) {
            ++out.found;
            out.trace.push_back({j, true});
            j = j - 1;
        } else {
            out.trace.push_back({j, false});
            j = prune(j, ell);
        }
    }
    return out;
}

bool is_valid(unsigned n, PruneLevel ell, const SolutionSet& s) {
    return run_efficiency(n, ell, s).found == s.size();
}

ParNumber par_number(const RunOutcome& outcome, std::int64_t f) {
    if (f < 1) {
        throw DomainError("par number needs f >= 1");
    }
    return {f, static_cast<std::int64_t>(outcome.checked) - f * static_cast<std::int64_t>(outcome.found)};
}

Ratio ValidSet::ratio() const {
    return Ratio::make(static_cast<std::int64_t>(outcome.checked), static_cast<std::int64_t>(outcome.found));
}

std::vector<ValidSet> enumerate_valid_sets(unsigned n, PruneLevel ell, unsigned jobs) {
    if (n < 2) {
        throw DomainError("enumeration needs n >= 2");
    }
    if (n > kMaxEnumerationWidth) {
        throw BudgetError("exhaustive enumeration is capped at n = " + std::to_string(kMaxEnumerationWidth) +
                          "; use path counting on the run graph for larger n");
    }
    // bit 0 is never a member, so candidate masks are the even values in [2, 2^(2^n))
    const std::uint64_t candidates = (std::uint64_t{1} << ((std::uint64_t{1} << n) - 1)) - 1;
    jobs = std::clamp<unsigned>(jobs, 1, 64);
    const std::uint64_t chunk = (candidates + jobs - 1) / jobs;

    std::vector<std::vector<std::uint64_t>> found(jobs);
    auto work = [&](unsigned part) {
        const std::uint64_t first = 1 + part * chunk;
        const std::uint64_t last = std::min(candidates, first + chunk - 1);
        for (std::uint64_t idx = first; idx <= last; ++idx) {
            const std::uint64_t mask = idx << 1;
            const auto c = count_mask(n, ell, mask);
            if (c.found == static_cast<std::uint64_t>(std::popcount(mask))) {
                found[part].push_back(mask);
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned part = 0; part < jobs; ++part) workers.emplace_back(work, part);
    }

    std::vector<ValidSet> out;
    for (const auto& part : found) {
        for (auto mask : part) {
            auto set = SolutionSet::from_mask(n, mask);
            auto outcome = run_efficiency(n, ell, set);
            out.push_back({std::move(set), std::move(outcome)});
        }
    }
    return out;
}

RatioWitness max_ratio_bruteforce(unsigned n, PruneLevel ell, unsigned jobs) {
    auto sets = enumerate_valid_sets(n, ell, jobs);
    // the full set is always valid, so there is at least one entry
    std::size_t best = 0;
    for (std::size_t i = 1; i < sets.size(); ++i) {
        if (sets[i].ratio() > sets[best].ratio()) best = i;
    }
    return {sets[best].ratio(), std::move(sets[best])};
}

} // namespace casesweep
