#include <doctest.h>

#include <random>
#include <stdexcept>

#include "casesweep/efficiency.hpp"

using namespace casesweep;

namespace {

std::vector<std::uint64_t> values(const std::vector<CaseCheck>& checks) {
    std::vector<std::uint64_t> out;
    for (const auto& c : checks) out.push_back(c.value);
    return out;
}

using Trace = std::vector<std::uint64_t>;

} // namespace

TEST_CASE("run_prune_sweep follows the sweep loop") {
    auto in67 = [](std::uint64_t j) { return j == 6 || j == 7; };
    const auto one = run_prune_sweep(3, PruneLevel(1), in67);
    CHECK(one == std::vector<CaseCheck>{{7, true}, {6, true}, {5, false}, {3, false}});
    const auto two = run_prune_sweep(3, PruneLevel(2), in67);
    CHECK(two == std::vector<CaseCheck>{{7, true}, {6, true}, {5, false}});
    const auto all = run_prune_sweep(2, PruneLevel(1), [](std::uint64_t) { return true; });
    CHECK(all == std::vector<CaseCheck>{{3, true}, {2, true}, {1, true}});
}

TEST_CASE("run_prune_sweep never queries case 0") {
    for (unsigned ell = 1; ell <= 3; ++ell) {
        (void)run_prune_sweep(6, PruneLevel(ell), [](std::uint64_t j) {
            if (j == 0) throw std::logic_error("queried 0");
            return j % 3 == 0;
        });
    }
}

TEST_CASE("run_prune_sweep surfaces oracle failures with the case index") {
    auto failing = [](std::uint64_t j) -> bool {
        if (j == 5) throw std::runtime_error("solver diverged");
        return j > 5;
    };
    try {
        (void)run_prune_sweep(3, PruneLevel(1), failing);
        FAIL("expected OracleError");
    } catch (const OracleError& e) {
        CHECK(e.case_value() == 5);
    }
    CHECK_THROWS_AS((void)run_prune_sweep(1, PruneLevel(1), failing), DomainError);
}

TEST_CASE("SolutionSet construction") {
    CHECK_THROWS_AS(SolutionSet(3, {}), DomainError);
    CHECK_THROWS_AS(SolutionSet(3, {0, 7}), DomainError);
    CHECK_THROWS_AS(SolutionSet(3, {8}), DomainError);
    CHECK_THROWS_AS(SolutionSet(25, {1}), DomainError);
    const SolutionSet s(3, {7, 6, 6});
    CHECK(s.size() == 2);
    CHECK(s.members() == std::vector<std::uint64_t>{6, 7});
    CHECK(s.mask() == 0b11000000);
    CHECK(SolutionSet::full(3).size() == 7);
    CHECK(SolutionSet::full(3).members() == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});
    CHECK(SolutionSet::full(8).size() == 255);
    CHECK_FALSE(SolutionSet::full(8).contains(0));
    CHECK(SolutionSet::from_mask(3, 0b11000000) == s);
}

TEST_CASE("run_efficiency worked examples") {
    const SolutionSet s67(3, {6, 7});
    const auto one = run_efficiency(3, PruneLevel(1), s67);
    CHECK(one.found == 2);
    CHECK(one.checked == 4);
    CHECK(one.trace_values() == Trace{7, 6, 5, 3});

    const auto two = run_efficiency(3, PruneLevel(2), s67);
    CHECK(two.found == 2);
    CHECK(two.checked == 3);
    CHECK(two.trace_values() == Trace{7, 6, 5});

    const auto full = run_efficiency(3, PruneLevel(1), SolutionSet::full(3));
    CHECK(full.found == 7);
    CHECK(full.checked == 7);

    const auto top = run_efficiency(3, PruneLevel(1), SolutionSet(3, {7}));
    CHECK(top.found == 1);
    CHECK(top.checked == 4);
    CHECK(top.trace_values() == Trace{7, 6, 5, 3});

    CHECK_THROWS_AS((void)run_efficiency(4, PruneLevel(1), s67), DomainError);
}

TEST_CASE("is_valid") {
    CHECK(is_valid(3, PruneLevel(1), SolutionSet(3, {6, 7})));
    CHECK_FALSE(is_valid(3, PruneLevel(1), SolutionSet(3, {4})));
    CHECK_FALSE(is_valid(3, PruneLevel(2), SolutionSet(3, {1, 2, 3, 4, 5, 6})));
    CHECK(is_valid(5, PruneLevel(2), SolutionSet::full(5)));
}

TEST_CASE("par numbers") {
    RunOutcome a{.found = 2, .checked = 4, .trace = {}};
    CHECK(par_number(a, 4).p == -4);
    RunOutcome b{.found = 2, .checked = 3, .trace = {}};
    CHECK(par_number(b, 2).p == -1);
    RunOutcome c{.found = 9, .checked = 9, .trace = {}};
    CHECK(par_number(c, 1).p == 0);
    CHECK_THROWS_AS((void)par_number(c, 0), DomainError);
    // C = f * R + p
    for (std::int64_t f = 1; f < 6; ++f) CHECK(f * 2 + par_number(a, f).p == 4);
}

TEST_CASE("Ratio") {
    CHECK(Ratio::make(4, 2) == Ratio{2, 1});
    CHECK(Ratio::make(3, 2).to_string() == "3/2");
    CHECK(Ratio::make(3, 2) < Ratio::make(2, 1));
    CHECK(Ratio::make(6, 4) == Ratio::make(3, 2));
    CHECK_THROWS_AS((void)Ratio::make(1, 0), DomainError);
}

TEST_CASE("enumerate_valid_sets") {
    SUBCASE("n = 2, l = 1 has four valid sets") {
        // {3}, {1,3}, {2,3}, {1,2,3} in ascending mask order (independent brute force)
        const auto sets = enumerate_valid_sets(2, PruneLevel(1));
        REQUIRE(sets.size() == 4);
        CHECK(sets[0].set.members() == std::vector<std::uint64_t>{3});
        CHECK(sets[0].outcome.found == 1);
        CHECK(sets[0].outcome.checked == 3);
        CHECK(sets[1].set.members() == std::vector<std::uint64_t>{1, 3});
        CHECK(sets[2].set.members() == std::vector<std::uint64_t>{2, 3});
        CHECK(sets[2].outcome.checked == 3);
        CHECK(sets[3].set == SolutionSet::full(2));
        CHECK(sets[3].outcome.checked == 3);
    }
    SUBCASE("frozen counts") {
        CHECK(enumerate_valid_sets(3, PruneLevel(1)).size() == 30);
        CHECK(enumerate_valid_sets(4, PruneLevel(1)).size() == 1302);
        CHECK(enumerate_valid_sets(2, PruneLevel(2)).size() == 3);
        CHECK(enumerate_valid_sets(3, PruneLevel(2)).size() == 10);
        CHECK(enumerate_valid_sets(4, PruneLevel(2)).size() == 92);
    }
    SUBCASE("every valid set contains the top case and is ascending by mask") {
        for (unsigned ell = 1; ell <= 3; ++ell) {
            for (unsigned n = 2; n <= 4; ++n) {
                const auto sets = enumerate_valid_sets(n, PruneLevel(ell));
                const std::uint64_t top = (1U << n) - 1;
                for (std::size_t i = 0; i < sets.size(); ++i) {
                    CHECK(sets[i].set.contains(top));
                    CHECK(sets[i].outcome.found == sets[i].set.size());
                    if (i > 0) CHECK(sets[i - 1].set.mask() < sets[i].set.mask());
                }
            }
        }
    }
    SUBCASE("job count does not change the result") {
        const auto serial = enumerate_valid_sets(4, PruneLevel(1), 1);
        for (unsigned jobs : {2U, 3U, 8U, 64U}) {
            const auto parallel = enumerate_valid_sets(4, PruneLevel(1), jobs);
            REQUIRE(parallel.size() == serial.size());
            for (std::size_t i = 0; i < serial.size(); ++i) {
                CHECK(parallel[i].set == serial[i].set);
                CHECK(parallel[i].outcome == serial[i].outcome);
            }
        }
    }
    CHECK_THROWS_AS((void)enumerate_valid_sets(5, PruneLevel(1)), BudgetError);
}

TEST_CASE("max_ratio_bruteforce") {
    const auto a = max_ratio_bruteforce(3, PruneLevel(1));
    CHECK(a.ratio == Ratio{4, 1});
    CHECK(a.witness.set.members() == std::vector<std::uint64_t>{7});
    const auto b = max_ratio_bruteforce(3, PruneLevel(2));
    CHECK(b.ratio == Ratio{2, 1});
    CHECK(b.witness.set.members() == std::vector<std::uint64_t>{7});
    CHECK(max_ratio_bruteforce(2, PruneLevel(1)).ratio == Ratio{3, 1});
    CHECK(max_ratio_bruteforce(4, PruneLevel(1)).ratio == Ratio{5, 1});
    CHECK(max_ratio_bruteforce(4, PruneLevel(2)).ratio == Ratio{2, 1});
    CHECK_THROWS_AS((void)max_ratio_bruteforce(5, PruneLevel(2)), BudgetError);
}

TEST_CASE("sweep and counting algorithm visit the same cases") {
    for (unsigned ell = 1; ell <= 2; ++ell) {
        for (unsigned n = 2; n <= 4; ++n) {
            const std::uint64_t universe = (1U << n) - 1;
            for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << universe); ++idx) {
                const auto s = SolutionSet::from_mask(n, idx << 1);
                const auto outcome = run_efficiency(n, PruneLevel(ell), s);
                const auto sweep = run_prune_sweep(n, PruneLevel(ell), [&](std::uint64_t j) { return s.contains(j); });
                if (sweep != outcome.trace) FAIL("trace mismatch n=" << n << " ell=" << ell << " mask=" << (idx << 1));
                const auto tv = values(sweep);
                for (std::size_t i = 1; i < tv.size(); ++i) {
                    if (tv[i] >= tv[i - 1]) FAIL("trace not decreasing");
                }
                CHECK(outcome.checked == outcome.trace.size());
                CHECK(outcome.found <= outcome.checked);
            }
        }
    }
}

TEST_CASE("worst-case bounds on every valid set") {
    for (unsigned n = 2; n <= 4; ++n) {
        const auto sets1 = enumerate_valid_sets(n, PruneLevel(1));
        bool tight1 = false;
        for (const auto& v : sets1) {
            const auto p = par_number(v.outcome, n + 1).p;
            CHECK(p <= 0);
            tight1 = tight1 || p == 0;
            CHECK(v.outcome.checked - v.outcome.found <= n * v.set.size());
        }
        CHECK(tight1);

        const auto sets2 = enumerate_valid_sets(n, PruneLevel(2));
        bool tight2 = false;
        for (const auto& v : sets2) {
            const auto p = par_number(v.outcome, 2).p;
            CHECK(p <= 0);
            tight2 = tight2 || p == 0;
            CHECK(v.outcome.checked - v.outcome.found <= v.set.size());
        }
        CHECK(tight2);

        // on sets valid under both levels with the same R, level 2 never checks more
        for (const auto& v2 : sets2) {
            for (const auto& v1 : sets1) {
                if (v1.set == v2.set && v1.outcome.found == v2.outcome.found) {
                    CHECK(v2.outcome.checked <= v1.outcome.checked);
                }
            }
        }
    }
}

TEST_CASE("random sets without the top case are invalid") {
    std::mt19937_64 rng(20181018);
    for (unsigned n : {8U, 12U}) {
        const std::uint64_t top = (std::uint64_t{1} << n) - 1;
        std::uniform_int_distribution<std::uint64_t> pick(1, top - 1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::uint64_t> members(1 + trial % 17);
            for (auto& m : members) m = pick(rng);
            const SolutionSet s(n, members);
            CHECK_FALSE(is_valid(n, PruneLevel(1 + trial % 2), s));
        }
    }
}
