#include "parkinv/invariance.hpp"

#include "parkinv/closed_forms.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace parkinv;
using invariance::EnumerationOptions;

namespace {

std::vector<std::vector<int>> raw(const std::vector<PreferenceVector>& list)
{
    std::vector<std::vector<int>> out;
    for (const PreferenceVector& x : list)
        out.emplace_back(x.prefs().begin(), x.prefs().end());
    return out;
}

constexpr EnumerationOptions kExhaustive{10'000'000, false};

}  // namespace

TEST_SUITE("invariance")
{
    TEST_CASE("invariance of single tuples")
    {
        const LengthVector y({1, 2, 2});
        CHECK_FALSE(invariance::is_invariant(y, PreferenceVector({1, 1, 2}, y)));

        const LengthVector z({7, 4, 6});
        CHECK(invariance::is_invariant(z, PreferenceVector({1, 1, 5}, z)));

        for (const std::vector<int>& lengths : test::all_length_vectors(4, 3)) {
            const LengthVector cars(lengths);
            CHECK(invariance::is_invariant(
                cars, PreferenceVector(std::vector<int>(lengths.size(), 1), cars)));
        }
    }

    TEST_CASE("worked enumerations")
    {
        CHECK(raw(invariance::enumerate_invariant_nd(LengthVector({7, 4, 6}))) ==
              std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, 5}});
        CHECK(raw(invariance::enumerate_invariant_nd(LengthVector({1, 2, 3}))) ==
              std::vector<std::vector<int>>{{1, 1, 1}});
        // brute force over [4]^2 with full permutation checking gives the same
        const LengthVector two_twos({2, 2});
        CHECK(test::enumerate_invariant_by_definition(two_twos) ==
              std::vector<std::vector<int>>{{1, 1}, {1, 3}});
        CHECK(raw(invariance::enumerate_invariant_nd(two_twos)) ==
              std::vector<std::vector<int>>{{1, 1}, {1, 3}});
    }

    TEST_CASE("full counts")
    {
        CHECK(invariance::enumerate_invariant_full_count(LengthVector({2, 2})) == 3);
        for (int a = 1; a <= 3; ++a)
            CHECK(invariance::enumerate_invariant_full_count(LengthVector({a, a, a})) == 16);
        CHECK(invariance::enumerate_invariant_full_count(LengthVector({1, 2, 3})) == 1);
    }

    TEST_CASE("degree")
    {
        const LengthVector y({3, 3, 3});
        CHECK(invariance::degree(PreferenceVector({1, 1, 1}, y)) == 0);
        CHECK(invariance::degree(PreferenceVector({1, 1, 5}, y)) == 1);
        const LengthVector z({3, 3, 3, 3});
        CHECK(invariance::degree(PreferenceVector({1, 5, 5, 9}, z)) == 3);
    }

    TEST_CASE("characteristic")
    {
        CHECK(invariance::characteristic(LengthVector({3, 3, 3})) == 2);
        CHECK(invariance::characteristic(LengthVector({1, 2, 3})) == 0);
        CHECK(invariance::characteristic(LengthVector({7, 4, 6})) == 1);
        CHECK(invariance::characteristic(LengthVector({8, 4, 2, 1})) == 1);
    }

    TEST_CASE("invariant solution sets")
    {
        CHECK(invariance::invariant_solution_set(LengthVector({7, 5, 3, 1})) ==
              std::vector<int>{1, 2, 4, 5, 6, 7, 9});
        CHECK(invariance::invariant_solution_set(LengthVector({8, 4, 2, 1})) ==
              std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});
        CHECK(invariance::invariant_solution_set(LengthVector({1, 2, 3})) ==
              std::vector<int>{1});
    }

    TEST_CASE("binary combination sets")
    {
        CHECK(invariance::binary_combination_set(LengthVector({7, 5, 3, 1})) ==
              std::vector<int>{0, 1, 3, 4, 5, 6, 8, 9});
        CHECK(invariance::binary_combination_set(LengthVector({4})) == std::vector<int>{0});
        CHECK(invariance::binary_combination_set(LengthVector({5, 2, 2})) ==
              std::vector<int>{0, 2, 4});
    }

    TEST_CASE("remove_max")
    {
        CHECK(invariance::remove_max({1, 1, 5}) == std::vector<int>{1, 1});
        CHECK(invariance::remove_max({1, 3, 3}) == std::vector<int>{1, 3});
        CHECK_THROWS_AS(invariance::remove_max({1}), std::invalid_argument);
    }

    TEST_CASE("pruned search matches the exhaustive search")
    {
        for (const std::vector<int>& lengths : test::all_length_vectors(4, 3)) {
            const LengthVector y(lengths);
            const auto pruned = invariance::enumerate_invariant_nd(y);
            REQUIRE(raw(pruned) == test::enumerate_invariant_by_definition(y));
            REQUIRE(pruned == invariance::enumerate_invariant_nd(y, kExhaustive));
            REQUIRE(invariance::invariant_solution_set(y) ==
                    invariance::invariant_solution_set(y, kExhaustive));
        }
    }

    TEST_CASE("structural properties across the desk-scale sweep")
    {
        for (const std::vector<int>& lengths : test::all_length_vectors(4, 3)) {
            const LengthVector y(lengths);
            const int n = y.size();
            const auto profile = invariance::invariant_profile(y, kExhaustive);

            // (1^n) is always present, so the set is nonempty
            REQUIRE_FALSE(profile.nd_invariants.empty());
            REQUIRE(profile.nd_invariants.front() ==
                    PreferenceVector(std::vector<int>(lengths.size(), 1), y));

            // characteristic within [0, n-1] and equal to the max degree
            REQUIRE(profile.characteristic >= 0);
            REQUIRE(profile.characteristic <= n - 1);
            int max_degree = 0;
            for (const PreferenceVector& x : profile.nd_invariants)
                max_degree = std::max(max_degree, invariance::degree(x));
            REQUIRE(profile.characteristic == max_degree);

            // the degree image has no holes: every d in [0, characteristic]
            std::set<int> degrees;
            for (const PreferenceVector& x : profile.nd_invariants)
                degrees.insert(invariance::degree(x));
            for (int d = 0; d <= profile.characteristic; ++d)
                REQUIRE(degrees.count(d) == 1);

            // every entry of every invariant lies in W(y)
            for (const PreferenceVector& x : profile.nd_invariants)
                for (int i = 0; i < x.size(); ++i)
                    REQUIRE(std::binary_search(profile.wset.begin(), profile.wset.end(), x[i]));

            // S(y) contains 0, stays within the tail sum, has <= 2^{n-1} elements
            const auto sums = invariance::binary_combination_set(y);
            REQUIRE(sums.front() == 0);
            REQUIRE(sums.back() == y.total() - y[0]);
            REQUIRE(sums.size() <= (std::size_t{1} << (n - 1)));

            // W(y) sits inside 1 + S(y) and has at most 2^{n-1} elements
            for (int w : profile.wset)
                REQUIRE(std::binary_search(sums.begin(), sums.end(), w - 1));
            REQUIRE(profile.wset.size() <= (std::size_t{1} << (n - 1)));
            REQUIRE(profile.wset.back() <= 1 + y.total() - y[n - 1]);

            // non-constant vectors never reach w = 1 + y_1 + ... + y_{n-1};
            // constant vectors always do
            const int top = 1 + y.total() - y[n - 1];
            const bool top_reached =
                std::binary_search(profile.wset.begin(), profile.wset.end(), top);
            REQUIRE(top_reached == y.is_constant());

            // the characteristic is maximal exactly on the characterized shape
            if (n >= 2)
                REQUIRE((profile.characteristic == n - 1) ==
                        closed_forms::is_max_characteristic(y));

            // closure: dropping any non-1 entry of an invariant stays invariant
            for (const PreferenceVector& x : profile.nd_invariants) {
                for (int i = 0; i < x.size(); ++i) {
                    if (x[i] == 1)
                        continue;
                    std::vector<int> reduced(x.prefs().begin(), x.prefs().end());
                    reduced.erase(reduced.begin() + i);
                    reduced.insert(reduced.begin(), 1);
                    REQUIRE(test::invariant_by_definition(y, reduced));
                }
            }

            // PA^inv-up inside {1}^{n-chi} x W(y)^chi
            for (const PreferenceVector& x : profile.nd_invariants)
                for (int i = 0; i < n - profile.characteristic; ++i)
                    REQUIRE(x[i] == 1);
        }
    }

    TEST_CASE("budget guard")
    {
        const LengthVector y({1, 1, 1});
        // the exhaustive candidate space for n = 3, m = 3 has 10 tuples
        CHECK_THROWS_AS(invariance::enumerate_invariant_nd(y, EnumerationOptions{3, false}),
                        invariance::budget_exceeded);
        try {
            invariance::enumerate_invariant_nd(y, EnumerationOptions{3, false});
        } catch (const invariance::budget_exceeded& e) {
            CHECK(e.budget() == 3);
            CHECK(e.observed() == 10);
            CHECK(e.what_exceeded() == "candidates");
        }
        // experiments can exceed the budget even when the candidate count fits
        try {
            invariance::enumerate_invariant_nd(y, EnumerationOptions{11, false});
            FAIL("expected budget_exceeded");
        } catch (const invariance::budget_exceeded& e) {
            CHECK(e.what_exceeded() == "experiments");
            CHECK(e.observed() == 12);  // budget 11 trips on the 12th experiment
        }
    }

    TEST_CASE("distinct permutation counts")
    {
        using invariance::detail::distinct_permutation_count;
        const std::vector<int> ones{1, 1, 1};
        CHECK(distinct_permutation_count(ones) == 1);
        const std::vector<int> pair{1, 1, 5};
        CHECK(distinct_permutation_count(pair) == 3);
        const std::vector<int> mixed{1, 2, 2, 3};
        CHECK(distinct_permutation_count(mixed) == 12);
    }
}
