#include "parkinv/closed_forms.hpp"

#include "parkinv/invariance.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace parkinv;
using closed_forms::AlmostConstantClass;
using closed_forms::BigInt;
using closed_forms::Regime;

namespace {

// Definitional oracle: u-parking functions are the x in [u_n]^n whose
// nondecreasing rearrangement satisfies x_(i) <= u_i.
std::uint64_t brute_u_parking_count(const std::vector<int>& u)
{
    const int n = static_cast<int>(u.size());
    const int max_entry = u.back();
    std::vector<int> x(static_cast<std::size_t>(n), 1);
    std::vector<int> sorted(static_cast<std::size_t>(n));
    std::uint64_t count = 0;
    do {
        sorted = x;
        std::sort(sorted.begin(), sorted.end());
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = sorted[static_cast<std::size_t>(i)] <= u[static_cast<std::size_t>(i)];
        count += ok;
    } while (parkinv::test::next_tuple(x, max_entry));
    return count;
}

std::vector<int> u_of_shape(int n, int a, int b, int c, int k)
{
    std::vector<int> u;
    u.push_back(a);
    for (int i = 0; i < n - k - 1; ++i)
        u.push_back(u.back() + b);
    u.push_back(u.back() + c);
    while (static_cast<int>(u.size()) < n)
        u.push_back(u.back());
    return u;
}

std::vector<std::vector<int>> raw(const std::vector<PreferenceVector>& list)
{
    std::vector<std::vector<int>> out;
    for (const PreferenceVector& x : list)
        out.emplace_back(x.prefs().begin(), x.prefs().end());
    return out;
}

}  // namespace

TEST_SUITE("closed_forms")
{
    TEST_CASE("classification")
    {
        auto divides = closed_forms::classify(LengthVector({6, 2, 2, 2}));
        REQUIRE(divides.has_value());
        CHECK(divides->regime == Regime::divides);
        CHECK(divides->a == 2);
        CHECK(divides->b == 6);

        auto large = closed_forms::classify(LengthVector({9, 2, 2, 2}));
        REQUIRE(large.has_value());
        CHECK(large->regime == Regime::large);  // 9 > (4-1)*2 and 2 does not divide 9

        auto irregular = closed_forms::classify(LengthVector({3, 2, 2, 2}));
        REQUIRE(irregular.has_value());
        CHECK(irregular->regime == Regime::irregular);
        CHECK(irregular->quotient() == 1);

        CHECK_FALSE(closed_forms::classify(LengthVector({1, 2, 3})).has_value());
        CHECK_FALSE(closed_forms::classify(LengthVector({5})).has_value());

        // when a | b and b > (n-1)a both hold, the regime label is immaterial
        const auto both = closed_forms::classify(LengthVector({6, 2, 2}));
        REQUIRE(both.has_value());
        CHECK(both->regime == Regime::divides);
        AlmostConstantClass as_large = *both;
        as_large.regime = Regime::large;
        CHECK(closed_forms::generate_invariant_nd_closed(*both) ==
              closed_forms::generate_invariant_nd_closed(as_large));
        CHECK(closed_forms::count_invariant_full(*both) ==
              closed_forms::count_invariant_full(as_large));
        CHECK(closed_forms::count_invariant_nd(*both) ==
              closed_forms::count_invariant_nd(as_large));
    }

    TEST_CASE("closed-form generation")
    {
        const AlmostConstantClass two_two{2, 2, 2, Regime::divides};
        CHECK(raw(closed_forms::generate_invariant_nd_closed(two_two)) ==
              std::vector<std::vector<int>>{{1, 1}, {1, 3}});

        const auto irregular = closed_forms::classify(LengthVector({3, 2, 2}));
        REQUIRE(irregular.has_value());
        CHECK(raw(closed_forms::generate_invariant_nd_closed(*irregular)) ==
              std::vector<std::vector<int>>{{1, 1, 1}, {1, 1, 3}, {1, 3, 3}});

        // unit cars: the five nondecreasing parking functions of length 3
        const AlmostConstantClass units{1, 1, 3, Regime::divides};
        CHECK(raw(closed_forms::generate_invariant_nd_closed(units)) ==
              std::vector<std::vector<int>>{
                  {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3}});
    }

    TEST_CASE("max characteristic test")
    {
        CHECK(closed_forms::is_max_characteristic(LengthVector({6, 2, 2, 2})));
        CHECK_FALSE(closed_forms::is_max_characteristic(LengthVector({2, 3, 3})));
        CHECK_FALSE(closed_forms::is_max_characteristic(LengthVector({5, 2, 3})));
        CHECK_THROWS_AS(closed_forms::is_max_characteristic(LengthVector({4})),
                        std::invalid_argument);
    }

    TEST_CASE("counting formulas")
    {
        const AlmostConstantClass divides3{2, 2, 3, Regime::divides};
        CHECK(closed_forms::count_invariant_full(divides3) == 16);

        const AlmostConstantClass irregular31{3, 2, 3, Regime::irregular};
        CHECK(closed_forms::count_invariant_full(irregular31) == 7);  // 2^3 - 1
        CHECK(closed_forms::count_invariant_nd(irregular31) == 3);

        const AlmostConstantClass irregular42{5, 2, 4, Regime::irregular};
        CHECK(closed_forms::count_invariant_full(irregular42) == 61);  // 3^4 - 2^4 - 4

        const AlmostConstantClass divides4{2, 2, 4, Regime::divides};
        CHECK(closed_forms::count_invariant_nd(divides4) == 14);  // C_4

        const AlmostConstantClass irregular52{5, 2, 5, Regime::irregular};
        CHECK(closed_forms::count_invariant_nd(irregular52) == 14);
    }

    TEST_CASE("pitman-stanley count")
    {
        // u = (1,2,2): 16 - 9 = 7
        CHECK(closed_forms::pitman_stanley_count(3, 1, 1, 0, 1) == 7);
        // u = (1,2): the three parking functions of length 2
        CHECK(closed_forms::pitman_stanley_count(2, 1, 0, 1, 1) == 3);
        CHECK_THROWS_AS(closed_forms::pitman_stanley_count(3, 0, 1, 1, 1),
                        std::invalid_argument);
        CHECK_THROWS_AS(closed_forms::pitman_stanley_count(3, 1, 1, 1, 3),
                        std::invalid_argument);

        // definitional oracle across every valid shape at desk scale
        for (int n = 2; n <= 4; ++n)
            for (int k = 1; k <= n - 1; ++k)
                for (int a = 1; a <= 5; ++a)
                    for (int b = 0; b <= 5; ++b)
                        for (int c = 0; c <= 5; ++c) {
                            const std::vector<int> u = u_of_shape(n, a, b, c, k);
                            if (u.back() > 5)
                                continue;
                            CAPTURE(n);
                            CAPTURE(k);
                            REQUIRE(closed_forms::pitman_stanley_count(n, a, b, c, k) ==
                                    brute_u_parking_count(u));
                        }

        // with k = n - 1 the b-run is empty, so the value cannot depend on b
        for (int b = 0; b <= 6; ++b)
            CHECK(closed_forms::pitman_stanley_count(4, 2, b, 1, 3) ==
                  closed_forms::pitman_stanley_count(4, 2, 0, 1, 3));
    }

    TEST_CASE("catalan triangle")
    {
        for (int n = 0; n <= 20; ++n) {
            CHECK(closed_forms::catalan_triangle(n, 0) == 1);
            if (n >= 1)
                CHECK(closed_forms::catalan_triangle(n, 1) == n);
        }
        CHECK(closed_forms::catalan_triangle(4, 4) == 14);  // = C_4

        // the full recursion of the triangle
        for (int n = 1; n <= 19; ++n) {
            CHECK(closed_forms::catalan_triangle(n + 1, n + 1) ==
                  closed_forms::catalan_triangle(n + 1, n));
            for (int k = 2; k <= n; ++k)
                CHECK(closed_forms::catalan_triangle(n + 1, k) ==
                      closed_forms::catalan_triangle(n + 1, k - 1) +
                          closed_forms::catalan_triangle(n, k));
        }
        CHECK_THROWS_AS(closed_forms::catalan_triangle(3, 4), std::invalid_argument);
        CHECK_THROWS_AS(closed_forms::catalan_triangle(3, -1), std::invalid_argument);
    }

    TEST_CASE("u-parking bijection")
    {
        const auto cls = closed_forms::classify(LengthVector({3, 2, 2}));
        REQUIRE(cls.has_value());
        const std::vector<int> x{1, 3, 5};
        CHECK(closed_forms::to_u_parking(*cls, x) == std::vector<int>{1, 2, 3});
        CHECK(closed_forms::from_u_parking(*cls, std::vector<int>{1, 2, 3}) == x);
        CHECK_THROWS_AS(closed_forms::to_u_parking(*cls, std::vector<int>{1, 2}),
                        std::domain_error);

        // round-trip over the whole invariant set of an irregular vector
        const LengthVector y({3, 2, 2, 2});
        const auto cls4 = closed_forms::classify(y);
        REQUIRE(cls4.has_value());
        REQUIRE(cls4->regime == Regime::irregular);
        const auto u = closed_forms::u_vector_for(*cls4);
        CHECK(u.u() == std::vector<int>{1, 2, 2, 2});
        for (const PreferenceVector& inv : invariance::enumerate_invariant_nd(y)) {
            const std::vector<int> p = closed_forms::to_u_parking(*cls4, inv.prefs());
            CHECK(std::is_sorted(p.begin(), p.end()));
            for (std::size_t i = 0; i < p.size(); ++i)
                CHECK(p[i] <= u.u()[i]);  // lands inside PF_n(u)
            CHECK(closed_forms::from_u_parking(*cls4, p) ==
                  std::vector<int>(inv.prefs().begin(), inv.prefs().end()));
        }
    }

    TEST_CASE("superdecreasing counts")
    {
        const auto big = closed_forms::superdecreasing_counts(LengthVector({8, 4, 2, 1}));
        CHECK(big.full == 29);
        CHECK(big.nd == 8);

        const auto two = closed_forms::superdecreasing_counts(LengthVector({2, 1}));
        CHECK(two.full == 3);
        CHECK(two.nd == 2);

        const auto single = closed_forms::superdecreasing_counts(LengthVector({5}));
        CHECK(single.full == 1);
        CHECK(single.nd == 1);

        CHECK_THROWS_AS(closed_forms::superdecreasing_counts(LengthVector({2, 2})),
                        std::invalid_argument);
    }

    TEST_CASE("nondecreasing-set bound")
    {
        CHECK(closed_forms::max_nd_invariant_bound(1) == 1);
        CHECK(closed_forms::max_nd_invariant_bound(3) == 10);   // C(5,2)
        CHECK(closed_forms::max_nd_invariant_bound(4) == 120);  // C(10,3)
    }

    TEST_CASE("closed forms match the oracle across the almost-constant family")
    {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 7; ++b)
                for (int n = 2; n <= 5; ++n) {
                    std::vector<int> lengths(static_cast<std::size_t>(n), a);
                    lengths.front() = b;
                    const LengthVector y(lengths);
                    const auto cls = closed_forms::classify(y);
                    REQUIRE(cls.has_value());
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(n);

                    const auto oracle = invariance::enumerate_invariant_nd(y);
                    REQUIRE(closed_forms::generate_invariant_nd_closed(*cls) == oracle);
                    REQUIRE(closed_forms::count_invariant_nd(*cls) == oracle.size());
                    REQUIRE(closed_forms::count_invariant_full(*cls) ==
                            invariance::enumerate_invariant_full_count(y));

                    // mod-a and order-statistic bounds hold for every invariant
                    for (const PreferenceVector& x : oracle)
                        for (int i = 0; i < x.size(); ++i) {
                            REQUIRE((x[i] - 1) % a == 0);
                            REQUIRE(x[i] <= 1 + i * a);
                        }
                }
    }

    TEST_CASE("irregular counts specialize the pitman-stanley lemma")
    {
        // (n, floor(b/a)) pairs with a concrete irregular representative
        const struct {
            int n;
            int a;
            int b;
        } cases[] = {{3, 2, 3}, {4, 2, 3}, {4, 2, 5}, {5, 2, 5}};
        for (const auto& c : cases) {
            std::vector<int> lengths(static_cast<std::size_t>(c.n), c.a);
            lengths.front() = c.b;
            const auto cls = closed_forms::classify(LengthVector(lengths));
            REQUIRE(cls.has_value());
            REQUIRE(cls->regime == Regime::irregular);
            const int q = cls->quotient();
            CHECK(closed_forms::count_invariant_full(*cls) ==
                  closed_forms::pitman_stanley_count(c.n, 1, 1, 0, c.n - q - 1));
        }
    }

    TEST_CASE("closed-form count report")
    {
        const auto constant = closed_forms::closed_form_counts(LengthVector({2, 2, 2}));
        REQUIRE(constant.has_value());
        CHECK(constant->provenance == "constant");
        CHECK(constant->full == 16);

        const auto superdec = closed_forms::closed_form_counts(LengthVector({8, 4, 2, 1}));
        REQUIRE(superdec.has_value());
        CHECK(superdec->provenance == "superdecreasing");
        CHECK(superdec->full == 29);

        CHECK_FALSE(closed_forms::closed_form_counts(LengthVector({1, 2, 3})).has_value());

        const auto single = closed_forms::closed_form_counts(LengthVector({7}));
        REQUIRE(single.has_value());
        CHECK(single->full == 1);
    }

    TEST_CASE("u vector validation")
    {
        CHECK_THROWS_AS(closed_forms::UParkingVector({2, 1}), std::invalid_argument);
        const closed_forms::UParkingVector u({1, 2, 2, 5});
        CHECK(u.delta() == std::vector<int>{1, 1, 0, 3});
    }
}
