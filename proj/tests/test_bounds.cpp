#include <doctest.h>

#include "cyclefact/bounds.hpp"
#include "cyclefact/error.hpp"

using namespace cyclefact;

TEST_CASE("upper bound case split")
{
    auto r = upper_bound(2, 3);
    CHECK(r.n1 == 4);
    CHECK(r.residue == 0);
    CHECK(r.upper == 5);

    r = upper_bound(3, 9);
    CHECK(r.n1 == 18);
    CHECK(r.residue == 2);
    CHECK(r.delta_num == 0);
    CHECK(r.upper == 18); // refinement applies: l > 3, delta = 0

    r = upper_bound(6, 9);
    CHECK(r.n1 == 36);
    CHECK(r.residue == 0);
    CHECK(r.upper == 37);

    // residue 2 without the refinement (l = 3).
    r = upper_bound(3, 3);
    CHECK(r.n1 == 6);
    CHECK(r.residue == 2);
    CHECK(r.upper == 7);

    CHECK_THROWS_AS(upper_bound(3, 4), error); // undefined parameters
    CHECK_THROWS_AS(upper_bound(2, 2), error); // l > 2 required
}

TEST_CASE("exact values and their sources")
{
    auto e = exact_n(5, 3);
    REQUIRE(e);
    CHECK(e->first == 11);
    CHECK(e->second == Provenance::theorem_a);

    e = exact_n(6, 9);
    REQUIRE(e);
    CHECK(e->first == 37);
    CHECK(e->second == Provenance::theorem_b);

    e = exact_n(4, 6);
    REQUIRE(e);
    CHECK(e->first == 17);
    CHECK(e->second == Provenance::corollary_1_6);

    e = exact_n(2, 7);
    REQUIRE(e);
    CHECK(e->first == 10);
    CHECK(e->second == Provenance::corollary_1_2);

    e = exact_n(3, 9);
    REQUIRE(e);
    CHECK(e->first == 18);

    e = exact_n(5, 9); // odd k, 3|l, l odd >= 9
    REQUIRE(e);
    CHECK(e->first == 30);
    CHECK(e->second == Provenance::theorem_1_7);

    CHECK(exact_n(2, 2)->first == 4);
    CHECK(exact_n(4, 2)->first == 6);
    CHECK_FALSE(exact_n(6, 2).has_value());
    CHECK_FALSE(exact_n(5, 5).has_value()); // odd k >= 5, 3 does not divide l
    CHECK_FALSE(exact_n(6, 8).has_value());
    CHECK_THROWS_AS(exact_n(3, 4), error);
}

TEST_CASE("feasibility thresholds")
{
    CHECK(feasible_k2(5, 3));
    CHECK_FALSE(feasible_k2(6, 3));
    CHECK(feasible_k2(4, 2));
    CHECK_FALSE(feasible_k2(5, 2));

    CHECK(feasible_k3(7, 3));
    CHECK_FALSE(feasible_k3(8, 3));
    CHECK(feasible_k3(10, 5));
    CHECK_FALSE(feasible_k3(10, 4)); // even l never works at k=3

    CHECK(feasible_k4(17, 6)); // 17 = 1 mod 8, floor(51/8) = 6
    CHECK(feasible_k4(6, 2));
    CHECK_FALSE(feasible_k4(16, 5)); // ceil(48/8) = 6 > 5
}

TEST_CASE("exact_n(2,l) equals the largest feasible_k2 degree")
{
    for (int l = 3; l <= 30; ++l) {
        int best = 0;
        for (int n = 2; n <= 2 * l + 4; ++n)
            if (feasible_k2(n, l))
                best = n;
        CHECK(exact_n(2, l)->first == best);
    }
}

TEST_CASE("conjectured window holds for every implemented exact value")
{
    for (int k = 2; k <= 12; ++k) {
        for (int l : {3, 5, 6, 9, 12, 15}) {
            if (l % 2 == 0 && k % 2 == 1)
                continue;
            const auto e = exact_n(k, l);
            if (!e)
                continue;
            const auto r = upper_bound(k, l);
            CHECK(r.n1 <= e->first);
            CHECK(e->first <= r.upper);
            CHECK(r.upper <= r.n1 + 1);
        }
    }
}
