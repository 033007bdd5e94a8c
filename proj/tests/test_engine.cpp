#include <doctest.h>

#include <set>

#include "cyclefact/engine.hpp"
#include "cyclefact/oracle.hpp"
#include "test_helpers.hpp"

using namespace cyclefact;
using testutil::all_perms;
using testutil::pp;

namespace {

void check_cert(const FactorizationCertificate& cert, const Perm& sigma, int k, int l)
{
    CHECK(cert.k == k);
    CHECK(cert.l == l);
    CHECK(cert.factors.count() == k);
    for (const auto& c : cert.factors.factors)
        CHECK(c.length() == l);
    CHECK(cert.factors.product() == sigma);
    std::string diag;
    CHECK_MESSAGE(verify(cert, &diag), diag);
}

// Build a permutation from a cycle-type profile laid out on 1..sum.
Perm from_profile(const std::vector<int>& lens, int degree)
{
    CycleDecomposition d;
    int at = 1;
    for (int len : lens) {
        std::vector<int> pts;
        for (int i = 0; i < len; ++i)
            pts.push_back(at++);
        d.cycles.emplace_back(degree, std::move(pts));
    }
    REQUIRE(at - 1 <= degree);
    return recompose(d, degree);
}

} // namespace

TEST_CASE("factor3 spec instances")
{
    auto cert = factor3(pp("(1 2 3 4 5)", 5), 2);
    REQUIRE(cert.factors.count() == 2);
    CHECK(cert.factors.factors[0].points == std::vector<int>{1, 2, 3});
    CHECK(cert.factors.factors[1].points == std::vector<int>{3, 4, 5});

    cert = factor3(Perm::identity(5), 2);
    CHECK(cert.factors.factors[0].same_permutation(Cycle(5, {1, 2, 3})));
    CHECK(cert.factors.factors[1].same_permutation(Cycle(5, {1, 3, 2})));
    check_cert(cert, Perm::identity(5), 2, 3);

    cert = factor3(pp("(1 2)(3 4)", 4), 2);
    REQUIRE(cert.factors.count() == 2);
    CHECK(cert.factors.factors[0].points == std::vector<int>{1, 3, 2});
    CHECK(cert.factors.factors[1].points == std::vector<int>{3, 4, 1});

    CHECK_THROWS_AS(factor3(pp("(1 2)", 4), 2), error); // odd sigma
    CHECK_THROWS_AS(factor3(pp("(1 2 3 4 5 6 7)", 7), 2), error); // support 7 > 5
}

TEST_CASE("factor3 exhaustive over n <= 7 and the k budget")
{
    for (int n = 3; n <= 7; ++n) {
        for (const Perm& sigma : all_perms(n)) {
            if (!is_even(sigma))
                continue;
            const int m = support_size(sigma);
            for (int k = 2; k <= 6; ++k) {
                if (m > 2 * k + 1)
                    continue;
                check_cert(factor3(sigma, k), sigma, k, 3);
            }
        }
    }
}

TEST_CASE("factor3 case IV count identity")
{
    // all-even cycle type with m = 2k forces the even-merge path
    for (const auto& lens : std::vector<std::vector<int>>{{2, 2}, {4, 2}, {4, 4}, {6, 2}, {2, 2, 2, 2}}) {
        int m = 0;
        for (int v : lens)
            m += v;
        const int k = m / 2;
        const Perm sigma = from_profile(lens, m + 1);
        const auto cert = factor3(sigma, k);
        check_cert(cert, sigma, k, 3);
        bool merged = false;
        for (const auto& tag : cert.provenance)
            if (tag.find("even-merge") != std::string::npos)
                merged = true;
        CHECK(merged);
    }
}

TEST_CASE("split_tau realizes the required support sizes")
{
    struct Case {
        int k, l;
        std::vector<int> lens;
    };
    auto profile = [](int twos, int threes, int fours, int extra) {
        std::vector<int> lens(static_cast<size_t>(twos), 2);
        lens.insert(lens.end(), static_cast<size_t>(threes), 3);
        lens.insert(lens.end(), static_cast<size_t>(fours), 4);
        if (extra)
            lens.push_back(extra);
        return lens;
    };
    const std::vector<Case> cases = {
        // transposition-rich branch (n2 >= 2l/3), l = 9 and l = 12
        {6, 9, profile(16, 0, 0, 5)},    // n = 37, 17 cycles
        {8, 12, profile(30, 0, 0, 5)},   // n = 65, 31 cycles
        // scarce transpositions, 3-cycle selections per 4m+1 mod 3 = 2, 0, 1
        {8, 12, profile(4, 19, 0, 0)},   // n = 65, 23 cycles
        {8, 15, profile(6, 23, 0, 0)},   // n = 81, 29 cycles
        {8, 18, profile(8, 27, 0, 0)},   // n = 97, 35 cycles
        // k = 6 mixed 2/3-cycle selection (case split over (4m+1)/3 mod 3)
        {6, 30, profile(19, 13, 11, 0)}, // n = 121, 43 cycles
        // k = 6 endgame where 4-cycles dominate
        {6, 90, profile(59, 13, 51, 0)}, // n = 361, 123 cycles
    };

    for (const auto& c : cases) {
        const int n = 2 * c.k * c.l / 3 + 1;
        int m = 0;
        for (int v : c.lens)
            m += v;
        REQUIRE(m == n);
        const Perm sigma = from_profile(c.lens, n);
        REQUIRE(is_even(sigma));
        REQUIRE(3 * dcd_star(sigma).cycle_count > n + 2);
        const SplitPair sp = split_tau(sigma, c.k, c.l);
        CHECK(is_even(sp.tau));
        CHECK(is_even(sp.phi));
        CHECK(compose(sp.phi, sp.tau) == sigma);
        CHECK(sp.tau_support == 4 * c.l / 3 + 1 - sp.epsilon);
        CHECK(sp.phi_support == 2 * (c.k - 2) * c.l / 3 + sp.epsilon);
        CHECK(support_size(sp.tau) == sp.tau_support);
        CHECK(support_size(sp.phi) == sp.phi_support);
        // disjointness
        for (int x = 1; x <= n; ++x)
            CHECK((sp.tau(x) == x || sp.phi(x) == x));
    }

    CHECK_THROWS_AS(split_tau(pp("(1 2 3)", 37), 6, 9), error); // not fixed-point free
}

TEST_CASE("split_support caps both parts")
{
    const Perm twelve = from_profile(std::vector<int>(12, 2), 24);
    const auto sp = split_support(twelve, 8);
    CHECK(support_size(sp.tau) <= 8);
    CHECK(support_size(sp.phi) <= 16);
    CHECK(compose(sp.phi, sp.tau) == twelve);
    CHECK(!sp.tau.is_identity());
    CHECK(!sp.phi.is_identity());

    std::vector<int> mix{3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 3};
    const Perm sigma = from_profile(mix, 34);
    const auto sp2 = split_support(sigma, 4);
    CHECK(support_size(sp2.tau) <= 4);
    CHECK(support_size(sp2.phi) <= 30);
    CHECK(compose(sp2.phi, sp2.tau) == sigma);

    CHECK_THROWS_AS(split_support(twelve, 7), error); // odd m
}

TEST_CASE("split_support randomized caps")
{
    std::mt19937_64 rng(47);
    int done = 0;
    while (done < 100) {
        const int n = 2 * (5 + static_cast<int>(rng() % 8));
        const Perm sigma = testutil::random_perm(n, rng);
        if (3 * dcd_star(sigma).cycle_count <= n + 1)
            continue;
        const int m = 2 * (1 + static_cast<int>(rng() % (n / 2 - 1)));
        if (m < 2 || m > n - 2)
            continue;
        const auto sp = split_support(sigma, m);
        CHECK(support_size(sp.tau) <= m);
        CHECK(support_size(sp.phi) <= n - m);
        CHECK(compose(sp.phi, sp.tau) == sigma);
        ++done;
    }
}

TEST_CASE("factor_aux spec instances")
{
    // 25-cycle in A_25 as six 9-cycles.
    const Perm big = from_profile({25}, 25);
    check_cert(factor_aux(big, 6, 9, 25), big, 6, 9);

    // small support at large length: (1 2 3) as two 12-cycles in S_16.
    const Perm small = pp("(1 2 3)", 16);
    check_cert(factor_aux(small, 2, 12, 16), small, 2, 12);

    // precondition: too many cycles for k >= 3
    const Perm crowded = from_profile(std::vector<int>(10, 2), 21);
    CHECK_THROWS_AS(factor_aux(crowded, 6, 9, 21), error);
}

TEST_CASE("factor6 spec instances")
{
    const Perm nine = pp("(1 2 3 4 5 6 7 8 9)", 9);
    check_cert(factor6(nine, 2, 9), nine, 2, 6);

    const Perm eight2 = from_profile(std::vector<int>(8, 2), 16);
    check_cert(factor6(eight2, 4, 16), eight2, 4, 6);

    CHECK_THROWS_AS(factor6(pp("(1 2 3)", 5), 2, 5), error); // n < 6
}

TEST_CASE("factor6 randomized across the regime")
{
    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 200; ++iter) {
        const int k = 2 * (1 + static_cast<int>(rng() % 5)); // 2..10
        const int n = 6 + static_cast<int>(rng() % (4 * k + 1 - 6 + 1));
        const Perm sigma = testutil::random_even(n, rng);
        check_cert(factor6(sigma, k, n), sigma, k, 6);
    }
}

TEST_CASE("factor dispatcher spec instances")
{
    std::mt19937_64 rng(59);
    const Perm a37 = testutil::random_even(37, rng);
    check_cert(factor(a37, 6, 9, 37), a37, 6, 9);

    const Perm a17 = testutil::random_even(17, rng);
    check_cert(factor(a17, 4, 6, 17), a17, 4, 6);

    CHECK_THROWS_AS(factor(pp("(1 2)(3 4 5 6)", 6), 2, 3, 6), error);
    CHECK_THROWS_AS(factor(pp("(1 2)(3 4)", 4), 3, 4, 4), error); // undefined params
    const auto idc = factor(Perm::identity(5), 2, 3, 5);
    CHECK(idc.factors.count() == 2);
    check_cert(idc, Perm::identity(5), 2, 3);
}

TEST_CASE("factor matches oracle coverage exhaustively for n <= 6")
{
    for (int n = 3; n <= 6; ++n) {
        for (const Perm& sigma : all_perms(n)) {
            if (!is_even(sigma))
                continue;
            // (k,3) regimes
            for (int k = 2; k <= 5; ++k) {
                if (support_size(sigma) <= 2 * k + 1 && n >= 3)
                    check_cert(factor(sigma, k, 3, n), sigma, k, 3);
            }
            // (2,l) regimes
            for (int l = 2; l <= n; ++l) {
                if (feasible_k2(n, l))
                    check_cert(factor(sigma, 2, l, n), sigma, 2, l);
            }
        }
    }
}

TEST_CASE("factor theorem 1.7 regime: odd k, 3|l")
{
    std::mt19937_64 rng(61);
    const int k = 5, l = 9, n = 2 * k * l / 3; // 30
    for (int iter = 0; iter < 50; ++iter) {
        const Perm sigma = testutil::random_even(n, rng);
        check_cert(factor(sigma, k, l, n), sigma, k, l);
    }
}

TEST_CASE("factor at l = 12 (even length divisible by 3)")
{
    std::mt19937_64 rng(67);
    const int k = 6, l = 12, n = 2 * k * l / 3 + 1; // 49
    for (int iter = 0; iter < 50; ++iter) {
        const Perm sigma = testutil::random_even(n, rng);
        check_cert(factor(sigma, k, l, n), sigma, k, l);
    }
}

TEST_CASE("factor at 3-free odd length l = 11")
{
    std::mt19937_64 rng(71);
    const int k = 6, l = 11, n = 2 * k * l / 3; // 44
    for (int iter = 0; iter < 50; ++iter) {
        const Perm sigma = testutil::random_even(n, rng);
        check_cert(factor(sigma, k, l, n), sigma, k, l);
    }
}

TEST_CASE("forced split profiles go through the splitter")
{
    // many transpositions at the full Theorem B frame
    const int k = 8, l = 9, n = 2 * k * l / 3 + 1; // 49
    std::vector<int> lens(22, 2);
    lens.push_back(5); // 49 points, 23 cycles > 17
    const Perm sigma = from_profile(lens, n);
    const auto cert = factor(sigma, k, l, n);
    check_cert(cert, sigma, k, l);
    bool split = false;
    for (const auto& tag : cert.provenance)
        if (tag.find("split") != std::string::npos)
            split = true;
    CHECK(split);
}
