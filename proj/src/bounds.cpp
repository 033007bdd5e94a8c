#include "cyclefact/bounds.hpp"

#include "cyclefact/error.hpp"

namespace cyclefact {

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::theorem_a: return "Theorem A";
    case Provenance::theorem_b: return "Theorem B";
    case Provenance::theorem_1_7: return "Theorem 1.7";
    case Provenance::corollary_1_2: return "Corollary 1.2";
    case Provenance::corollary_1_4: return "Corollary 1.4";
    case Provenance::corollary_1_6: return "Corollary 1.6";
    case Provenance::theorem_1_1: return "Theorem 1.1";
    case Provenance::theorem_1_3: return "Theorem 1.3";
    case Provenance::theorem_1_5: return "Theorem 1.5";
    case Provenance::theorem_2_1: return "Theorem 2.1";
    }
    return "?";
}

static void check_defined(int k, int l)
{
    require(l % 2 == 1 || k % 2 == 0, errc::bad_input,
            "n(k,l) is undefined for even l with odd k");
}

BoundReport upper_bound(int k, int l)
{
    require(k >= 2, errc::bad_input, "upper_bound requires k >= 2");
    require(l > 2, errc::bad_input, "upper_bound requires l > 2");
    check_defined(k, l);

    BoundReport r;
    r.k = k;
    r.l = l;
    const long long kl2 = 2LL * k * l;
    r.n1 = kl2 / 3;
    r.delta_num = static_cast<int>(kl2 % 3);
    r.residue = static_cast<int>(r.n1 % 4);
    switch (r.residue) {
    case 3:
        r.upper = r.n1;
        break;
    case 1:
        r.upper = r.n1 + 1;
        break;
    case 2:
        // Refinement: with l > 3 and delta in {0, 1/3} the bound drops to n1.
        r.upper = (l > 3 && r.delta_num <= 1) ? r.n1 : r.n1 + 1;
        break;
    default: // 0
        r.upper = r.n1 + 1;
        break;
    }
    if (auto e = exact_n(k, l)) {
        r.exact = e->first;
        r.exact_provenance = e->second;
    }
    return r;
}

std::optional<std::pair<long long, Provenance>> exact_n(int k, int l)
{
    require(k >= 2 && l >= 2, errc::bad_input, "exact_n requires k, l >= 2");
    check_defined(k, l);

    if (l == 2) {
        if (k == 2)
            return {{4, Provenance::theorem_1_1}};
        if (k == 4)
            return {{6, Provenance::theorem_1_5}};
        return std::nullopt; // no closed form for l = 2, even k > 4
    }
    if (l == 3)
        return {{2LL * k + 1, Provenance::theorem_a}};
    if (k == 2)
        return {{4LL * l / 3 + 1, Provenance::corollary_1_2}};
    if (k == 3 && l % 2 == 1)
        return {{2LL * l, Provenance::corollary_1_4}};
    if (k == 4 && l % 3 == 0)
        return {{8LL * l / 3 + 1, Provenance::corollary_1_6}};
    if (l % 3 == 0) {
        if (k % 2 == 0)
            return {{2LL * k * l / 3 + 1, Provenance::theorem_b}};
        if (l % 2 == 1 && l >= 9)
            return {{2LL * k * l / 3, Provenance::theorem_1_7}};
    }
    return std::nullopt;
}

bool feasible_k2(int n, int l)
{
    require(n >= 2 && l >= 2, errc::bad_input, "feasible_k2 requires n, l >= 2");
    if (n == 4 && l == 2)
        return true;
    return 3 * n / 4 <= l && l <= n;
}

bool feasible_k3(int n, int l)
{
    require(n >= 2 && l >= 2, errc::bad_input, "feasible_k3 requires n, l >= 2");
    if (l % 2 == 0)
        return false;
    if (n == 7 && l == 3)
        return true;
    return (n + 1) / 2 <= l && l <= n;
}

bool feasible_k4(int n, int l)
{
    require(n >= 2 && l >= 2, errc::bad_input, "feasible_k4 requires n, l >= 2");
    if (n == 6 && l == 2)
        return true;
    if (l > n)
        return false;
    if (n % 8 == 1)
        return 3 * n / 8 <= l;
    return (3 * n + 7) / 8 <= l;
}

int max_n_k4(int l)
{
    int best = 0;
    for (int n = 2; n <= 3 * l + 3; ++n)
        if (feasible_k4(n, l))
            best = n;
    return best;
}

} // namespace cyclefact
