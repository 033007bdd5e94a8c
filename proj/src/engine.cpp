#include "cyclefact/engine.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace cyclefact {

namespace {

std::string num(long long v)
{
    return std::to_string(v);
}

Perm perm_from_cycles(const std::vector<Cycle>& cycles, const std::vector<size_t>& idx, int degree,
                      bool complement)
{
    std::vector<char> take(cycles.size(), 0);
    for (size_t i : idx)
        take[i] = 1;
    CycleDecomposition d;
    for (size_t i = 0; i < cycles.size(); ++i)
        if (take[i] != (complement ? 1 : 0))
            d.cycles.push_back(cycles[i]);
    return recompose(d, degree);
}

// Deterministic subset selection over dcd* cycle lengths: the first subset
// (scanning cycles in canonical order) with total support `supp` and, when
// requested, permutation parity `parity` (sum of (len-1) mod 2).
std::optional<std::vector<size_t>> select_cycles(const std::vector<Cycle>& cycles, int supp,
                                                 std::optional<int> parity)
{
    if (supp < 0)
        return std::nullopt;
    const size_t nc = cycles.size();
    // reach[j][s][p]: state (s, p) reachable using cycles[j..).
    std::vector<std::vector<std::array<char, 2>>> reach(
        nc + 1, std::vector<std::array<char, 2>>(static_cast<size_t>(supp) + 1, {0, 0}));
    reach[nc][0][0] = 1;
    for (size_t j = nc; j-- > 0;) {
        const int len = cycles[j].length();
        const int par = (len - 1) & 1;
        for (int s = 0; s <= supp; ++s) {
            for (int p = 0; p < 2; ++p) {
                char ok = reach[j + 1][static_cast<size_t>(s)][static_cast<size_t>(p)];
                if (!ok && s >= len)
                    ok = reach[j + 1][static_cast<size_t>(s - len)][static_cast<size_t>(p ^ par)];
                reach[j][static_cast<size_t>(s)][static_cast<size_t>(p)] = ok;
            }
        }
    }
    const int want_p = parity ? *parity : -1;
    auto state_ok = [&](size_t j, int s, int p) {
        return reach[j][static_cast<size_t>(s)][static_cast<size_t>(p)] != 0;
    };
    int p0 = -1;
    if (want_p >= 0) {
        if (!state_ok(0, supp, want_p))
            return std::nullopt;
        p0 = want_p;
    } else if (state_ok(0, supp, 0)) {
        p0 = 0;
    } else if (state_ok(0, supp, 1)) {
        p0 = 1;
    } else {
        return std::nullopt;
    }
    std::vector<size_t> out;
    int s = supp, p = p0;
    for (size_t j = 0; j < nc; ++j) {
        const int len = cycles[j].length();
        const int par = (len - 1) & 1;
        if (s >= len && state_ok(j + 1, s - len, p ^ par)) {
            out.push_back(j);
            s -= len;
            p ^= par;
        }
    }
    return (s == 0 && p == 0) ? std::optional(out) : std::nullopt;
}

void append(std::vector<Cycle>& out, const std::vector<Cycle>& more)
{
    out.insert(out.end(), more.begin(), more.end());
}

void append(std::vector<Cycle>& out, const FactorList& more)
{
    append(out, more.factors);
}

void append(std::vector<std::string>& prov, const std::vector<std::string>& more)
{
    prov.insert(prov.end(), more.begin(), more.end());
}

// --------------------------------------------------------------------------
// k 3-cycles (l = 3).
// --------------------------------------------------------------------------

void f3_rec(const Perm& sigma, int k, std::vector<Cycle>& out, std::vector<std::string>& prov)
{
    const int degree = sigma.degree();
    if (sigma.is_identity()) {
        require(degree >= 3, errc::bad_input, "identity needs degree >= 3 for 3-cycles");
        prov.push_back("pad(id->" + num(k) + ")");
        append(out, pad(FactorList{degree, 3, {}}, k));
        return;
    }
    const auto d = dcd_star(sigma);
    const int m = d.support;
    require(m <= 2 * k + 1, errc::internal, "3-cycle recursion out of budget");

    if (k == 1) {
        require(d.cycle_count == 1 && m == 3, errc::internal, "single factor must be a 3-cycle");
        out.push_back(d.cycles[0]);
        return;
    }
    if (k == 2) {
        if (d.cycle_count == 1 && m == 5) {
            prov.push_back("chain(2x3)");
            append(out, chain_factor(d.cycles[0], 3, 2));
            return;
        }
        if (d.cycle_count == 2 && m == 4) {
            prov.push_back("even-merge(2,2)");
            append(out, merge_even_pair(d.cycles[0], d.cycles[1]));
            return;
        }
        require(d.cycle_count == 1 && m == 3, errc::internal, "unexpected shape at k=2");
        prov.push_back("pair(3,3)");
        auto [a, b] = two_cycle_factor(sigma, 3, 3);
        out.push_back(a);
        out.push_back(b);
        return;
    }
    if (m <= 2 * k - 1) {
        // Fits in a smaller frame: factor there and pad the count back up.
        std::vector<Cycle> sub;
        f3_rec(sigma, k - 1, sub, prov);
        prov.push_back("pad(+1)");
        append(out, pad(FactorList{degree, 3, std::move(sub)}, k));
        return;
    }
    if (d.cycle_count == 1) {
        // Full-length cycle: split at a shared point into two odd halves.
        const auto& pts = d.cycles[0].points;
        const int L = m; // = 2k+1
        const int j = (k % 2 == 0) ? k + 1 : k;
        std::vector<int> first(pts.begin(), pts.begin() + j);
        std::vector<int> second(pts.begin() + (j - 1), pts.end());
        prov.push_back("cycle-split(" + num(j) + "," + num(L - j + 1) + ")");
        f3_rec(Cycle(degree, std::move(first)).as_perm(), (j - 1) / 2, out, prov);
        f3_rec(Cycle(degree, std::move(second)).as_perm(), (L - j) / 2, out, prov);
        return;
    }
    for (size_t i = 0; i < d.cycles.size(); ++i) {
        if (d.cycles[i].length() % 2 == 1) {
            // Peel one odd cycle; the rest is even with a smaller frame.
            const int len = d.cycles[i].length();
            const int k_rho = (len - 1) / 2;
            prov.push_back("peel-odd(" + num(len) + ")");
            f3_rec(d.cycles[i].as_perm(), k_rho, out, prov);
            f3_rec(perm_from_cycles(d.cycles, {i}, degree, true), k - k_rho, out, prov);
            return;
        }
    }
    // All cycles even, m = 2k: rewrite pairs through the even-merge identity.
    require(d.cycle_count % 2 == 0 && m == 2 * k, errc::internal, "even-cycle case shape");
    for (size_t i = 0; i + 1 < d.cycles.size(); i += 2) {
        const Cycle& A = d.cycles[i];
        const Cycle& B = d.cycles[i + 1];
        prov.push_back("even-merge(" + num(A.length()) + "," + num(B.length()) + ")");
        const auto parts = merge_even_pair(A, B);
        size_t at = 0;
        if (A.length() > 2)
            f3_rec(parts[at++].as_perm(), (A.length() - 2) / 2, out, prov);
        out.push_back(parts[at++]);
        out.push_back(parts[at++]);
        if (B.length() > 2)
            f3_rec(parts[at++].as_perm(), (B.length() - 2) / 2, out, prov);
    }
}

// --------------------------------------------------------------------------
// k 6-cycles (l = 6).
// --------------------------------------------------------------------------

std::optional<std::vector<Cycle>> try_halves(const Perm& sigma, int l);

void f6_rec(const Perm& sigma, int k, std::vector<Cycle>& out, std::vector<std::string>& prov)
{
    const int degree = sigma.degree();
    require(k >= 2 && k % 2 == 0, errc::internal, "6-cycle recursion needs even k");
    const auto d = dcd_star(sigma);
    const int m = d.support;
    require(m <= 4 * k + 1, errc::internal, "6-cycle recursion out of budget");

    if (k == 2) {
        prov.push_back("pair(6,6)");
        auto [a, b] = two_cycle_factor(sigma, 6, 6);
        out.push_back(a);
        out.push_back(b);
        return;
    }
    if (m <= 4 * (k - 2) + 1) {
        std::vector<Cycle> sub;
        f6_rec(sigma, k - 2, sub, prov);
        prov.push_back("pad(+2)");
        append(out, pad(FactorList{degree, 6, std::move(sub)}, k));
        return;
    }
    if (d.cycle_count <= k + 1) {
        // Two long chainable cycles of length 5j/2+1 = 6+(j/2-1)*5.
        for (int j = 2; j <= k; j += 2) {
            const int Lj = 5 * j / 2 + 1;
            if (Lj > degree || !two_cycle_feasible(sigma, Lj, Lj))
                continue;
            prov.push_back("long-pair(" + num(Lj) + ")");
            auto [a, b] = two_cycle_factor(sigma, Lj, Lj);
            std::vector<Cycle> sub;
            append(sub, chain_factor(a, 6, j / 2));
            append(sub, chain_factor(b, 6, j / 2));
            if (j < k)
                prov.push_back("pad(+" + num(k - j) + ")");
            append(out, pad(FactorList{degree, 6, std::move(sub)}, k));
            return;
        }
    }
    // Peel an even tau on 8 or 9 points from whole cycles and recurse.
    for (int supp = 8; supp <= 9; ++supp) {
        auto sel = select_cycles(d.cycles, supp, 0);
        if (!sel)
            continue;
        prov.push_back("split(" + num(supp) + ")");
        const Perm tau = perm_from_cycles(d.cycles, *sel, degree, false);
        const Perm phi = perm_from_cycles(d.cycles, *sel, degree, true);
        f6_rec(phi, k - 2, out, prov);
        auto [a, b] = two_cycle_factor(tau, 6, 6);
        out.push_back(a);
        out.push_back(b);
        return;
    }
    if (k == 4) {
        if (auto halves = try_halves(sigma, 6)) {
            prov.push_back("halves");
            append(out, *halves);
            return;
        }
    }
    fail(errc::internal, "no applicable 6-cycle split (support " + num(m) + ", cycles " +
                             num(d.cycle_count) + ")");
}

// --------------------------------------------------------------------------
// k = 4 fallback: split into two halves, each a product of two l-cycles.
// --------------------------------------------------------------------------

std::optional<std::vector<Cycle>> try_halves(const Perm& sigma, int l)
{
    const int degree = sigma.degree();
    if (l > degree)
        return std::nullopt;
    const auto d = dcd_star(sigma);
    const auto& cyc = d.cycles;
    const size_t nc = cyc.size();
    const int m = d.support;

    // reach[j][s][c]: support s with c cycles using cyc[j..).
    const int cap_s = m, cap_c = static_cast<int>(nc);
    std::vector<std::vector<std::vector<char>>> reach(
        nc + 1, std::vector<std::vector<char>>(static_cast<size_t>(cap_s) + 1,
                                               std::vector<char>(static_cast<size_t>(cap_c) + 1, 0)));
    reach[nc][0][0] = 1;
    for (size_t j = nc; j-- > 0;) {
        const int len = cyc[j].length();
        for (int s = 0; s <= cap_s; ++s)
            for (int c = 0; c <= cap_c; ++c) {
                char ok = reach[j + 1][static_cast<size_t>(s)][static_cast<size_t>(c)];
                if (!ok && s >= len && c >= 1)
                    ok = reach[j + 1][static_cast<size_t>(s - len)][static_cast<size_t>(c - 1)];
                reach[j][static_cast<size_t>(s)][static_cast<size_t>(c)] = ok;
            }
    }
    for (int s = 0; s <= cap_s; ++s) {
        for (int c = 0; c <= cap_c; ++c) {
            if (!reach[0][static_cast<size_t>(s)][static_cast<size_t>(c)])
                continue;
            if ((s - c) % 2 != 0)
                continue; // half must be even
            if (s + c > 2 * l)
                continue;
            const int s2 = m - s, c2 = d.cycle_count - c;
            if (s2 + c2 > 2 * l)
                continue;
            // Reconstruct the half.
            std::vector<size_t> pick;
            int ss = s, cc = c;
            for (size_t j = 0; j < nc; ++j) {
                const int len = cyc[j].length();
                if (ss >= len && cc >= 1 &&
                    reach[j + 1][static_cast<size_t>(ss - len)][static_cast<size_t>(cc - 1)]) {
                    pick.push_back(j);
                    ss -= len;
                    cc -= 1;
                }
            }
            if (ss != 0 || cc != 0)
                continue;
            const Perm alpha = perm_from_cycles(cyc, pick, degree, false);
            const Perm beta = perm_from_cycles(cyc, pick, degree, true);
            if (!two_cycle_feasible(alpha, l, l) && !alpha.is_identity())
                continue;
            if (!two_cycle_feasible(beta, l, l) && !beta.is_identity())
                continue;
            std::vector<Cycle> out;
            for (const Perm* part : {&alpha, &beta}) {
                if (part->is_identity()) {
                    std::vector<int> pts(static_cast<size_t>(l));
                    for (int i = 0; i < l; ++i)
                        pts[static_cast<size_t>(i)] = i + 1;
                    const Cycle c0(degree, std::move(pts));
                    out.push_back(c0);
                    out.push_back(c0.inverse());
                } else {
                    auto [a, b] = two_cycle_factor(*part, l, l);
                    out.push_back(a);
                    out.push_back(b);
                }
            }
            return out;
        }
    }
    return std::nullopt;
}

// --------------------------------------------------------------------------
// General split for k >= 5 at l >= 9.
// --------------------------------------------------------------------------

void factor_core(const Perm& sigma, int k, int l, std::vector<Cycle>& out,
                 std::vector<std::string>& prov);

void split_and_recurse(const Perm& sigma, int k, int l, std::vector<Cycle>& out,
                       std::vector<std::string>& prov)
{
    const int degree = sigma.degree();
    const auto d = dcd_star(sigma);
    const int m = d.support;
    const auto b_small_opt = coverage_budget(2, l);
    const auto b_big_opt = coverage_budget(k - 2, l);
    require(b_small_opt && b_big_opt, errc::internal, "missing recursion budget");
    const int b_small = static_cast<int>(*b_small_opt);
    const int b_big = static_cast<int>(*b_big_opt);

    // Even tau + even phi: close tau at k = 2 and recurse on phi.
    for (int s = std::min(b_small, m); s >= std::max(2, m - b_big); --s) {
        auto sel = select_cycles(d.cycles, s, 0);
        if (!sel || sel->empty())
            continue;
        prov.push_back("split-even(" + num(s) + ")");
        const Perm tau = perm_from_cycles(d.cycles, *sel, degree, false);
        const Perm phi = perm_from_cycles(d.cycles, *sel, degree, true);
        factor_core(phi, k - 2, l, out, prov);
        auto [a, b] = two_cycle_factor(tau, l, l);
        out.push_back(a);
        out.push_back(b);
        return;
    }
    // Odd tau + odd phi: bridge both through a shared transposition first.
    for (int s = std::min(b_small - 1, m - 2); s >= std::max(2, m - b_big + 1); --s) {
        auto sel = select_cycles(d.cycles, s, 1);
        if (!sel || sel->empty() || static_cast<int>(sel->size()) == d.cycle_count)
            continue;
        prov.push_back("split-bridge(" + num(s) + ")");
        const Perm tau = perm_from_cycles(d.cycles, *sel, degree, false);
        const Perm phi = perm_from_cycles(d.cycles, *sel, degree, true);
        auto [phi_star, tau_star] = parity_bridge(phi, tau);
        factor_core(phi_star, k - 2, l, out, prov);
        auto [a, b] = two_cycle_factor(tau_star, l, l);
        out.push_back(a);
        out.push_back(b);
        return;
    }
    fail(errc::internal, "no admissible split at support " + num(m) + ", cycles " +
                             num(d.cycle_count) + ", (k,l)=(" + num(k) + "," + num(l) + ")");
}

void factor_core(const Perm& sigma, int k, int l, std::vector<Cycle>& out,
                 std::vector<std::string>& prov)
{
    if (l == 3) {
        f3_rec(sigma, k, out, prov);
        return;
    }
    if (l == 6) {
        f6_rec(sigma, k, out, prov);
        return;
    }
    if (k == 2) {
        prov.push_back("pair(" + num(l) + "," + num(l) + ")");
        if (sigma.is_identity()) {
            append(out, pad(FactorList{sigma.degree(), l, {}}, 2));
            return;
        }
        auto [a, b] = two_cycle_factor(sigma, l, l);
        out.push_back(a);
        out.push_back(b);
        return;
    }
    if (k == 3 || k == 4) {
        std::vector<std::string> trace;
        if (auto planned = plan_uniform(sigma, k, l, &trace)) {
            append(prov, trace);
            append(out, *planned);
            return;
        }
        if (k == 4) {
            if (auto halves = try_halves(sigma, l)) {
                prov.push_back("halves");
                append(out, *halves);
                return;
            }
        }
        fail(errc::internal, "base-case planner failed at k=" + num(k));
    }

    const auto d = dcd_star(sigma);
    const int m = d.support;
    const int d_eff = std::max(m, l);
    if (3 * d.cycle_count <= d_eff + 2) {
        std::vector<std::string> trace;
        auto planned = plan_uniform(sigma, k, l, &trace);
        require(planned.has_value(), errc::internal, "chainable planner failed in range");
        append(prov, trace);
        append(out, *planned);
        return;
    }
    if (l % 3 == 0 && k >= 6 && k % 2 == 0 && static_cast<long long>(m) == 2LL * k * l / 3 + 1) {
        const SplitPair sp = split_tau(sigma, k, l);
        prov.push_back("split-tau(eps=" + num(sp.epsilon) + ")");
        factor_core(sp.phi, k - 2, l, out, prov);
        auto [a, b] = two_cycle_factor(sp.tau, l, l);
        out.push_back(a);
        out.push_back(b);
        return;
    }
    split_and_recurse(sigma, k, l, out, prov);
}

FactorizationCertificate make_certificate(const Perm& sigma, int k, int l,
                                          std::vector<Cycle> factors,
                                          std::vector<std::string> prov)
{
    FactorizationCertificate cert;
    cert.n = sigma.degree();
    cert.k = k;
    cert.l = l;
    cert.target = sigma;
    cert.factors = FactorList{sigma.degree(), l, std::move(factors)};
    cert.provenance = std::move(prov);
    require(cert.factors.count() == k, errc::internal,
            "certificate has " + num(cert.factors.count()) + " factors, wanted " + num(k));
    for (const Cycle& c : cert.factors.factors)
        require(c.length() == l, errc::internal, "certificate factor of wrong length");
    require(cert.factors.product() == sigma, errc::internal,
            "certificate failed the composition check");
    return cert;
}

} // namespace

std::optional<long long> coverage_budget(int k, int l)
{
    if (k < 2 || l < 2 || (l % 2 == 0 && k % 2 == 1))
        return std::nullopt;
    if (l == 2) {
        if (k == 2)
            return 4;
        if (k == 4)
            return 6;
        return std::nullopt;
    }
    if (l == 3)
        return 2LL * k + 1;
    if (k == 2)
        return 4LL * l / 3 + 1;
    if (k == 3)
        return 2LL * l;
    if (k == 4)
        return max_n_k4(l);
    if (l == 6)
        return 4LL * k + 1;
    if (l % 3 == 0 && l >= 9)
        return (k % 2 == 0) ? 2LL * k * l / 3 + 1 : 2LL * k * l / 3;
    if (l % 2 == 1 && l >= 9)
        return 2LL * k * l / 3;
    return std::nullopt;
}

FactorizationCertificate factor3(const Perm& sigma, int k)
{
    require(k >= 2, errc::bad_input, "factor3 requires k >= 2");
    require(is_even(sigma), errc::bad_input, "sigma must be even");
    const int m = support_size(sigma);
    require(m <= 2 * k + 1, errc::out_of_range,
            "support " + num(m) + " exceeds the 3-cycle budget 2k+1 = " + num(2 * k + 1));
    require(sigma.degree() >= 3, errc::bad_input, "degree must be at least 3");
    std::vector<Cycle> out;
    std::vector<std::string> prov;
    f3_rec(sigma, k, out, prov);
    return make_certificate(sigma, k, 3, std::move(out), std::move(prov));
}

SplitPair split_tau(const Perm& sigma, int k, int l)
{
    require(l >= 9 && l % 3 == 0, errc::bad_input, "split_tau requires 3|l, l >= 9");
    require(k >= 6 && k % 2 == 0, errc::bad_input, "split_tau requires even k >= 6");
    const long long n = 2LL * k * l / 3 + 1;
    require(sigma.degree() >= n, errc::bad_input,
            "split_tau requires degree at least 2kl/3+1 = " + num(n));
    require(is_even(sigma), errc::bad_input, "sigma must be even");
    const auto d = dcd_star(sigma);
    // The frame of interest is the support itself: sigma must fill A_n.
    require(d.support == n, errc::bad_input, "sigma must move exactly 2kl/3+1 points");
    require(3LL * d.cycle_count > n + 2, errc::bad_input,
            "splitter not applicable: too few cycles");

    for (int eps = 0; eps <= 1; ++eps) {
        const int target = 4 * l / 3 + 1 - eps;
        auto sel = select_cycles(d.cycles, target, 0);
        if (!sel)
            continue;
        SplitPair sp;
        sp.tau = perm_from_cycles(d.cycles, *sel, sigma.degree(), false);
        sp.phi = perm_from_cycles(d.cycles, *sel, sigma.degree(), true);
        sp.epsilon = eps;
        sp.tau_support = target;
        sp.phi_support = static_cast<int>(n) - target;
        require(is_even(sp.tau) && is_even(sp.phi), errc::internal, "split parts not even");
        return sp;
    }
    fail(errc::internal, "split_tau packing failed despite valid preconditions");
}

SplitPair split_support(const Perm& sigma, int m)
{
    const int n = sigma.degree();
    require(n % 2 == 0, errc::bad_input, "split_support requires even degree");
    require(m % 2 == 0 && m >= 2 && m <= n - 2, errc::bad_input,
            "split_support requires even m with 2 <= m <= n-2");
    const auto d = dcd_star(sigma);
    require(3 * d.cycle_count > n + 1, errc::bad_input,
            "split_support requires n_sigma > (n+1)/3");

    const int ms = d.support;
    for (int s = std::min(m, ms - 2); s >= std::max(2, ms - (n - m)); --s) {
        auto sel = select_cycles(d.cycles, s, std::nullopt);
        if (!sel || sel->empty() || static_cast<int>(sel->size()) == d.cycle_count)
            continue;
        SplitPair sp;
        sp.tau = perm_from_cycles(d.cycles, *sel, n, false);
        sp.phi = perm_from_cycles(d.cycles, *sel, n, true);
        sp.epsilon = 0;
        sp.tau_support = s;
        sp.phi_support = ms - s;
        return sp;
    }
    fail(errc::internal, "split_support packing failed despite valid preconditions");
}

FactorizationCertificate factor_aux(const Perm& sigma, int k, int l, int n)
{
    require(sigma.degree() == n, errc::bad_input, "sigma degree must equal n");
    require(k >= 2, errc::bad_input, "factor_aux requires k >= 2");
    require(is_even(sigma), errc::bad_input, "sigma must be even");
    const bool odd_ok = l % 2 == 1 && l >= 9;
    const bool even_ok = l % 2 == 0 && l % 3 == 0 && l >= 12 && k % 2 == 0;
    require(odd_ok || even_ok, errc::bad_input,
            "factor_aux requires odd l >= 9, or even 3|l >= 12 with even k");
    require(l <= n && 3LL * n <= 2LL * k * l + 3, errc::bad_input,
            "factor_aux requires l <= n <= 2kl/3+1");
    const auto d = dcd_star(sigma);
    if (k >= 3)
        require(3 * d.cycle_count <= n + 2, errc::bad_input,
                "n_sigma > (n+2)/3: use a splitter first");

    std::vector<std::string> prov;
    auto planned = plan_uniform(sigma, k, l, &prov);
    require(planned.has_value(), errc::internal, "chainable planner failed in range");
    return make_certificate(sigma, k, l, std::move(planned->factors), std::move(prov));
}

FactorizationCertificate factor6(const Perm& sigma, int k, int n)
{
    require(sigma.degree() == n, errc::bad_input, "sigma degree must equal n");
    require(k >= 2 && k % 2 == 0, errc::bad_input, "factor6 requires even k >= 2");
    require(n >= 6, errc::bad_input, "factor6 requires n >= 6");
    require(n <= 4 * k + 1, errc::out_of_range, "n exceeds the 6-cycle budget 4k+1");
    require(is_even(sigma), errc::bad_input, "sigma must be even");
    std::vector<Cycle> out;
    std::vector<std::string> prov;
    f6_rec(sigma, k, out, prov);
    return make_certificate(sigma, k, 6, std::move(out), std::move(prov));
}

FactorizationCertificate factor(const Perm& sigma, int k, int l, int n)
{
    require(n >= 1, errc::bad_input, "n must be positive");
    require(sigma.degree() == n, errc::bad_input, "sigma degree must equal n");
    require(k >= 2, errc::bad_input, "factor requires k >= 2");
    require(l >= 2, errc::bad_input, "factor requires l >= 2");
    require(l % 2 == 1 || k % 2 == 0, errc::bad_input,
            "n(k,l) is undefined for even l with odd k");
    require(l <= n, errc::bad_input, "degree below the factor length");
    require(is_even(sigma), errc::bad_input, "sigma must be even");

    const int m = support_size(sigma);
    const int d_eff = std::max(m, l);
    const auto budget = coverage_budget(k, l);
    require(budget.has_value(), errc::out_of_range,
            "out of proven range: no covering theorem for (k,l)=(" + num(k) + "," + num(l) + ")");
    require(d_eff <= *budget, errc::out_of_range,
            "out of proven range: support " + num(d_eff) + " exceeds n(" + num(k) + "," + num(l) +
                ") coverage " + num(*budget));

    std::vector<Cycle> out;
    std::vector<std::string> prov;
    factor_core(sigma, k, l, out, prov);
    return make_certificate(sigma, k, l, std::move(out), std::move(prov));
}

} // namespace cyclefact
