#include "cyclefact/calculus.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cyclefact {

Perm product_of(const std::vector<Cycle>& factors, int degree)
{
    Perm acc = Perm::identity(degree);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        acc = compose(it->as_perm(), acc);
    return acc;
}

Perm FactorList::product() const
{
    return product_of(factors, degree);
}

namespace {

struct Stats {
    int m;
    int nc;
};

Stats stats_of(const CycleDecomposition& d)
{
    return {d.support, d.cycle_count};
}

bool disjoint_exact_match(const CycleDecomposition& d, int l1, int l2)
{
    if (d.cycle_count != 2)
        return false;
    int a = d.cycles[0].length(), b = d.cycles[1].length();
    if (a < b)
        std::swap(a, b);
    return a == l1 && b == l2;
}

} // namespace

std::string two_cycle_infeasible_reason(const Perm& sigma, int l1, int l2)
{
    if (l1 < l2)
        std::swap(l1, l2);
    if (l2 < 2)
        return "cycle lengths must be at least 2";
    if (l1 > sigma.degree())
        return "l1 exceeds the degree";
    const auto d = dcd_star(sigma);
    if (disjoint_exact_match(d, l1, l2))
        return "";
    const auto [m, nc] = stats_of(d);
    if (l1 + l2 < m + nc)
        return "l1+l2 < m+nc (too short to cover the support)";
    if ((l1 + l2 - m - nc) % 2 != 0)
        return "l1+l2 and m+nc have different parity";
    if (l1 - l2 > m - nc)
        return "l1-l2 > m-nc (lengths too unbalanced)";
    return "";
}

bool two_cycle_feasible(const Perm& sigma, int l1, int l2)
{
    if (l1 < l2)
        std::swap(l1, l2);
    if (l2 < 2 || l1 > sigma.degree())
        return false;
    return two_cycle_infeasible_reason(sigma, l1, l2).empty();
}

// ---------------------------------------------------------------------------
// Two-cycle splice machine.
//
// Both target cycles are assembled around a ring of "crossing" points, one
// ring position per visit of a support cycle (or per fixed-point relay).
// C2 lists the crossings in ring order, each followed by a forward arc of
// its piece; C1 lists them in the order of the walk of f = e o c^-1, each
// followed by the leftover arc of the preceding position's piece. Here c
// is the ring shift and e maps each piece's position to the position of
// the next piece of the same unit. Blocks are laid out so that f is a
// single R-cycle: an odd-size unit uses e = c^2 inside its block; two
// even-size units share a block in the zig-zag pattern (0, h, 1, h+1, ...)
// cut into the two orbit chunks.
// ---------------------------------------------------------------------------

namespace {

struct Piece {
    std::vector<int> pts; // first point is the crossing
};

struct Unit {
    std::vector<Piece> pieces;
};

std::vector<Unit> build_units(const CycleDecomposition& d, const Perm& sigma, int relays,
                              const std::vector<int>& visits)
{
    std::vector<Unit> units;
    units.reserve(d.cycles.size() + static_cast<size_t>(relays));
    for (size_t j = 0; j < d.cycles.size(); ++j) {
        const auto& pts = d.cycles[j].points; // smallest point first, successor order
        const int len = static_cast<int>(pts.size());
        const int v = visits[j];
        Unit u;
        const int base = len / v, extra = len % v;
        int at = 0;
        for (int i = 0; i < v; ++i) {
            const int take = base + (i < extra ? 1 : 0);
            Piece p;
            p.pts.assign(pts.begin() + at, pts.begin() + at + take);
            u.pieces.push_back(std::move(p));
            at += take;
        }
        units.push_back(std::move(u));
    }
    int picked = 0;
    for (int x = 1; x <= sigma.degree() && picked < relays; ++x) {
        if (sigma(x) == x) {
            units.push_back(Unit{{Piece{{x}}}});
            ++picked;
        }
    }
    require(picked == relays, errc::internal, "relay selection failed");
    return units;
}

} // namespace

std::pair<Cycle, Cycle> two_cycle_factor(const Perm& sigma, int l1, int l2)
{
    const int n = sigma.degree();
    require(l1 >= l2, errc::bad_input, "two_cycle_factor expects l1 >= l2");
    require(l2 >= 2, errc::bad_input, "cycle lengths must be at least 2");
    require(l1 <= n, errc::bad_input, "l1 exceeds the degree");

    const auto d = dcd_star(sigma);

    if (disjoint_exact_match(d, l1, l2)) {
        Cycle a = d.cycles[0], b = d.cycles[1];
        if (a.length() < b.length())
            std::swap(a, b);
        return {a, b};
    }

    {
        const std::string why = two_cycle_infeasible_reason(sigma, l1, l2);
        require(why.empty(), errc::out_of_range, "no factorization into a " + std::to_string(l1) +
                                                     "-cycle and a " + std::to_string(l2) +
                                                     "-cycle: " + why);
    }

    const int m = d.support, r = d.cycle_count;
    const int slack = (l1 + l2 - m - r) / 2;
    const int relays = std::min(slack, n - m);
    int extra_visits = 2 * (slack - relays);
    require(extra_visits <= m - r, errc::internal, "visit budget exceeds support capacity");

    // Distribute the extra visits over the support cycles, largest first in
    // canonical order; every distribution pairs up (even visit counts come
    // in pairs because the total surplus is even).
    std::vector<int> visits(d.cycles.size(), 1);
    for (size_t j = 0; j < d.cycles.size() && extra_visits > 0; ++j) {
        const int take = std::min(d.cycles[j].length() - 1, extra_visits);
        visits[j] += take;
        extra_visits -= take;
    }

    const auto units = build_units(d, sigma, relays, visits);

    // Assign ring positions block by block and record e.
    const int R = r + relays + 2 * (slack - relays);
    std::vector<const Piece*> piece_at(static_cast<size_t>(R), nullptr);
    std::vector<int> e(static_cast<size_t>(R), -1);
    {
        int base = 0;
        int pending = -1; // index of an unpaired even-size unit
        auto place_odd = [&](const Unit& u) {
            const int sz = static_cast<int>(u.pieces.size());
            for (int i = 0; i < sz; ++i)
                piece_at[static_cast<size_t>(base + (2 * i) % sz)] = &u.pieces[static_cast<size_t>(i)];
            for (int t = 0; t < sz; ++t)
                e[static_cast<size_t>(base + t)] = base + (t + 2) % sz;
            base += sz;
        };
        auto place_pair = [&](const Unit& a, const Unit& b) {
            const int p = static_cast<int>(a.pieces.size());
            const int q = static_cast<int>(b.pieces.size());
            const int L = p + q, h = L / 2;
            auto zig = [&](int j) { return (j % 2 == 0) ? j / 2 : h + j / 2; };
            for (int i = 0; i < p; ++i) {
                piece_at[static_cast<size_t>(base + zig(i))] = &a.pieces[static_cast<size_t>(i)];
                e[static_cast<size_t>(base + zig(i))] = base + zig((i + 1) % p);
            }
            for (int i = 0; i < q; ++i) {
                piece_at[static_cast<size_t>(base + zig(p + i))] = &b.pieces[static_cast<size_t>(i)];
                e[static_cast<size_t>(base + zig(p + i))] = base + zig(p + (i + 1) % q);
            }
            base += L;
        };
        for (const Unit& u : units) {
            if (u.pieces.size() % 2 == 1) {
                place_odd(u);
            } else if (pending < 0) {
                pending = static_cast<int>(&u - units.data());
            } else {
                place_pair(units[static_cast<size_t>(pending)], u);
                pending = -1;
            }
        }
        require(pending < 0, errc::internal, "unpaired even-size visit block");
        require(base == R, errc::internal, "ring layout size mismatch");
    }

    // nu = the walk of f = e o c^-1 from position 0; must be a single R-cycle.
    std::vector<int> nu;
    nu.reserve(static_cast<size_t>(R));
    {
        std::vector<char> seen(static_cast<size_t>(R), 0);
        int t = 0;
        for (int i = 0; i < R; ++i) {
            require(!seen[static_cast<size_t>(t)], errc::internal, "crossing walk is not a single cycle");
            seen[static_cast<size_t>(t)] = 1;
            nu.push_back(t);
            t = e[static_cast<size_t>((t - 1 + R) % R)];
        }
    }

    // Split every piece tail into a forward arc (C2) and a leftover arc (C1).
    int beta_quota = l2 - R;
    require(beta_quota >= 0, errc::internal, "ring larger than the short cycle");
    std::vector<std::pair<int, int>> cut(static_cast<size_t>(R)); // (beta length, tail size)
    for (int t = 0; t < R; ++t) {
        const int tail = static_cast<int>(piece_at[static_cast<size_t>(t)]->pts.size()) - 1;
        const int b = std::min(tail, beta_quota);
        cut[static_cast<size_t>(t)] = {b, tail};
        beta_quota -= b;
    }
    require(beta_quota == 0, errc::internal, "arc budget left over");

    std::vector<int> c2_pts;
    c2_pts.reserve(static_cast<size_t>(l2));
    for (int t = 0; t < R; ++t) {
        const auto& pts = piece_at[static_cast<size_t>(t)]->pts;
        c2_pts.push_back(pts[0]);
        for (int i = 0; i < cut[static_cast<size_t>(t)].first; ++i)
            c2_pts.push_back(pts[static_cast<size_t>(i) + 1]);
    }

    std::vector<int> c1_pts;
    c1_pts.reserve(static_cast<size_t>(l1));
    for (int j = 0; j < R; ++j) {
        const int v = nu[static_cast<size_t>(j)];
        c1_pts.push_back(piece_at[static_cast<size_t>(v)]->pts[0]);
        const int prev = (v - 1 + R) % R;
        const auto& [b, tail] = cut[static_cast<size_t>(prev)];
        const auto& pts = piece_at[static_cast<size_t>(prev)]->pts;
        for (int i = b; i < tail; ++i)
            c1_pts.push_back(pts[static_cast<size_t>(i) + 1]);
    }

    require(static_cast<int>(c2_pts.size()) == l2 && static_cast<int>(c1_pts.size()) == l1,
            errc::internal, "assembled cycle lengths are wrong");
    Cycle C1(n, std::move(c1_pts)), C2(n, std::move(c2_pts));
    require(compose(C1.as_perm(), C2.as_perm()) == sigma, errc::internal,
            "two-cycle splice failed composition check");
    return {C1, C2};
}

FactorList chain_factor(const Cycle& c, int l, int t)
{
    require(l >= 2 && t >= 1, errc::bad_input, "chain_factor requires l >= 2, t >= 1");
    require(c.length() == l + (t - 1) * (l - 1), errc::bad_input,
            "cycle length must be l+(t-1)(l-1)");
    const Cycle canon = c.canonical();
    FactorList out;
    out.degree = c.degree;
    out.length = l;
    for (int j = 0; j < t; ++j) {
        const int from = j * (l - 1);
        std::vector<int> pts(canon.points.begin() + from, canon.points.begin() + from + l);
        out.factors.emplace_back(c.degree, std::move(pts));
    }
    return out;
}

std::vector<Cycle> merge_even_pair(const Cycle& c1, const Cycle& c2)
{
    require(c1.degree == c2.degree, errc::bad_input, "degree mismatch");
    require(c1.length() % 2 == 0 && c2.length() % 2 == 0, errc::bad_input,
            "merge_even_pair needs even-length cycles");
    for (int p : c1.points)
        for (int q : c2.points)
            require(p != q, errc::bad_input, "merge_even_pair needs disjoint cycles");

    const auto a = c1.canonical().points; // a[0..2d-1]
    const auto b = c2.canonical().points; // b[0..2e-1]
    const int n = c1.degree;
    const int d2 = static_cast<int>(a.size()), e2 = static_cast<int>(b.size());

    std::vector<Cycle> out;
    if (d2 > 2) {
        std::vector<int> pts;
        pts.push_back(a[0]);
        pts.insert(pts.end(), a.begin() + 2, a.end()); // a1 a3 a4 ... a_{2d}
        out.emplace_back(n, std::move(pts));
    }
    out.emplace_back(n, std::vector<int>{a[0], b[0], a[1]});
    out.emplace_back(n, std::vector<int>{b[0], b[static_cast<size_t>(e2) - 1], a[0]});
    if (e2 > 2) {
        std::vector<int> pts(b.begin(), b.end() - 1); // b1 ... b_{2e-1}
        out.emplace_back(n, std::move(pts));
    }

    require(product_of(out, n) == compose(c1.as_perm(), c2.as_perm()), errc::internal,
            "even-pair identity failed composition check");
    return out;
}

namespace {

Cycle default_cycle(int degree, int l)
{
    std::vector<int> pts(static_cast<size_t>(l));
    std::iota(pts.begin(), pts.end(), 1);
    return Cycle(degree, std::move(pts));
}

} // namespace

FactorList pad(const FactorList& f, int k_target)
{
    const int k0 = f.count();
    require(k_target >= k0, errc::bad_input, "pad cannot shrink the factor count");
    if (k_target == k0)
        return f;
    const int l = f.length;
    require(l >= 2, errc::bad_input, "pad requires l >= 2");
    require(f.degree >= l, errc::bad_input, "degree below the factor length");
    if (l % 2 == 0)
        require((k_target - k0) % 2 == 0, errc::bad_input,
                "even l only admits padding by an even number of factors");

    FactorList out = f;
    if (k0 == 0) {
        require(k_target % 2 == 0 || l % 2 == 1, errc::bad_input,
                "cannot pad the empty product to an odd count with even l");
        require(k_target != 1, errc::bad_input, "identity is not a single cycle");
        const Cycle c = default_cycle(f.degree, l);
        int k = k_target;
        if (k % 2 == 1) {
            // c, then the inverse split into two cycles keeps the product trivial.
            out.factors.push_back(c);
            auto [x, y] = two_cycle_factor(c.inverse().as_perm(), l, l);
            out.factors.push_back(x);
            out.factors.push_back(y);
            k -= 3;
        }
        for (; k > 0; k -= 2) {
            out.factors.push_back(c);
            out.factors.push_back(c.inverse());
        }
        return out;
    }

    if (l % 2 == 1) {
        while (out.count() < k_target) {
            const Cycle last = out.factors.back();
            out.factors.pop_back();
            auto [x, y] = two_cycle_factor(last.as_perm(), l, l);
            out.factors.push_back(x);
            out.factors.push_back(y);
        }
    } else {
        const Cycle c = default_cycle(f.degree, l);
        while (out.count() < k_target) {
            out.factors.push_back(c);
            out.factors.push_back(c.inverse());
        }
    }
    return out;
}

FactorList lengthen(const FactorList& f, int steps)
{
    require(steps >= 0, errc::bad_input, "steps must be nonnegative");
    if (steps == 0)
        return f;
    const int k = f.count();
    require(k >= 1, errc::bad_input, "lengthen needs at least one factor");

    if (k % 2 == 0) {
        FactorList cur = f;
        for (int step = 0; step < steps; ++step) {
            const int lnew = cur.length + 1;
            require(lnew <= cur.degree, errc::bad_input, "lengthen exceeds the degree");
            FactorList next;
            next.degree = cur.degree;
            next.length = lnew;
            for (int i = 0; i + 1 < cur.count(); i += 2) {
                const Perm pair_product = compose(cur.factors[static_cast<size_t>(i)].as_perm(),
                                                  cur.factors[static_cast<size_t>(i) + 1].as_perm());
                if (pair_product.is_identity()) {
                    const Cycle c = default_cycle(cur.degree, lnew);
                    next.factors.push_back(c);
                    next.factors.push_back(c.inverse());
                } else {
                    auto [a, b] = two_cycle_factor(pair_product, lnew, lnew);
                    next.factors.push_back(a);
                    next.factors.push_back(b);
                }
            }
            require(next.product() == cur.product(), errc::internal,
                    "lengthen changed the product");
            cur = std::move(next);
        }
        return cur;
    }

    // Odd factor counts move in +2 steps by refactoring the whole product.
    require(steps % 2 == 0, errc::bad_input, "odd factor counts lengthen by even steps only");
    const int lnew = f.length + steps;
    require(lnew <= f.degree, errc::bad_input, "lengthen exceeds the degree");
    auto redone = plan_uniform(f.product(), k, lnew);
    require(redone.has_value(), errc::out_of_range,
            "no refactoring at the longer length was found");
    require(redone->product() == f.product(), errc::internal, "lengthen changed the product");
    return *redone;
}

std::pair<Perm, Perm> parity_bridge(const Perm& rho, const Perm& phi)
{
    require(rho.degree() == phi.degree(), errc::bad_input, "degree mismatch");
    require(!is_even(rho) && !is_even(phi), errc::bad_input,
            "parity_bridge needs two odd permutations");
    int u = 0, v = 0;
    for (int x = 1; x <= rho.degree(); ++x) {
        if (rho(x) != x) {
            require(phi(x) == x, errc::bad_input, "parity_bridge needs disjoint supports");
            if (!u)
                u = x;
        } else if (phi(x) != x && !v) {
            v = x;
        }
    }
    require(u && v, errc::bad_input, "parity_bridge needs nontrivial inputs");
    const Perm tau = Cycle(rho.degree(), {u, v}).as_perm();
    Perm left = compose(rho, tau);
    Perm right = compose(tau, phi);
    require(is_even(left) && is_even(right), errc::internal, "bridged parts are not even");
    return {std::move(left), std::move(right)};
}

std::optional<FactorList> plan_uniform(const Perm& sigma, int k, int l,
                                       std::vector<std::string>* trace)
{
    const int n = sigma.degree();
    if (l < 2 || k < 1 || l > n)
        return std::nullopt;
    auto note = [&](const std::string& s) {
        if (trace)
            trace->push_back(s);
    };

    if (sigma.is_identity()) {
        FactorList empty{n, l, {}};
        if (l % 2 == 0 && k % 2 != 0)
            return std::nullopt;
        if (k == 1)
            return std::nullopt;
        note("pad(id," + std::to_string(k) + ")");
        return pad(empty, k);
    }

    const auto d = dcd_star(sigma);
    const auto chain_len = [&](int t) { return l + (t - 1) * (l - 1); };

    // A single cycle of chainable length factors directly.
    if (d.cycle_count == 1) {
        const int len = d.cycles[0].length();
        if (len >= l && (len - l) % (l - 1) == 0) {
            const int t = (len - l) / (l - 1) + 1;
            if (t <= k && (l % 2 == 1 || (k - t) % 2 == 0)) {
                note("chain(" + std::to_string(t) + "x" + std::to_string(l) + ")");
                return pad(chain_factor(d.cycles[0], l, t), k);
            }
        }
    }

    for (int s = 2; s <= k; ++s) {
        if (l % 2 == 0 && (k - s) % 2 != 0)
            continue;
        for (int t2 = s / 2; t2 >= 1; --t2) {
            const int t1 = s - t2;
            const int L1 = chain_len(t1), L2 = chain_len(t2);
            if (L1 > n || L2 > n)
                continue;
            if (!two_cycle_feasible(sigma, L1, L2))
                continue;
            auto [C1, C2] = two_cycle_factor(sigma, L1, L2);
            FactorList left = chain_factor(C1, l, t1);
            FactorList right = chain_factor(C2, l, t2);
            FactorList out{n, l, {}};
            out.factors = std::move(left.factors);
            out.factors.insert(out.factors.end(), right.factors.begin(), right.factors.end());
            note("pair(" + std::to_string(L1) + "," + std::to_string(L2) + ")");
            if (out.count() < k)
                note("pad(+" + std::to_string(k - out.count()) + ")");
            return pad(out, k);
        }
    }
    return std::nullopt;
}

} // namespace cyclefact
