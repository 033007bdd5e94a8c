#include "cyclefact/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyclefact {

namespace {

constexpr int kMaxRankDegree = 20;
constexpr int kMaxReachDegree = 9;

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

using Img = std::vector<std::uint8_t>; // img[i] = p(i+1)-1

Img to_img(const Perm& p)
{
    Img a(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i)
        a[static_cast<size_t>(i) - 1] = static_cast<std::uint8_t>(p(i) - 1);
    return a;
}

Perm to_perm(const Img& a)
{
    std::vector<int> img(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        img[i] = static_cast<int>(a[i]) + 1;
    return Perm(static_cast<int>(a.size()), std::move(img));
}

std::uint64_t rank_img(const Img& a)
{
    // c_i = a_i minus the number of smaller symbols already seen.
    const int n = static_cast<int>(a.size());
    std::uint64_t r = 0;
    std::uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint32_t v = a[static_cast<size_t>(i)];
        const int smaller = std::popcount(seen & ((1u << v) - 1));
        r = r * static_cast<std::uint64_t>(n - i) + (v - static_cast<std::uint32_t>(smaller));
        seen |= 1u << v;
    }
    return r;
}

Img unrank_img(std::uint64_t v, int n)
{
    std::vector<int> digits(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        digits[static_cast<size_t>(i)] = static_cast<int>(v % static_cast<std::uint64_t>(n - i));
        v /= static_cast<std::uint64_t>(n - i);
    }
    Img a(static_cast<size_t>(n));
    std::vector<std::uint8_t> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), std::uint8_t{0});
    for (int i = 0; i < n; ++i) {
        const int d = digits[static_cast<size_t>(i)];
        a[static_cast<size_t>(i)] = pool[static_cast<size_t>(d)];
        pool.erase(pool.begin() + d);
    }
    return a;
}

// A permutation and the one differing in the last two slots share the rank
// prefix rank/2 and have opposite parity, so rank/2 indexes each coset.
std::uint64_t coset_index(const Img& a)
{
    return rank_img(a) >> 1;
}

Img unrank_coset(std::uint64_t idx, int parity, int n)
{
    Img a = unrank_img(idx << 1, n);
    int par = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            par ^= a[static_cast<size_t>(j)] < a[static_cast<size_t>(i)];
    if (par != parity)
        std::swap(a[static_cast<size_t>(n) - 1], a[static_cast<size_t>(n) - 2]);
    return a;
}

// All l-cycles of S_n as image tables.
std::vector<Img> all_l_cycles(int n, int l)
{
    std::vector<Img> gens;
    std::vector<int> comb(static_cast<size_t>(l));
    std::iota(comb.begin(), comb.end(), 0);
    auto emit = [&]() {
        // comb[0] fixed first; permute the rest for distinct cyclic orders.
        std::vector<int> rest(comb.begin() + 1, comb.end());
        std::sort(rest.begin(), rest.end());
        do {
            Img a(static_cast<size_t>(n));
            std::iota(a.begin(), a.end(), std::uint8_t{0});
            int prev = comb[0];
            for (int x : rest) {
                a[static_cast<size_t>(prev)] = static_cast<std::uint8_t>(x);
                prev = x;
            }
            a[static_cast<size_t>(prev)] = static_cast<std::uint8_t>(comb[0]);
            gens.push_back(std::move(a));
        } while (std::next_permutation(rest.begin(), rest.end()));
    };
    // Enumerate l-subsets of {0..n-1}.
    while (true) {
        emit();
        int i = l - 1;
        while (i >= 0 && comb[static_cast<size_t>(i)] == n - l + i)
            --i;
        if (i < 0)
            break;
        ++comb[static_cast<size_t>(i)];
        for (int j = i + 1; j < l; ++j)
            comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j) - 1] + 1;
    }
    return gens;
}

struct Bitset {
    std::vector<std::uint64_t> words;

    explicit Bitset(std::uint64_t bits) : words((bits + 63) / 64, 0) {}

    bool test(std::uint64_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
    void set(std::uint64_t i) { words[i >> 6] |= (1ULL << (i & 63)); }

    std::uint64_t count() const
    {
        std::uint64_t c = 0;
        for (std::uint64_t w : words)
            c += static_cast<std::uint64_t>(std::popcount(w));
        return c;
    }
};

ReachReport reach_impl(int n, int l, int k, bool parallel, int threads)
{
    require(n >= 2 && l >= 2, errc::bad_input, "class_power_reach requires n, l >= 2");
    require(l <= n, errc::bad_input, "class_power_reach requires l <= n");
    require(n <= kMaxReachDegree, errc::out_of_range,
            "exhaustive mode is guarded to n <= " + std::to_string(kMaxReachDegree));
    require(k >= 1, errc::bad_input, "class_power_reach requires k >= 1");
    require(l % 2 == 1 || k % 2 == 0, errc::bad_input,
            "C_l^k lies outside A_n for even l with odd k");

#ifdef _OPENMP
    if (parallel && threads > 0)
        omp_set_num_threads(threads);
#else
    (void)threads;
#endif

    const std::uint64_t half = factorial(n) / 2;
    const int cycle_parity = (l - 1) % 2;
    const auto gens = all_l_cycles(n, l);

    Bitset tables[2] = {Bitset(half), Bitset(half)};
    tables[0].set(coset_index(unrank_coset(0, 0, n))); // identity
    std::vector<std::uint64_t> frontier{0};
    bool saturated = false; // a full coset stays full under further products

    for (int step = 0; step < k && !frontier.empty(); ++step) {
        const int cur_parity = (step * cycle_parity) % 2;
        const int next_parity = ((step + 1) * cycle_parity) % 2;
        Bitset& target = tables[next_parity];
        const std::vector<std::uint64_t> before = target.words;

        const auto expand_into = [&](std::vector<std::uint64_t>& words, std::uint64_t fidx) {
            const Img p = unrank_coset(fidx, cur_parity, n);
            Img q(static_cast<size_t>(n));
            for (const Img& g : gens) {
                for (int x = 0; x < n; ++x)
                    q[static_cast<size_t>(x)] = p[g[static_cast<size_t>(x)]];
                const std::uint64_t idx = coset_index(q);
                words[idx >> 6] |= 1ULL << (idx & 63);
            }
        };
        if (parallel) {
            // Thread-local bitmaps, merged once per step: marking is
            // idempotent, so the merged table is schedule independent.
#pragma omp parallel
            {
                std::vector<std::uint64_t> local(target.words.size(), 0);
#pragma omp for schedule(dynamic, 64) nowait
                for (std::int64_t fi = 0; fi < static_cast<std::int64_t>(frontier.size()); ++fi)
                    expand_into(local, frontier[static_cast<size_t>(fi)]);
#pragma omp critical
                for (size_t w = 0; w < local.size(); ++w)
                    target.words[w] |= local[w];
            }
        } else {
            for (std::int64_t fi = 0; fi < static_cast<std::int64_t>(frontier.size()); ++fi)
                expand_into(target.words, frontier[static_cast<size_t>(fi)]);
        }

        frontier.clear();
        for (size_t w = 0; w < target.words.size(); ++w) {
            std::uint64_t fresh = target.words[w] & ~before[w];
            while (fresh) {
                const int b = std::countr_zero(fresh);
                fresh &= fresh - 1;
                frontier.push_back((static_cast<std::uint64_t>(w) << 6) | static_cast<unsigned>(b));
            }
        }
        if (target.count() == half) {
            saturated = true;
            break;
        }
    }

    ReachReport rep;
    rep.n = n;
    rep.l = l;
    rep.k = k;
    const int final_parity = (k * cycle_parity) % 2; // always 0 under the guard
    rep.reached_count = saturated ? half : tables[final_parity].count();
    rep.covered = (final_parity == 0 && rep.reached_count == half);
    if (!rep.covered) {
        for (std::uint64_t i = 0; i < half; ++i) {
            if (!tables[final_parity].test(i)) {
                rep.witness_missing = to_perm(unrank_coset(i, 0, n));
                break;
            }
        }
    }
    return rep;
}

// k = 2 cycle-type mode: every even type must pass the two-cycle criterion
// with l1 = l2 = l. Depends only on (support, cycle count) except for the
// exact pair of disjoint l-cycles.
bool covered_k2(int n, int l)
{
    if (l > n)
        return false;
    // Enumerate cycle types: parts >= 2, total support <= n.
    struct Walk {
        int n, l;
        bool ok = true;
        std::vector<int> parts;

        void visit()
        {
            int m = 0;
            for (int p : parts)
                m += p;
            const int c = static_cast<int>(parts.size());
            if ((m + c) % 2 != 0)
                return; // odd type
            if (m + c <= 2 * l)
                return; // generic criterion holds
            if (c == 2 && parts[0] == l && parts[1] == l)
                return; // disjoint pair of l-cycles
            ok = false;
        }

        void rec(int remaining, int max_part)
        {
            if (!ok)
                return;
            visit();
            for (int p = std::min(remaining, max_part); p >= 2; --p) {
                parts.push_back(p);
                rec(remaining - p, p);
                parts.pop_back();
                if (!ok)
                    return;
            }
        }
    } walk{n, l};
    walk.rec(n, n);
    return walk.ok;
}

} // namespace

std::uint64_t rank(const Perm& p)
{
    require(p.degree() <= kMaxRankDegree, errc::out_of_range,
            "rank is guarded to degree <= " + std::to_string(kMaxRankDegree));
    return rank_img(to_img(p));
}

Perm unrank(std::uint64_t i, int n)
{
    require(n >= 1 && n <= kMaxRankDegree, errc::out_of_range,
            "unrank is guarded to degree <= " + std::to_string(kMaxRankDegree));
    require(i < factorial(n), errc::bad_input, "rank index out of range");
    return to_perm(unrank_img(i, n));
}

ReachReport class_power_reach(int n, int l, int k, int threads)
{
    return reach_impl(n, l, k, true, threads);
}

ReachReport class_power_reach_serial(int n, int l, int k)
{
    return reach_impl(n, l, k, false, 0);
}

ExactScan exact_n_scan(int k, int l, int n_max)
{
    require(k >= 2 && l >= 2, errc::bad_input, "exact_n_scan requires k, l >= 2");
    require(l % 2 == 1 || k % 2 == 0, errc::bad_input,
            "n(k,l) is undefined for even l with odd k");
    if (k >= 3)
        require(n_max <= kMaxReachDegree, errc::out_of_range,
                "exhaustive scan is guarded to n_max <= 9 for k >= 3");

    ExactScan scan;
    bool seen_gap = false;
    for (int n = std::max(2, l); n <= n_max; ++n) {
        const bool cov = (k == 2) ? covered_k2(n, l) : class_power_reach(n, l, k).covered;
        scan.per_n.emplace_back(n, cov);
        if (cov) {
            scan.value = n;
            if (seen_gap)
                scan.monotone = false;
        } else {
            seen_gap = true;
        }
    }
    return scan;
}

int exact_n_oracle(int k, int l, int n_max)
{
    return exact_n_scan(k, l, n_max).value;
}

bool verify(const FactorizationCertificate& cert, std::string* diagnostic)
{
    auto complain = [&](const std::string& msg) {
        if (diagnostic)
            *diagnostic = msg;
        return false;
    };
    if (cert.factors.count() != cert.k)
        return complain("factor count " + std::to_string(cert.factors.count()) +
                        " differs from k = " + std::to_string(cert.k));
    if (cert.target.degree() != cert.n)
        return complain("target degree differs from n");
    std::vector<int> prod(static_cast<size_t>(cert.n));
    std::iota(prod.begin(), prod.end(), 1);
    // Right-to-left product: walk the factors from the back.
    for (auto it = cert.factors.factors.rbegin(); it != cert.factors.factors.rend(); ++it) {
        if (it->length() != cert.l)
            return complain("factor " + format_cycle(*it) + " is not an l-cycle");
        if (it->degree != cert.n)
            return complain("factor degree differs from n");
        const size_t len = it->points.size();
        std::vector<int> step(static_cast<size_t>(cert.n));
        std::iota(step.begin(), step.end(), 1);
        for (size_t j = 0; j < len; ++j)
            step[static_cast<size_t>(it->points[j]) - 1] = it->points[(j + 1) % len];
        for (int x = 1; x <= cert.n; ++x)
            prod[static_cast<size_t>(x) - 1] = step[static_cast<size_t>(prod[static_cast<size_t>(x) - 1]) - 1];
    }
    for (int x = 1; x <= cert.n; ++x)
        if (prod[static_cast<size_t>(x) - 1] != cert.target(x))
            return complain("recomposed product maps " + std::to_string(x) + " to " +
                            std::to_string(prod[static_cast<size_t>(x) - 1]) + ", target maps it to " +
                            std::to_string(cert.target(x)));
    return true;
}

std::vector<TableRow> table(int k_max, int l_max, int n_max, int threads)
{
    require(k_max >= 2 && l_max >= 2, errc::bad_input, "table requires k_max, l_max >= 2");
    std::vector<TableRow> rows;
    for (int k = 2; k <= k_max; ++k) {
        for (int l = 2; l <= l_max; ++l) {
            if (l % 2 == 0 && k % 2 == 1)
                continue;
            TableRow row;
            row.k = k;
            row.l = l;
            if (k >= 3)
                (void)threads; // reach handles its own thread count
            row.oracle_value = exact_n_oracle(k, l, n_max);
            if (auto e = exact_n(k, l)) {
                row.closed_form = e->first;
                row.closed_provenance = e->second;
                const long long expect = std::min<long long>(e->first, n_max);
                row.agree = (row.oracle_value == expect);
            }
            if (l > 2)
                row.upper = upper_bound(k, l).upper;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string format_table(const std::vector<TableRow>& rows, bool csv)
{
    std::ostringstream os;
    if (csv) {
        os << "k,l,oracle,closed_form,provenance,upper,agree\n";
        for (const auto& r : rows) {
            os << r.k << ',' << r.l << ',' << r.oracle_value << ',';
            if (r.closed_form)
                os << *r.closed_form;
            os << ',';
            if (r.closed_provenance)
                os << to_string(*r.closed_provenance);
            os << ',';
            if (r.upper)
                os << *r.upper;
            os << ',';
            if (r.agree)
                os << (*r.agree ? "yes" : "NO");
            else
                os << "n/a";
            os << '\n';
        }
        return os.str();
    }
    os << "  k   l  oracle  closed  upper  agree  source\n";
    for (const auto& r : rows) {
        auto cell = [&](std::optional<long long> v) {
            return v ? std::to_string(*v) : std::string("-");
        };
        os << ' ' << std::to_string(r.k).insert(0, 2 - std::min<size_t>(2, std::to_string(r.k).size()), ' ')
           << "  " << std::to_string(r.l).insert(0, 2 - std::min<size_t>(2, std::to_string(r.l).size()), ' ');
        std::string o = std::to_string(r.oracle_value);
        os << "  " << std::string(6 - std::min<size_t>(6, o.size()), ' ') << o;
        std::string c = cell(r.closed_form);
        os << "  " << std::string(6 - std::min<size_t>(6, c.size()), ' ') << c;
        std::string u = cell(r.upper);
        os << "  " << std::string(5 - std::min<size_t>(5, u.size()), ' ') << u;
        std::string a = r.agree ? (*r.agree ? "yes" : "NO") : "n/a";
        os << "  " << std::string(5 - std::min<size_t>(5, a.size()), ' ') << a;
        if (r.closed_provenance)
            os << "  " << to_string(*r.closed_provenance);
        os << '\n';
    }
    return os.str();
}

} // namespace cyclefact
