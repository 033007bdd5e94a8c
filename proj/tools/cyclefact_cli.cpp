#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cyclefact/certificate_io.hpp"
#include "cyclefact/engine.hpp"
#include "cyclefact/oracle.hpp"

namespace {

using namespace cyclefact;

int exit_code(errc kind)
{
    switch (kind) {
    case errc::bad_input: return 1;
    case errc::out_of_range: return 2;
    case errc::internal: return 3;
    }
    return 3;
}

// Fisher-Yates from a seeded generator, resampled until even.
Perm random_even(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    while (true) {
        std::vector<int> img(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            img[static_cast<size_t>(i)] = i + 1;
        for (int i = n - 1; i > 0; --i) {
            std::uniform_int_distribution<int> pick(0, i);
            std::swap(img[static_cast<size_t>(i)], img[static_cast<size_t>(pick(rng))]);
        }
        Perm p(n, std::move(img));
        if (is_even(p))
            return p;
    }
}

int cmd_factor(int n, int k, int l, const std::string& sigma_text, bool has_random,
               std::uint64_t seed, bool json, const std::string& out_path)
{
    Perm sigma = Perm::identity(std::max(1, n));
    if (has_random) {
        sigma = random_even(n, seed);
        std::cerr << "seed: " << seed << "\n";
    } else {
        sigma = parse_perm(sigma_text, n);
    }
    const FactorizationCertificate cert = factor(sigma, k, l, n);
    std::string diag;
    if (!verify(cert, &diag))
        fail(errc::internal, "emitted certificate failed verification: " + diag);
    const std::string payload = json ? certificate_to_json(cert) : certificate_to_text(cert);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        require(out.good(), errc::bad_input, "cannot open output file " + out_path);
        out << payload;
    }
    return 0;
}

int cmd_verify(const std::string& path)
{
    std::ifstream in(path);
    require(in.good(), errc::bad_input, "cannot open certificate file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const FactorizationCertificate cert = certificate_from_json(buffer.str());
    std::string diag;
    if (verify(cert, &diag)) {
        std::cout << "valid: " << cert.k << " " << cert.l << "-cycles composing to "
                  << format_perm(cert.target) << " in S_" << cert.n << "\n";
        return 0;
    }
    std::cerr << "INVALID certificate: " << diag << "\n";
    std::cerr << "recomposed product: " << format_perm(cert.factors.product()) << "\n";
    return 1;
}

int cmd_bound(int k, int l)
{
    const BoundReport r = upper_bound(k, l);
    std::cout << "n1=" << r.n1 << " delta=" << r.delta_num << "/3 residue=" << r.residue
              << " upper=" << r.upper;
    if (r.exact)
        std::cout << " exact=" << *r.exact << " (" << to_string(*r.exact_provenance) << ")";
    else
        std::cout << " exact=unknown (window [" << r.n1 << ", " << r.n1 + 1 << "])";
    std::cout << "\n";
    return 0;
}

int cmd_oracle(int n, int l, int k, int threads)
{
    const ReachReport rep = class_power_reach(n, l, k, threads);
    std::uint64_t half = 1;
    for (int i = 2; i <= n; ++i)
        half *= static_cast<std::uint64_t>(i);
    half /= 2;
    std::cout << "covered: " << (rep.covered ? "yes" : "no") << " (" << rep.reached_count
              << " of " << half << " even elements reached)\n";
    if (rep.witness_missing)
        std::cout << "unreached witness: " << format_perm(*rep.witness_missing) << "\n";
    return 0;
}

int cmd_table(int kmax, int lmax, int nmax, bool csv, int threads)
{
    const auto rows = table(kmax, lmax, nmax, threads);
    std::cout << format_table(rows, csv);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"constructive factorization of even permutations into l-cycles"};
    app.require_subcommand(1);

    // factor
    auto* fac = app.add_subcommand("factor", "factor sigma into k l-cycles");
    int n = 0, k = 0, l = 0;
    std::string sigma_text;
    std::uint64_t seed = 0;
    bool json = false;
    std::string out_path;
    fac->add_option("--n", n, "ambient degree")->required();
    fac->add_option("--k", k, "number of factors")->required();
    fac->add_option("--l", l, "cycle length")->required();
    auto* sopt = fac->add_option("--sigma", sigma_text, "target in cycle notation (or 'id')");
    auto* ropt = fac->add_option("--random", seed, "random even target from this seed");
    sopt->excludes(ropt);
    fac->add_flag("--json", json, "emit the certificate as JSON");
    fac->add_option("--out", out_path, "write the certificate to a file");

    // verify
    auto* ver = app.add_subcommand("verify", "check a certificate document");
    std::string cert_path;
    ver->add_option("--cert", cert_path, "certificate JSON file")->required();

    // bound
    auto* bnd = app.add_subcommand("bound", "closed-form bounds for n(k,l)");
    int bk = 0, bl = 0;
    bnd->add_option("--k", bk)->required();
    bnd->add_option("--l", bl)->required();

    // oracle
    auto* orc = app.add_subcommand("oracle", "exhaustive C_l^k coverage for one (n,l,k)");
    int on = 0, ol = 0, ok = 0, threads = 0;
    orc->add_option("--n", on)->required();
    orc->add_option("--l", ol)->required();
    orc->add_option("--k", ok)->required();
    orc->add_option("--threads", threads, "OpenMP thread count (0 = default)");

    // table
    auto* tab = app.add_subcommand("table", "oracle vs closed forms over a grid");
    int kmax = 4, lmax = 6, nmax = 9;
    bool csv = false;
    tab->add_option("--kmax", kmax)->required();
    tab->add_option("--lmax", lmax)->required();
    tab->add_option("--nmax", nmax)->required();
    tab->add_flag("--csv", csv, "CSV output");
    tab->add_option("--threads", threads, "OpenMP thread count (0 = default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (fac->parsed()) {
            if (sopt->count() == 0 && ropt->count() == 0)
                throw cyclefact::error(cyclefact::errc::bad_input,
                                       "factor needs --sigma or --random");
            return cmd_factor(n, k, l, sigma_text, ropt->count() > 0, seed, json, out_path);
        }
        if (ver->parsed())
            return cmd_verify(cert_path);
        if (bnd->parsed())
            return cmd_bound(bk, bl);
        if (orc->parsed())
            return cmd_oracle(on, ol, ok, threads);
        if (tab->parsed())
            return cmd_table(kmax, lmax, nmax, csv, threads);
    } catch (const cyclefact::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
