#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclefact/bounds.hpp"
#include "cyclefact/calculus.hpp"
#include "cyclefact/perm.hpp"

namespace cyclefact {

/// Self-verifying witness that target is a product of k l-cycles in S_n.
struct FactorizationCertificate {
    int n = 0;
    int k = 0;
    int l = 0;
    Perm target = Perm(1);
    FactorList factors;
    std::vector<std::string> provenance;
};

/// Disjoint two-part decomposition produced by the splitting routines.
/// phi is the large part, tau the small one; epsilon in {0,1} records
/// which of the two admissible small-part sizes was realized.
struct SplitPair {
    Perm phi = Perm(1);
    Perm tau = Perm(1);
    int epsilon = 0;
    int phi_support = 0;
    int tau_support = 0;
};

/// Write an even sigma with support <= 2k+1 as a product of k 3-cycles.
FactorizationCertificate factor3(const Perm& sigma, int k);

/// For fixed-point-free even sigma of degree 2kl/3+1 (3|l, l >= 9, even
/// k >= 6) with many cycles, peel off an even tau supported on exactly
/// 4l/3+1-epsilon points, built from whole cycles of dcd*(sigma).
SplitPair split_tau(const Perm& sigma, int k, int l);

/// For even degree n and n_sigma > (n+1)/3: split sigma into nontrivial
/// disjoint parts with supports <= m and <= n-m (m even, 2 <= m <= n-2).
/// tau is the part capped by m, phi the one capped by n-m.
SplitPair split_support(const Perm& sigma, int m);

/// Few-cycles workhorse: sigma with n_sigma <= (n+2)/3 (for k >= 3) as k
/// l-cycles via the minimal chainable two-cycle split.
FactorizationCertificate factor_aux(const Perm& sigma, int k, int l, int n);

/// Product of k 6-cycles for even sigma in degree 6 <= n <= 4k+1, k even.
FactorizationCertificate factor6(const Perm& sigma, int k, int n);

/// Top-level dispatcher over every proven regime; rejects parameters the
/// source theorems do not cover with an out-of-range error.
FactorizationCertificate factor(const Perm& sigma, int k, int l, int n);

/// Largest support the engine can certify at (k, l); nullopt when no
/// implemented theorem covers the pair.
std::optional<long long> coverage_budget(int k, int l);

} // namespace cyclefact
