#pragma once

#include <optional>
#include <string>

namespace cyclefact {

/// Source theorem for a closed-form value; printable for certificates
/// and CLI output.
enum class Provenance {
    theorem_a,     // n(k,3) = 2k+1
    theorem_b,     // n(k,l) = 2kl/3 + 1 for even k, 3|l, l > 3
    theorem_1_7,   // n(k,l) = 2kl/3 for odd k, 3|l, l >= 9 odd
    corollary_1_2, // n(2,l) = floor(4l/3) + 1
    corollary_1_4, // n(3,l) = 2l for odd l > 3
    corollary_1_6, // n(4,l) = 8l/3 + 1 for 3|l
    theorem_1_1,   // k = 2 feasibility thresholds (incl. n=4, l=2)
    theorem_1_3,   // k = 3 feasibility thresholds
    theorem_1_5,   // k = 4 feasibility thresholds (incl. n=6, l=2)
    theorem_2_1,   // general upper bound via n1 mod 4
};

std::string to_string(Provenance p);

/// Upper-bound report for n(k,l): n1 = floor(2kl/3), delta = 2kl/3 - n1
/// (kept exact as a numerator over 3), the n1 mod 4 case split, and the
/// exact value when a closed form applies.
struct BoundReport {
    int k = 0;
    int l = 0;
    long long n1 = 0;
    int delta_num = 0; // delta = delta_num / 3, in {0, 1/3, 2/3}
    int residue = 0;   // n1 mod 4
    long long upper = 0;
    std::optional<long long> exact;
    std::optional<Provenance> exact_provenance;
};

/// General upper bound for n(k,l) by the n1 mod 4 case analysis,
/// including the l > 3, delta in {0, 1/3} refinement at residue 2.
/// Requires k >= 2, l > 2, and l odd or k even.
BoundReport upper_bound(int k, int l);

/// Closed-form exact value of n(k,l) where one is proven; absent in the
/// regimes the source theorems leave open (e.g. odd k >= 5 with 3∤l).
std::optional<std::pair<long long, Provenance>> exact_n(int k, int l);

/// C_l^2 = A_n  iff  floor(3n/4) <= l <= n, or n=4 and l=2.
bool feasible_k2(int n, int l);

/// C_l^3 = A_n  iff  l odd and (ceil(n/2) <= l <= n, or n=7 and l=3).
bool feasible_k3(int n, int l);

/// C_l^4 = A_n  iff  the mod-8 threshold holds, or n=6 and l=2.
bool feasible_k4(int n, int l);

/// Largest n with feasible_k4(n, l); used as the engine budget at k=4.
int max_n_k4(int l);

} // namespace cyclefact
