#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclefact/perm.hpp"

namespace cyclefact {

/// Ordered list of cycles of one common length l. The product is taken
/// right to left: factors[k-1] applies first.
struct FactorList {
    int degree = 0;
    int length = 0; // common cycle length l
    std::vector<Cycle> factors;

    int count() const noexcept { return static_cast<int>(factors.size()); }
    Perm product() const;
};

Perm product_of(const std::vector<Cycle>& factors, int degree);

/// Can sigma be written as C1*C2 with cycle lengths l1 >= l2?
/// True iff sigma is exactly a disjoint l1-cycle times l2-cycle, or
/// l1+l2 >= m+nc with matching parity and l1-l2 <= m-nc.
bool two_cycle_feasible(const Perm& sigma, int l1, int l2);

/// Diagnostic form: empty string when feasible, else the failing condition.
std::string two_cycle_infeasible_reason(const Perm& sigma, int l1, int l2);

/// Deterministic construction of sigma = C1*C2 with lengths (l1, l2).
/// Splices the disjoint cycles of sigma into two crossing arcs; surplus
/// length is absorbed by fixed-point relays first and by revisiting
/// support cycles when no fixed points remain. Verifies by composition.
std::pair<Cycle, Cycle> two_cycle_factor(const Perm& sigma, int l1, int l2);

/// Split a cycle of length l+(t-1)(l-1) into t l-cycles, consecutive
/// factors overlapping in exactly one point.
FactorList chain_factor(const Cycle& c, int l, int t);

/// Rewrite a product of two disjoint even-length cycles (2d, 2e) as
/// [A, T1, T2, B] with A a (2d-1)-cycle, T1/T2 3-cycles, B a (2e-1)-cycle.
/// Identity placeholders (d=1 or e=1) are elided from the returned list.
std::vector<Cycle> merge_even_pair(const Cycle& c1, const Cycle& c2);

/// Grow a factor list to k_target factors with the same product.
/// Odd l: each +1 step rewrites the last factor as two l-cycles.
/// Even l: appends (c, c~) pairs; k_target must match count mod 2.
FactorList pad(const FactorList& f, int k_target);

/// Same product and count, factor length l+steps. Even counts lengthen
/// pairwise through two_cycle_factor; odd counts refactor the product
/// at the longer length (steps must then be even).
FactorList lengthen(const FactorList& f, int steps);

/// For disjoint odd permutations rho, phi: multiply both by the
/// transposition joining their smallest support points, giving even
/// parts with the same product.
std::pair<Perm, Perm> parity_bridge(const Perm& rho, const Perm& phi);

/// Best-effort uniform factorization of sigma into exactly k l-cycles by
/// the minimal chainable split: find the smallest s with a feasible pair
/// of chainable lengths summing over s factors, then pad to k.
/// Returns nullopt when no split fits within degree and count.
std::optional<FactorList> plan_uniform(const Perm& sigma, int k, int l,
                                       std::vector<std::string>* trace = nullptr);

} // namespace cyclefact
