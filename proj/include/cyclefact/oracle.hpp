#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclefact/engine.hpp"
#include "cyclefact/perm.hpp"

namespace cyclefact {

/// Lehmer-code (factorial number system) rank in [0, n!); n <= 20.
std::uint64_t rank(const Perm& p);
Perm unrank(std::uint64_t i, int n);

/// Outcome of the exhaustive set-product computation of C_l^k over S_n.
struct ReachReport {
    int n = 0;
    int l = 0;
    int k = 0;
    bool covered = false;          // C_l^k = A_n?
    std::uint64_t reached_count = 0;
    std::optional<Perm> witness_missing; // smallest-rank unreached even element
};

/// Breadth-first set product R_{j+1} = R_j * C_l over ranks of one coset;
/// membership is bit-indexed by rank/2 (the factorial-code prefix), so only
/// n!/2 bits are kept. Guarded to n <= 9. Frontier expansion runs across
/// OpenMP threads; bit marking is idempotent, so the result is schedule
/// independent.
ReachReport class_power_reach(int n, int l, int k, int threads = 0);

/// Single-threaded reference implementation of the same computation.
ReachReport class_power_reach_serial(int n, int l, int k);

struct ExactScan {
    int value = 0;                          // largest covered n, 0 if none
    std::vector<std::pair<int, bool>> per_n; // coverage per scanned n
    bool monotone = true;                    // false if coverage resumes after a gap
};

/// Largest n <= n_max with C_l^k = A_n. Exhaustive for 3 <= k (n_max <= 9);
/// k = 2 is decided per cycle type by the two-cycle criterion instead.
ExactScan exact_n_scan(int k, int l, int n_max);
int exact_n_oracle(int k, int l, int n_max);

/// Recompose the certificate independently of the engine and check the
/// product, the factor count, and that every factor is an l-cycle.
bool verify(const FactorizationCertificate& cert, std::string* diagnostic = nullptr);

struct TableRow {
    int k = 0;
    int l = 0;
    int oracle_value = 0;
    std::optional<long long> closed_form;
    std::optional<Provenance> closed_provenance;
    std::optional<long long> upper;
    std::optional<bool> agree; // absent when no closed form applies
};

/// Cross-tabulate the oracle against the closed forms and upper bounds for
/// 2 <= k <= k_max, 2 <= l <= l_max (rows where n(k,l) is defined).
std::vector<TableRow> table(int k_max, int l_max, int n_max, int threads = 0);

std::string format_table(const std::vector<TableRow>& rows, bool csv);

} // namespace cyclefact
