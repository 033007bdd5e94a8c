#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cyclefact/error.hpp"

namespace cyclefact {

/// Permutation of {1..n} with an explicit ambient degree n.
///
/// Composition is executed right to left throughout the library:
/// compose(p, q) applies q first, then p. Points are 1-based.
/// The same cycle list at different degrees compares unequal.
class Perm {
public:
    /// Identity on {1..degree}.
    explicit Perm(int degree);

    /// From an image table: images[i-1] is the image of point i.
    Perm(int degree, std::vector<int> images);

    static Perm identity(int degree) { return Perm(degree); }

    int degree() const noexcept { return degree_; }

    /// Image of point x (1-based).
    int operator()(int x) const { return img_[static_cast<size_t>(x) - 1]; }

    bool is_identity() const;

    Perm inverse() const;

    const std::vector<int>& images() const noexcept { return img_; }

    friend bool operator==(const Perm&, const Perm&) = default;

private:
    int degree_;
    std::vector<int> img_;
};

/// result(x) = p(q(x)); degrees must match.
Perm compose(const Perm& p, const Perm& q);

/// Cyclic permutation given by >= 2 distinct points within degree n.
struct Cycle {
    int degree = 0;
    std::vector<int> points;

    Cycle() = default;
    Cycle(int degree, std::vector<int> pts);

    int length() const noexcept { return static_cast<int>(points.size()); }

    Perm as_perm() const;

    /// Rotated so the smallest point comes first.
    Cycle canonical() const;

    Cycle inverse() const;

    bool same_permutation(const Cycle& other) const;
};

/// dcd*: nontrivial disjoint cycles plus the support statistics.
struct CycleDecomposition {
    std::vector<Cycle> cycles;   // canonical rotations, ordered by smallest point
    int support = 0;             // m: number of moved points
    int cycle_count = 0;         // nc: number of cycles
    std::map<int, int> histogram; // length -> multiplicity
};

/// Canonical disjoint cycle decomposition; identity yields the empty one.
CycleDecomposition dcd_star(const Perm& p);

/// Rebuild the permutation from disjoint cycles at the given degree.
Perm recompose(const CycleDecomposition& d, int degree);

int support_size(const Perm& p);

/// True iff m + nc is even (equivalently: even number of transpositions).
bool is_even(const Perm& p);

/// True iff every point of {1..degree} is moved.
bool is_fixed_point_free(const Perm& p);

/// Cycle-notation text, e.g. "(1 2 3)(4 5)"; identity formats as "id".
std::string format_perm(const Perm& p);
std::string format_cycle(const Cycle& c);

/// Parse cycle notation at a fixed degree. Accepts "id" and "()" for the
/// identity and an optional "deg=N;" prefix (which must then match n).
/// Cycles in the input must be disjoint; rotations are accepted.
Perm parse_perm(std::string_view text, int n);

} // namespace cyclefact
