#pragma once

#include <optional>
#include <vector>

#include "npg/lattice.hpp"
#include "npg/polygon.hpp"

namespace npg::premium {

using lattice::Point;
using PointSet = std::vector<Point>;    // sorted lex, distinct
using PointTuple = std::vector<PointSet>;

// tau_l maps A_l onto A_{l-1} (layer indices cyclic). maps[l][i] is the index
// into A_{l-1} of the image of A_l[i]; every layer is stored against the
// lexicographic order of its set, which fixes the sign convention.
struct TwistedPermutation {
    std::vector<std::vector<int>> maps;

    bool operator==(const TwistedPermutation&) const = default;
};

// Product over layers of the parity of the index permutation.
int sign(const TwistedPermutation& tau);

// ceil(deg(p*u - v)); rejects negative coordinates (p <= d misuse).
long long premium_cost(const Point& u, const Point& v, int p, int d);

Rat premium_of_permutation(const PointTuple& A, const TwistedPermutation& tau, int p, int d);

long long hungarian_min_cost(const std::vector<std::vector<long long>>& cost);

// Every perfect matching of the given exact cost (default: the minimum over
// matchings using allowed edges only). `mask`, when given, restricts edges.
struct AssignmentEnum {
    bool feasible = false;
    long long min_cost = 0;                 // min over allowed matchings
    std::vector<std::vector<int>> perms;    // all matchings of the target cost
};
AssignmentEnum enumerate_min_assignments(const std::vector<std::vector<long long>>& cost,
                                         const std::vector<std::vector<char>>* mask = nullptr,
                                         std::optional<long long> target = std::nullopt);

// Exhaustive factorial-time reference: guarded to n! <= 10^6.
AssignmentEnum brute_min_assignments(const std::vector<std::vector<long long>>& cost);

enum class MinMode { Brute, Assignment };

struct TuplePremium {
    Rat value;
    std::vector<TwistedPermutation> minimizers;  // the full set Sym_0^(1)(A)
};
TuplePremium premium_of_tuple(const PointTuple& A, int p, int d, MinMode mode);

// Minimum only (per-layer assignment solver), no argmin enumeration.
Rat premium_value(const PointTuple& A, int p, int d);

std::vector<std::vector<long long>> layer_cost_matrix(const PointSet& from, const PointSet& to,
                                                      int p, int d);

enum class SfMode { All, MinimalDegree };

// SF(k) or SF_0(k) as sorted point sets.
std::vector<PointSet> sf_enumerate(long long k, int n, int d, SfMode mode);

// Prem(k) = min over the chosen family of a-tuples.
Rat premium_at(long long k, int n, int d, int p, int a, SfMode family = SfMode::All);

// Lower hull of {(k, Prem(k))}.
Polygon premium_polygon(int n, int d, int p, int a, SfMode family = SfMode::All);

}  // namespace npg::premium
