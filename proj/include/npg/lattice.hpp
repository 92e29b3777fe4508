#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "npg/rational.hpp"

namespace npg::lattice {

// A lattice point of N^n, small coordinates.
using Point = std::vector<int>;

long long coord_sum(const Point& u);

// deg(u) = (u_1 + ... + u_n)/d as an exact rational.
Rat degree(const Point& u, int d);

// ceil(deg(u)) as a machine integer.
long long ceil_degree(const Point& u, int d);

bool is_fundamental(const Point& u, int d);

// All points of (0,d)^n, sorted lexicographically. Throws on n < 1 or d < 2.
std::vector<Point> fundamental_points(int n, int d);

// h_j, j = 0..nd: number of fundamental points of coordinate sum j.
std::vector<long long> hodge_numbers(int n, int d);

// H_i = sum_{j=0}^{[i/d]} h_{i-jd}, i = 0..nd.
std::vector<long long> hodge_sums(int n, int d);

// H_i with the H_{<0} = 0 convention.
long long hodge_sum_at(const std::vector<long long>& H, long long i);

// sigma_i(l): the i-th conjugate of Frobenius evaluated at l (mod d).
// Values land in {0,..,d-1} when (p-1)i != 0 (mod d) and in {1,..,d} when
// (p-1)i == 0 (mod d). Requires gcd(p,d) = 1.
int frobenius_conjugate(long long i, long long l, int d, int p);

// Frobenius slope w_{j,eps} = (ceil((p-1)j/d) - eps)/(p-1).
Rat frobenius_slope(int d, int p, long long j, int eps);

struct FrobeniusData {
    int n = 0, d = 0, p = 0;
    std::vector<long long> h;                        // 0..nd
    std::vector<long long> H;                        // 0..nd
    std::vector<std::array<long long, 2>> hsplit;    // hsplit[j][eps]
    std::vector<long long> hodge_vertices;           // sorted, unique
    std::vector<long long> frobenius_vertices;       // sorted, unique

    // One entry per cut (i,iota): k = sum_{2j-eps <= 2i-iota} h_{j,eps}.
    struct VertexRef {
        long long k;
        long long i;
        int iota;
    };
    std::vector<VertexRef> vertex_refs;

    Rat slope(long long j, int eps) const { return frobenius_slope(d, p, j, eps); }
    bool is_frobenius_vertex(long long k) const;
};

FrobeniusData frobenius_data(int n, int d, int p);

// W_j for arbitrary n: fundamental points of degree j/d, sorted.
std::vector<Point> stratum(int n, int d, long long j);

// The n=2 split W_j = W_{j,0} u W_{j,1} with W_{j,1} = {u : u_1,u_2 < d/2}.
// Only defined for even d and d-j <= j <= d; throws otherwise.
std::pair<std::vector<Point>, std::vector<Point>> stratum_split(int d, long long j);

}  // namespace npg::lattice
