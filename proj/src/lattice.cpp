#include "npg/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace npg::lattice {

long long coord_sum(const Point& u) {
    return std::accumulate(u.begin(), u.end(), 0LL);
}

Rat degree(const Point& u, int d) { return Rat(coord_sum(u), d); }

long long ceil_degree(const Point& u, int d) { return ceil_div(coord_sum(u), d); }

bool is_fundamental(const Point& u, int d) {
    for (int c : u)
        if (c <= 0 || c >= d) return false;
    return true;
}

static void check_params(int n, int d) {
    if (n < 1) throw std::invalid_argument("lattice: n must be >= 1");
    if (d < 2) throw std::invalid_argument("lattice: d must be >= 2");
}

std::vector<Point> fundamental_points(int n, int d) {
    check_params(n, d);
    std::vector<Point> out;
    Point u(n, 1);
    while (true) {
        out.push_back(u);
        int i = n - 1;
        while (i >= 0 && u[i] == d - 1) u[i--] = 1;
        if (i < 0) break;
        ++u[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> hodge_numbers(int n, int d) {
    check_params(n, d);
    std::vector<long long> h(static_cast<size_t>(n) * d + 1, 0);
    for (const Point& u : fundamental_points(n, d)) ++h[coord_sum(u)];
    return h;
}

std::vector<long long> hodge_sums(int n, int d) {
    std::vector<long long> h = hodge_numbers(n, d);
    std::vector<long long> H(h.size(), 0);
    for (size_t i = 0; i < h.size(); ++i)
        for (long long j = static_cast<long long>(i); j >= 0; j -= d) H[i] += h[j];
    return H;
}

long long hodge_sum_at(const std::vector<long long>& H, long long i) {
    if (i < 0) return 0;
    if (i >= static_cast<long long>(H.size()))
        throw std::out_of_range("hodge_sum_at: index above nd");
    return H[i];
}

static long long mod_inverse(long long a, long long m) {
    long long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
    while (new_r != 0) {
        long long q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw std::invalid_argument("frobenius_conjugate: gcd(p,d) != 1");
    return ((t % m) + m) % m;
}

int frobenius_conjugate(long long i, long long l, int d, int p) {
    long long pinv = mod_inverse(p, d);
    // sigma_i(l) = i - p^{-1}(i-l) mod d.
    long long v = (i % d - pinv * (((i - l) % d + d) % d)) % d;
    v = ((v % d) + d) % d;
    bool trivial = (static_cast<long long>(p - 1) * (i % d)) % d == 0;
    if (trivial && v == 0) return d;
    return static_cast<int>(v);
}

Rat frobenius_slope(int d, int p, long long j, int eps) {
    if (eps != 0 && eps != 1) throw std::invalid_argument("frobenius_slope: eps must be 0 or 1");
    return Rat(ceil_div(static_cast<long long>(p - 1) * j, d) - eps, p - 1);
}

bool FrobeniusData::is_frobenius_vertex(long long k) const {
    return std::binary_search(frobenius_vertices.begin(), frobenius_vertices.end(), k);
}

FrobeniusData frobenius_data(int n, int d, int p) {
    check_params(n, d);
    if (std::gcd(p, d) != 1) throw std::invalid_argument("frobenius_data: gcd(p,d) != 1");
    FrobeniusData fd;
    fd.n = n;
    fd.d = d;
    fd.p = p;
    fd.h = hodge_numbers(n, d);
    fd.H = hodge_sums(n, d);
    long long nd = static_cast<long long>(n) * d;
    fd.hsplit.assign(nd + 1, {0, 0});
    for (long long j = 0; j <= nd; ++j) {
        long long s = frobenius_conjugate(j, 0, d, p);
        fd.hsplit[j][0] = hodge_sum_at(fd.H, j) - hodge_sum_at(fd.H, j - s);
        fd.hsplit[j][1] = hodge_sum_at(fd.H, j - s) - hodge_sum_at(fd.H, j - d);
    }

    std::vector<long long> hv{0};
    long long acc = 0;
    for (long long j = 0; j <= nd; ++j) {
        acc += fd.h[j];
        hv.push_back(acc);
    }
    std::sort(hv.begin(), hv.end());
    hv.erase(std::unique(hv.begin(), hv.end()), hv.end());
    fd.hodge_vertices = std::move(hv);

    // Cuts ordered by the key 2j - eps: (j,1) precedes (j,0).
    acc = 0;
    std::vector<long long> fv{0};
    for (long long j = 0; j <= nd; ++j) {
        for (int eps : {1, 0}) {
            acc += fd.hsplit[j][eps];
            fd.vertex_refs.push_back({acc, j, eps == 1 ? 1 : 0});
            fv.push_back(acc);
        }
    }
    std::sort(fv.begin(), fv.end());
    fv.erase(std::unique(fv.begin(), fv.end()), fv.end());
    fd.frobenius_vertices = std::move(fv);
    return fd;
}

std::vector<Point> stratum(int n, int d, long long j) {
    std::vector<Point> out;
    for (Point& u : fundamental_points(n, d))
        if (coord_sum(u) == j) out.push_back(std::move(u));
    return out;
}

std::pair<std::vector<Point>, std::vector<Point>> stratum_split(int d, long long j) {
    if (d % 2 != 0) throw std::invalid_argument("stratum_split: d must be even");
    if (!(d - j <= j && j <= d))
        throw std::invalid_argument("stratum_split: requires d-j <= j <= d");
    std::vector<Point> w0, w1;
    for (Point& u : stratum(2, d, j)) {
        if (u[0] < d / 2 && u[1] < d / 2)
            w1.push_back(std::move(u));
        else
            w0.push_back(std::move(u));
    }
    return {std::move(w0), std::move(w1)};
}

}  // namespace npg::lattice
