#include "npg/premium.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace npg::premium {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

int perm_parity(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int parity = 0;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = 1;
            j = perm[j];
            ++len;
        }
        parity ^= static_cast<int>((len - 1) & 1);
    }
    return parity ? -1 : 1;
}
}  // namespace

int sign(const TwistedPermutation& tau) {
    int s = 1;
    for (const auto& layer : tau.maps) s *= perm_parity(layer);
    return s;
}

long long premium_cost(const Point& u, const Point& v, int p, int d) {
    if (u.size() != v.size()) throw std::invalid_argument("premium_cost: dimension mismatch");
    for (size_t i = 0; i < u.size(); ++i)
        if (static_cast<long long>(p) * u[i] - v[i] < 0)
            throw std::domain_error("premium_cost: p*u - v has a negative coordinate");
    return ceil_div(static_cast<long long>(p) * lattice::coord_sum(u) - lattice::coord_sum(v), d);
}

Rat premium_of_permutation(const PointTuple& A, const TwistedPermutation& tau, int p, int d) {
    size_t a = A.size();
    if (tau.maps.size() != a) throw std::invalid_argument("premium: tuple/permutation mismatch");
    long long total = 0;
    for (size_t l = 0; l < a; ++l) {
        const PointSet& from = A[l];
        const PointSet& to = A[(l + a - 1) % a];
        if (from.size() != to.size() || tau.maps[l].size() != from.size())
            throw std::invalid_argument("premium: layers must have equal cardinality");
        std::vector<char> hit(to.size(), 0);
        for (size_t i = 0; i < from.size(); ++i) {
            int img = tau.maps[l][i];
            if (img < 0 || img >= static_cast<int>(to.size()) || hit[img])
                throw std::invalid_argument("premium: layer map is not a bijection");
            hit[img] = 1;
            total += premium_cost(from[i], to[img], p, d);
        }
    }
    return Rat(total, static_cast<long long>(a) * (p - 1));
}

long long hungarian_min_cost(const std::vector<std::vector<long long>>& cost) {
    int n = static_cast<int>(cost.size());
    if (n == 0) return 0;
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<long long> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = 0;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if (delta >= kInf / 2) return kInf;  // infeasible under mask
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    long long total = 0;
    for (int j = 1; j <= n; ++j)
        if (p[j]) total += cost[p[j] - 1][j - 1];
    return total;
}

AssignmentEnum enumerate_min_assignments(const std::vector<std::vector<long long>>& cost,
                                         const std::vector<std::vector<char>>* mask,
                                         std::optional<long long> target) {
    int n = static_cast<int>(cost.size());
    auto allowed = [&](int r, int c) { return !mask || (*mask)[r][c]; };
    std::vector<std::vector<long long>> masked(n, std::vector<long long>(n, kInf));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (allowed(r, c)) masked[r][c] = cost[r][c];

    AssignmentEnum out;
    long long mmin = hungarian_min_cost(masked);
    if (mmin >= kInf / 2) return out;  // no allowed matching at all
    out.feasible = true;
    out.min_cost = mmin;
    long long T = target.value_or(mmin);
    if (T < mmin) return out;  // nothing that cheap exists

    std::vector<int> perm(n, -1);
    std::vector<char> used(n, 0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);

    std::function<void(int, long long)> dfs = [&](int depth, long long partial) {
        if (depth == n) {
            if (partial == T) out.perms.push_back(perm);
            return;
        }
        // Cheap completion bound: every remaining row needs at least its
        // cheapest free allowed column.
        long long bound = partial;
        for (int rr = depth; rr < n; ++rr) {
            long long best = kInf;
            int r = order[rr];
            for (int c = 0; c < n; ++c)
                if (!used[c] && allowed(r, c)) best = std::min(best, cost[r][c]);
            if (best >= kInf / 2) return;
            bound += best;
            if (bound > T) return;
        }
        int r = order[depth];
        for (int c = 0; c < n; ++c) {
            if (used[c] || !allowed(r, c)) continue;
            if (partial + cost[r][c] > T) continue;
            used[c] = 1;
            perm[r] = c;
            dfs(depth + 1, partial + cost[r][c]);
            used[c] = 0;
            perm[r] = -1;
        }
    };
    dfs(0, 0);
    return out;
}

AssignmentEnum brute_min_assignments(const std::vector<std::vector<long long>>& cost) {
    int n = static_cast<int>(cost.size());
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (fact > 1000000)
        throw std::invalid_argument("brute_min_assignments: layer size exceeds the n! <= 1e6 guard");
    AssignmentEnum out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    out.min_cost = kInf;
    do {
        long long total = 0;
        for (int r = 0; r < n; ++r) total += cost[r][perm[r]];
        if (total < out.min_cost) {
            out.min_cost = total;
            out.perms.clear();
        }
        if (total == out.min_cost) out.perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n == 0) {
        out.min_cost = 0;
        out.perms = {{}};
    }
    out.feasible = true;
    return out;
}

std::vector<std::vector<long long>> layer_cost_matrix(const PointSet& from, const PointSet& to,
                                                      int p, int d) {
    if (from.size() != to.size())
        throw std::invalid_argument("layer_cost_matrix: set sizes differ");
    std::vector<std::vector<long long>> cost(from.size(), std::vector<long long>(to.size(), 0));
    for (size_t i = 0; i < from.size(); ++i)
        for (size_t j = 0; j < to.size(); ++j) cost[i][j] = premium_cost(from[i], to[j], p, d);
    return cost;
}

TuplePremium premium_of_tuple(const PointTuple& A, int p, int d, MinMode mode) {
    size_t a = A.size();
    if (a == 0) throw std::invalid_argument("premium_of_tuple: empty tuple");
    long long total = 0;
    std::vector<std::vector<std::vector<int>>> layer_minima(a);
    for (size_t l = 0; l < a; ++l) {
        auto cost = layer_cost_matrix(A[l], A[(l + a - 1) % a], p, d);
        AssignmentEnum res = mode == MinMode::Brute ? brute_min_assignments(cost)
                                                    : enumerate_min_assignments(cost);
        total += res.min_cost;
        layer_minima[l] = std::move(res.perms);
    }
    TuplePremium out;
    out.value = Rat(total, static_cast<long long>(a) * (p - 1));
    // Sym_0 is separable: the cartesian product of the per-layer argmin sets.
    size_t count = 1;
    for (const auto& lm : layer_minima) {
        count *= lm.size();
        if (count > 1000000) throw std::runtime_error("premium_of_tuple: argmin set too large");
    }
    std::vector<size_t> idx(a, 0);
    while (true) {
        TwistedPermutation tau;
        tau.maps.reserve(a);
        for (size_t l = 0; l < a; ++l) tau.maps.push_back(layer_minima[l][idx[l]]);
        out.minimizers.push_back(std::move(tau));
        size_t l = 0;
        while (l < a && ++idx[l] == layer_minima[l].size()) idx[l++] = 0;
        if (l == a) break;
    }
    return out;
}

Rat premium_value(const PointTuple& A, int p, int d) {
    size_t a = A.size();
    if (a == 0) throw std::invalid_argument("premium_value: empty tuple");
    long long total = 0;
    for (size_t l = 0; l < a; ++l)
        total += hungarian_min_cost(layer_cost_matrix(A[l], A[(l + a - 1) % a], p, d));
    return Rat(total, static_cast<long long>(a) * (p - 1));
}

std::vector<PointSet> sf_enumerate(long long k, int n, int d, SfMode mode) {
    std::vector<Point> fund = lattice::fundamental_points(n, d);
    long long total = static_cast<long long>(fund.size());
    if (k < 0 || k > total) throw std::invalid_argument("sf_enumerate: k out of range");
    std::vector<PointSet> out;
    if (mode == SfMode::All) {
        std::vector<char> pick(total, 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        // enumerate combinations via prev_permutation on the selector
        do {
            PointSet s;
            for (long long i = 0; i < total; ++i)
                if (pick[i]) s.push_back(fund[i]);
            out.push_back(std::move(s));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return out;
    }
    // Minimal degree: union of the strata below i plus any (k - |base|)-subset of W_i.
    std::vector<long long> h = lattice::hodge_numbers(n, d);
    long long i = 0, below = 0;
    while (below + h[i] < k) below += h[i++];
    PointSet base;
    for (const Point& u : fund)
        if (lattice::coord_sum(u) < i) base.push_back(u);
    std::vector<Point> wi = lattice::stratum(n, d, i);
    long long need = k - below;
    std::vector<char> pick(wi.size(), 0);
    std::fill(pick.begin(), pick.begin() + need, 1);
    do {
        PointSet s = base;
        for (size_t j = 0; j < wi.size(); ++j)
            if (pick[j]) s.push_back(wi[j]);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    return out;
}

Rat premium_at(long long k, int n, int d, int p, int a, SfMode family) {
    if (p <= d) throw std::invalid_argument("premium_at: requires p > d");
    if (a < 1) throw std::invalid_argument("premium_at: a >= 1");
    long long total_points = 1;
    for (int i = 0; i < n; ++i) total_points *= d - 1;
    if (family == SfMode::All && total_points > 9)
        throw std::invalid_argument("premium_at: (d-1)^n > 9 is out of budget in all mode");
    std::vector<PointSet> fam = sf_enumerate(k, n, d, family);
    size_t s = fam.size();
    // memoized per (source set, target set) assignment minimum
    std::map<std::pair<size_t, size_t>, long long> memo;
    auto pair_cost = [&](size_t from, size_t to) {
        auto key = std::make_pair(from, to);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        long long v = hungarian_min_cost(layer_cost_matrix(fam[from], fam[to], p, d));
        memo.emplace(key, v);
        return v;
    };
    long long best = kInf;
    std::vector<size_t> idx(a, 0);
    while (true) {
        long long tot = 0;
        for (int l = 0; l < a; ++l) tot += pair_cost(idx[l], idx[(l + a - 1) % a]);
        best = std::min(best, tot);
        int l = 0;
        while (l < a && ++idx[l] == s) idx[l++] = 0;
        if (l == a) break;
    }
    return Rat(best, static_cast<long long>(a) * (p - 1));
}

Polygon premium_polygon(int n, int d, int p, int a, SfMode family) {
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= d - 1;
    std::vector<HullPoint> pts;
    for (long long k = 0; k <= total; ++k)
        pts.push_back({k, premium_at(k, n, d, p, a, family)});
    return lower_hull(std::move(pts));
}

}  // namespace npg::premium
