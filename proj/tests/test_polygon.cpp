#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "npg/lattice.hpp"
#include "npg/polygon.hpp"

using namespace npg;

namespace {
std::vector<int> primes_below(int bound) {
    std::vector<int> ps;
    for (int p = 2; p < bound; ++p) {
        bool prime = p >= 2;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (prime) ps.push_back(p);
    }
    return ps;
}
}  // namespace

TEST_CASE("construction canonicalizes") {
    Polygon P = Polygon::from_slopes({{Rat(1), 2}, {Rat(2, 3), 1}, {Rat(4, 3), 1}});
    CHECK(P.segments() ==
          std::vector<Polygon::Segment>{{Rat(2, 3), 1}, {Rat(1), 2}, {Rat(4, 3), 1}});
    CHECK(Polygon::from_slopes({}).length() == 0);
    Polygon M = Polygon::from_slopes({{Rat(1, 2), 1}, {Rat(1, 2), 1}});
    CHECK(M.segments() == std::vector<Polygon::Segment>{{Rat(1, 2), 2}});
    CHECK(Polygon::from_slopes({{Rat(1), 0}}).segments().empty());
    CHECK_THROWS_AS(Polygon::from_slopes({{Rat(1), -1}}), std::invalid_argument);
}

TEST_CASE("evaluation") {
    Polygon HP = hodge_polygon(2, 3);
    CHECK(HP.evaluate(1) == Rat(2, 3));
    CHECK(HP.evaluate(0) == 0);
    CHECK(HP.evaluate(4) == 4);
    CHECK(HP.evaluate(Rat(1, 2)) == Rat(1, 3));
    CHECK_THROWS_AS(HP.evaluate(5), std::out_of_range);
    CHECK_THROWS_AS(HP.evaluate(-1), std::out_of_range);
}

TEST_CASE("hodge polygon") {
    Polygon HP = hodge_polygon(2, 3);
    CHECK(HP.segments() ==
          std::vector<Polygon::Segment>{{Rat(2, 3), 1}, {Rat(1), 2}, {Rat(4, 3), 1}});
    CHECK(hodge_polygon(1, 2).segments() == std::vector<Polygon::Segment>{{Rat(1, 2), 1}});
    for (int n = 1; n <= 3; ++n)
        for (int d = 2; d <= 6; ++d) {
            Polygon P = hodge_polygon(n, d);
            long long dn = 1;
            for (int i = 0; i < n; ++i) dn *= d - 1;
            CHECK(P.length() == dn);
            CHECK(P.height() == Rat(dn) * Rat(n, 2));
            // slope s and n-s have the same multiplicity
            for (const auto& [s, m] : P.segments()) CHECK(P.multiplicity(Rat(n) - s) == m);
        }
}

TEST_CASE("frobenius polygon") {
    Polygon F = frobenius_polygon(2, 3, 5);
    CHECK(F.segments() ==
          std::vector<Polygon::Segment>{{Rat(3, 4), 1}, {Rat(1), 2}, {Rat(5, 4), 1}});
    Polygon F2 = frobenius_polygon(2, 4, 11);
    CHECK(F2.segments() ==
          std::vector<Polygon::Segment>{{Rat(1, 2), 1},
                                        {Rat(4, 5), 2},
                                        {Rat(1), 3},
                                        {Rat(6, 5), 2},
                                        {Rat(3, 2), 1}});
    CHECK(frobenius_polygon(2, 3, 7) == hodge_polygon(2, 3));
    // d = 2 stays sorted for every odd p, including p = d+1 = 3
    CHECK(frobenius_polygon(1, 2, 3) == hodge_polygon(1, 2));
}

TEST_CASE("compare") {
    Polygon HP = hodge_polygon(2, 3);
    CHECK(compare(frobenius_polygon(2, 3, 5), HP) == PolygonOrder::GreaterEqual);
    CHECK(compare(HP, HP) == PolygonOrder::Equal);
    CHECK(compare(frobenius_polygon(2, 3, 7), HP) == PolygonOrder::Equal);
    CHECK_THROWS_AS(compare(HP, hodge_polygon(1, 2)), std::invalid_argument);
}

TEST_CASE("FP >= HP sweep, equality exactly at p = 1 mod d") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 2; d <= 6; ++d) {
            Polygon HP = hodge_polygon(n, d);
            for (int p : primes_below(60)) {
                if (std::gcd(p, d) != 1 || p <= d + 1) continue;
                Polygon FP = frobenius_polygon(n, d, p);
                auto ord = compare(FP, HP);
                CHECK((ord == PolygonOrder::GreaterEqual || ord == PolygonOrder::Equal));
                CHECK((ord == PolygonOrder::Equal) == (p % d == 1));
                for (const auto& [s, m] : FP.segments())
                    CHECK(FP.multiplicity(Rat(n) - s) == m);
            }
        }
}

TEST_CASE("FP - HP gap decreases along residue classes") {
    for (int d : {3, 4}) {
        Polygon HP = hodge_polygon(2, d);
        for (int r = 2; r < d; ++r) {
            if (std::gcd(r, d) != 1) continue;
            Rat prev = -1;
            bool first = true;
            for (int p : primes_below(200)) {
                if (p % d != r || p <= d + 1) continue;
                Rat gap = max_gap(frobenius_polygon(2, d, p), HP);
                if (!first) CHECK(gap <= prev);
                prev = gap;
                first = false;
            }
        }
    }
}

TEST_CASE("fitted frobenius polygon") {
    CHECK(fitted_slope(3, 5, 2, 2) == Rat(3, 4));
    CHECK(fitted_frobenius_polygon(2, 3, 5, 0).length() == 0);
    CHECK_THROWS_AS(fitted_frobenius_polygon(2, 3, 5, 7), std::invalid_argument);
    // At every Frobenius vertex cut (i,iota) the fitted polygon agrees with FP.
    for (int n = 1; n <= 2; ++n)
        for (int d = 2; d <= 5; ++d)
            for (int p : primes_below(30)) {
                if (std::gcd(p, d) != 1 || p <= d + 1) continue;
                Polygon FP = frobenius_polygon(n, d, p);
                auto fd = lattice::frobenius_data(n, d, p);
                for (const auto& ref : fd.vertex_refs) {
                    Polygon Fi = fitted_frobenius_polygon(n, d, p, ref.i);
                    if (ref.k > Fi.length()) continue;
                    CHECK(Fi.evaluate(ref.k) == FP.evaluate(ref.k));
                }
            }
}

TEST_CASE("fitted difference formulas at vertices") {
    using lattice::frobenius_conjugate;
    using lattice::hodge_sum_at;
    for (int n = 1; n <= 3; ++n)
        for (int d = 2; d <= 6; ++d)
            for (int p : primes_below(40)) {
                if (std::gcd(p, d) != 1 || p <= d + 1) continue;
                auto fd = lattice::frobenius_data(n, d, p);
                Polygon HP = hodge_polygon(n, d);
                long long nd = static_cast<long long>(n) * d;
                // Hodge vertices k = sum_{j<=i} h_j; l runs over the
                // representative set of sigma_i ({1..d} in the trivial case).
                long long k = 0;
                for (long long i = 0; i <= nd; ++i) {
                    k += fd.h[i];
                    Polygon Fi = fitted_frobenius_polygon(n, d, p, i);
                    Rat lhs = Fi.evaluate(k) - HP.evaluate(k);
                    Rat rhs = 0;
                    bool trivial = (static_cast<long long>(p - 1) * i) % d == 0;
                    for (long long l = trivial ? 1 : 0; l <= (trivial ? d : d - 1); ++l) {
                        if (((i - l) % d + d) % d == 0) continue;
                        rhs += Rat(d - 1 - l, static_cast<long long>(p - 1) * d) *
                               (hodge_sum_at(fd.H, i - l) -
                                hodge_sum_at(fd.H, i - frobenius_conjugate(i, l, d, p)));
                    }
                    CHECK(lhs == rhs);
                }
                // Frobenius vertices k = sum_{j<i} h_j + h_{i,1}, h_{i,1} != 0
                k = 0;
                for (long long i = 0; i <= nd; ++i) {
                    if (fd.hsplit[i][1] != 0) {
                        long long kk = k + fd.hsplit[i][1];
                        Polygon Fi = fitted_frobenius_polygon(n, d, p, i);
                        Rat lhs = Fi.evaluate(kk) - HP.evaluate(kk);
                        Rat rhs = 0;
                        for (long long l = 1; l <= d - 1; ++l) {
                            if (((i - l) % d + d) % d == 0) continue;
                            long long bad = ((1 - p) * i - l) % d;
                            if ((bad % d + d) % d == 0) continue;
                            rhs += Rat(d - 1 - l, static_cast<long long>(p - 1) * d) *
                                   (hodge_sum_at(fd.H, i - l) -
                                    hodge_sum_at(fd.H, i - frobenius_conjugate(i, l, d, p)));
                        }
                        CHECK(lhs == rhs);
                    }
                    k += fd.h[i];
                }
            }
}

TEST_CASE("lower hull") {
    Polygon A = lower_hull({{0, Rat(0)}, {1, Rat(1, 2)}});
    CHECK(A.segments() == std::vector<Polygon::Segment>{{Rat(1, 2), 1}});
    Polygon B = lower_hull({{0, Rat(0)}, {1, Rat(2)}, {2, Rat(2)}});
    CHECK(B.segments() == std::vector<Polygon::Segment>{{Rat(1), 2}});
    Polygon C = lower_hull({{0, Rat(0)}, {1, std::nullopt}, {2, Rat(2)}});
    CHECK(C.segments() == std::vector<Polygon::Segment>{{Rat(1), 2}});
    CHECK_THROWS_AS(lower_hull({{1, Rat(1)}}), std::invalid_argument);
}

TEST_CASE("json round trip") {
    for (Polygon P : {frobenius_polygon(2, 4, 11), hodge_polygon(2, 3), Polygon{}}) {
        auto j = polygon_to_json(P);
        CHECK(polygon_from_json(nlohmann::json::parse(j.dump())) == P);
    }
}
