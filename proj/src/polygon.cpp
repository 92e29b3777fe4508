#include "npg/polygon.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "npg/lattice.hpp"

namespace npg {

Polygon Polygon::from_slopes(std::vector<Segment> table) {
    for (const auto& [s, m] : table)
        if (m < 0) throw std::invalid_argument("polygon: negative multiplicity");
    std::erase_if(table, [](const Segment& seg) { return seg.second == 0; });
    std::sort(table.begin(), table.end(),
              [](const Segment& a, const Segment& b) { return a.first < b.first; });
    Polygon P;
    for (auto& seg : table) {
        if (!P.segs_.empty() && P.segs_.back().first == seg.first)
            P.segs_.back().second += seg.second;
        else
            P.segs_.push_back(std::move(seg));
    }
    return P;
}

long long Polygon::length() const {
    long long len = 0;
    for (const auto& [s, m] : segs_) len += m;
    return len;
}

Rat Polygon::height() const {
    Rat h = 0;
    for (const auto& [s, m] : segs_) h += s * m;
    return h;
}

Rat Polygon::evaluate(const Rat& x) const {
    if (x < 0 || x > Rat(length())) throw std::out_of_range("polygon: abscissa out of range");
    Rat value = 0, pos = 0;
    for (const auto& [s, m] : segs_) {
        Rat next = pos + m;
        if (x <= next) return value + s * (x - pos);
        value += s * m;
        pos = next;
    }
    return value;
}

long long Polygon::multiplicity(const Rat& slope) const {
    for (const auto& [s, m] : segs_)
        if (s == slope) return m;
    return 0;
}

PolygonOrder compare(const Polygon& P, const Polygon& Q) {
    long long len = P.length();
    if (len != Q.length()) throw std::invalid_argument("compare: polygon lengths differ");
    bool ge = true, le = true;
    for (long long k = 0; k <= len; ++k) {
        Rat a = P.evaluate(k), b = Q.evaluate(k);
        if (a < b) ge = false;
        if (a > b) le = false;
    }
    if (ge && le) return PolygonOrder::Equal;
    if (ge) return PolygonOrder::GreaterEqual;
    if (le) return PolygonOrder::LessEqual;
    return PolygonOrder::Incomparable;
}

Rat max_gap(const Polygon& P, const Polygon& Q) {
    long long len = P.length();
    if (len != Q.length()) throw std::invalid_argument("max_gap: polygon lengths differ");
    Rat best = P.evaluate(0) - Q.evaluate(0);
    for (long long k = 1; k <= len; ++k) best = std::max(best, P.evaluate(k) - Q.evaluate(k));
    return best;
}

Polygon hodge_polygon(int n, int d) {
    std::vector<long long> h = lattice::hodge_numbers(n, d);
    std::vector<Polygon::Segment> table;
    for (long long j = 0; j < static_cast<long long>(h.size()); ++j)
        table.emplace_back(Rat(j, d), h[j]);
    return Polygon::from_slopes(std::move(table));
}

Polygon frobenius_polygon(int n, int d, int p) {
    lattice::FrobeniusData fd = lattice::frobenius_data(n, d, p);
    // The cut order 2j - eps must already list slopes in nondecreasing order,
    // otherwise vertex bookkeeping and the polygon disagree; p >= d+1 always
    // satisfies this, smaller p is rejected unless the table happens sorted.
    std::vector<Polygon::Segment> table;
    Rat prev = 0;
    bool first = true;
    long long nd = static_cast<long long>(n) * d;
    for (long long j = 0; j <= nd; ++j) {
        for (int eps : {1, 0}) {
            if (fd.hsplit[j][eps] == 0) continue;
            Rat s = fd.slope(j, eps);
            if (!first && s < prev)
                throw std::invalid_argument(
                    "frobenius_polygon: slope table unsorted in cut order (p too small)");
            prev = s;
            first = false;
            table.emplace_back(s, fd.hsplit[j][eps]);
        }
    }
    return Polygon::from_slopes(std::move(table));
}

Rat fitted_slope(int d, int p, long long j, long long i) {
    return Rat(ceil_div(p * j - i, d) - ceil_div(j - i, d), p - 1);
}

Polygon fitted_frobenius_polygon(int n, int d, int p, long long i) {
    if (i < 0 || i > static_cast<long long>(n) * d)
        throw std::invalid_argument("fitted_frobenius_polygon: i out of range");
    std::vector<long long> h = lattice::hodge_numbers(n, d);
    std::vector<Polygon::Segment> table;
    for (long long j = 0; j <= i; ++j) table.emplace_back(fitted_slope(d, p, j, i), h[j]);
    return Polygon::from_slopes(std::move(table));
}

Polygon lower_hull(std::vector<HullPoint> pts) {
    std::erase_if(pts, [](const HullPoint& pt) { return !pt.y.has_value(); });
    std::sort(pts.begin(), pts.end(), [](const HullPoint& a, const HullPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return *a.y < *b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const HullPoint& a, const HullPoint& b) { return a.x == b.x; }),
              pts.end());
    if (pts.empty() || pts.front().x != 0 || *pts.front().y != 0)
        throw std::invalid_argument("lower_hull: needs the point (0,0)");
    // Monotone chain keeping only the lower boundary.
    std::vector<HullPoint> hull;
    for (const HullPoint& pt : pts) {
        while (hull.size() >= 2) {
            const HullPoint& a = hull[hull.size() - 2];
            const HullPoint& b = hull[hull.size() - 1];
            // Drop b when it lies on or above segment a-pt.
            Rat lhs = (*b.y - *a.y) * (pt.x - a.x);
            Rat rhs = (*pt.y - *a.y) * (b.x - a.x);
            if (lhs >= rhs)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    std::vector<Polygon::Segment> table;
    for (size_t i = 1; i < hull.size(); ++i) {
        long long run = hull[i].x - hull[i - 1].x;
        table.emplace_back((*hull[i].y - *hull[i - 1].y) / run, run);
    }
    return Polygon::from_slopes(std::move(table));
}

static long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("polygon json: value exceeds int64");
    return v.convert_to<long long>();
}

nlohmann::ordered_json polygon_to_json(const Polygon& P) {
    nlohmann::ordered_json out;
    out["segments"] = nlohmann::ordered_json::array();
    for (const auto& [s, m] : P.segments()) {
        nlohmann::ordered_json seg;
        seg["slope"] = {to_ll(numerator(s)), to_ll(denominator(s))};
        seg["mult"] = m;
        out["segments"].push_back(seg);
    }
    return out;
}

Polygon polygon_from_json(const nlohmann::json& j) {
    std::vector<Polygon::Segment> table;
    for (const auto& seg : j.at("segments"))
        table.emplace_back(Rat(seg.at("slope").at(0).get<long long>(),
                               seg.at("slope").at(1).get<long long>()),
                           seg.at("mult").get<long long>());
    return Polygon::from_slopes(std::move(table));
}

}  // namespace npg
