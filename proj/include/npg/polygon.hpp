#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "npg/rational.hpp"

namespace npg {

// Graph of a convex piecewise-linear function through (0,0): segments sorted
// by strictly increasing slope, each with a positive integer multiplicity.
class Polygon {
  public:
    using Segment = std::pair<Rat, long long>;  // (slope, multiplicity)

    Polygon() = default;

    // Canonicalizes: drops zero multiplicities, sorts, merges equal slopes.
    static Polygon from_slopes(std::vector<Segment> table);

    const std::vector<Segment>& segments() const { return segs_; }
    long long length() const;
    // Total rise over [0, length].
    Rat height() const;
    // Value at rational x in [0, length]; throws out_of_range otherwise.
    Rat evaluate(const Rat& x) const;
    // Multiplicity of a given slope (0 if absent).
    long long multiplicity(const Rat& slope) const;

    bool operator==(const Polygon&) const = default;

  private:
    std::vector<Segment> segs_;
};

enum class PolygonOrder { Equal, GreaterEqual, LessEqual, Incomparable };

// Pointwise comparison over all integer abscissas and both vertex sets.
// Requires equal lengths.
PolygonOrder compare(const Polygon& P, const Polygon& Q);

// Largest pointwise gap max_x (P(x) - Q(x)) over integer abscissas.
Rat max_gap(const Polygon& P, const Polygon& Q);

// slope j/d with multiplicity h_j.
Polygon hodge_polygon(int n, int d);

// slope w_{j,eps} with multiplicity h_{j,eps}. Rejects inputs whose slope
// table, read in the 2j-eps cut order, is not already sorted (guaranteed for
// p >= d+1).
Polygon frobenius_polygon(int n, int d, int p);

// i-fitted slope (ceil((pj-i)/d) - ceil((j-i)/d))/(p-1).
Rat fitted_slope(int d, int p, long long j, long long i);

// slope w_j^{(i)} with multiplicity h_j, j = 0..i.
Polygon fitted_frobenius_polygon(int n, int d, int p, long long i);

// Lower convex hull of {(x, y)}. Entries with empty ordinate are skipped.
// Requires a point (0,0) and a finite ordinate at the maximal abscissa.
struct HullPoint {
    long long x;
    std::optional<Rat> y;
};
Polygon lower_hull(std::vector<HullPoint> pts);

// {"segments":[{"slope":[num,den],"mult":m},...]} with exact integers.
nlohmann::ordered_json polygon_to_json(const Polygon& P);
Polygon polygon_from_json(const nlohmann::json& j);

}  // namespace npg
