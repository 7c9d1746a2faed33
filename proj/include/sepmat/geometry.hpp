#ifndef SEPMAT_GEOMETRY_HPP
#define SEPMAT_GEOMETRY_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sepmat/errors.hpp"

namespace sepmat {

// Exact integer planar point. Coordinates must satisfy |x|,|y| <= kCoordLimit
// so that the orientation determinant fits in 64-bit intermediates; the bound
// is enforced when a Configuration is constructed.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

// 2^24: orientation needs products of coordinate differences, so the
// determinant stays below 2^51 and is exactly representable.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 24;

// Sign of det(b - a, c - a): +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

// True iff p and q lie strictly on opposite sides of line ab.
// Throws GeneralPositionError if p or q lies on the line.
bool separates(const Point& a, const Point& b, const Point& p, const Point& q);

// A planar point set in general position (no three collinear). Points are
// addressed by stable 0-based index everywhere else in the library.
// Immutable after construction.
class Configuration {
public:
    // Validates n >= 3, the coordinate bound, distinctness and general
    // position (O(n^3) orientation tests). Throws GeneralPositionError
    // naming the first offending triple, std::invalid_argument otherwise.
    explicit Configuration(std::vector<Point> points);

    int size() const { return static_cast<int>(points_.size()); }
    const Point& operator[](int i) const { return points_[static_cast<size_t>(i)]; }
    const std::vector<Point>& points() const { return points_; }

private:
    std::vector<Point> points_;
};

// Convex hull vertex indices in counterclockwise order, rotated so the
// smallest index comes first. All non-members lie strictly inside.
struct HullCycle {
    std::vector<int> indices;

    friend bool operator==(const HullCycle&, const HullCycle&) = default;
};

// Number of lines through pairs of the remaining points that separate
// points i and j. At most C(n-2, 2).
int separating_count(const Configuration& config, int i, int j);

HullCycle convex_hull(const Configuration& config);

// n points uniform on the integer grid [-coord_bound, coord_bound]^2,
// rejection-sampled into general position. Deterministic in (n, seed,
// coord_bound); does not depend on the platform's distribution library.
// Throws std::runtime_error after the retry limit (coord_bound too small).
Configuration random_configuration(int n, std::uint64_t seed,
                                   std::int64_t coord_bound);

// Text format: first line n, then n lines "x y".
Configuration read_points(std::istream& in);
void write_points(std::ostream& out, const Configuration& config);

} // namespace sepmat

#endif
