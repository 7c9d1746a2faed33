#include "sepmat/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

namespace sepmat {

int orientation(const Point& a, const Point& b, const Point& c) {
    // Differences fit in 64 bits for all callers that respect kCoordLimit;
    // the product is taken in 128 bits.
    const std::int64_t abx = b.x - a.x;
    const std::int64_t aby = b.y - a.y;
    const std::int64_t acx = c.x - a.x;
    const std::int64_t acy = c.y - a.y;
    const __int128 det =
        static_cast<__int128>(abx) * acy - static_cast<__int128>(aby) * acx;
    if (det > 0) return 1;
    if (det < 0) return -1;
    return 0;
}

bool separates(const Point& a, const Point& b, const Point& p, const Point& q) {
    const int sp = orientation(a, b, p);
    const int sq = orientation(a, b, q);
    if (sp == 0 || sq == 0) {
        std::ostringstream msg;
        msg << "general-position violation: point ("
            << (sp == 0 ? p.x : q.x) << ", " << (sp == 0 ? p.y : q.y)
            << ") lies on the line through (" << a.x << ", " << a.y
            << ") and (" << b.x << ", " << b.y << ")";
        throw GeneralPositionError(msg.str());
    }
    return sp != sq;
}

Configuration::Configuration(std::vector<Point> points)
    : points_(std::move(points)) {
    const int n = static_cast<int>(points_.size());
    if (n < 3)
        throw std::invalid_argument("configuration needs at least 3 points");
    for (const Point& p : points_) {
        if (std::llabs(p.x) > kCoordLimit || std::llabs(p.y) > kCoordLimit)
            throw std::invalid_argument(
                "coordinate magnitude exceeds 2^24 safety bound");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orientation(points_[i], points_[j], points_[k]) == 0) {
                    std::ostringstream msg;
                    msg << "general-position violation: points " << i << ", "
                        << j << ", " << k << " are collinear";
                    throw GeneralPositionError(msg.str());
                }
}

int separating_count(const Configuration& config, int i, int j) {
    const int n = config.size();
    if (i == j || i < 0 || j < 0 || i >= n || j >= n)
        throw std::invalid_argument("separating_count: bad index pair");
    int count = 0;
    for (int a = 0; a < n; ++a) {
        if (a == i || a == j) continue;
        for (int b = a + 1; b < n; ++b) {
            if (b == i || b == j) continue;
            if (separates(config[a], config[b], config[i], config[j]))
                ++count;
        }
    }
    return count;
}

HullCycle convex_hull(const Configuration& config) {
    const int n = config.size();
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Point& pa = config[a];
        const Point& pb = config[b];
        return pa.x != pb.x ? pa.x < pb.x : pa.y < pb.y;
    });

    // Monotone chain. General position means no collinear pops are needed,
    // but <= 0 keeps the invariant strict anyway.
    auto build = [&](auto begin, auto end) {
        std::vector<int> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orientation(config[chain[chain.size() - 2]],
                               config[chain.back()], config[*it]) <= 0)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<int> lower = build(order.begin(), order.end());
    std::vector<int> upper = build(order.rbegin(), order.rend());

    HullCycle cycle;
    cycle.indices.assign(lower.begin(), lower.end() - 1);
    cycle.indices.insert(cycle.indices.end(), upper.begin(), upper.end() - 1);

    const auto min_it =
        std::min_element(cycle.indices.begin(), cycle.indices.end());
    std::rotate(cycle.indices.begin(), min_it, cycle.indices.end());
    return cycle;
}

Configuration random_configuration(int n, std::uint64_t seed,
                                   std::int64_t coord_bound) {
    if (n < 3) throw std::invalid_argument("random_configuration: n < 3");
    if (coord_bound < 1 || coord_bound > kCoordLimit)
        throw std::invalid_argument("random_configuration: bad coord_bound");

    std::mt19937_64 gen(seed);
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(coord_bound) + 1;
    auto draw = [&]() -> std::int64_t {
        // Plain modulo keeps the draw identical across standard libraries;
        // the bias is irrelevant here.
        return static_cast<std::int64_t>(gen() % span) - coord_bound;
    };

    const long attempts_limit = 2000L * n;
    long attempts = 0;
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    while (static_cast<int>(pts.size()) < n) {
        if (++attempts > attempts_limit) {
            std::ostringstream msg;
            msg << "random_configuration: gave up after " << attempts_limit
                << " samples; coord_bound " << coord_bound
                << " is too small for n=" << n;
            throw std::runtime_error(msg.str());
        }
        Point cand{draw(), draw()};
        bool ok = true;
        for (size_t i = 0; ok && i < pts.size(); ++i) {
            if (pts[i] == cand) ok = false;
            for (size_t j = i + 1; ok && j < pts.size(); ++j)
                if (orientation(pts[i], pts[j], cand) == 0) ok = false;
        }
        if (ok) pts.push_back(cand);
    }
    return Configuration(std::move(pts));
}

Configuration read_points(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("points: missing count line");
    long n = 0;
    try {
        n = std::stol(line);
    } catch (const std::exception&) {
        throw ParseError("points: count line is not an integer: '" + line + "'");
    }
    if (n < 3) throw ParseError("points: need at least 3 points");

    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw ParseError("points: line " + std::to_string(i + 2) +
                             ": unexpected end of input");
        std::istringstream ls(line);
        Point p;
        if (!(ls >> p.x >> p.y))
            throw ParseError("points: line " + std::to_string(i + 2) +
                             ": expected 'x y'");
        std::string trailing;
        if (ls >> trailing)
            throw ParseError("points: line " + std::to_string(i + 2) +
                             ": trailing content '" + trailing + "'");
        pts.push_back(p);
    }
    return Configuration(std::move(pts));
}

void write_points(std::ostream& out, const Configuration& config) {
    out << config.size() << '\n';
    for (const Point& p : config.points()) out << p.x << ' ' << p.y << '\n';
}

} // namespace sepmat
