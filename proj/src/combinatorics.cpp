#include "hexdet/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace hexdet {

namespace {

void check_region(const RegionSpec& region, const EnumerationLimits& limits) {
    if (region.n < 1) throw std::domain_error("region: n must be positive");
    if (region.lambda + region.s < 0)
        throw std::domain_error("region: lambda + s must be nonnegative");
    if (region.n > limits.max_n)
        throw std::domain_error("region: n exceeds the enumeration cap");
    long width = region.lambda + region.n + region.s;
    long height = region.n + region.t;
    if (width * height > limits.max_area)
        throw std::domain_error("region: lozenge area exceeds the enumeration cap");
}

void check_omissions(const std::vector<long>& idx, long n, const char* what) {
    long prev = 0;
    for (long v : idx) {
        if (v < 1 || v > n) throw std::domain_error(std::string(what) + " index out of 1..n");
        if (v <= prev) throw std::domain_error(std::string(what) + " indices must be increasing");
        prev = v;
    }
}

struct Point {
    long x, y;
};

// Depth-first walk over tuples of vertex-disjoint paths; start k is paired
// with end k. Calls sink once per complete tuple.
class TupleWalker {
public:
    TupleWalker(std::vector<Point> starts, std::vector<Point> ends, long max_x, long max_y,
                std::function<void(const std::vector<std::vector<Step>>&)> sink)
        : starts_(std::move(starts)),
          ends_(std::move(ends)),
          width_(max_x + 1),
          occupied_(static_cast<size_t>((max_x + 1) * (max_y + 1)), 0),
          sink_(std::move(sink)) {
        current_.resize(starts_.size());
    }

    void run() { next_path(0); }

private:
    char& occ(long x, long y) { return occupied_[static_cast<size_t>(y * width_ + x)]; }

    void next_path(size_t k) {
        if (k == starts_.size()) {
            sink_(current_);
            return;
        }
        const Point s = starts_[k];
        if (ends_[k].y < 0) return;  // end below the axis: no monotone path exists
        if (occ(s.x, s.y)) return;
        occ(s.x, s.y) = true;
        extend(k, s.x, s.y);
        occ(s.x, s.y) = false;
    }

    void extend(size_t k, long x, long y) {
        const Point e = ends_[k];
        if (x == e.x && y == e.y) {
            next_path(k + 1);
            return;
        }
        if (y < e.y && !occ(x, y + 1)) {
            occ(x, y + 1) = true;
            current_[k].push_back(Step::Up);
            extend(k, x, y + 1);
            current_[k].pop_back();
            occ(x, y + 1) = false;
        }
        if (x > 0 && !occ(x - 1, y)) {
            occ(x - 1, y) = true;
            current_[k].push_back(Step::Left);
            extend(k, x - 1, y);
            current_[k].pop_back();
            occ(x - 1, y) = false;
        }
    }

    std::vector<Point> starts_, ends_;
    long width_;
    std::vector<char> occupied_;
    std::vector<std::vector<Step>> current_;
    std::function<void(const std::vector<std::vector<Step>>&)> sink_;
};

std::pair<std::vector<Point>, std::vector<Point>> remaining_endpoints(
    const RegionSpec& region, const std::vector<long>& omit_starts,
    const std::vector<long>& omit_ends) {
    std::vector<Point> starts, ends;
    for (long i = 1; i <= region.n; ++i) {
        if (!std::binary_search(omit_starts.begin(), omit_starts.end(), i))
            starts.push_back({region.lambda + region.s + i - 1, 0});
        if (!std::binary_search(omit_ends.begin(), omit_ends.end(), i))
            ends.push_back({0, region.t + i - 1});
    }
    return {starts, ends};
}

}  // namespace

Integer enumerate_path_tuples(const RegionSpec& region, const std::vector<long>& omit_starts,
                              const std::vector<long>& omit_ends,
                              const EnumerationLimits& limits) {
    check_region(region, limits);
    check_omissions(omit_starts, region.n, "omitted start");
    check_omissions(omit_ends, region.n, "omitted end");
    if (omit_starts.size() != omit_ends.size())
        throw std::domain_error("enumerate: |I| and |J| must agree");
    auto [starts, ends] = remaining_endpoints(region, omit_starts, omit_ends);
    long max_x = region.lambda + region.s + region.n;
    long max_y = std::max(region.t + region.n, 1L);
    Integer total = 0;
    TupleWalker walker(starts, ends, max_x, max_y,
                       [&total](const std::vector<std::vector<Step>>&) { ++total; });
    walker.run();
    return total;
}

std::vector<PathTuple> collect_path_tuples(const RegionSpec& region,
                                           const EnumerationLimits& limits) {
    check_region(region, limits);
    auto [starts, ends] = remaining_endpoints(region, {}, {});
    long max_x = region.lambda + region.s + region.n;
    long max_y = std::max(region.t + region.n, 1L);
    std::vector<PathTuple> tuples;
    TupleWalker walker(starts, ends, max_x, max_y,
                       [&tuples](const std::vector<std::vector<Step>>& paths) {
                           tuples.push_back(PathTuple{paths});
                       });
    walker.run();
    return tuples;
}

namespace {

// Omission patterns of the sum over delta positions: subsets of {1..n-|s-t|},
// applied to rows directly and columns shifted by s-t (or mirrored).
template <typename Fn>
void for_each_delta_subset(long s, long t, long n, Fn&& fn) {
    long m = n - std::labs(s - t);
    if (m < 0) {
        fn(std::vector<long>{}, std::vector<long>{}, 0L);
        return;
    }
    if (m > 24) throw std::domain_error("delta subsets: 2^m terms is out of reach");
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        std::vector<long> base;
        for (long b = 0; b < m; ++b)
            if (mask & (1UL << b)) base.push_back(b + 1);
        std::vector<long> shifted(base);
        for (long& v : shifted) v += std::labs(s - t);
        long size = static_cast<long>(base.size());
        if (s >= t)
            fn(base, shifted, size);
        else
            fn(shifted, base, size);
    }
}

}  // namespace

RationalFunction sum_of_minors(long s, long t, long n) {
    if (n < 1) throw std::invalid_argument("sum_of_minors: n must be positive");
    PolyMatrix b = build_matrix({s, t, n, DeltaMode::BinomialOnly});
    RationalFunction total(0);
    for_each_delta_subset(s, t, n, [&](const std::vector<long>& rows,
                                       const std::vector<long>& cols, long size) {
        RationalFunction term = minor_det(b, MinorSelector{rows, cols});
        bool negative = ((s - t) * size) % 2 != 0;
        total += negative ? -term : term;
    });
    return total;
}

Integer brute_force_count(const RegionSpec& region, bool apply_signs,
                          const EnumerationLimits& limits) {
    check_region(region, limits);
    Integer total = 0;
    for_each_delta_subset(region.s, region.t, region.n,
                          [&](const std::vector<long>& rows, const std::vector<long>& cols,
                              long size) {
                              Integer cnt = enumerate_path_tuples(region, rows, cols, limits);
                              bool negative =
                                  apply_signs && ((region.s - region.t) * size) % 2 != 0;
                              total += negative ? -cnt : cnt;
                          });
    return total;
}

namespace {

constexpr long kUnit = 20;    // rhombus edge in px
constexpr long kRise = 17;    // vertical px per sheared unit
constexpr long kMargin = 10;

struct Sheared {
    long height_px;
    long px(long a, long b) const { return kMargin + a * kUnit + b * (kUnit / 2); }
    long py(long b) const { return height_px + kMargin - b * kRise; }
    std::string corner(long a, long b) const {
        return std::to_string(px(a, b)) + "," + std::to_string(py(b));
    }
};

}  // namespace

// Triangular decomposition: each sheared cell (a,b) splits along the
// (a,b)-(a+1,b+1) diagonal into a lower-right triangle D(a,b) and an
// upper-left triangle V(a,b). A path step owns the rhombus made of V at its
// source vertex and D at its target vertex: up-steps give vertical rhombi,
// left-steps horizontal ones. Cells no path touches keep their own two
// triangles (the dark third orientation), and the 2n cut-out triangles are
// D(lambda+s+i-1, 0) and V(0, t+j-1).
std::string render_region(const RegionSpec& region, const std::optional<PathTuple>& tuple) {
    if (region.n < 1) throw std::domain_error("render: n must be positive");
    if (region.lambda + region.s < 0)
        throw std::domain_error("render: lambda + s must be nonnegative");
    long w = region.lambda + region.n + region.s;
    long h = region.n + region.t;
    Sheared geo{h * kRise};
    long canvas_w = w * kUnit + h * (kUnit / 2) + 2 * kMargin;
    long canvas_h = h * kRise + 2 * kMargin;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas_w
        << "\" height=\"" << canvas_h << "\" viewBox=\"0 0 " << canvas_w << " " << canvas_h
        << "\">\n";
    svg << "<polygon class=\"lozenge\" points=\"" << geo.corner(0, 0) << " " << geo.corner(w, 0)
        << " " << geo.corner(w, h) << " " << geo.corner(0, h)
        << "\" fill=\"white\" stroke=\"black\"/>\n";

    if (tuple) {
        std::vector<char> touched(static_cast<size_t>(w * h), 0);
        auto touch = [&](long a, long b) {
            if (a >= 0 && a < w && b >= 0 && b < h) touched[static_cast<size_t>(b * w + a)] = 1;
        };
        auto quad = [&](long a0, long b0, long a1, long b1, long a2, long b2, long a3, long b3,
                        const std::string& color) {
            svg << "<polygon class=\"rhombus\" points=\"" << geo.corner(a0, b0) << " "
                << geo.corner(a1, b1) << " " << geo.corner(a2, b2) << " " << geo.corner(a3, b3)
                << "\" fill=\"" << color << "\" stroke=\"#404040\"/>\n";
        };
        for (size_t k = 0; k < tuple->paths.size(); ++k) {
            long x = region.lambda + region.s + static_cast<long>(k);
            long y = 0;
            const auto& steps = tuple->paths[k];
            for (size_t si = 0; si < steps.size(); ++si) {
                bool final_step = (si + 1 == steps.size());
                if (steps[si] == Step::Up) {
                    // V(x,y) + D(x,y+1)
                    touch(x, y);
                    touch(x, y + 1);
                    quad(x, y, x + 1, y + 1, x + 1, y + 2, x, y + 1,
                         final_step ? "red" : "#d8d8d8");
                    ++y;
                } else {
                    // V(x,y) + D(x-1,y)
                    touch(x, y);
                    touch(x - 1, y);
                    quad(x - 1, y, x, y, x + 1, y + 1, x, y + 1,
                         final_step ? "red" : "white");
                    --x;
                }
            }
        }
        // bottom starts and left ends also consume their cells' free halves
        for (long i = 1; i <= region.n; ++i) touch(region.lambda + region.s + i - 1, 0);
        for (long j = 1; j <= region.n; ++j) touch(0, region.t + j - 1);
        for (long b = 0; b < h; ++b)
            for (long a = 0; a < w; ++a)
                if (!touched[static_cast<size_t>(b * w + a)])
                    quad(a, b, a + 1, b, a + 1, b + 1, a, b + 1, "#707070");
    }

    // n cut-out triangles at the right end of the lower side, n at the top of
    // the left side.
    for (long i = 1; i <= region.n; ++i) {
        long a = region.lambda + region.s + i - 1;
        svg << "<polygon class=\"tri\" points=\"" << geo.corner(a, 0) << " "
            << geo.corner(a + 1, 0) << " " << geo.corner(a + 1, 1) << "\" fill=\"black\"/>\n";
    }
    for (long j = 1; j <= region.n; ++j) {
        long b = region.t + j - 1;
        svg << "<polygon class=\"tri\" points=\"" << geo.corner(0, b) << " "
            << geo.corner(1, b + 1) << " " << geo.corner(0, b + 1) << "\" fill=\"black\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace hexdet
