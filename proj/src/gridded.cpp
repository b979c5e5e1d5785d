#include "pinclass/gridded.hpp"

#include "pinclass/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pinclass {

namespace {

struct Box {
    Rational min_x, max_x, min_y, max_y;

    void add(const PinPoint& p)
    {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
};

int quadrant_from(bool left, bool below)
{
    if (!below)
        return left ? 2 : 1;
    return left ? 3 : 4;
}

bool opposing(int a, int b) { return (a == 1 && b == 3) || (a == 3 && b == 1) || (a == 2 && b == 4) || (a == 4 && b == 2); }

// Smallest position interval around the origin whose values also form an
// interval around the origin; nullopt when pi is indecomposable.
std::optional<std::pair<int, int>> minimal_inner_block(const GriddedPermutation& pi)
{
    const int n = static_cast<int>(pi.size());
    std::optional<std::pair<int, int>> best;
    for (int lo = 1; lo <= std::min(pi.cut_x + 1, n); ++lo) {
        int vmin = n + 1, vmax = 0;
        for (int hi = lo; hi <= n; ++hi) {
            vmin = std::min(vmin, pi.values[hi - 1]);
            vmax = std::max(vmax, pi.values[hi - 1]);
            int len = hi - lo + 1;
            if (hi < pi.cut_x || len >= n)
                continue;
            if (vmax - vmin + 1 != len || vmin > pi.cut_y + 1 || vmax < pi.cut_y)
                continue;
            if (!best || len < best->second - best->first + 1)
                best = std::make_pair(lo, hi);
            break;
        }
    }
    return best;
}

} // namespace

int GriddedPermutation::quadrant_of(std::size_t i) const
{
    return quadrant_from(static_cast<int>(i) < cut_x, values[i] <= cut_y);
}

std::optional<int> GriddedPermutation::quadrant() const
{
    if (values.empty())
        return std::nullopt;
    int q = quadrant_of(0);
    for (std::size_t i = 1; i < values.size(); ++i)
        if (quadrant_of(i) != q)
            return std::nullopt;
    return q;
}

GriddedPermutation GriddedPermutation::restrict(const std::vector<std::size_t>& positions) const
{
    GriddedPermutation out;
    std::vector<int> vals;
    for (std::size_t p : positions) {
        vals.push_back(values[p]);
        if (static_cast<int>(p) < cut_x)
            ++out.cut_x;
        if (values[p] <= cut_y)
            ++out.cut_y;
    }
    std::vector<int> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    out.values.reserve(vals.size());
    for (int v : vals)
        out.values.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1);
    return out;
}

std::string GriddedPermutation::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (size() > 9 && i > 0)
            s += ',';
        s += std::to_string(values[i]);
    }
    return s + "|x=" + std::to_string(cut_x) + ",y=" + std::to_string(cut_y);
}

GriddedPermutation GriddedPermutation::parse(std::string_view text)
{
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw ValidationError("gridded permutation needs '|x=<cut>,y=<cut>'");
    std::string vals(text.substr(0, bar));
    std::string cuts(text.substr(bar + 1));
    GriddedPermutation g;
    if (vals.find(',') != std::string::npos) {
        std::stringstream ss(vals);
        std::string item;
        while (std::getline(ss, item, ','))
            try {
                g.values.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw ValidationError("bad value '" + item + "'");
            }
    } else {
        for (char c : vals) {
            if (c < '1' || c > '9')
                throw ValidationError(std::string("bad value '") + c + "'");
            g.values.push_back(c - '0');
        }
    }
    if (std::sscanf(cuts.c_str(), "x=%d,y=%d", &g.cut_x, &g.cut_y) != 2)
        throw ValidationError("bad cuts '" + cuts + "'");
    if (!g.valid())
        throw ValidationError("not a gridded permutation: '" + std::string(text) + "'");
    return g;
}

bool GriddedPermutation::valid() const
{
    const int n = static_cast<int>(values.size());
    if (cut_x < 0 || cut_x > n || cut_y < 0 || cut_y > n)
        return false;
    std::vector<bool> seen(values.size() + 1, false);
    for (int v : values) {
        if (v < 1 || v > n || seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

std::vector<PinPoint> pin_points(const PinWord& w)
{
    std::vector<PinPoint> pts;
    if (w.empty())
        return pts;
    const PinLetter first = w[0];
    int q = first.quadrant();
    pts.push_back({Rational(q == 1 || q == 4 ? 1 : -1), Rational(q <= 2 ? 1 : -1)});

    Box before{0, 0, 0, 0}; // hull of the origin and p_1..p_{i-2}
    Box hull = before;      // hull of the origin and p_1..p_{i-1}
    hull.add(pts[0]);
    for (std::size_t i = 1; i < w.size(); ++i) {
        const PinLetter p = w[i];
        const PinPoint& prev = pts.back();
        PinPoint next;
        Rational own;
        switch (p.direction) {
        case Dir::R: own = hull.max_x + 1; break;
        case Dir::L: own = hull.min_x - 1; break;
        case Dir::U: own = hull.max_y + 1; break;
        case Dir::D: own = hull.min_y - 1; break;
        }
        Rational cross;
        switch (p.memory) {
        case Dir::R: cross = (prev.x + before.max_x) / 2; break;
        case Dir::L: cross = (prev.x + before.min_x) / 2; break;
        case Dir::U: cross = (prev.y + before.max_y) / 2; break;
        case Dir::D: cross = (prev.y + before.min_y) / 2; break;
        }
        if (is_horizontal(p.direction))
            next = {own, cross};
        else
            next = {cross, own};
        before = hull;
        hull.add(next);
        pts.push_back(next);
    }
    return pts;
}

GriddedPermutation from_points(const std::vector<PinPoint>& points)
{
    const std::size_t n = points.size();
    std::vector<std::size_t> by_x(n), by_y(n);
    std::iota(by_x.begin(), by_x.end(), 0);
    std::iota(by_y.begin(), by_y.end(), 0);
    std::sort(by_x.begin(), by_x.end(), [&](auto a, auto b) { return points[a].x < points[b].x; });
    std::sort(by_y.begin(), by_y.end(), [&](auto a, auto b) { return points[a].y < points[b].y; });
    std::vector<int> value_of(n);
    for (std::size_t r = 0; r < n; ++r)
        value_of[by_y[r]] = static_cast<int>(r) + 1;
    GriddedPermutation g;
    for (std::size_t r = 0; r < n; ++r)
        g.values.push_back(value_of[by_x[r]]);
    for (const auto& p : points) {
        if (p.x < 0)
            ++g.cut_x;
        if (p.y < 0)
            ++g.cut_y;
    }
    return g;
}

GriddedPermutation build_pin_permutation(const PinWord& w)
{
    return from_points(pin_points(w));
}

bool contains(const GriddedPermutation& big, const GriddedPermutation& small)
{
    const std::size_t m = small.size(), n = big.size();
    if (m > n)
        return false;
    std::vector<std::size_t> chosen(m);
    auto rec = [&](auto&& self, std::size_t j, std::size_t start) -> bool {
        if (j == m)
            return true;
        const int q = small.quadrant_of(j);
        for (std::size_t p = start; p + (m - j) <= n; ++p) {
            if (big.quadrant_of(p) != q)
                continue;
            bool ok = true;
            for (std::size_t k = 0; k < j && ok; ++k)
                ok = (small.values[k] < small.values[j]) == (big.values[chosen[k]] < big.values[p]);
            if (!ok)
                continue;
            chosen[j] = p;
            if (self(self, j + 1, p + 1))
                return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

GriddedPermutation box_sum(const GriddedPermutation& sigma, const GriddedPermutation& tau)
{
    const int s = static_cast<int>(sigma.size());
    const int n = s + static_cast<int>(tau.size());
    GriddedPermutation out;
    out.values.assign(static_cast<std::size_t>(n), 0);
    out.cut_x = sigma.cut_x + tau.cut_x;
    out.cut_y = sigma.cut_y + tau.cut_y;
    for (int i = 1; i <= s; ++i)
        out.values[static_cast<std::size_t>(tau.cut_x + i - 1)] = tau.cut_y + sigma.values[i - 1];
    for (int j = 1; j <= static_cast<int>(tau.size()); ++j) {
        int pos = j <= tau.cut_x ? j : s + j;
        int v = tau.values[j - 1];
        out.values[static_cast<std::size_t>(pos - 1)] = v <= tau.cut_y ? v : s + v;
    }
    return out;
}

bool is_box_indecomposable(const GriddedPermutation& pi)
{
    return !pi.empty() && !minimal_inner_block(pi);
}

bool factor_less(const GriddedPermutation& a, const GriddedPermutation& b)
{
    int qa = a.quadrant().value_or(5), qb = b.quadrant().value_or(5);
    if (qa != qb)
        return qa < qb;
    return a.to_string() < b.to_string();
}

std::vector<GriddedPermutation> box_decompose(const GriddedPermutation& pi)
{
    std::vector<GriddedPermutation> factors;
    GriddedPermutation rest = pi;
    while (!rest.empty()) {
        auto block = minimal_inner_block(rest);
        if (!block) {
            factors.push_back(rest);
            break;
        }
        std::vector<std::size_t> inner, outer;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            int pos = static_cast<int>(i) + 1;
            (pos >= block->first && pos <= block->second ? inner : outer).push_back(i);
        }
        factors.push_back(rest.restrict(inner));
        rest = rest.restrict(outer);
    }

    // Lexicographic normal form of the trace: repeatedly pull forward the
    // least factor that commutes with everything before it.
    std::vector<GriddedPermutation> out;
    while (!factors.empty()) {
        std::size_t pick = 0;
        bool found = false;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            bool movable = true;
            for (std::size_t j = 0; j < i && movable; ++j)
                movable = commute(factors[j], factors[i]);
            if (movable && (!found || factor_less(factors[i], factors[pick]))) {
                pick = i;
                found = true;
            }
        }
        out.push_back(factors[pick]);
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

bool commute(const GriddedPermutation& sigma, const GriddedPermutation& tau)
{
    if (!is_box_indecomposable(sigma) || !is_box_indecomposable(tau))
        throw ValidationError("commute expects box-indecomposable arguments");
    if (sigma == tau)
        return true;
    auto qs = sigma.quadrant(), qt = tau.quadrant();
    return qs && qt && opposing(*qs, *qt);
}

std::vector<GriddedPermutation> all_griddings(const std::vector<int>& values)
{
    std::vector<GriddedPermutation> out;
    const int n = static_cast<int>(values.size());
    for (int x = 0; x <= n; ++x)
        for (int y = 0; y <= n; ++y) {
            GriddedPermutation g{values, x, y};
            if (!g.valid())
                throw ValidationError("not a permutation");
            out.push_back(std::move(g));
        }
    return out;
}

std::string plot_svg(const PinWord& w)
{
    const auto pts = pin_points(w);
    const auto g = from_points(pts);
    const int n = static_cast<int>(g.size());
    const int unit = 20, margin = 20;
    const int side = 2 * margin + unit * (n + 1);

    // Rank of each pin along each axis gives its drawn coordinates.
    std::vector<int> px(pts.size()), py(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        px[i] = 0;
        py[i] = 0;
        for (const auto& q : pts) {
            px[i] += q.x <= pts[i].x;
            py[i] += q.y <= pts[i].y;
        }
    }
    auto sx = [&](double r) { return margin + unit * r; };
    auto sy = [&](double r) { return side - margin - unit * r; };
    const double ox = g.cut_x + 0.5, oy = g.cut_y + 0.5;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side << "\" viewBox=\"0 0 "
       << side << ' ' << side << "\">\n";
    os << "<line x1=\"" << sx(ox) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(ox) << "\" y2=\"" << sy(n + 1)
       << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(oy) << "\" x2=\"" << sx(n + 1) << "\" y2=\"" << sy(oy)
       << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"gray\" stroke-width=\"1\" points=\"" << sx(ox) << ',' << sy(oy);
    for (std::size_t i = 0; i < pts.size(); ++i)
        os << ' ' << sx(px[i]) << ',' << sy(py[i]);
    os << "\"/>\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
        os << "<circle cx=\"" << sx(px[i]) << "\" cy=\"" << sy(py[i]) << "\" r=\"4\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace pinclass
