#pragma once

#include "pinclass/pinwords.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pinclass {

using Rational = boost::multiprecision::cpp_rational;

/// A permutation drawn in the 2x2 grid. `values[i]` is the value (1..n) at
/// position i+1; the vertical axis sits after `cut_x` positions and the
/// horizontal axis above `cut_y` values.
struct GriddedPermutation {
    std::vector<int> values;
    int cut_x = 0;
    int cut_y = 0;

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }

    /// Quadrant 1..4 of the point at 0-based position i.
    int quadrant_of(std::size_t i) const;
    /// The single quadrant holding every point, if there is one.
    std::optional<int> quadrant() const;

    /// Pattern formed by the points at the given increasing 0-based positions.
    GriddedPermutation restrict(const std::vector<std::size_t>& positions) const;

    /// `4731526|x=2,y=0`; values are comma-separated once n exceeds 9.
    std::string to_string() const;
    static GriddedPermutation parse(std::string_view text);

    bool valid() const;

    auto operator<=>(const GriddedPermutation&) const = default;
};

struct PinPoint {
    Rational x;
    Rational y;
};

/// Exact coordinates of p_1..p_n (the origin is implicit).
std::vector<PinPoint> pin_points(const PinWord& w);

/// Rank-reduces points with distinct coordinates; the axes are x=0 and y=0.
GriddedPermutation from_points(const std::vector<PinPoint>& points);

GriddedPermutation build_pin_permutation(const PinWord& w);

bool contains(const GriddedPermutation& big, const GriddedPermutation& small);

/// sigma inserted at the origin of tau.
GriddedPermutation box_sum(const GriddedPermutation& sigma, const GriddedPermutation& tau);

bool is_box_indecomposable(const GriddedPermutation& pi);

/// Canonical factors pi = f_1 [+] f_2 [+] ... [+] f_m (innermost first).
std::vector<GriddedPermutation> box_decompose(const GriddedPermutation& pi);

/// Throws ValidationError unless both arguments are box-indecomposable.
bool commute(const GriddedPermutation& sigma, const GriddedPermutation& tau);

/// Order used by the canonical decomposition: single-quadrant factors by
/// quadrant, then the rest; ties by text form.
bool factor_less(const GriddedPermutation& a, const GriddedPermutation& b);

std::vector<GriddedPermutation> all_griddings(const std::vector<int>& values);

/// SVG drawing of pi_w: unit-spaced points, bold axes, gray pin path.
std::string plot_svg(const PinWord& w);

} // namespace pinclass
