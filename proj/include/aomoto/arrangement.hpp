#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aomoto/scalar.hpp"

namespace aomoto {

/// Affine line {(x,y) : a*x + b*y = c}, normalized so the first nonzero of
/// (a,b) is +1.  `name` is the user-facing id (1-based; 0 is reserved for the
/// line at infinity).
struct Line {
  int name = 0;
  Scalar a, b, c;

  bool parallel_to(const Line& o) const { return a == o.a && b == o.b; }
  Scalar eval(const Point& pt) const { return a * pt.x + b * pt.y - c; }
  int side(const Point& pt) const { return eval(pt).sign(); }

  static Line normalized(int name, Scalar a, Scalar b, Scalar c);
};

struct FlagHint {
  Point origin;
  Point direction;
};

/// Either an affine multiple point or the point at infinity of a parallel
/// class, together with the names of the incident member lines (sorted).
struct IntersectionPoint {
  std::optional<Point> location;          // nullopt: point at infinity
  std::optional<Point> direction;         // set iff at infinity (canonical)
  std::vector<int> incident;              // line names, ascending
  size_t multiplicity() const { return incident.size(); }
  bool at_infinity() const { return !location.has_value(); }
};

/// Ordered list of affine lines over a fixed exact field.  `infinity_name`,
/// when set, names the member line sitting at infinity of this chart (0 for a
/// plain affine arrangement viewed through its coning; unset when the listed
/// lines already exhaust the projective arrangement).
class Arrangement {
public:
  Arrangement() = default;
  Arrangement(Field field, std::vector<Line> lines,
              std::optional<int> infinity_name = 0);

  const Field& field() const { return field_; }
  const std::vector<Line>& lines() const { return lines_; }
  size_t size() const { return lines_.size(); }
  const Line& line(size_t pos) const { return lines_[pos]; }

  std::optional<int> infinity_name() const { return infinity_name_; }
  void set_infinity_name(std::optional<int> n) { infinity_name_ = n; }

  const std::optional<FlagHint>& flag_hint() const { return flag_hint_; }
  void set_flag_hint(std::optional<FlagHint> h) { flag_hint_ = std::move(h); }

  /// Position of the line with the given name; throws on unknown name.
  size_t position(int name) const;
  bool has_name(int name) const { return by_name_.count(name) != 0; }

  /// Names of all members of the projective arrangement (chart lines plus the
  /// infinity line when it is a member), ascending.
  std::vector<int> member_names() const;

  /// Groups of line positions with proportional normals (size >= 1 each),
  /// in order of first appearance.
  const std::vector<std::vector<size_t>>& parallel_classes() const;

  /// Affine multiple points; with `with_infinity` additionally one point per
  /// parallel class (its incident set includes the infinity member, if any).
  const std::vector<IntersectionPoint>& intersection_poset(
      bool with_infinity) const;

  /// Exact intersection of two non-parallel member lines.
  static Point intersect(const Line& f, const Line& g);

private:
  Field field_;
  std::vector<Line> lines_;
  std::optional<int> infinity_name_ = 0;
  std::optional<FlagHint> flag_hint_;
  std::map<int, size_t> by_name_;

  mutable std::optional<std::vector<std::vector<size_t>>> parallel_;
  mutable std::optional<std::vector<IntersectionPoint>> poset_affine_;
  mutable std::optional<std::vector<IntersectionPoint>> poset_full_;
};

/// Parses the arrangement file format (see README).
Arrangement parse_arrangement(std::istream& in);
Arrangement parse_arrangement_text(const std::string& text);
Arrangement load_arrangement(const std::string& path);

/// Lines through an affine multiple point in cyclic (projective) order of
/// their angles in [0, pi), rotated so the smallest name comes first.
std::vector<int> cyclic_order_at_point(const Arrangement& arr,
                                       const IntersectionPoint& point);

/// Cyclic order of the member lines through any projective point (affine or
/// at infinity).  For a point at infinity the parallel lines appear in offset
/// order with the chart's infinity member (if any) closing the cycle.
std::vector<int> projective_cyclic_order(const Arrangement& arr,
                                         const IntersectionPoint& point);

/// Chart change sending the member line `name` to infinity.  Preserves line
/// names; the old infinity member (if any) reappears as an affine line.
Arrangement decone_geometry(const Arrangement& arr, int name);

}  // namespace aomoto
