#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aomoto/arrangement.hpp"

namespace aomoto {

/// Connected component of the complement, encoded by its side of every line
/// (signs[j] is +1/-1 for line position j) plus an interior witness point.
struct Chamber {
  std::vector<int8_t> signs;
  Point witness;
};

/// All chambers of the affine arrangement.  The count always equals
/// 1 + n + sum over affine points of (multiplicity - 1).
std::vector<Chamber> chambers(const Arrangement& arr);

/// Names of the lines separating two chambers.
std::vector<int> separating(const Arrangement& arr, const Chamber& a,
                            const Chamber& b);

/// A generic flag near infinity: base point f0 on the line f1 through f0 with
/// direction dir, such that f1 meets every member line once, all intersection
/// points lie strictly on one side of f1, and f0 comes strictly before every
/// crossing.
struct Flag {
  Point f0;
  Point dir;
};

/// Validates a candidate flag; throws InvalidFlag naming the violated
/// condition.
void validate_flag(const Arrangement& arr, const Flag& flag);

/// The flag hint from the input file when present (validated), otherwise a
/// deterministic generic flag.
Flag choose_flag(const Arrangement& arr);

/// Chambers organized by a flag.  Lines are renumbered H_1..H_n in crossing
/// order along f1; chamber ch1[i-1] is the i-th chamber met along f1 after
/// the base chamber c0; ch2 holds the remaining chambers in a deterministic
/// order.
struct FlaggedArrangement {
  Arrangement arr;
  Flag flag;
  std::vector<Chamber> chambers;
  std::vector<size_t> line_order;  // line_order[i] = position of H_{i+1}
  size_t c0 = 0;
  std::vector<size_t> ch1;
  std::vector<size_t> ch2;

  size_t n() const { return line_order.size(); }
  /// +1 when the chamber lies on the far side of H_{i+1} from f0, -1 when it
  /// lies on the f0 side.
  int rel_sign(size_t chamber_idx, size_t i) const {
    return -chambers[chamber_idx].signs[line_order[i]] *
           chambers[c0].signs[line_order[i]];
  }
};

FlaggedArrangement classify_chambers(const Arrangement& arr);
FlaggedArrangement classify_chambers(const Arrangement& arr, const Flag& flag);

/// Index of the chamber whose interior contains the point, or nullopt when
/// the point lies on a member line.
std::optional<size_t> locate_chamber(const Arrangement& arr,
                                     const std::vector<Chamber>& chs,
                                     const Point& pt);

}  // namespace aomoto
