#include "aomoto/chambers.hpp"

#include <algorithm>
#include <map>

namespace aomoto {

namespace {

Point point_on(const Line& l) {
  if (!l.a.is_zero()) return Point{l.c / l.a, Scalar(0)};
  return Point{Scalar(0), l.c / l.b};
}

Point offset(const Point& p, const Scalar& t, const Point& dir) {
  return Point{p.x + t * dir.x, p.y + t * dir.y};
}

// Witness pair for the two sides of `l` obtained by stepping off the on-line
// point `w` along the normal, staying inside the chamber described by the
// inserted lines and signs.
std::pair<Point, Point> step_off(const Arrangement& arr,
                                 const std::vector<size_t>& inserted,
                                 const std::vector<int8_t>& signs,
                                 const Line& l, const Point& w) {
  Point n{l.a, l.b};
  Scalar delta(1);
  bool bounded = false;
  for (size_t k = 0; k < inserted.size(); ++k) {
    const Line& g = arr.line(inserted[k]);
    Scalar dot = g.a * n.x + g.b * n.y;
    if (dot.is_zero()) continue;
    Scalar slack = g.eval(w) * Scalar(signs[k]);  // > 0 in the open chamber
    Scalar bound = slack / (Scalar(2) * (dot.sign() > 0 ? dot : -dot));
    if (!bounded || bound < delta) delta = bound;
    bounded = true;
  }
  return {offset(w, delta, n), offset(w, -delta, n)};
}

}  // namespace

std::vector<Chamber> chambers(const Arrangement& arr) {
  std::vector<Chamber> chs;
  chs.push_back(Chamber{{}, Point{Scalar(0), Scalar(0)}});
  std::vector<size_t> inserted;

  for (size_t pos = 0; pos < arr.size(); ++pos) {
    const Line& l = arr.line(pos);
    Point p0 = point_on(l);
    Point dir{-l.b, l.a};
    std::vector<Chamber> next;
    for (Chamber& c : chs) {
      // Open parameter interval of {p0 + t dir} inside the chamber.
      std::optional<Scalar> lo, hi;
      bool empty = false;
      for (size_t k = 0; k < inserted.size() && !empty; ++k) {
        const Line& g = arr.line(inserted[k]);
        Scalar a = g.eval(p0) * Scalar(c.signs[k]);
        Scalar b = (g.a * dir.x + g.b * dir.y) * Scalar(c.signs[k]);
        if (b.is_zero()) {
          if (a.sign() <= 0) empty = true;
        } else if (b.sign() > 0) {
          Scalar t = -a / b;
          if (!lo || t > *lo) lo = t;
        } else {
          Scalar t = -a / b;
          if (!hi || t < *hi) hi = t;
        }
      }
      if (!empty && lo && hi && !(*lo < *hi)) empty = true;
      if (empty) {
        Chamber keep = c;
        keep.signs.push_back((int8_t)l.side(c.witness));
        next.push_back(std::move(keep));
        continue;
      }
      Scalar mid = lo && hi ? (*lo + *hi) / Scalar(2)
                   : lo     ? *lo + Scalar(1)
                   : hi     ? *hi - Scalar(1)
                            : Scalar(0);
      auto [plus, minus] = step_off(arr, inserted, c.signs, l, offset(p0, mid, dir));
      Chamber above = c, below = c;
      above.signs.push_back(1);
      above.witness = plus;
      below.signs.push_back(-1);
      below.witness = minus;
      next.push_back(std::move(above));
      next.push_back(std::move(below));
    }
    chs = std::move(next);
    inserted.push_back(pos);
  }

  size_t expected = 1 + arr.size();
  for (const auto& p : arr.intersection_poset(false))
    expected += p.multiplicity() - 1;
  if (chs.size() != expected)
    throw Error(ErrorKind::BadInput, "chamber count mismatch (internal)");
  return chs;
}

std::vector<int> separating(const Arrangement& arr, const Chamber& a,
                            const Chamber& b) {
  std::vector<int> out;
  for (size_t j = 0; j < arr.size(); ++j)
    if (a.signs[j] != b.signs[j]) out.push_back(arr.line(j).name);
  std::sort(out.begin(), out.end());
  return out;
}

void validate_flag(const Arrangement& arr, const Flag& flag) {
  if (flag.dir.x.is_zero() && flag.dir.y.is_zero())
    throw Error(ErrorKind::InvalidFlag, "flag direction is zero");
  std::optional<Scalar> min_t;
  for (const Line& l : arr.lines()) {
    Scalar b = l.a * flag.dir.x + l.b * flag.dir.y;
    if (b.is_zero())
      throw Error(ErrorKind::InvalidFlag,
                  "flag line is parallel to line " + std::to_string(l.name));
    Scalar t = -l.eval(flag.f0) / b;
    if (t.sign() <= 0)
      throw Error(ErrorKind::InvalidFlag,
                  "flag base point is not strictly before the crossing with "
                  "line " + std::to_string(l.name));
    if (!min_t || t < *min_t) min_t = t;
  }
  // Distinct crossings and one-sidedness both follow from: every affine
  // intersection point lies strictly on one common side of the flag line.
  Point n{-flag.dir.y, flag.dir.x};
  int side = 0;
  for (const auto& p : arr.intersection_poset(false)) {
    Scalar v = n.x * (p.location->x - flag.f0.x) +
               n.y * (p.location->y - flag.f0.y);
    int s = v.sign();
    if (s == 0)
      throw Error(ErrorKind::InvalidFlag,
                  "flag line passes through an intersection point");
    if (side == 0) side = s;
    if (s != side)
      throw Error(ErrorKind::InvalidFlag,
                  "intersection points lie on both sides of the flag line");
  }
}

Flag choose_flag(const Arrangement& arr) {
  if (arr.flag_hint()) {
    Flag f{arr.flag_hint()->origin, arr.flag_hint()->direction};
    validate_flag(arr, f);
    return f;
  }
  const auto& pts = arr.intersection_poset(false);
  for (long k = 1;; ++k) {
    Point dir{Scalar(1), Scalar(k)};
    bool ok = true;
    for (const Line& l : arr.lines())
      if ((l.a * dir.x + l.b * dir.y).is_zero()) ok = false;
    if (!ok) continue;
    // Slide the flag line beyond every intersection point, then put the base
    // point before every crossing.
    Point n{-dir.y, dir.x};
    Scalar level(0);
    bool first = true;
    for (const auto& p : pts) {
      Scalar v = n.x * p.location->x + n.y * p.location->y;
      if (first || v > level) level = v;
      first = false;
    }
    level += Scalar(1);
    // Base point on the line {n . x = level}.
    Point f0{level * n.x / (n.x * n.x + n.y * n.y),
             level * n.y / (n.x * n.x + n.y * n.y)};
    std::optional<Scalar> min_t;
    for (const Line& l : arr.lines()) {
      Scalar t = -l.eval(f0) / (l.a * dir.x + l.b * dir.y);
      if (!min_t || t < *min_t) min_t = t;
    }
    Flag f{offset(f0, *min_t - Scalar(1), dir), dir};
    validate_flag(arr, f);
    return f;
  }
}

FlaggedArrangement classify_chambers(const Arrangement& arr) {
  return classify_chambers(arr, choose_flag(arr));
}

std::optional<size_t> locate_chamber(const Arrangement& arr,
                                     const std::vector<Chamber>& chs,
                                     const Point& pt) {
  std::vector<int8_t> signs(arr.size());
  for (size_t j = 0; j < arr.size(); ++j) {
    int s = arr.line(j).side(pt);
    if (s == 0) return std::nullopt;
    signs[j] = (int8_t)s;
  }
  for (size_t i = 0; i < chs.size(); ++i)
    if (chs[i].signs == signs) return i;
  return std::nullopt;
}

FlaggedArrangement classify_chambers(const Arrangement& arr, const Flag& flag) {
  validate_flag(arr, flag);
  FlaggedArrangement out;
  out.arr = arr;
  out.flag = flag;
  out.chambers = chambers(arr);

  // Crossing order along the flag line fixes the numbering H_1..H_n.
  std::vector<std::pair<Scalar, size_t>> crossings;
  for (size_t j = 0; j < arr.size(); ++j) {
    const Line& l = arr.line(j);
    Scalar t = -l.eval(flag.f0) / (l.a * flag.dir.x + l.b * flag.dir.y);
    crossings.emplace_back(t, j);
  }
  std::sort(crossings.begin(), crossings.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [t, j] : crossings) out.line_order.push_back(j);

  auto must_locate = [&](const Point& pt) {
    auto idx = locate_chamber(arr, out.chambers, pt);
    if (!idx) throw Error(ErrorKind::BadInput, "lost chamber (internal)");
    return *idx;
  };

  out.c0 = must_locate(flag.f0);
  const size_t n = arr.size();
  for (size_t i = 0; i < n; ++i) {
    Scalar t = i + 1 < n
                   ? (crossings[i].first + crossings[i + 1].first) / Scalar(2)
                   : crossings[i].first + Scalar(1);
    out.ch1.push_back(must_locate(offset(flag.f0, t, flag.dir)));
  }

  // Walking along the flag line flips exactly the lines already crossed.
  for (size_t i = 0; i < n; ++i) {
    auto sep = separating(arr, out.chambers[out.c0],
                          out.chambers[out.ch1[i]]);
    std::vector<int> want;
    for (size_t j = 0; j <= i; ++j)
      want.push_back(arr.line(out.line_order[j]).name);
    std::sort(want.begin(), want.end());
    if (sep != want)
      throw Error(ErrorKind::BadInput, "flag walk mismatch (internal)");
  }

  std::vector<bool> taken(out.chambers.size(), false);
  taken[out.c0] = true;
  for (size_t i : out.ch1) taken[i] = true;
  for (size_t i = 0; i < out.chambers.size(); ++i)
    if (!taken[i]) out.ch2.push_back(i);
  // Deterministic order: lexicographic in the far-side pattern over H_1..H_n.
  std::sort(out.ch2.begin(), out.ch2.end(), [&](size_t a, size_t b) {
    for (size_t i = 0; i < n; ++i) {
      int sa = out.rel_sign(a, i), sb = out.rel_sign(b, i);
      if (sa != sb) return sa < sb;
    }
    return false;
  });
  return out;
}

}  // namespace aomoto
