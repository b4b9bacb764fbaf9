#include "aomoto/arrangement.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace aomoto {

Line Line::normalized(int name, Scalar a, Scalar b, Scalar c) {
  if (a.is_zero() && b.is_zero())
    throw Error(ErrorKind::ZeroNormal,
                "line " + std::to_string(name) + " has zero normal vector");
  Scalar lead = a.is_zero() ? b : a;
  return Line{name, a / lead, b / lead, c / lead};
}

Arrangement::Arrangement(Field field, std::vector<Line> lines,
                         std::optional<int> infinity_name)
    : field_(field), lines_(std::move(lines)), infinity_name_(infinity_name) {
  for (size_t i = 0; i < lines_.size(); ++i) {
    const Line& l = lines_[i];
    if (infinity_name_ && l.name == *infinity_name_)
      throw Error(ErrorKind::BadLineName,
                  "chart line reuses the infinity line name");
    if (!by_name_.emplace(l.name, i).second)
      throw Error(ErrorKind::BadLineName,
                  "duplicate line name " + std::to_string(l.name));
    for (size_t j = 0; j < i; ++j) {
      if (lines_[j].a == l.a && lines_[j].b == l.b && lines_[j].c == l.c)
        throw Error(ErrorKind::DuplicateLine,
                    "lines " + std::to_string(lines_[j].name) + " and " +
                        std::to_string(l.name) + " coincide");
    }
  }
}

size_t Arrangement::position(int name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end())
    throw Error(ErrorKind::BadLineName,
                "unknown line name " + std::to_string(name));
  return it->second;
}

std::vector<int> Arrangement::member_names() const {
  std::vector<int> out;
  if (infinity_name_) out.push_back(*infinity_name_);
  for (const Line& l : lines_) out.push_back(l.name);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::vector<size_t>>& Arrangement::parallel_classes() const {
  if (!parallel_) {
    std::vector<std::vector<size_t>> classes;
    for (size_t i = 0; i < lines_.size(); ++i) {
      bool placed = false;
      for (auto& cls : classes) {
        if (lines_[cls.front()].parallel_to(lines_[i])) {
          cls.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({i});
    }
    parallel_ = std::move(classes);
  }
  return *parallel_;
}

Point Arrangement::intersect(const Line& f, const Line& g) {
  Scalar det = f.a * g.b - f.b * g.a;
  return Point{(f.c * g.b - f.b * g.c) / det, (f.a * g.c - f.c * g.a) / det};
}

const std::vector<IntersectionPoint>& Arrangement::intersection_poset(
    bool with_infinity) const {
  auto& cache = with_infinity ? poset_full_ : poset_affine_;
  if (cache) return *cache;

  std::map<Point, std::set<int>, PointLess> at;
  for (size_t i = 0; i < lines_.size(); ++i) {
    for (size_t j = i + 1; j < lines_.size(); ++j) {
      if (lines_[i].parallel_to(lines_[j])) continue;
      Point pt = intersect(lines_[i], lines_[j]);
      at[pt].insert(lines_[i].name);
      at[pt].insert(lines_[j].name);
    }
  }
  std::vector<IntersectionPoint> out;
  for (auto& [pt, names] : at) {
    IntersectionPoint ip;
    ip.location = pt;
    ip.incident.assign(names.begin(), names.end());
    for (int n : ip.incident) {
      if (lines_[position(n)].side(pt) != 0)
        throw Error(ErrorKind::BadInput, "inexact incidence (internal)");
    }
    out.push_back(std::move(ip));
  }
  if (with_infinity) {
    for (const auto& cls : parallel_classes()) {
      IntersectionPoint ip;
      const Line& rep = lines_[cls.front()];
      // Canonical direction class (b, -a), first nonzero component +1.
      Scalar dx = rep.b, dy = Scalar(0) - rep.a;
      Scalar lead = dx.is_zero() ? dy : dx;
      ip.direction = Point{dx / lead, dy / lead};
      for (size_t pos : cls) ip.incident.push_back(lines_[pos].name);
      if (infinity_name_) ip.incident.push_back(*infinity_name_);
      std::sort(ip.incident.begin(), ip.incident.end());
      if (ip.incident.size() >= 2) out.push_back(std::move(ip));
    }
  }
  cache = std::move(out);
  return *cache;
}

namespace {

// Direction of a line canonicalized into the closed upper half plane with
// angle in [0, pi).
Point upper_direction(const Line& l) {
  Scalar dx = l.b, dy = Scalar(0) - l.a;
  int s = dy.sign();
  if (s < 0 || (s == 0 && dx.sign() < 0)) {
    dx = Scalar(0) - dx;
    dy = Scalar(0) - dy;
  }
  return Point{dx, dy};
}

// angle(u) < angle(v) for upper-half-plane directions.
bool angle_less(const Point& u, const Point& v) {
  return (u.x * v.y - u.y * v.x).sign() > 0;
}

std::vector<int> rotate_to_min(std::vector<int> cyc) {
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  return cyc;
}

}  // namespace

std::vector<int> cyclic_order_at_point(const Arrangement& arr,
                                       const IntersectionPoint& point) {
  if (point.at_infinity())
    throw Error(ErrorKind::BadInput,
                "cyclic_order_at_point expects an affine point");
  std::vector<int> names = point.incident;
  std::sort(names.begin(), names.end(), [&](int a, int b) {
    return angle_less(upper_direction(arr.line(arr.position(a))),
                      upper_direction(arr.line(arr.position(b))));
  });
  return rotate_to_min(std::move(names));
}

std::vector<int> projective_cyclic_order(const Arrangement& arr,
                                         const IntersectionPoint& point) {
  if (!point.at_infinity()) return cyclic_order_at_point(arr, point);
  std::vector<int> names;
  bool has_inf = false;
  for (int n : point.incident) {
    if (arr.infinity_name() && n == *arr.infinity_name())
      has_inf = true;
    else
      names.push_back(n);
  }
  // Parallel members sorted by offset; the pencil closes through the
  // direction of the infinity line of the chart.
  std::sort(names.begin(), names.end(), [&](int a, int b) {
    const Line& la = arr.line(arr.position(a));
    const Line& lb = arr.line(arr.position(b));
    return la.c < lb.c;
  });
  if (has_inf) names.push_back(*arr.infinity_name());
  return rotate_to_min(std::move(names));
}

namespace {

using Row3 = std::array<Scalar, 3>;

Row3 apply_inverse(const Row3& l, const std::array<Row3, 3>& t) {
  // Row vector times adjugate(T); overall scaling by det is irrelevant for a
  // projective line equation.
  auto co = [&](int r, int c) {
    int r1 = (r + 1) % 3, r2 = (r + 2) % 3;
    int c1 = (c + 1) % 3, c2 = (c + 2) % 3;
    return t[r1][c1] * t[r2][c2] - t[r1][c2] * t[r2][c1];
  };
  Row3 out;
  for (int j = 0; j < 3; ++j) {
    // adj(T)[i][j] = cofactor(T)[j][i]
    out[j] = l[0] * co(j, 0) + l[1] * co(j, 1) + l[2] * co(j, 2);
  }
  return out;
}

Scalar det3(const std::array<Row3, 3>& t) {
  return t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) -
         t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
         t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
}

}  // namespace

Arrangement decone_geometry(const Arrangement& arr, int name) {
  if (arr.infinity_name() && name == *arr.infinity_name()) return arr;
  const Line& sent = arr.line(arr.position(name));

  Row3 third{sent.a, sent.b, Scalar(0) - sent.c};
  const std::array<Row3, 3> units = {Row3{1, 0, 0}, Row3{0, 1, 0},
                                     Row3{0, 0, 1}};
  std::array<Row3, 3> t{};
  bool found = false;
  for (int i = 0; i < 3 && !found; ++i) {
    for (int j = i + 1; j < 3 && !found; ++j) {
      t = {units[i], units[j], third};
      if (!det3(t).is_zero()) found = true;
    }
  }

  std::vector<std::pair<int, Row3>> rows;
  for (const Line& l : arr.lines()) {
    if (l.name == name) continue;
    rows.emplace_back(l.name, Row3{l.a, l.b, Scalar(0) - l.c});
  }
  if (arr.infinity_name())
    rows.emplace_back(*arr.infinity_name(), Row3{0, 0, 1});
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Line> out;
  for (auto& [n, row] : rows) {
    Row3 img = apply_inverse(row, t);
    out.push_back(
        Line::normalized(n, img[0], img[1], Scalar(0) - img[2]));
  }
  return Arrangement(arr.field(), std::move(out), name);
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) {
    if (tok.front() == '#') break;
    out.push_back(tok);
  }
  return out;
}

}  // namespace

Arrangement parse_arrangement(std::istream& in) {
  Field field;
  bool field_seen = false;
  bool projective_closed = false;
  std::optional<FlagHint> hint;
  std::vector<Line> lines;

  std::string raw;
  while (std::getline(in, raw)) {
    auto tok = tokens(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok.front();
    if (kw == "field") {
      if (tok.size() == 2 && tok[1] == "rational") {
        field = Field{0};
      } else if (tok.size() == 3 && tok[1] == "quadratic") {
        long d = std::stol(tok[2]);
        if (d <= 0)
          throw Error(ErrorKind::BadInput, "quadratic field needs d > 0");
        field = Field{d};
      } else {
        throw Error(ErrorKind::BadInput, "malformed field header");
      }
      field_seen = true;
    } else if (kw == "projective") {
      if (tok.size() != 2 || tok[1] != "closed")
        throw Error(ErrorKind::BadInput, "malformed projective header");
      projective_closed = true;
    } else if (kw == "line") {
      if (!field_seen)
        throw Error(ErrorKind::BadInput, "line record before field header");
      if (tok.size() != 5)
        throw Error(ErrorKind::BadInput, "line record needs name a b c");
      std::string nm = tok[1];
      if (!nm.empty() && (nm[0] == 'H' || nm[0] == 'h')) nm = nm.substr(1);
      int name;
      try {
        name = std::stoi(nm);
      } catch (...) {
        throw Error(ErrorKind::BadLineName, "bad line name " + tok[1]);
      }
      if (name < 1)
        throw Error(ErrorKind::BadLineName, "line names are 1-based");
      lines.push_back(Line::normalized(name, Scalar::parse(tok[2], field),
                                       Scalar::parse(tok[3], field),
                                       Scalar::parse(tok[4], field)));
    } else if (kw == "flag") {
      if (!field_seen)
        throw Error(ErrorKind::BadInput, "flag record before field header");
      if (tok.size() != 5)
        throw Error(ErrorKind::BadInput, "flag record needs x0 y0 dx dy");
      hint = FlagHint{
          Point{Scalar::parse(tok[1], field), Scalar::parse(tok[2], field)},
          Point{Scalar::parse(tok[3], field), Scalar::parse(tok[4], field)}};
    } else {
      throw Error(ErrorKind::BadInput, "unknown record '" + kw + "'");
    }
  }
  if (!field_seen) throw Error(ErrorKind::BadInput, "missing field header");
  Arrangement arr(field, std::move(lines),
                  projective_closed ? std::nullopt : std::optional<int>(0));
  arr.set_flag_hint(hint);
  return arr;
}

Arrangement parse_arrangement_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_arrangement(ss);
}

Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open " + path);
  return parse_arrangement(in);
}

}  // namespace aomoto
