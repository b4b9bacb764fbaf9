#include "aomoto/modring.hpp"

#include <algorithm>
#include <numeric>

namespace aomoto {

ModMatrix::ModMatrix(Residue m, size_t rows, size_t cols)
    : m_(m), cols_(cols), rows_(rows, std::vector<Residue>(cols, 0)) {
  if (m < 2) throw Error(ErrorKind::BadModulus, "modulus must be >= 2");
}

ModMatrix ModMatrix::identity(Residue m, size_t n) {
  ModMatrix out(m, n, n);
  for (size_t i = 0; i < n; ++i) out.set(i, i, 1 % m);
  return out;
}

void ModMatrix::append_row(std::vector<Residue> r) {
  if (r.size() != cols_)
    throw Error(ErrorKind::BadInput, "row length mismatch");
  for (Residue& v : r) v %= m_;
  rows_.push_back(std::move(r));
}

bool ModMatrix::is_zero() const {
  for (const auto& r : rows_)
    for (Residue v : r)
      if (v != 0) return false;
  return true;
}

std::vector<Residue> ModMatrix::apply_left(
    const std::vector<Residue>& x) const {
  if (x.size() != rows())
    throw Error(ErrorKind::BadInput, "vector length mismatch");
  std::vector<Residue> out(cols_, 0);
  for (size_t i = 0; i < rows(); ++i)
    for (size_t j = 0; j < cols_; ++j)
      out[j] = (out[j] + mul(x[i], rows_[i][j])) % m_;
  return out;
}

namespace {

// g = gcd(a, b) together with x, y such that x*a + y*b = g.
long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

Residue mod_inverse(Residue a, Residue m) {
  long long x, y;
  long long g = egcd((long long)(a % m), (long long)m, x, y);
  (void)g;
  long long r = x % (long long)m;
  return Residue(r < 0 ? r + (long long)m : r);
}

// Unit u of Z/m with u * a == gcd(a, m) (mod m), for a != 0.
Residue lifting_unit(Residue a, Residue m) {
  Residue g = std::gcd(a, m);
  Residue a1 = a / g, m1 = m / g;
  if (m1 == 1) return 1 % m;
  Residue u = mod_inverse(a1 % m1, m1);
  if (u == 0) u = m1;
  while (std::gcd(u, m) != 1) u += m1;
  return u % m;
}

struct RowOps {
  Residue m;
  Residue red(long long v) const {
    long long r = v % (long long)m;
    return Residue(r < 0 ? r + (long long)m : r);
  }
  Residue mul(Residue a, Residue b) const {
    return Residue((unsigned __int128)a * b % m);
  }
  std::vector<Residue> combine(Residue x, const std::vector<Residue>& u,
                               Residue y, const std::vector<Residue>& v) const {
    std::vector<Residue> out(u.size());
    for (size_t j = 0; j < u.size(); ++j)
      out[j] = (mul(x, u[j]) + mul(y, v[j])) % m;
    return out;
  }
  std::vector<Residue> scale(Residue x, const std::vector<Residue>& u) const {
    std::vector<Residue> out(u.size());
    for (size_t j = 0; j < u.size(); ++j) out[j] = mul(x, u[j]);
    return out;
  }
  bool zero(const std::vector<Residue>& u) const {
    return std::all_of(u.begin(), u.end(), [](Residue v) { return v == 0; });
  }
};

}  // namespace

ModMatrix howell_form(const ModMatrix& in) {
  const Residue m = in.modulus();
  RowOps ops{m};
  std::vector<std::vector<Residue>> rows;
  for (size_t i = 0; i < in.rows(); ++i) rows.push_back(in.row(i));

  size_t r = 0;
  for (size_t col = 0; col < in.cols(); ++col) {
    if (r >= rows.size()) break;
    for (size_t i = r; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      if (rows[r][col] == 0) {
        std::swap(rows[r], rows[i]);
        continue;
      }
      if (i == r) continue;
      long long x, y;
      long long a = (long long)rows[r][col], b = (long long)rows[i][col];
      long long g = egcd(a, b, x, y);
      auto new_r =
          ops.combine(ops.red(x), rows[r], ops.red(y), rows[i]);
      auto new_i = ops.combine(ops.red(a / g), rows[i], ops.red(-(b / g)),
                               rows[r]);
      rows[r] = std::move(new_r);
      rows[i] = std::move(new_i);
    }
    if (rows[r][col] == 0) continue;
    Residue g = std::gcd(rows[r][col], m);
    rows[r] = ops.scale(lifting_unit(rows[r][col], m), rows[r]);
    // rows[r][col] is now exactly g, a divisor of m.
    if (g > 1) {
      auto ann = ops.scale(m / g, rows[r]);
      if (!ops.zero(ann)) rows.push_back(std::move(ann));
    }
    for (size_t i = 0; i < r; ++i) {
      Residue q = rows[i][col] / g;
      if (q != 0)
        rows[i] = ops.combine(1 % m, rows[i], ops.red(-(long long)q), rows[r]);
    }
    ++r;
  }
  ModMatrix out(m, 0, in.cols());
  for (size_t i = 0; i < r; ++i) out.append_row(std::move(rows[i]));
  return out;
}

ModMatrix left_kernel(const ModMatrix& in) {
  const Residue m = in.modulus();
  const size_t r = in.rows(), c = in.cols();
  ModMatrix aug(m, r, c + r);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < c; ++j) aug.set(i, j, in.at(i, j));
    aug.set(i, c + i, 1 % m);
  }
  ModMatrix h = howell_form(aug);
  ModMatrix out(m, 0, r);
  for (size_t i = 0; i < h.rows(); ++i) {
    bool prefix_zero = true;
    for (size_t j = 0; j < c; ++j)
      if (h.at(i, j) != 0) {
        prefix_zero = false;
        break;
      }
    if (!prefix_zero) continue;
    std::vector<Residue> x(r);
    for (size_t j = 0; j < r; ++j) x[j] = h.at(i, c + j);
    out.append_row(std::move(x));
  }
  return out;
}

bool in_rowspace(const ModMatrix& howell, const std::vector<Residue>& v) {
  const Residue m = howell.modulus();
  RowOps ops{m};
  std::vector<Residue> w(v);
  for (Residue& x : w) x %= m;
  size_t i = 0;
  for (size_t col = 0; col < howell.cols(); ++col) {
    Residue piv = (i < howell.rows()) ? howell.at(i, col) : 0;
    if (piv != 0) {
      if (w[col] % piv != 0) return false;
      Residue q = w[col] / piv;
      if (q != 0)
        w = ops.combine(1 % m, w, ops.red(-(long long)q), howell.row(i));
      ++i;
    } else if (w[col] != 0) {
      return false;
    }
  }
  return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

void for_each_element(
    const ModMatrix& howell,
    const std::function<void(const std::vector<Residue>&)>& fn) {
  const Residue m = howell.modulus();
  RowOps ops{m};
  std::vector<Residue> cur(howell.cols(), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == howell.rows()) {
      fn(cur);
      return;
    }
    size_t col = 0;
    while (howell.at(i, col) == 0) ++col;
    Residue order = m / std::gcd(howell.at(i, col), m);
    auto saved = cur;
    for (Residue c = 0; c < order; ++c) {
      rec(i + 1);
      cur = ops.combine(1 % m, saved, (c + 1) % m, howell.row(i));
    }
    cur = saved;
  };
  rec(0);
}

mpz_class rowspace_size(const ModMatrix& howell) {
  const Residue m = howell.modulus();
  mpz_class total = 1;
  for (size_t i = 0; i < howell.rows(); ++i) {
    size_t col = 0;
    while (howell.at(i, col) == 0) ++col;
    total *= mpz_class((unsigned long)(m / std::gcd(howell.at(i, col), m)));
  }
  return total;
}

std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> a) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  std::vector<mpz_class> diag;
  size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero entry of minimal absolute value in the submatrix.
    size_t pi = t, pj = t;
    bool any = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 &&
            (!any || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
          any = true;
        }
    if (!any) break;
    std::swap(a[t], a[pi]);
    for (size_t i = t; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool again = false;
    for (size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      mpz_class q = a[i][t] / a[t][t];
      for (size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) again = true;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      mpz_class q = a[t][j] / a[t][t];
      for (size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) again = true;
    }
    if (again) continue;

    // Enforce the divisibility chain before fixing this pivot.
    bool fixed = true;
    for (size_t i = t + 1; i < rows && fixed; ++i)
      for (size_t j = t + 1; j < cols && fixed; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
          fixed = false;
        }
    if (!fixed) continue;

    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

namespace {

ModuleInvariants invariants_from_relations(const ModMatrix& relations,
                                           size_t rank, Residue m) {
  std::vector<std::vector<mpz_class>> rel;
  for (size_t i = 0; i < relations.rows(); ++i) {
    std::vector<mpz_class> row(rank);
    for (size_t j = 0; j < rank; ++j)
      row[j] = mpz_class((unsigned long)relations.at(i, j));
    rel.push_back(std::move(row));
  }
  for (size_t i = 0; i < rank; ++i) {
    std::vector<mpz_class> row(rank, 0);
    row[i] = mpz_class((unsigned long)m);
    rel.push_back(std::move(row));
  }
  auto diag = smith_invariants(std::move(rel));
  ModuleInvariants out;
  for (const mpz_class& d : diag)
    if (d > 1) out.factors.push_back((Residue)d.get_ui());
  return out;
}

}  // namespace

ModuleInvariants invariants_of_rowspace(const ModMatrix& gens) {
  if (gens.rows() == 0) return {};
  return invariants_from_relations(left_kernel(gens), gens.rows(),
                                   gens.modulus());
}

ModuleInvariants quotient_invariants(const ModMatrix& big,
                                     const ModMatrix& sub) {
  if (big.modulus() != sub.modulus() || big.cols() != sub.cols())
    throw Error(ErrorKind::BadInput, "shape mismatch in quotient");
  ModMatrix h = howell_form(big);
  for (size_t i = 0; i < sub.rows(); ++i)
    if (!in_rowspace(h, sub.row(i)))
      throw Error(ErrorKind::NotASubmodule,
                  "denominator is not contained in the numerator");
  const size_t r = big.rows();
  if (r == 0) return {};
  ModMatrix stacked(big.modulus(), 0, big.cols());
  for (size_t i = 0; i < big.rows(); ++i) stacked.append_row(big.row(i));
  for (size_t i = 0; i < sub.rows(); ++i) stacked.append_row(sub.row(i));
  // x-parts of the left kernel of [big; sub] are exactly the coefficient
  // vectors sending big-generators into rowspace(sub).
  return invariants_from_relations(left_kernel(stacked), r, big.modulus());
}

}  // namespace aomoto
