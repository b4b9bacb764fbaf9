#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

#include "aomoto/scalar.hpp"

namespace aomoto {

using Residue = std::uint64_t;

/// Dense matrix over Z/m, m >= 2.  Entries are kept reduced into [0, m).
class ModMatrix {
public:
  ModMatrix(Residue m, size_t rows, size_t cols);
  static ModMatrix identity(Residue m, size_t n);

  Residue modulus() const { return m_; }
  size_t rows() const { return rows_.size(); }
  size_t cols() const { return cols_; }

  Residue at(size_t i, size_t j) const { return rows_[i][j]; }
  void set(size_t i, size_t j, Residue v) { rows_[i][j] = v % m_; }
  const std::vector<Residue>& row(size_t i) const { return rows_[i]; }
  void append_row(std::vector<Residue> r);

  bool is_zero() const;
  bool operator==(const ModMatrix&) const = default;

  Residue mul(Residue a, Residue b) const {
    return Residue((unsigned __int128)a * b % m_);
  }
  Residue reduce(long long v) const {
    long long r = v % (long long)m_;
    return Residue(r < 0 ? r + (long long)m_ : r);
  }

  /// Row vector times this matrix.
  std::vector<Residue> apply_left(const std::vector<Residue>& x) const;

private:
  Residue m_ = 2;
  size_t cols_ = 0;
  std::vector<std::vector<Residue>> rows_;
};

/// Canonical Howell normal form of the row module.  Two generating sets span
/// the same submodule of (Z/m)^c iff their Howell forms are equal.  Zero rows
/// are dropped.
ModMatrix howell_form(const ModMatrix& m);

/// Generators of the left kernel {x in (Z/m)^rows : x * M = 0}.
ModMatrix left_kernel(const ModMatrix& m);

/// Membership test against a Howell form.
bool in_rowspace(const ModMatrix& howell, const std::vector<Residue>& v);

/// Calls fn once for every element of the row module of a Howell form.
void for_each_element(const ModMatrix& howell,
                      const std::function<void(const std::vector<Residue>&)>& fn);

/// Number of elements of the row module of a Howell form.
mpz_class rowspace_size(const ModMatrix& howell);

/// Invariant factors s_1 | s_2 | ... (each > 1) of a finite abelian group.
struct ModuleInvariants {
  std::vector<Residue> factors;
  bool trivial() const { return factors.empty(); }
  bool operator==(const ModuleInvariants&) const = default;
};

/// Structure of the submodule of (Z/m)^c spanned by the rows of `gens`.
ModuleInvariants invariants_of_rowspace(const ModMatrix& gens);

/// Structure of rowspace(big) / rowspace(sub); throws NotASubmodule when the
/// rows of `sub` do not all lie in rowspace(big).
ModuleInvariants quotient_invariants(const ModMatrix& big, const ModMatrix& sub);

/// Diagonal of the Smith normal form over Z, nonzero entries only, as a
/// divisibility chain of positive integers.
std::vector<mpz_class> smith_invariants(std::vector<std::vector<mpz_class>> a);

}  // namespace aomoto
