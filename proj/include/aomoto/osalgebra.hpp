#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "aomoto/arrangement.hpp"
#include "aomoto/modring.hpp"

namespace aomoto {

/// Degree-1 element sum a_i e_i over Z/m, keyed by line name.  Coned forms
/// include the infinity member and sum to zero.
struct OneForm {
  Residue m = 2;
  std::map<int, Residue> a;

  Residue at(int name) const {
    auto it = a.find(name);
    return it == a.end() ? 0 : it->second;
  }
  void set(int name, Residue v) {
    if (v % m)
      a[name] = v % m;
    else
      a.erase(name);
  }
  Residue sum() const {
    Residue s = 0;
    for (auto& [k, v] : a) s = (s + v) % m;
    return s;
  }
  bool operator==(const OneForm&) const = default;
};

/// Degree-2 element in the Brieskorn block basis: per intersection point X
/// with incident lines i_1 < ... < i_t, coefficients of e_{i_1} ^ e_{i_j} for
/// j = 2..t.  Block order follows the poset order.
struct TwoForm {
  Residue m = 2;
  std::vector<std::vector<Residue>> blocks;

  bool is_zero() const {
    for (auto& b : blocks)
      for (Residue v : b)
        if (v) return false;
    return true;
  }
};

/// Comma-separated coefficient list in file line order.
OneForm parse_oneform(const std::string& csv, const Arrangement& arr,
                      Residue m);

/// All-ones form; over the members of the projective arrangement when
/// `projective`, over the affine chart lines otherwise.
OneForm diagonal_oneform(const Arrangement& arr, Residue m, bool projective);

/// e_i -> e~_i - e~_0 on the chart's infinity member: adds -sum(a) there.
OneForm cone_oneform(const OneForm& w, const Arrangement& arr);

/// Inverse chart identification: drops the coefficient of the new infinity
/// member `name`.  Requires sum(a) = 0.
OneForm decone_oneform(const OneForm& coned, int name);

/// Coefficient restriction to the lines through X.
OneForm localize(const OneForm& w, const IntersectionPoint& x);

/// Wedge product in Brieskorn blocks; blocks over the projective points when
/// `projective`, over affine points otherwise.
TwoForm wedge(const Arrangement& arr, const OneForm& eta, const OneForm& omega,
              bool projective);

/// Matrix of (eta ^ -) : A^1 -> A^2.  Rows follow the member index order
/// (affine: line positions; projective: ascending member names), columns
/// follow the block order of wedge().
ModMatrix wedge_matrix(const Arrangement& arr, const OneForm& eta,
                       bool projective);

/// Member names in row order of wedge_matrix.
std::vector<int> wedge_index(const Arrangement& arr, bool projective);

struct PointViolation {
  std::vector<int> incident;
  int condition = 0;  // 1 or 2
};

struct CheckReport {
  bool ok = true;
  std::vector<PointViolation> violations;
};

/// Pointwise cocycle test for the diagonal eta over a prime modulus on a
/// projective arrangement: at each X either p divides |A_X| and the local
/// coefficient sum vanishes (condition 1), or all local coefficients agree
/// (condition 2).
CheckReport is_cocycle_modp(const Arrangement& arr, const OneForm& eta,
                            const OneForm& omega);

/// Mod-2 specialization for subsets: |S_X| even at even points, S_X empty or
/// full at odd points.
CheckReport mod2_subset_check(const Arrangement& arr,
                              const std::set<int>& subset);

/// All subsets S with diag ^ e(S) = 0 over F_2, via the kernel of the wedge
/// matrix.  Deterministically ordered; always contains {} and the full set.
std::vector<std::set<int>> enumerate_f2_cocycles(const Arrangement& arr);

struct H1Result {
  ModuleInvariants invariants;
  ModMatrix kernel;  // Howell form of Ker(eta ^ -), rows over wedge_index
  std::vector<OneForm> representatives;
};

/// Brute-force H^1 of the Aomoto complex of the affine arrangement:
/// Ker(eta ^ -)/(R eta) over Z/m.
H1Result h1_direct(const Arrangement& arr, const OneForm& eta);

}  // namespace aomoto
