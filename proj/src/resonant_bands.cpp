#include "aomoto/resonant_bands.hpp"

#include <algorithm>
#include <numeric>

namespace aomoto {

std::vector<Band> bands(const FlaggedArrangement& fa) {
  const Arrangement& arr = fa.arr;
  std::vector<Band> out;
  for (size_t i = 0; i + 1 < fa.n(); ++i) {
    const Line& l1 = arr.line(fa.line_order[i]);
    const Line& l2 = arr.line(fa.line_order[i + 1]);
    if (!l1.parallel_to(l2)) continue;
    Band b;
    b.wall1 = i;
    b.wall2 = i + 1;
    b.u1 = fa.ch1[i];
    // U2: same side of every wall-parallel line, opposite side of the rest.
    std::vector<int8_t> target = fa.chambers[b.u1].signs;
    for (size_t j = 0; j < arr.size(); ++j)
      if (!arr.line(j).parallel_to(l1)) target[j] = (int8_t)-target[j];
    bool found = false;
    for (size_t c = 0; c < fa.chambers.size() && !found; ++c) {
      if (fa.chambers[c].signs == target) {
        b.u2 = c;
        found = true;
      }
    }
    if (!found)
      throw Error(ErrorKind::BadInput, "band has no opposite chamber (internal)");
    auto sep =
        separating(arr, fa.chambers[b.u1], fa.chambers[b.u2]);
    b.length = sep.size();
    for (int w : {l1.name, l2.name})
      if (std::count(sep.begin(), sep.end(), w))
        throw Error(ErrorKind::BadInput, "band wall separates it (internal)");
    // A strip with no transversal line is a single chamber, so U2 = U1.
    if (b.u2 != b.u1 &&
        std::count(fa.ch2.begin(), fa.ch2.end(), b.u2) == 0)
      throw Error(ErrorKind::BadInput, "band U2 meets the flag line (internal)");
    out.push_back(b);
  }
  // Every adjacent parallel pair is flag-consecutive, so the count is the sum
  // of (class size - 1).
  size_t expected = 0;
  for (const auto& cls : arr.parallel_classes()) expected += cls.size() - 1;
  if (out.size() != expected)
    throw Error(ErrorKind::BadInput, "band count mismatch (internal)");
  return out;
}

RBData resonant_bands(const FlaggedArrangement& fa, const OneForm& eta) {
  const Residue m = eta.m;
  RBData out{bands(fa), {}, ModMatrix(m, 0, fa.ch2.size())};
  for (size_t bi = 0; bi < out.all.size(); ++bi) {
    const Band& b = out.all[bi];
    Residue s = 0;
    for (int name :
         separating(fa.arr, fa.chambers[b.u1], fa.chambers[b.u2]))
      s = (s + eta.at(name)) % m;
    if (s != 0) continue;
    out.resonant.push_back(bi);
    std::vector<Residue> row(fa.ch2.size(), 0);
    for (size_t d = 0; d < fa.ch2.size(); ++d) {
      size_t D = fa.ch2[d];
      // D lies strictly inside the strip.
      if (fa.rel_sign(D, b.wall1) != 1 || fa.rel_sign(D, b.wall2) != -1)
        continue;
      Residue v = 0;
      for (int name :
           separating(fa.arr, fa.chambers[b.u1], fa.chambers[D]))
        v = (v + eta.at(name)) % m;
      row[d] = v;
    }
    out.matrix.append_row(std::move(row));
  }
  return out;
}

KernelRB kernel_rb(const FlaggedArrangement& fa, const OneForm& eta) {
  RBData rb = resonant_bands(fa, eta);
  ModMatrix gens = howell_form(left_kernel(rb.matrix));
  return KernelRB{invariants_of_rowspace(gens), gens};
}

OneForm psi(const FlaggedArrangement& fa, const RBData& rb,
            const std::vector<Residue>& v, Residue m) {
  if (v.size() != rb.resonant.size())
    throw Error(ErrorKind::BadInput, "band vector length mismatch");
  OneForm out{m, {}};
  for (size_t r = 0; r < v.size(); ++r) {
    const Band& b = rb.all[rb.resonant[r]];
    int n1 = fa.arr.line(fa.line_order[b.wall1]).name;
    int n2 = fa.arr.line(fa.line_order[b.wall2]).name;
    out.set(n1, (out.at(n1) + v[r]) % m);
    out.set(n2, (out.at(n2) + m - v[r] % m) % m);
  }
  return out;
}

RBResult h1_via_rb(const FlaggedArrangement& fa, const OneForm& eta) {
  const Residue m = eta.m;
  Residue alpha = 0;
  for (const Line& l : fa.arr.lines()) alpha = (alpha + eta.at(l.name)) % m;
  if (std::gcd(alpha, m) != 1)
    throw Error(ErrorKind::NonUnitAlpha,
                "sum of coefficients is not a unit mod " + std::to_string(m));

  RBData rb = resonant_bands(fa, eta);
  ModMatrix gens = howell_form(left_kernel(rb.matrix));
  RBResult out{invariants_of_rowspace(gens), RBStatus::Isomorphic};

  bool prime = true;
  for (Residue d = 2; d * d <= m; ++d)
    if (m % d == 0) prime = false;
  bool all_resonant = rb.resonant.size() == rb.all.size();
  if (!prime && !all_resonant) {
    out.status = RBStatus::InjectiveOnly;
    return out;
  }
  if (!(out.invariants == h1_direct(fa.arr, eta).invariants))
    throw Error(ErrorKind::BadInput,
                "band kernel disagrees with the direct H1 (internal)");
  return out;
}

}  // namespace aomoto
