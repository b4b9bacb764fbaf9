#include "aomoto/chamber_complex.hpp"

namespace aomoto {

DegreeTable degree_table(const FlaggedArrangement& fa) {
  const size_t n = fa.n();
  DegreeTable out;
  out.deg.assign(n, std::vector<int8_t>(fa.ch2.size(), 0));
  for (size_t r = 0; r < n; ++r) {
    for (size_t d = 0; d < fa.ch2.size(); ++d) {
      size_t D = fa.ch2[d];
      if (r + 1 == n) {
        if (fa.rel_sign(D, r) > 0) out.deg[r][d] = -1;
        continue;
      }
      int s1 = fa.rel_sign(D, r), s2 = fa.rel_sign(D, r + 1);
      if (s1 < 0 && s2 > 0) out.deg[r][d] = 1;
      if (s1 > 0 && s2 < 0) out.deg[r][d] = -1;
    }
  }
  return out;
}

std::vector<Residue> nabla0(const FlaggedArrangement& fa, const OneForm& eta) {
  std::vector<Residue> out(fa.n());
  Residue acc = 0;
  for (size_t i = 0; i < fa.n(); ++i) {
    acc = (acc + eta.at(fa.arr.line(fa.line_order[i]).name)) % eta.m;
    out[i] = acc;
  }
  return out;
}

ModMatrix nabla1(const FlaggedArrangement& fa, const OneForm& eta) {
  const Residue m = eta.m;
  DegreeTable deg = degree_table(fa);
  ModMatrix out(m, fa.n(), fa.ch2.size());
  for (size_t r = 0; r < fa.n(); ++r) {
    for (size_t d = 0; d < fa.ch2.size(); ++d) {
      if (deg.deg[r][d] == 0) continue;
      Residue s = 0;
      for (int name : separating(fa.arr, fa.chambers[fa.ch1[r]],
                                 fa.chambers[fa.ch2[d]]))
        s = (s + eta.at(name)) % m;
      out.set(r, d, deg.deg[r][d] > 0 ? s : (m - s) % m);
    }
  }
  return out;
}

ModuleInvariants h1_chambers(const FlaggedArrangement& fa, const OneForm& eta) {
  ModMatrix kernel = howell_form(left_kernel(nabla1(fa, eta)));
  ModMatrix sub(eta.m, 0, fa.n());
  auto d0 = nabla0(fa, eta);
  if (!in_rowspace(kernel, d0))
    throw Error(ErrorKind::BadInput, "nabla1(nabla0) != 0 (internal)");
  sub.append_row(d0);
  return quotient_invariants(kernel, sub);
}

OneForm phi(const FlaggedArrangement& fa, const std::vector<Residue>& c,
            Residue m) {
  if (c.size() != fa.n())
    throw Error(ErrorKind::BadInput, "cochain length mismatch");
  OneForm out{m, {}};
  Residue prev = 0;
  for (size_t i = 0; i < fa.n(); ++i) {
    out.set(fa.arr.line(fa.line_order[i]).name, (c[i] + m - prev % m) % m);
    prev = c[i];
  }
  return out;
}

}  // namespace aomoto
