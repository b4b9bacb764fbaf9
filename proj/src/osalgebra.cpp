#include "aomoto/osalgebra.hpp"

#include <algorithm>

namespace aomoto {

namespace {

bool is_prime(Residue p) {
  if (p < 2) return false;
  for (Residue d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Residue neg(Residue v, Residue m) { return (m - v % m) % m; }

std::vector<Residue> to_vector(const OneForm& w, const std::vector<int>& index) {
  std::vector<Residue> out(index.size(), 0);
  std::map<int, size_t> pos;
  for (size_t i = 0; i < index.size(); ++i) pos[index[i]] = i;
  for (auto& [name, v] : w.a) {
    auto it = pos.find(name);
    if (it == pos.end()) {
      if (v % w.m)
        throw Error(ErrorKind::BadInput,
                    "form has a coefficient on line " + std::to_string(name) +
                        " outside the arrangement");
      continue;
    }
    out[it->second] = v % w.m;
  }
  return out;
}

}  // namespace

OneForm parse_oneform(const std::string& csv, const Arrangement& arr,
                      Residue m) {
  if (m < 2) throw Error(ErrorKind::BadModulus, "modulus must be >= 2");
  std::vector<long long> vals;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t comma = csv.find(',', start);
    std::string tok = csv.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      size_t used = 0;
      vals.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (...) {
      throw Error(ErrorKind::BadInput, "bad coefficient '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (vals.size() != arr.size())
    throw Error(ErrorKind::BadInput,
                "expected " + std::to_string(arr.size()) + " coefficients, got " +
                    std::to_string(vals.size()));
  OneForm out{m, {}};
  for (size_t i = 0; i < vals.size(); ++i) {
    long long r = vals[i] % (long long)m;
    out.set(arr.line(i).name, Residue(r < 0 ? r + (long long)m : r));
  }
  return out;
}

OneForm diagonal_oneform(const Arrangement& arr, Residue m, bool projective) {
  OneForm out{m, {}};
  if (projective) {
    for (int n : arr.member_names()) out.set(n, 1);
  } else {
    for (const Line& l : arr.lines()) out.set(l.name, 1);
  }
  return out;
}

OneForm cone_oneform(const OneForm& w, const Arrangement& arr) {
  if (!arr.infinity_name())
    throw Error(ErrorKind::BadInput,
                "arrangement has no infinity member to cone onto");
  int inf = *arr.infinity_name();
  if (w.at(inf) != 0)
    throw Error(ErrorKind::BadInput,
                "form already has a coefficient on the infinity member");
  OneForm out = w;
  out.set(inf, neg(w.sum(), w.m));
  return out;
}

OneForm decone_oneform(const OneForm& coned, int name) {
  if (coned.sum() != 0)
    throw Error(ErrorKind::BadInput,
                "deconing requires a form with zero coefficient sum");
  OneForm out = coned;
  out.set(name, 0);
  return out;
}

OneForm localize(const OneForm& w, const IntersectionPoint& x) {
  OneForm out{w.m, {}};
  for (int n : x.incident) out.set(n, w.at(n));
  return out;
}

std::vector<int> wedge_index(const Arrangement& arr, bool projective) {
  if (projective) return arr.member_names();
  std::vector<int> out;
  for (const Line& l : arr.lines()) out.push_back(l.name);
  return out;
}

TwoForm wedge(const Arrangement& arr, const OneForm& eta, const OneForm& omega,
              bool projective) {
  if (eta.m != omega.m)
    throw Error(ErrorKind::BadModulus, "mixed moduli in wedge");
  const Residue m = eta.m;
  auto mul = [m](Residue a, Residue b) {
    return Residue((unsigned __int128)a * b % m);
  };
  TwoForm out{m, {}};
  for (const auto& x : arr.intersection_poset(projective)) {
    Residue sigma = 0, tau = 0;
    for (int n : x.incident) {
      sigma = (sigma + eta.at(n)) % m;
      tau = (tau + omega.at(n)) % m;
    }
    std::vector<Residue> block;
    for (size_t j = 1; j < x.incident.size(); ++j) {
      int n = x.incident[j];
      // eta ^ omega on e_{i_1} ^ e_{i_j}, from the local pencil formula.
      block.push_back((mul(sigma, omega.at(n)) + neg(mul(tau, eta.at(n)), m)) %
                      m);
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

ModMatrix wedge_matrix(const Arrangement& arr, const OneForm& eta,
                       bool projective) {
  const Residue m = eta.m;
  std::vector<int> index = wedge_index(arr, projective);
  std::map<int, size_t> pos;
  for (size_t i = 0; i < index.size(); ++i) pos[index[i]] = i;
  (void)to_vector(eta, index);  // validates support

  size_t cols = 0;
  const auto& poset = arr.intersection_poset(projective);
  for (const auto& x : poset) cols += x.incident.size() - 1;

  ModMatrix out(m, index.size(), cols);
  size_t col = 0;
  for (const auto& x : poset) {
    Residue sigma = 0;
    for (int n : x.incident) sigma = (sigma + eta.at(n)) % m;
    for (size_t j = 1; j < x.incident.size(); ++j, ++col) {
      Residue aj = eta.at(x.incident[j]);
      for (int n : x.incident) {
        Residue v = neg(aj, m);
        if (n == x.incident[j]) v = (v + sigma) % m;
        out.set(pos.at(n), col, v);
      }
    }
  }
  return out;
}

namespace {

CheckReport diagonal_cocycle_conditions(const Arrangement& arr, Residue p,
                                        const OneForm& omega) {
  CheckReport rep;
  for (const auto& x : arr.intersection_poset(true)) {
    Residue tau = 0;
    for (int n : x.incident) tau = (tau + omega.at(n)) % p;
    if (x.incident.size() % p == 0) {
      if (tau != 0) rep.violations.push_back({x.incident, 1});
    } else {
      Residue first = omega.at(x.incident.front());
      for (int n : x.incident)
        if (omega.at(n) != first) {
          rep.violations.push_back({x.incident, 2});
          break;
        }
    }
  }
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace

CheckReport is_cocycle_modp(const Arrangement& arr, const OneForm& eta,
                            const OneForm& omega) {
  if (eta.m != omega.m)
    throw Error(ErrorKind::BadModulus, "mixed moduli");
  if (!is_prime(eta.m))
    throw Error(ErrorKind::BadModulus, "modulus must be prime");
  OneForm diag = diagonal_oneform(arr, eta.m, true);
  if (eta != diag)
    throw Error(ErrorKind::BadInput, "eta must be the diagonal form");
  (void)to_vector(omega, arr.member_names());

  CheckReport rep = diagonal_cocycle_conditions(arr, eta.m, omega);
  if (rep.ok != wedge(arr, diag, omega, true).is_zero())
    throw Error(ErrorKind::BadInput, "cocycle criterion mismatch (internal)");
  return rep;
}

CheckReport mod2_subset_check(const Arrangement& arr,
                              const std::set<int>& subset) {
  auto members = arr.member_names();
  OneForm omega{2, {}};
  for (int n : subset) {
    if (std::find(members.begin(), members.end(), n) == members.end())
      throw Error(ErrorKind::BadInput,
                  "subset contains unknown line " + std::to_string(n));
    omega.set(n, 1);
  }
  CheckReport rep = diagonal_cocycle_conditions(arr, 2, omega);
  if (rep.ok != wedge(arr, diagonal_oneform(arr, 2, true), omega, true).is_zero())
    throw Error(ErrorKind::BadInput, "cocycle criterion mismatch (internal)");
  return rep;
}

std::vector<std::set<int>> enumerate_f2_cocycles(const Arrangement& arr) {
  OneForm diag = diagonal_oneform(arr, 2, true);
  ModMatrix k = howell_form(left_kernel(wedge_matrix(arr, diag, true)));
  std::vector<int> index = wedge_index(arr, true);
  std::vector<std::set<int>> out;
  for_each_element(k, [&](const std::vector<Residue>& v) {
    std::set<int> s;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i]) s.insert(index[i]);
    out.push_back(std::move(s));
  });
  std::sort(out.begin(), out.end());
  return out;
}

H1Result h1_direct(const Arrangement& arr, const OneForm& eta) {
  std::vector<int> index = wedge_index(arr, false);
  auto eta_vec = to_vector(eta, index);
  ModMatrix w = wedge_matrix(arr, eta, false);
  ModMatrix kernel = howell_form(left_kernel(w));
  if (!in_rowspace(kernel, eta_vec))
    throw Error(ErrorKind::BadInput, "eta escaped its own kernel (internal)");
  ModMatrix sub(eta.m, 0, index.size());
  sub.append_row(eta_vec);

  H1Result out{quotient_invariants(kernel, sub), kernel, {}};
  for (size_t i = 0; i < kernel.rows(); ++i) {
    OneForm rep{eta.m, {}};
    for (size_t j = 0; j < index.size(); ++j) rep.set(index[j], kernel.at(i, j));
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

}  // namespace aomoto
