#include "aomoto/nets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace aomoto {

namespace {

std::string join_names(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

void NetPartition::normalize() {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
}

NetPartition parse_partition(const std::string& text, const Arrangement& arr) {
  NetPartition out;
  std::stringstream ss(text);
  std::string cls;
  while (std::getline(ss, cls, '|')) {
    std::vector<int> names;
    std::stringstream cs(cls);
    std::string tok;
    while (std::getline(cs, tok, ',')) {
      size_t b = tok.find_first_not_of(" \t");
      size_t e = tok.find_last_not_of(" \t");
      if (b == std::string::npos)
        throw Error(ErrorKind::BadInput, "empty name in partition literal");
      std::string name = tok.substr(b, e - b + 1);
      if (name[0] == 'H' || name[0] == 'h') name = name.substr(1);
      size_t used = 0;
      int id = 0;
      try {
        id = std::stoi(name, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != name.size())
        throw Error(ErrorKind::BadInput, "bad line name '" + tok + "'");
      names.push_back(id);
    }
    if (names.empty())
      throw Error(ErrorKind::BadInput, "empty class in partition literal");
    out.classes.push_back(std::move(names));
  }
  std::vector<int> members = arr.member_names();
  for (const auto& c : out.classes)
    for (int id : c)
      if (!std::binary_search(members.begin(), members.end(), id))
        throw Error(ErrorKind::BadLineName,
                    "line " + std::to_string(id) + " is not a member");
  out.normalize();
  return out;
}

MultinetReport verify_multinet(const Arrangement& arr, const NetPartition& n) {
  std::vector<int> members = arr.member_names();
  std::map<int, size_t> cls;
  size_t total = 0;
  for (size_t c = 0; c < n.classes.size(); ++c) {
    if (n.classes[c].empty())
      throw Error(ErrorKind::NotAPartition, "empty class");
    for (int name : n.classes[c]) {
      if (!std::binary_search(members.begin(), members.end(), name))
        throw Error(ErrorKind::NotAPartition,
                    "line " + std::to_string(name) + " is not a member");
      if (!cls.emplace(name, c).second)
        throw Error(ErrorKind::NotAPartition,
                    "line " + std::to_string(name) + " listed twice");
      ++total;
    }
  }
  if (total != members.size())
    throw Error(ErrorKind::NotAPartition, "classes do not cover all members");

  MultinetReport rep;
  const size_t k = n.k();
  if (k < 3) rep.violations.push_back("fewer than 3 classes");
  const size_t d = n.classes[0].size();
  for (const auto& c : n.classes)
    if (c.size() != d) {
      rep.violations.push_back("(i) class sizes differ");
      break;
    }
  if (d < 2) rep.violations.push_back("class size below 2");

  const auto& poset = arr.intersection_poset(true);
  std::vector<char> is_base(poset.size(), 0);
  bool one_per_class = true;
  for (size_t p = 0; p < poset.size(); ++p) {
    std::vector<size_t> count(k, 0);
    for (int name : poset[p].incident) ++count[cls[name]];
    size_t present = 0;
    for (size_t c : count) present += c > 0;
    if (present == k) {
      is_base[p] = 1;
      rep.base_locus.push_back(p);
      if (std::set<size_t>(count.begin(), count.end()).size() != 1)
        rep.violations.push_back("(iii) unequal class counts at point " +
                                 join_names(poset[p].incident));
      if (count[0] != 1) one_per_class = false;
    } else if (present >= 2) {
      rep.violations.push_back(
          "(ii) cross-class intersection outside the base locus at point " +
          join_names(poset[p].incident));
    }
  }

  // (iv): within each class, lines are linked at their non-base points.
  for (size_t c = 0; c < k; ++c) {
    std::map<int, size_t> at;
    for (size_t i = 0; i < n.classes[c].size(); ++i) at[n.classes[c][i]] = i;
    UnionFind uf(n.classes[c].size());
    for (size_t p = 0; p < poset.size(); ++p) {
      if (is_base[p]) continue;
      std::vector<size_t> here;
      for (int name : poset[p].incident)
        if (cls[name] == c) here.push_back(at[name]);
      for (size_t i = 1; i < here.size(); ++i) uf.unite(here[0], here[i]);
    }
    std::set<size_t> roots;
    for (size_t i = 0; i < n.classes[c].size(); ++i) roots.insert(uf.find(i));
    if (roots.size() > 1)
      rep.violations.push_back("(iv) class " + join_names(n.classes[c]) +
                               " is not connected through non-base points");
  }

  rep.ok = rep.violations.empty();
  rep.is_net = rep.ok && one_per_class;
  return rep;
}

std::vector<NetPartition> extract_3nets(const Arrangement& arr) {
  std::vector<int> members = arr.member_names();
  if (members.size() % 3)
    throw Error(ErrorKind::BadInput,
                "member count " + std::to_string(members.size()) +
                    " is not divisible by 3");
  for (const auto& p : arr.intersection_poset(true))
    if (p.multiplicity() > 3 && p.multiplicity() % 3 == 0)
      throw Error(ErrorKind::BadInput,
                  "point " + join_names(p.incident) + " has multiplicity " +
                      std::to_string(p.multiplicity()) + " = 3r with r > 1");

  Arrangement chart = decone_geometry(arr, members[0]);
  OneForm eta = decone_oneform(diagonal_oneform(arr, 3, true), members[0]);
  H1Result h1 = h1_direct(chart, eta);

  std::set<NetPartition> seen;
  std::vector<NetPartition> out;
  for_each_element(h1.kernel, [&](const std::vector<Residue>& v) {
    OneForm w{3, {}};
    for (size_t i = 0; i < chart.size(); ++i)
      w.set(chart.line(i).name, v[i]);
    OneForm coned = cone_oneform(w, chart);
    NetPartition part;
    part.classes.assign(3, {});
    for (int name : members) part.classes[coned.at(name)].push_back(name);
    for (const auto& c : part.classes)
      if (c.empty()) return;
    part.normalize();
    if (!seen.insert(part).second) return;
    MultinetReport rep = verify_multinet(arr, part);
    if (rep.ok && rep.is_net) out.push_back(std::move(part));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::array<std::set<int>, 3> fournet_cocycles(const Arrangement& arr,
                                              const NetPartition& n,
                                              bool require_verified) {
  if (n.k() != 4)
    throw Error(ErrorKind::BadInput, "partition must have 4 classes");
  MultinetReport rep = verify_multinet(arr, n);
  if (require_verified && !(rep.ok && rep.is_net))
    throw Error(ErrorKind::BadInput,
                "partition is not a verified 4-net" +
                    (rep.violations.empty() ? std::string()
                                            : ": " + rep.violations.front()));
  std::array<std::set<int>, 3> out;
  for (int j = 1; j <= 3; ++j) {
    std::set<int> s(n.classes[0].begin(), n.classes[0].end());
    s.insert(n.classes[j].begin(), n.classes[j].end());
    if (!mod2_subset_check(arr, s).ok)
      throw Error(ErrorKind::NotACocycle,
                  "union of classes 1 and " + std::to_string(j + 1) +
                      " fails the mod-2 cocycle conditions");
    out[j - 1] = std::move(s);
  }
  // The three unions sum to the diagonal: class 1 occurs thrice, others once.
  std::set<int> acc;
  for (const auto& s : out)
    for (int x : s)
      if (!acc.erase(x)) acc.insert(x);
  if (std::vector<int>(acc.begin(), acc.end()) != arr.member_names())
    throw Error(ErrorKind::BadInput,
                "class unions do not sum to the diagonal (internal)");
  return out;
}

NonSepReport non_separation_check(const Arrangement& arr,
                                  const std::set<int>& subset) {
  if (!mod2_subset_check(arr, subset).ok)
    throw Error(ErrorKind::NotACocycle,
                "subset fails the mod-2 cocycle conditions");
  const auto& poset = arr.intersection_poset(true);
  // In a single pencil the band argument behind the theorem is vacuous and a
  // separated pair is legitimately a cocycle.
  const bool pencil = poset.size() == 1;
  NonSepReport rep;
  for (size_t p = 0; p < poset.size(); ++p) {
    if (poset[p].multiplicity() != 4) continue;
    NonSepEntry e;
    e.point = p;
    e.order = projective_cyclic_order(arr, poset[p]);
    std::vector<size_t> pos;
    for (size_t i = 0; i < 4; ++i)
      if (subset.count(e.order[i])) {
        pos.push_back(i);
        e.selected.push_back(e.order[i]);
      }
    switch (pos.size()) {
      case 0:
        e.kind = LocalCase::Empty;
        break;
      case 4:
        e.kind = LocalCase::Full;
        break;
      case 2:
        e.kind = (pos[1] - pos[0] == 1 || pos[1] - pos[0] == 3)
                     ? LocalCase::Adjacent
                     : LocalCase::Separated;
        break;
      default:
        throw Error(ErrorKind::BadInput,
                    "odd selection at an even point (internal)");
    }
    if (e.kind == LocalCase::Separated && !pencil) rep.violation = true;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

std::vector<NetPartition> search_nets(const Arrangement& arr, int k) {
  if (k != 3 && k != 4)
    throw Error(ErrorKind::BadInput, "class count must be 3 or 4");
  std::vector<int> members = arr.member_names();
  const size_t n = members.size();
  if (n % (size_t)k) return {};
  const size_t d = n / (size_t)k;
  if (d < 2) return {};
  std::map<int, size_t> pos;
  for (size_t i = 0; i < n; ++i) pos[members[i]] = i;
  const auto& poset = arr.intersection_poset(true);

  // Lines meeting at a point of multiplicity not divisible by k cannot sit in
  // different classes: such a point cannot carry equal per-class counts.
  UnionFind uf(n);
  for (const auto& p : poset)
    if (p.multiplicity() % (size_t)k)
      for (size_t i = 1; i < p.incident.size(); ++i)
        uf.unite(pos[p.incident[0]], pos[p.incident[i]]);
  std::map<size_t, std::vector<size_t>> by_root;
  for (size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<size_t>> comps;
  for (auto& [root, v] : by_root) comps.push_back(std::move(v));
  std::sort(comps.begin(), comps.end());
  for (const auto& c : comps)
    if (c.size() > d) return {};

  std::vector<const IntersectionPoint*> big;
  for (const auto& p : poset)
    if (p.multiplicity() % (size_t)k == 0) big.push_back(&p);

  std::vector<int> line_cls(n, -1);
  std::vector<size_t> class_size(k, 0);
  std::set<NetPartition> found;

  auto feasible = [&]() {
    for (const auto* p : big) {
      std::vector<size_t> count(k, 0);
      size_t assigned = 0;
      for (int name : p->incident) {
        int c = line_cls[pos[name]];
        if (c >= 0) {
          ++count[c];
          ++assigned;
        }
      }
      size_t present = 0;
      for (size_t c : count) present += c > 0;
      if (present < 2) continue;
      const size_t np = p->incident.size() / (size_t)k;
      for (size_t c : count)
        if (c > np) return false;
      if (assigned == p->incident.size())
        for (size_t c : count)
          if (c != np) return false;
    }
    return true;
  };

  std::function<void(size_t, size_t)> rec = [&](size_t i, size_t used) {
    if (i == comps.size()) {
      if (used != (size_t)k) return;
      NetPartition part;
      part.classes.assign(k, {});
      for (size_t j = 0; j < n; ++j)
        part.classes[line_cls[j]].push_back(members[j]);
      part.normalize();
      if (verify_multinet(arr, part).ok) found.insert(std::move(part));
      return;
    }
    const size_t limit = std::min<size_t>(used + 1, (size_t)k);
    for (size_t c = 0; c < limit; ++c) {
      if (class_size[c] + comps[i].size() > d) continue;
      for (size_t j : comps[i]) line_cls[j] = (int)c;
      class_size[c] += comps[i].size();
      if (feasible()) rec(i + 1, std::max(used, c + 1));
      class_size[c] -= comps[i].size();
      for (size_t j : comps[i]) line_cls[j] = -1;
    }
  };
  rec(0, 0);
  return {found.begin(), found.end()};
}

Refutation refute_4net(const Arrangement& arr, const NetPartition& n) {
  Refutation out;
  if (n.k() != 4) {
    out.reason = "partition does not have exactly 4 classes";
    return out;
  }
  MultinetReport rep = verify_multinet(arr, n);
  out.violations = rep.violations;

  std::map<int, int> cls;
  for (size_t c = 0; c < 4; ++c)
    for (int name : n.classes[c]) cls[name] = (int)c;
  const auto& poset = arr.intersection_poset(true);
  for (size_t p = 0; p < poset.size(); ++p) {
    if (poset[p].multiplicity() != 4) continue;
    std::vector<int> order = projective_cyclic_order(arr, poset[p]);
    std::set<int> distinct;
    for (int name : order) distinct.insert(cls[name]);
    if (distinct.size() != 4) continue;
    for (int name : order) out.class_order.push_back(cls[name]);
    for (int c : {out.class_order[0], out.class_order[2]})
      out.subset.insert(n.classes[c].begin(), n.classes[c].end());
    out.witness_point = p;
    CheckReport check = mod2_subset_check(arr, out.subset);
    if (!check.ok) {
      out.reason =
          "classes in alternating cyclic position do not form a mod-2 "
          "cocycle, impossible for a 4-net";
      for (const auto& v : check.violations)
        out.violations.push_back("cocycle condition " +
                                 std::to_string(v.condition) +
                                 " fails at point " + join_names(v.incident));
    } else {
      out.reason =
          "mod-2 cocycle with a separated pair at a quadruple point, "
          "impossible for a real arrangement";
    }
    return out;
  }

  if (rep.ok)
    out.reason =
        "no quadruple point meets all four classes, so the base locus "
        "required by a 4-net is missing";
  else
    out.reason = "partition violates the multinet conditions";
  return out;
}

}  // namespace aomoto
