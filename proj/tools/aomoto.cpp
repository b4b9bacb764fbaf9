#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numeric>

#include "aomoto/chamber_complex.hpp"
#include "aomoto/nets.hpp"
#include "aomoto/resonant_bands.hpp"

using json = nlohmann::ordered_json;
using namespace aomoto;

namespace {

constexpr int kExitPrecondition = 1;
constexpr int kExitViolation = 2;

Arrangement load_input(const std::string& path, int decone) {
  Arrangement arr = load_arrangement(path);
  if (decone >= 0) arr = decone_geometry(arr, decone);
  return arr;
}

json point_json(const Point& p) {
  return json::array({p.x.str(), p.y.str()});
}

json matrix_json(const ModMatrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

json invariants_json(const ModuleInvariants& inv) { return inv.factors; }

json oneform_json(const OneForm& w, const Arrangement& arr) {
  json out = json::object();
  for (int name : arr.member_names())
    if (Residue v = w.at(name)) out[std::to_string(name)] = v;
  return out;
}

std::set<int> parse_subset(const std::string& text, const Arrangement& arr) {
  if (text.empty()) return {};
  NetPartition p = parse_partition(text, arr);
  if (p.k() != 1)
    throw Error(ErrorKind::BadInput, "subset must not contain '|'");
  return {p.classes[0].begin(), p.classes[0].end()};
}

const char* case_name(LocalCase c) {
  switch (c) {
    case LocalCase::Empty: return "empty";
    case LocalCase::Full: return "full";
    case LocalCase::Adjacent: return "adjacent";
    case LocalCase::Separated: return "separated";
  }
  return "?";
}

void emit(const std::string& command, const std::string& input,
          const json& results) {
  json report;
  report["command"] = command;
  report["input"] = input;
  report["results"] = results;
  std::cout << report.dump(2) << "\n";
}

json partition_json(const NetPartition& p) {
  json out = json::array();
  for (const auto& c : p.classes) out.push_back(c);
  return out;
}

json nonsep_json(const Arrangement& arr, const NonSepReport& rep) {
  const auto& poset = arr.intersection_poset(true);
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json row;
    row["point"] = poset[e.point].incident;
    row["cyclic_order"] = e.order;
    row["selected"] = e.selected;
    row["case"] = case_name(e.kind);
    entries.push_back(row);
  }
  return json{{"entries", entries}, {"violation", rep.violation}};
}

/// Cross-method H^1 agreement on one arrangement; returns false on the
/// mathematically impossible disagreement.
bool h1_methods_agree(const Arrangement& arr, const OneForm& eta) {
  H1Result direct = h1_direct(arr, eta);
  FlaggedArrangement fa = classify_chambers(arr);
  if (!(h1_chambers(fa, eta) == direct.invariants)) return false;
  try {
    h1_via_rb(fa, eta);  // asserts agreement with the direct method itself
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonUnitAlpha) throw;
  }
  return true;
}

int run_corpus(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".arr") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw Error(ErrorKind::BadInput, "no .arr files in " + dir);

  bool violation = false;
  json rows = json::array();
  for (const auto& file : files) {
    Arrangement arr = load_arrangement(file.string());
    json row;
    row["file"] = file.filename().string();
    row["lines"] = arr.size();
    row["chambers"] = chambers(arr).size();

    auto cocycles = enumerate_f2_cocycles(arr);
    row["f2_cocycles"] = cocycles.size();
    size_t separated = 0;
    for (const auto& s : cocycles) {
      NonSepReport rep = non_separation_check(arr, s);
      if (rep.violation) ++separated;
    }
    row["nonsep_violations"] = separated;
    violation = violation || separated > 0;

    size_t members = arr.member_names().size();
    if (members % 3 == 0) {
      row["nets3"] = search_nets(arr, 3).size();
    }
    if (members % 4 == 0) {
      size_t nets4 = search_nets(arr, 4).size();
      row["nets4"] = nets4;
      violation = violation || nets4 > 0;
    }

    bool agree = true;
    for (Residue m : {2, 3, 5}) {
      OneForm diag = diagonal_oneform(arr, m, false);
      OneForm ramp{m, {}};
      for (size_t i = 0; i < arr.size(); ++i)
        ramp.set(arr.line(i).name, Residue(i + 1) % m);
      agree = agree && h1_methods_agree(arr, diag) &&
              h1_methods_agree(arr, ramp);
    }
    row["h1_methods_agree"] = agree;
    violation = violation || !agree;
    rows.push_back(row);
  }
  emit("corpus", dir, json{{"files", rows}, {"violation", violation}});
  return violation ? kExitViolation : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology of the Aomoto complex of real line "
               "arrangements"};
  app.require_subcommand(1);

  std::string file, eta_csv, method = "direct", subset_lit, classes_lit, dir;
  int decone = -1, k = 3;
  Residue mod = 2, p = 2;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "arrangement file")->required();
    cmd->add_option("--decone", decone,
                    "send this member line to infinity first");
  };
  auto* cmd_chambers = app.add_subcommand("chambers", "enumerate chambers");
  add_input(cmd_chambers);
  auto* cmd_flag = app.add_subcommand("flag", "chosen flag and line order");
  add_input(cmd_flag);
  auto* cmd_complex =
      app.add_subcommand("chamber-complex", "chamber cochain complex data");
  add_input(cmd_complex);
  cmd_complex->add_option("--mod", mod, "modulus m >= 2")->required();
  cmd_complex->add_option("--eta", eta_csv, "coefficients in file line order")
      ->required();
  auto* cmd_rb = app.add_subcommand("rb", "resonant bands and their kernel");
  add_input(cmd_rb);
  cmd_rb->add_option("--mod", mod)->required();
  cmd_rb->add_option("--eta", eta_csv)->required();
  auto* cmd_h1 = app.add_subcommand("h1", "first cohomology");
  add_input(cmd_h1);
  cmd_h1->add_option("--mod", mod)->required();
  cmd_h1->add_option("--eta", eta_csv)->required();
  cmd_h1->add_option("--method", method, "direct | chambers | rb");
  auto* cmd_cocycles =
      app.add_subcommand("cocycles", "diagonal cocycles mod a prime");
  add_input(cmd_cocycles);
  cmd_cocycles->add_option("--p", p, "prime modulus");
  auto* cmd_nets = app.add_subcommand("nets", "search for k-nets");
  add_input(cmd_nets);
  cmd_nets->add_option("--k", k, "class count (3 or 4)");
  auto* cmd_nonsep =
      app.add_subcommand("nonsep", "separation check at quadruple points");
  add_input(cmd_nonsep);
  cmd_nonsep->add_option("--subset", subset_lit, "e.g. H2,H3")->required();
  auto* cmd_refute =
      app.add_subcommand("refute-4net", "certificate against a claimed 4-net");
  add_input(cmd_refute);
  cmd_refute->add_option("--classes", classes_lit, "e.g. H0,H1|H2,H3|...")
      ->required();
  auto* cmd_corpus = app.add_subcommand("corpus", "regression over a corpus");
  cmd_corpus->add_option("dir", dir, "directory of .arr files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_corpus->parsed()) {
      if (dir.empty()) {
        const char* env = std::getenv("AOMOTO_CORPUS");
        if (!env)
          throw Error(ErrorKind::BadInput,
                      "no corpus directory given and AOMOTO_CORPUS unset");
        dir = env;
      }
      return run_corpus(dir);
    }

    Arrangement arr = load_input(file, decone);

    if (cmd_chambers->parsed()) {
      auto chs = chambers(arr);
      size_t expected = 1 + arr.size();
      for (const auto& pt : arr.intersection_poset(false))
        expected += pt.multiplicity() - 1;
      json list = json::array();
      for (const auto& c : chs) {
        std::string signs;
        for (int8_t s : c.signs) signs += s > 0 ? '+' : '-';
        list.push_back(json{{"signs", signs}, {"witness", point_json(c.witness)}});
      }
      emit("chambers", file,
           json{{"lines", arr.size()},
                {"count", chs.size()},
                {"count_identity", chs.size() == expected},
                {"chambers", list}});
      return 0;
    }

    if (cmd_flag->parsed()) {
      FlaggedArrangement fa = classify_chambers(arr);
      std::vector<int> order;
      for (size_t pos : fa.line_order) order.push_back(arr.line(pos).name);
      emit("flag", file,
           json{{"f0", point_json(fa.flag.f0)},
                {"dir", point_json(fa.flag.dir)},
                {"line_order", order},
                {"ch0", 1},
                {"ch1", fa.ch1.size()},
                {"ch2", fa.ch2.size()}});
      return 0;
    }

    if (cmd_complex->parsed()) {
      OneForm eta = parse_oneform(eta_csv, arr, mod);
      FlaggedArrangement fa = classify_chambers(arr);
      std::vector<int> order;
      for (size_t pos : fa.line_order) order.push_back(arr.line(pos).name);
      DegreeTable deg = degree_table(fa);
      json degj = json::array();
      for (const auto& row : deg.deg) degj.push_back(row);
      emit("chamber-complex", file,
           json{{"line_order", order},
                {"ch2", fa.ch2.size()},
                {"deg_table", degj},
                {"nabla0", nabla0(fa, eta)},
                {"nabla1", matrix_json(nabla1(fa, eta))},
                {"h1", h1_chambers(fa, eta).factors}});
      return 0;
    }

    if (cmd_rb->parsed()) {
      OneForm eta = parse_oneform(eta_csv, arr, mod);
      FlaggedArrangement fa = classify_chambers(arr);
      RBData rb = resonant_bands(fa, eta);
      json bands_j = json::array();
      for (size_t i = 0; i < rb.all.size(); ++i) {
        const Band& b = rb.all[i];
        bands_j.push_back(
            json{{"walls",
                  {arr.line(fa.line_order[b.wall1]).name,
                   arr.line(fa.line_order[b.wall2]).name}},
                 {"length", b.length},
                 {"resonant", std::count(rb.resonant.begin(),
                                         rb.resonant.end(), i) > 0}});
      }
      KernelRB kernel = kernel_rb(fa, eta);
      emit("rb", file,
           json{{"bands", bands_j},
                {"matrix", matrix_json(rb.matrix)},
                {"kernel_invariants", invariants_json(kernel.invariants)},
                {"kernel_generators", matrix_json(kernel.generators)}});
      return 0;
    }

    if (cmd_h1->parsed()) {
      OneForm eta = parse_oneform(eta_csv, arr, mod);
      json results;
      results["method"] = method;
      if (method == "direct") {
        results["invariants"] = invariants_json(h1_direct(arr, eta).invariants);
      } else if (method == "chambers") {
        results["invariants"] =
            invariants_json(h1_chambers(classify_chambers(arr), eta));
      } else if (method == "rb") {
        RBResult res = h1_via_rb(classify_chambers(arr), eta);
        if (res.status == RBStatus::InjectiveOnly)
          throw Error(ErrorKind::BadInput,
                      "a band is non-resonant and the modulus is composite; "
                      "the band kernel only embeds into H^1, rerun with "
                      "--method chambers");
        results["invariants"] = invariants_json(res.invariants);
      } else {
        throw Error(ErrorKind::BadInput, "unknown method '" + method + "'");
      }
      emit("h1", file, results);
      return 0;
    }

    if (cmd_cocycles->parsed()) {
      json results;
      results["p"] = p;
      if (p == 2) {
        auto subs = enumerate_f2_cocycles(arr);
        json list = json::array();
        for (const auto& s : subs) list.push_back(std::vector<int>(s.begin(), s.end()));
        results["count"] = subs.size();
        results["subsets"] = list;
      } else {
        std::vector<int> members = arr.member_names();
        if (members.size() % p)
          throw Error(ErrorKind::BadInput,
                      "the diagonal descends to the chart only when the "
                      "modulus divides the member count");
        Arrangement chart = decone_geometry(arr, members[0]);
        OneForm eta = decone_oneform(diagonal_oneform(arr, p, true), members[0]);
        H1Result h1 = h1_direct(chart, eta);
        results["count"] = rowspace_size(h1.kernel).get_str();
        results["h1"] = invariants_json(h1.invariants);
      }
      emit("cocycles", file, results);
      return 0;
    }

    if (cmd_nets->parsed()) {
      auto nets = search_nets(arr, k);
      json list = json::array();
      for (const auto& n : nets) list.push_back(partition_json(n));
      emit("nets", file, json{{"k", k}, {"nets", list}});
      return 0;
    }

    if (cmd_nonsep->parsed()) {
      NonSepReport rep = non_separation_check(arr, parse_subset(subset_lit, arr));
      emit("nonsep", file, nonsep_json(arr, rep));
      return rep.violation ? kExitViolation : 0;
    }

    if (cmd_refute->parsed()) {
      Refutation r = refute_4net(arr, parse_partition(classes_lit, arr));
      json results;
      results["reason"] = r.reason;
      results["violations"] = r.violations;
      if (r.witness_point) {
        results["witness_point"] =
            arr.intersection_poset(true)[*r.witness_point].incident;
        results["class_order"] = r.class_order;
        results["subset"] = std::vector<int>(r.subset.begin(), r.subset.end());
      }
      emit("refute-4net", file, results);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
