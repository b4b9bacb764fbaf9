#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aomoto/chamber_complex.hpp"

using namespace aomoto;

namespace {

Arrangement load(const char* name) {
  return load_arrangement(std::string(AOMOTO_DATA_DIR) + "/" + name);
}

OneForm form(const Arrangement& arr, Residue m, std::vector<long> coefs) {
  OneForm out{m, {}};
  for (size_t i = 0; i < coefs.size(); ++i) {
    long r = coefs[i] % (long)m;
    out.set(arr.line(i).name, Residue(r < 0 ? r + (long)m : r));
  }
  return out;
}

OneForm random_form(const Arrangement& arr, Residue m, std::mt19937_64& rng) {
  std::vector<long> c(arr.size());
  for (auto& v : c) v = (long)(rng() % m);
  return form(arr, m, c);
}

// Alternate valid flags built the same way as the automatic one but with
// different directions, for flag-independence checks.
std::vector<Flag> alternate_flags(const Arrangement& arr, size_t count) {
  std::vector<Flag> out;
  for (long k = 1; out.size() < count && k < 100; ++k) {
    for (long sy : {1L, -1L}) {
      Point dir{Scalar(1), Scalar(sy * k)};
      bool ok = true;
      for (const Line& l : arr.lines())
        if ((l.a * dir.x + l.b * dir.y).is_zero()) ok = false;
      if (!ok) continue;
      Point n{-dir.y, dir.x};
      Scalar level(0);
      bool first = true;
      for (const auto& p : arr.intersection_poset(false)) {
        Scalar v = n.x * p.location->x + n.y * p.location->y;
        if (first || v > level) level = v;
        first = false;
      }
      level += Scalar(1 + (long)out.size());
      Scalar nn = n.x * n.x + n.y * n.y;
      Point f0{level * n.x / nn, level * n.y / nn};
      std::optional<Scalar> min_t;
      for (const Line& l : arr.lines()) {
        Scalar t = -l.eval(f0) / (l.a * dir.x + l.b * dir.y);
        if (!min_t || t < *min_t) min_t = t;
      }
      Flag f{Point{f0.x + (*min_t - Scalar(1)) * dir.x,
                   f0.y + (*min_t - Scalar(1)) * dir.y},
             dir};
      try {
        validate_flag(arr, f);
        out.push_back(f);
      } catch (const Error&) {
      }
      if (out.size() == count) break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("six-line example: degree table and differential") {
  Arrangement arr = load("fig2.arr");
  FlaggedArrangement fa = classify_chambers(arr);

  // Chambers D_1..D_9 identified by interior points read off the figure.
  std::vector<Point> dpts = {
      {Scalar(160), Scalar(65)},  {Scalar(132), Scalar(72)},
      {Scalar(35), Scalar(140)},  {Scalar(163), Scalar(90)},
      {Scalar(153), Scalar(108)}, {Scalar(95), Scalar(140)},
      {Scalar(195), Scalar(140)}, {Scalar(160), Scalar(140)},
      {Scalar(135), Scalar(140)}};
  std::vector<size_t> dcol(9);
  for (size_t j = 0; j < 9; ++j) {
    auto idx = locate_chamber(arr, fa.chambers, dpts[j]);
    REQUIRE(idx.has_value());
    auto it = std::find(fa.ch2.begin(), fa.ch2.end(), *idx);
    REQUIRE(it != fa.ch2.end());
    dcol[j] = size_t(it - fa.ch2.begin());
  }
  // All nine labels land in distinct chambers off the flag line.
  CHECK(std::set<size_t>(dcol.begin(), dcol.end()).size() == 9);

  const int expected_deg[6][9] = {
      {0, -1, 0, 0, 1, 0, 1, 1, 0},   {-1, 0, 0, -1, -1, 0, 0, -1, 0},
      {1, 1, 1, 1, 1, 1, 0, 1, 1},    {-1, -1, -1, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, -1, -1, -1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, -1, -1, -1}};
  DegreeTable deg = degree_table(fa);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 9; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK((int)deg.deg[i][dcol[j]] == expected_deg[i][j]);
    }

  // Entries of the differential as signed separator sums; masks list the
  // separating lines, read off the displayed matrix.
  const int expected_mask[6][9] = {
      {0, 0x8, 0, 0, 0x1b, 0, 0x3f, 0x3b, 0},
      {0x8, 0, 0, 0x18, 0x19, 0, 0, 0x39, 0},
      {0xc, 0xe, 0xf, 0x1c, 0x1d, 0x1f, 0, 0x3d, 0x3f},
      {0x4, 0x6, 0x7, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0x4, 0x5, 0x7, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0x1, 0x5, 0x7}};
  const Residue m = 1009;
  // Powers of two keep all subset sums distinct.
  OneForm eta = form(arr, m, {1, 2, 4, 8, 16, 32});
  ModMatrix d1 = nabla1(fa, eta);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 9; ++j) {
      Residue sum = (Residue)expected_mask[i][j];
      Residue want = expected_deg[i][j] == 0 ? 0
                     : expected_deg[i][j] > 0 ? sum
                                              : (m - sum) % m;
      CAPTURE(i);
      CAPTURE(j);
      CHECK(d1.at(i, dcol[j]) == want);
    }
}

TEST_CASE("prefix sums at degree zero") {
  Arrangement arr = load("fig2.arr");
  FlaggedArrangement fa = classify_chambers(arr);
  CHECK(nabla0(fa, form(arr, 2, {1, 1, 1, 1, 1, 1})) ==
        std::vector<Residue>{1, 0, 1, 0, 1, 0});
  CHECK(nabla0(fa, form(arr, 100, {1, 2, 4, 8, 16, 32})) ==
        std::vector<Residue>{1, 3, 7, 15, 31, 63});
  CHECK(nabla0(fa, form(arr, 7, {0, 0, 0, 0, 0, 0})) ==
        std::vector<Residue>(6, 0));
}

TEST_CASE("the chamber differentials compose to zero") {
  std::mt19937_64 rng(43);
  for (const char* file :
       {"tri3.arr", "par2.arr", "pencil3.arr", "fig2.arr", "fig3.arr"}) {
    CAPTURE(file);
    Arrangement arr = load(file);
    FlaggedArrangement fa = classify_chambers(arr);
    for (Residue m : {2, 3, 4, 5, 6, 7, 8}) {
      for (int trial = 0; trial < 5; ++trial) {
        OneForm eta = random_form(arr, m, rng);
        auto img = nabla1(fa, eta).apply_left(nabla0(fa, eta));
        CHECK(std::all_of(img.begin(), img.end(),
                          [](Residue v) { return v == 0; }));
      }
    }
  }
}

TEST_CASE("chamber H1 equals the direct oracle") {
  std::mt19937_64 rng(47);
  for (const char* file :
       {"tri3.arr", "par2.arr", "pencil3.arr", "fig2.arr", "fig3.arr"}) {
    CAPTURE(file);
    Arrangement arr = load(file);
    FlaggedArrangement fa = classify_chambers(arr);
    for (Residue m : {2, 3, 4, 5, 8}) {
      for (int trial = 0; trial < 4; ++trial) {
        OneForm eta = random_form(arr, m, rng);
        CHECK(h1_chambers(fa, eta) == h1_direct(arr, eta).invariants);
      }
    }
  }
}

TEST_CASE("chamber H1 on the pinned examples") {
  Arrangement fig3 = load("fig3.arr");
  FlaggedArrangement fa = classify_chambers(fig3);
  CHECK(h1_chambers(fa, form(fig3, 2, {0, 1, 1, 0, 0, 1})).factors ==
        std::vector<Residue>{2, 2});

  Arrangement pen = load("pencil3.arr");
  CHECK(h1_chambers(classify_chambers(pen), form(pen, 2, {1, 1, 1})).trivial());

  Arrangement a16 = load("a16_1.arr");
  Arrangement chart = decone_geometry(a16, 1);
  OneForm coned{8, {}};
  for (int n = 1; n <= 16; ++n) coned.set(n, n % 2 ? 1 : 6);
  OneForm eta = decone_oneform(coned, 1);
  CHECK(h1_chambers(classify_chambers(chart), eta).factors ==
        std::vector<Residue>{8});
}

TEST_CASE("phi telescopes and intertwines the differentials") {
  std::mt19937_64 rng(53);
  for (const char* file : {"tri3.arr", "fig2.arr", "fig3.arr"}) {
    CAPTURE(file);
    Arrangement arr = load(file);
    FlaggedArrangement fa = classify_chambers(arr);
    const size_t n = arr.size();
    for (Residue m : {2, 3, 4, 5, 8}) {
      // [C_1]+...+[C_n] -> e_1.
      OneForm tele = phi(fa, std::vector<Residue>(n, 1), m);
      OneForm e1{m, {}};
      e1.set(arr.line(fa.line_order[0]).name, 1);
      CHECK(tele == e1);
      // [C_n] -> e_n.
      std::vector<Residue> last(n, 0);
      last[n - 1] = 1;
      OneForm en{m, {}};
      en.set(arr.line(fa.line_order[n - 1]).name, 1);
      CHECK(phi(fa, last, m) == en);

      for (int trial = 0; trial < 4; ++trial) {
        OneForm eta = random_form(arr, m, rng);
        // phi of the degree-zero image is eta itself.
        CHECK(phi(fa, nabla0(fa, eta), m) == eta);
        // phi carries Ker(nabla1) onto Ker(eta ^ -).
        ModMatrix k1 = howell_form(left_kernel(nabla1(fa, eta)));
        ModMatrix img(m, 0, n);
        for (size_t i = 0; i < k1.rows(); ++i) {
          OneForm w = phi(fa, k1.row(i), m);
          std::vector<Residue> v(n);
          for (size_t j = 0; j < n; ++j) v[j] = w.at(arr.line(j).name);
          img.append_row(std::move(v));
        }
        CHECK(howell_form(img) == h1_direct(arr, eta).kernel);
      }
    }
  }
}

TEST_CASE("invariants do not depend on the flag") {
  std::mt19937_64 rng(59);
  for (const char* file : {"fig2.arr", "fig3.arr", "pencil3.arr"}) {
    CAPTURE(file);
    Arrangement arr = load(file);
    auto flags = alternate_flags(arr, 3);
    REQUIRE(flags.size() == 3);
    for (Residue m : {2, 3, 8}) {
      OneForm eta = random_form(arr, m, rng);
      auto want = h1_direct(arr, eta).invariants;
      for (const Flag& f : flags)
        CHECK(h1_chambers(classify_chambers(arr, f), eta) == want);
    }
  }
}
