#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aomoto/resonant_bands.hpp"

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

Arrangement a16_chart(int i) {
  return decone_geometry(load("a16_1.arr"), i);
}

OneForm a16_eta(Residue m = 8) {
  OneForm coned{m, {}};
  for (int n = 1; n <= 16; ++n) coned.set(n, n % 2 ? 1 : 6);
  return decone_oneform(coned, 1);
}

}  // namespace

TEST_CASE("band structure of the six-line example") {
  Arrangement tri = load("tri3.arr");
  CHECK(bands(classify_chambers(tri)).empty());

  Arrangement arr = load("fig2.arr");
  FlaggedArrangement fa = classify_chambers(arr);
  auto bs = bands(fa);
  REQUIRE(bs.size() == 3);
  // Wall pairs (H2,H3), (H4,H5), (H5,H6) with lengths 4, 3, 3.
  CHECK(bs[0].wall1 == 1);
  CHECK(bs[1].wall1 == 3);
  CHECK(bs[2].wall1 == 4);
  CHECK(bs[0].length == 4);
  CHECK(bs[1].length == 3);
  CHECK(bs[2].length == 3);
  // U1 chambers are C_2, C_4, C_5; U2 chambers hold the figure's labels
  // D_8, D_3, D_6.
  CHECK(bs[0].u1 == fa.ch1[1]);
  CHECK(bs[1].u1 == fa.ch1[3]);
  CHECK(bs[2].u1 == fa.ch1[4]);
  CHECK(bs[0].u2 ==
        locate_chamber(arr, fa.chambers, {Scalar(160), Scalar(140)}));
  CHECK(bs[1].u2 ==
        locate_chamber(arr, fa.chambers, {Scalar(35), Scalar(140)}));
  CHECK(bs[2].u2 ==
        locate_chamber(arr, fa.chambers, {Scalar(95), Scalar(140)}));
}

TEST_CASE("reduced rows match the displayed example") {
  Arrangement arr = load("fig2.arr");
  FlaggedArrangement fa = classify_chambers(arr);
  // a_1+a_4+a_5+a_6 = 0 mod 101 makes the first band resonant.
  const Residue m = 101;
  OneForm eta = form(arr, m, {1, 2, 4, 30, 50, 20});
  RBData rb = resonant_bands(fa, eta);
  REQUIRE(!rb.resonant.empty());
  REQUIRE(rb.resonant[0] == 0);
  auto chamber_col = [&](long x, long y) {
    auto idx = locate_chamber(arr, fa.chambers, {Scalar(x), Scalar(y)});
    auto it = std::find(fa.ch2.begin(), fa.ch2.end(), *idx);
    return size_t(it - fa.ch2.begin());
  };
  // a_4 [D_1] + (a_4+a_5) [D_4] + (a_1+a_4+a_5) [D_5], zero elsewhere.
  std::vector<Residue> want(fa.ch2.size(), 0);
  want[chamber_col(160, 65)] = 30;
  want[chamber_col(163, 90)] = 80;
  want[chamber_col(153, 108)] = 81;
  CHECK(rb.matrix.row(0) == want);
}

TEST_CASE("zero form: all bands resonant with zero rows") {
  Arrangement arr = load("fig2.arr");
  FlaggedArrangement fa = classify_chambers(arr);
  RBData rb = resonant_bands(fa, form(arr, 6, {0, 0, 0, 0, 0, 0}));
  CHECK(rb.resonant.size() == 3);
  CHECK(rb.matrix.is_zero());
}

TEST_CASE("reduced rows are the negated chamber differential rows") {
  std::mt19937_64 rng(61);
  for (const char* file : {"fig2.arr", "fig3.arr", "par2.arr"}) {
    CAPTURE(file);
    Arrangement arr = load(file);
    FlaggedArrangement fa = classify_chambers(arr);
    for (Residue m : {2, 5, 8}) {
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<long> c(arr.size());
        for (auto& v : c) v = (long)(rng() % m);
        OneForm eta = form(arr, m, c);
        RBData rb = resonant_bands(fa, eta);
        ModMatrix d1 = nabla1(fa, eta);
        for (size_t r = 0; r < rb.resonant.size(); ++r) {
          const Band& b = rb.all[rb.resonant[r]];
          size_t row = b.wall1;  // U1(B) = C_{wall1+1}
          for (size_t d = 0; d < fa.ch2.size(); ++d)
            CHECK(rb.matrix.at(r, d) == (m - d1.at(row, d)) % m);
        }
      }
    }
  }
}

TEST_CASE("seven-line example over F2") {
  Arrangement arr = load("fig3.arr");
  FlaggedArrangement fa = classify_chambers(arr);
  OneForm eta = form(arr, 2, {0, 1, 1, 0, 0, 1});
  RBData rb = resonant_bands(fa, eta);
  CHECK(rb.all.size() == 3);
  CHECK(rb.resonant.size() == 3);  // RB = {B1, B2, B3}
  // Every reduced row is the central chamber D_1.
  auto d1 = locate_chamber(arr, fa.chambers, {Scalar(152), Scalar(72)});
  REQUIRE(d1.has_value());
  auto it = std::find(fa.ch2.begin(), fa.ch2.end(), *d1);
  size_t col = size_t(it - fa.ch2.begin());
  for (size_t r = 0; r < 3; ++r)
    for (size_t d = 0; d < fa.ch2.size(); ++d)
      CHECK(rb.matrix.at(r, d) == (d == col ? 1 : 0));

  // Kernel generated by [B1]-[B2] and [B2]-[B3].
  KernelRB k = kernel_rb(fa, eta);
  CHECK(k.invariants.factors == std::vector<Residue>{2, 2});
  ModMatrix want(2, 0, 3);
  want.append_row({1, 1, 0});
  want.append_row({0, 1, 1});
  CHECK(k.generators == howell_form(want));

  // Psi of [B1]+[B2]+[B3] is the full diagonal (wall pairs partition the
  // lines).
  OneForm all = psi(fa, rb, {1, 1, 1}, 2);
  CHECK(all == form(arr, 2, {1, 1, 1, 1, 1, 1}));

  RBResult res = h1_via_rb(fa, eta);
  CHECK(res.status == RBStatus::Isomorphic);
  CHECK(res.invariants.factors == std::vector<Residue>{2, 2});
}

TEST_CASE("sixteen-line arrangement charts") {
  // Nine bands for the H10 chart, seven for the H1 chart.
  CHECK(bands(classify_chambers(a16_chart(10))).size() == 9);
  Arrangement chart = a16_chart(1);
  FlaggedArrangement fa = classify_chambers(chart);
  CHECK(bands(fa).size() == 7);

  OneForm eta = a16_eta();
  RBData rb = resonant_bands(fa, eta);
  CHECK(rb.resonant.size() == 7);  // all bands resonant
  KernelRB k = kernel_rb(fa, eta);
  CHECK(k.invariants.factors == std::vector<Residue>{8});
  RBResult res = h1_via_rb(fa, eta);
  CHECK(res.status == RBStatus::Isomorphic);  // via the all-resonant case
  CHECK(res.invariants.factors == std::vector<Residue>{8});
}

TEST_CASE("status and precondition logic") {
  Arrangement arr = load("fig2.arr");
  FlaggedArrangement fa = classify_chambers(arr);
  // alpha = 6 = 0 mod 2: theorem inapplicable.
  try {
    h1_via_rb(fa, form(arr, 2, {1, 1, 1, 1, 1, 1}));
    FAIL("expected NonUnitAlpha");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitAlpha);
  }
  // alpha = 2 mod 4 is a zero divisor.
  CHECK_THROWS_AS(h1_via_rb(fa, form(arr, 4, {1, 1, 0, 0, 0, 0})), Error);
  // Composite modulus with a non-resonant band: only injectivity.
  RBResult res = h1_via_rb(fa, form(arr, 4, {1, 0, 0, 0, 0, 0}));
  CHECK(res.status == RBStatus::InjectiveOnly);
}

TEST_CASE("band kernel embeds into the direct H1") {
  std::mt19937_64 rng(67);
  for (const char* file : {"fig2.arr", "fig3.arr"}) {
    CAPTURE(file);
    Arrangement arr = load(file);
    FlaggedArrangement fa = classify_chambers(arr);
    for (Residue m : {2, 3, 4, 5, 8}) {
      for (int trial = 0; trial < 6; ++trial) {
        std::vector<long> c(arr.size());
        for (auto& v : c) v = (long)(rng() % m);
        OneForm eta = form(arr, m, c);
        Residue alpha = 0;
        for (const Line& l : arr.lines()) alpha = (alpha + eta.at(l.name)) % m;
        if (std::gcd(alpha, m) != 1) continue;
        RBData rb = resonant_bands(fa, eta);
        KernelRB k = kernel_rb(fa, eta);
        H1Result oracle = h1_direct(arr, eta);
        // Psi maps kernel elements to cocycles; nonzero elements stay
        // nonzero modulo R eta (injectivity).
        ModMatrix span_eta(m, 0, arr.size());
        std::vector<Residue> ev(arr.size());
        for (size_t i = 0; i < arr.size(); ++i) ev[i] = eta.at(arr.line(i).name);
        span_eta.append_row(ev);
        ModMatrix eh = howell_form(span_eta);
        for_each_element(k.generators, [&](const std::vector<Residue>& v) {
          OneForm w = psi(fa, rb, v, m);
          std::vector<Residue> wv(arr.size());
          for (size_t i = 0; i < arr.size(); ++i) wv[i] = w.at(arr.line(i).name);
          CHECK(in_rowspace(oracle.kernel, wv));
          bool vzero = std::all_of(v.begin(), v.end(),
                                   [](Residue x) { return x == 0; });
          if (!vzero) CHECK(!in_rowspace(eh, wv));
        });
      }
    }
  }
}
