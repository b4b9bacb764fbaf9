#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "aomoto/chambers.hpp"

using namespace aomoto;

namespace {

Arrangement load(const char* name) {
  return load_arrangement(std::string(AOMOTO_DATA_DIR) + "/" + name);
}

size_t region_formula(const Arrangement& arr) {
  size_t n = 1 + arr.size();
  for (const auto& p : arr.intersection_poset(false))
    n += p.multiplicity() - 1;
  return n;
}

}  // namespace

TEST_CASE("chamber enumeration is consistent") {
  for (const char* file :
       {"tri3.arr", "par2.arr", "pencil3.arr", "fig2.arr", "fig3.arr"}) {
    CAPTURE(file);
    Arrangement arr = load(file);
    auto chs = chambers(arr);
    CHECK(chs.size() == region_formula(arr));
    std::set<std::vector<int8_t>> seen;
    for (const Chamber& c : chs) {
      // The witness point reproduces the sign vector exactly.
      for (size_t j = 0; j < arr.size(); ++j)
        CHECK(arr.line(j).side(c.witness) == c.signs[j]);
      CHECK(seen.insert(c.signs).second);
    }
  }
  CHECK(chambers(load("tri3.arr")).size() == 7);
  CHECK(chambers(load("par2.arr")).size() == 3);
  CHECK(chambers(load("pencil3.arr")).size() == 6);
  CHECK(chambers(load("fig2.arr")).size() == 16);
}

TEST_CASE("separation is a metric-like set distance") {
  Arrangement arr = load("fig2.arr");
  auto chs = chambers(arr);
  for (size_t a = 0; a < chs.size(); ++a) {
    CHECK(separating(arr, chs[a], chs[a]).empty());
    for (size_t b = a + 1; b < chs.size(); ++b) {
      auto ab = separating(arr, chs[a], chs[b]);
      CHECK(!ab.empty());  // distinct chambers differ somewhere
      CHECK(ab == separating(arr, chs[b], chs[a]));
      for (size_t c = 0; c < chs.size(); ++c) {
        // Triangle inequality for the separation distance.
        CHECK(ab.size() <= separating(arr, chs[a], chs[c]).size() +
                               separating(arr, chs[c], chs[b]).size());
      }
    }
  }
}

TEST_CASE("flag validation") {
  Arrangement arr = load("fig2.arr");
  CHECK_NOTHROW(validate_flag(arr, choose_flag(arr)));

  auto expect_invalid = [&](Flag f) {
    try {
      validate_flag(arr, f);
      FAIL("expected InvalidFlag");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidFlag);
    }
  };
  // Vertical flag line is parallel to H2 and H3.
  expect_invalid(Flag{Point{Scalar(10), Scalar(25)}, Point{Scalar(0), Scalar(1)}});
  // Base point past the first crossing.
  expect_invalid(Flag{Point{Scalar(200), Scalar(25)}, Point{Scalar(1), Scalar(0)}});
  // Flag line through the triple point (150, 94).
  expect_invalid(Flag{Point{Scalar(0), Scalar(94)}, Point{Scalar(1), Scalar(0)}});
  // Flag line between intersection points (y = 60 has points on both sides).
  expect_invalid(Flag{Point{Scalar(0), Scalar(60)}, Point{Scalar(1), Scalar(0)}});
}

TEST_CASE("deterministic flag construction") {
  for (const char* file : {"tri3.arr", "par2.arr", "pencil3.arr", "fig2.arr"}) {
    CAPTURE(file);
    Arrangement arr = load(file);
    arr.set_flag_hint(std::nullopt);
    Flag f = choose_flag(arr);
    CHECK_NOTHROW(validate_flag(arr, f));
    CHECK_NOTHROW(classify_chambers(arr, f));
  }
}

TEST_CASE("classification by the hinted flag") {
  Arrangement arr = load("fig2.arr");
  FlaggedArrangement fa = classify_chambers(arr);
  CHECK(fa.n() == 6);
  // Crossing order along y = 25 is the file order H1..H6.
  for (size_t i = 0; i < 6; ++i)
    CHECK(arr.line(fa.line_order[i]).name == (int)(i + 1));
  CHECK(fa.ch1.size() == 6);
  CHECK(fa.ch2.size() == 9);

  // The base chamber is on the near side of every line, the last flag
  // chamber on the far side of every line.
  for (size_t i = 0; i < 6; ++i) {
    CHECK(fa.rel_sign(fa.c0, i) == -1);
    CHECK(fa.rel_sign(fa.ch1[5], i) == 1);
  }
  // Walking the flag line: chamber i is separated from the base chamber by
  // exactly the first i+1 lines.
  for (size_t i = 0; i < 6; ++i) {
    auto sep = separating(arr, fa.chambers[fa.c0], fa.chambers[fa.ch1[i]]);
    CHECK(sep.size() == i + 1);
  }
}

TEST_CASE("locating points") {
  Arrangement arr = load("fig2.arr");
  auto chs = chambers(arr);
  for (const Chamber& c : chs) {
    auto idx = locate_chamber(arr, chs, c.witness);
    REQUIRE(idx.has_value());
    CHECK(chs[*idx].signs == c.signs);
  }
  // A point on H2 belongs to no chamber.
  CHECK(!locate_chamber(arr, chs, Point{Scalar(150), Scalar(0)}).has_value());
}
