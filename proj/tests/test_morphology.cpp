#include <doctest.h>

#include <algorithm>

#include "frontkit/morphology.hpp"
#include "reference.hpp"
#include "test_util.hpp"

using namespace frontkit;

TEST_CASE("mdm: single pixel is its own skeleton") {
  BitMask z(5, 5);
  z.set(2, 2, true);
  BitMask s = mdm_skeleton(z);
  CHECK(s.count() == 1);
  CHECK(s.at(2, 2));
}

TEST_CASE("mdm: a 1-pixel-wide line is unchanged") {
  BitMask z(5, 9);
  for (int c = 1; c < 8; ++c) z.set(2, c, true);
  CHECK(mdm_skeleton(z) == z);
}

TEST_CASE("mdm: 3x7 rectangle reduces to the middle-row segment") {
  BitMask z(5, 9);
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 7; ++c) z.set(r, c, true);

  // frozen from the reference erosion/opening cascade: the 1x5 core
  BitMask want(5, 9);
  for (int c = 2; c <= 6; ++c) want.set(2, c, true);
  REQUIRE(ref::mdm_skeleton(z) == want);

  CHECK(mdm_skeleton(z) == want);
}

TEST_CASE("mdm: empty zone gives empty skeleton") {
  BitMask z(6, 6);
  CHECK(mdm_skeleton(z).empty());
}

TEST_CASE("mdm: matches the reference cascade on random masks") {
  testutil::Rng rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    BitMask z = testutil::random_zone(rng, 16, 16);
    CHECK(mdm_skeleton(z) == ref::mdm_skeleton(z));
  }
}

TEST_CASE("mdm: skeleton is a subset of the zone") {
  testutil::Rng rng(405);
  for (int trial = 0; trial < 20; ++trial) {
    BitMask z = testutil::random_zone(rng, 20, 20);
    BitMask s = mdm_skeleton(z);
    for (std::size_t i = 0; i < z.bits.size(); ++i)
      if (s.bits[i]) CHECK(z.bits[i]);
  }
}

TEST_CASE("graph: straight 5-pixel line") {
  BitMask s = testutil::mask_from({
      ".......",
      ".#####.",
      ".......",
  });
  SkeletonGraph g = build_skeleton_graph(s);
  CHECK(g.endpoints.size() == 2);
  CHECK(g.connections.size() == 3);
  CHECK(g.intersections.empty());
  CHECK(g.branches.empty());
}

TEST_CASE("graph: T with diagonal arms has one intersection, three branches") {
  // arms meet only at the junction, so the degree rule gives a clean T
  BitMask s = testutil::mask_from({
      "#...#",
      ".#.#.",
      "..#..",
      "..#..",
      "..#..",
  });
  SkeletonGraph g = build_skeleton_graph(s);
  CHECK(g.endpoints.size() == 3);
  CHECK(g.intersections.size() == 1);
  CHECK(g.intersections[0] == Pix{2, 2});
  CHECK(g.connections.size() == 3);
  REQUIRE(g.branches.size() == 3);
  for (const auto& br : g.branches) CHECK(br.path.size() == 2);
}

TEST_CASE("graph: empty skeleton") {
  SkeletonGraph g = build_skeleton_graph(BitMask(4, 4));
  CHECK(g.endpoints.empty());
  CHECK(g.connections.empty());
  CHECK(g.intersections.empty());
  CHECK(g.isolated.empty());
  CHECK(g.branches.empty());
}

TEST_CASE("graph: isolated pixel is classified as isolated") {
  BitMask s(3, 3);
  s.set(1, 1, true);
  SkeletonGraph g = build_skeleton_graph(s);
  CHECK(g.isolated.size() == 1);
  CHECK(g.endpoints.empty());
}

TEST_CASE("dse: straight line has no branches and is unchanged") {
  BitMask z(5, 30);
  for (int c = 0; c < 30; ++c)
    for (int r = 1; r <= 3; ++r) z.set(r, c, true);
  BitMask s(5, 30);
  for (int c = 0; c < 30; ++c) s.set(2, c, true);
  CHECK(dse_trim(s, z, 20.0) == s);
  CHECK(dse_trim(s, z, 1e9) == s);
}

TEST_CASE("dse: 2-pixel spur is removed, 20-pixel main line kept") {
  // two 10-pixel diagonal arms meeting at (10,10) form the main line;
  // a 2-pixel stem hangs below the junction. Zone = 1-px dilation.
  BitMask s(16, 24);
  for (int k = 0; k < 10; ++k) {
    s.set(k, k, true);            // arm to the upper left
    s.set(k, 20 - k, true);       // arm to the upper right
  }
  s.set(10, 10, true);            // junction
  s.set(11, 10, true);            // spur
  s.set(12, 10, true);

  BitMask z(16, 24);
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 24; ++c)
      for (int dr = -1; dr <= 1 && !z.at(r, c); ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          int rr = r + dr, cc = c + dc;
          if (rr >= 0 && rr < 16 && cc >= 0 && cc < 24 && s.at(rr, cc)) {
            z.set(r, c, true);
            break;
          }
        }

  BitMask want = s;
  want.set(11, 10, false);
  want.set(12, 10, false);

  // the independent greedy reference must agree before we freeze it
  REQUIRE(ref::dse(s, z, 20.0) == want);

  BitMask got = dse_trim(s, z, 20.0);
  CHECK(got == want);
}

TEST_CASE("dse: negative threshold never trims") {
  testutil::Rng rng(500);
  BitMask z = testutil::random_zone(rng, 14, 14);
  BitMask s = mdm_skeleton(z);
  CHECK(dse_trim(s, z, -1.0) == s);
}

TEST_CASE("dse: output is a subset of the skeleton") {
  testutil::Rng rng(501);
  for (int trial = 0; trial < 10; ++trial) {
    BitMask z = testutil::random_zone(rng, 18, 18);
    BitMask s = mdm_skeleton(z);
    BitMask t = dse_trim(s, z, 20.0);
    for (std::size_t i = 0; i < s.bits.size(); ++i)
      if (t.bits[i]) CHECK(s.bits[i]);
    CHECK(t.count() <= s.count());
  }
}

TEST_CASE("dse: surviving branch weights exceed the threshold") {
  testutil::Rng rng(502);
  for (int trial = 0; trial < 10; ++trial) {
    BitMask z = testutil::random_zone(rng, 16, 16);
    BitMask s = mdm_skeleton(z);
    BitMask t = dse_trim(s, z, 20.0);
    for (std::size_t w : ref::branch_weights(t, z)) CHECK(double(w) > 20.0);
  }
}

TEST_CASE("dse: matches the brute-force greedy reference") {
  testutil::Rng rng(503);
  for (int trial = 0; trial < 10; ++trial) {
    BitMask z = testutil::random_zone(rng, 14, 14);
    BitMask s = mdm_skeleton(z);
    CHECK(dse_trim(s, z, 20.0) == ref::dse(s, z, 20.0));
  }
}
