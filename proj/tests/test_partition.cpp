#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stablerep/partition.hpp"

using namespace stablerep;

TEST_CASE("construction and parsing") {
  CHECK(Partition::parse("4,2,1").parts() == std::vector<int>{4, 2, 1});
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("3").size() == 3);
  CHECK_THROWS_AS(Partition({1, 2}), error);
  CHECK_THROWS_AS(Partition({2, 0}), error);
  CHECK_THROWS_AS(Partition::parse("2,x"), error);
}

TEST_CASE("pad") {
  CHECK(pad(Partition({2, 1}), 7) == Partition({4, 2, 1}));
  CHECK(pad(Partition(), 5) == Partition({5}));
  CHECK(pad(Partition({3}), 6) == Partition({3, 3}));
  CHECK_THROWS_AS(pad(Partition({3}), 5), error);
  CHECK(pad(Partition({2, 1}), 7).size() == 7);
}

TEST_CASE("dominance") {
  CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})) == Order::LessEq);
  CHECK(dominance_leq(Partition({3, 1}), Partition({2, 2})) == Order::Greater);
  CHECK(dominance_leq(Partition({3, 3}), Partition({4, 1, 1})) == Order::Incomparable);
  CHECK(dominance_leq(Partition({2, 1}), Partition({2, 1})) == Order::LessEq);
  CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({1})), error);
}

TEST_CASE("stable order") {
  CHECK(stable_leq(Partition(), Partition({1})) == Order::LessEq);
  CHECK(stable_leq(Partition({1}), Partition({2})) == Order::LessEq);
  CHECK(stable_leq(Partition({1}), Partition({1, 1})) == Order::LessEq);
  CHECK(stable_leq(Partition({2}), Partition({1})) == Order::Greater);
  // containment ordering is respected
  CHECK(stable_leq(Partition({2, 1}), Partition({2, 2})) == Order::LessEq);
}

TEST_CASE("stable order agrees with dominance of pads at every large level") {
  for (int r = 0; r <= 4; ++r) {
    std::vector<Partition> all;
    for (int s = 0; s <= r; ++s)
      for (const Partition& p : partitions_of(s)) all.push_back(p);
    for (const Partition& a : all)
      for (const Partition& b : all)
        for (int n = 2 * r + 1; n <= 14; ++n) {
          if (n - a.size() < a.part(1) || n - b.size() < b.part(1)) continue;
          Order stable = stable_leq(a, b);
          Order padded = dominance_leq(pad(b, n), pad(a, n));
          CHECK(stable == padded);
        }
  }
}

TEST_CASE("p-regularity") {
  CHECK_FALSE(is_p_regular(Partition({2, 2}), Prime(2)));
  CHECK(is_p_regular(Partition({2, 2}), Prime(3)));
  CHECK_FALSE(is_p_regular(Partition({1, 1, 1}), Prime(3)));
  CHECK(is_p_regular(Partition(), Prime(2)));
}

TEST_CASE("conjugate and dimensions") {
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(perm_module_dim(Partition({3, 1})) == 4);
  CHECK(perm_module_dim(Partition({2, 2})) == 6);
  CHECK(perm_module_dim(Partition()) == 1);
}

TEST_CASE("conjugate is an involution") {
  for (int n = 0; n <= 12; ++n)
    for (const Partition& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("pad structure") {
  for (int s = 0; s <= 4; ++s)
    for (const Partition& p : partitions_of(s))
      for (int n = s + p.part(1); n <= 12; ++n) {
        Partition padded = pad(p, n);
        CHECK(padded.size() == n);
        std::vector<int> rest(padded.parts().begin() + (padded.empty() ? 0 : 1),
                              padded.parts().end());
        CHECK(Partition(rest) == p);
      }
}
