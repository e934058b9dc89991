#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "upsem/errors.hpp"
#include "upsem/spaces.hpp"

using namespace upsem;

namespace {

std::set<UpFamily> as_set(const std::vector<UpFamily>& v) {
  return {v.begin(), v.end()};
}

std::vector<std::vector<SubsetMask>> minimal_lists(const std::vector<UpFamily>& v) {
  std::vector<std::vector<SubsetMask>> out;
  for (const UpFamily& f : v) out.push_back(f.minimal);
  return out;
}

}  // namespace

TEST_CASE("upsilon counts match the brute-force monotone-family oracle") {
  const std::vector<long> expected = {1, 4, 18, 166};
  for (int n = 1; n <= 4; ++n) {
    const long count = static_cast<long>(enumerate_space(SpaceKind::upsilon, n).size());
    CHECK(count == expected[n - 1]);
    CHECK(count == oracles::brute_force_upfamily_count(n));
  }
  // reference value for n = 5 (one less than the families-with-empty-set count)
  CHECK(enumerate_space(SpaceKind::upsilon, 5).size() == 7579);
}

TEST_CASE("the four upfamilies over a 2-carrier") {
  CHECK(minimal_lists(enumerate_space(SpaceKind::upsilon, 2)) ==
        std::vector<std::vector<SubsetMask>>{{1}, {1, 2}, {2}, {3}});
}

TEST_CASE("the eighteen upfamilies over a 3-carrier") {
  CHECK(minimal_lists(enumerate_space(SpaceKind::upsilon, 3)) ==
        std::vector<std::vector<SubsetMask>>{
            {1}, {1, 2}, {1, 2, 4}, {1, 4}, {1, 6}, {2}, {2, 4}, {2, 5},
            {3}, {3, 4}, {3, 5}, {3, 5, 6}, {3, 6}, {4}, {5}, {5, 6}, {6}, {7}});
}

TEST_CASE("linked families over a 3-carrier") {
  CHECK(minimal_lists(enumerate_space(SpaceKind::n2, 3)) ==
        std::vector<std::vector<SubsetMask>>{
            {1}, {2}, {3}, {3, 5}, {3, 5, 6}, {3, 6}, {4}, {5}, {5, 6}, {6}, {7}});
}

TEST_CASE("maximal linked families for small carriers") {
  CHECK(minimal_lists(enumerate_space(SpaceKind::lambda, 2)) ==
        std::vector<std::vector<SubsetMask>>{{1}, {2}});
  CHECK(minimal_lists(enumerate_space(SpaceKind::lambda, 3)) ==
        std::vector<std::vector<SubsetMask>>{{1}, {2}, {3, 5, 6}, {4}});
}

TEST_CASE("lambda counts match the self-duality filter over upsilon") {
  const std::vector<std::size_t> expected = {1, 2, 4, 12, 81};
  for (int n = 1; n <= 5; ++n) {
    const auto lambda = enumerate_space(SpaceKind::lambda, n);
    CHECK(lambda.size() == expected[n - 1]);
    std::set<UpFamily> oracle;
    for (const UpFamily& f : enumerate_space(SpaceKind::upsilon, n))
      if (table_self_dual(n, family_table(f))) oracle.insert(f);
    CHECK(as_set(lambda) == oracle);
  }
  CHECK(enumerate_space(SpaceKind::lambda, 6).size() == 2646);
}

TEST_CASE("filter and ultrafilter space sizes") {
  for (int n = 1; n <= 7; ++n)
    CHECK(enumerate_space(SpaceKind::phi, n).size() ==
          static_cast<std::size_t>((1 << n) - 1));
  for (int n = 1; n <= 8; ++n)
    CHECK(enumerate_space(SpaceKind::beta, n).size() == static_cast<std::size_t>(n));
}

TEST_CASE("the inclusion diagram holds pointwise") {
  for (int n = 1; n <= 4; ++n) {
    const auto beta = as_set(enumerate_space(SpaceKind::beta, n));
    const auto phi = as_set(enumerate_space(SpaceKind::phi, n));
    const auto lambda = as_set(enumerate_space(SpaceKind::lambda, n));
    const auto n2 = as_set(enumerate_space(SpaceKind::n2, n));
    const auto upsilon = as_set(enumerate_space(SpaceKind::upsilon, n));
    CHECK(std::includes(phi.begin(), phi.end(), beta.begin(), beta.end()));
    CHECK(std::includes(lambda.begin(), lambda.end(), beta.begin(), beta.end()));
    CHECK(std::includes(n2.begin(), n2.end(), phi.begin(), phi.end()));
    CHECK(std::includes(n2.begin(), n2.end(), lambda.begin(), lambda.end()));
    CHECK(std::includes(upsilon.begin(), upsilon.end(), n2.begin(), n2.end()));
  }
}

TEST_CASE("every maximal linked family is self-dual") {
  for (int n = 1; n <= 5; ++n)
    for (const UpFamily& f : enumerate_space(SpaceKind::lambda, n)) {
      const SubsetMask full = full_mask(n);
      for (SubsetMask s = 1; s < full; ++s)
        CHECK(member(f, s) != member(f, full & ~s));
      CHECK(member(f, full));
    }
}

TEST_CASE("enumerated families are canonical and deterministically ordered") {
  for (const SpaceKind k : {SpaceKind::upsilon, SpaceKind::phi, SpaceKind::beta,
                            SpaceKind::n2, SpaceKind::lambda})
    for (int n = 1; n <= 4; ++n) {
      const auto fams = enumerate_space(k, n);
      CHECK(std::is_sorted(fams.begin(), fams.end()));
      CHECK(fams == enumerate_space(k, n));
      for (const UpFamily& f : fams) {
        CHECK(up_closure(n, f.minimal) == f);
        CHECK(in_space(f, k));
      }
      // the space is exactly the in_space filter of upsilon
      std::size_t filtered = 0;
      for (const UpFamily& g : enumerate_space(SpaceKind::upsilon, n))
        if (in_space(g, k)) ++filtered;
      CHECK(filtered == fams.size());
    }
}

TEST_CASE("the twelve named elements of lambda(4)") {
  const auto named = named_lambda4_elements();
  REQUIRE(named.size() == 12);

  // D_3 is generated by the 2-sets avoiding 3, B_3 by 4\{3} and the 2-sets
  // containing 3
  for (const auto& [name, f] : named) {
    if (name == "Δ_3")
      CHECK(f.minimal == std::vector<SubsetMask>{0b0011, 0b0101, 0b0110});
    if (name == "□_3")
      CHECK(f.minimal == std::vector<SubsetMask>{0b0111, 0b1001, 0b1010, 0b1100});
    CHECK(classify_upfamily(f).maximal_linked);
  }

  std::set<UpFamily> named_set;
  for (const auto& [name, f] : named) named_set.insert(f);
  CHECK(named_set.size() == 12);  // pairwise distinct
  CHECK(named_set == as_set(enumerate_space(SpaceKind::lambda, 4)));
}

TEST_CASE("display names") {
  CHECK(family_display_name(point_family(4, 2), SpaceKind::lambda) == "⟨2⟩");
  CHECK(family_display_name(up_closure(3, {3, 5, 6}), SpaceKind::lambda) == "Δ");
  CHECK(family_display_name(up_closure(2, {1, 2}), SpaceKind::upsilon) == "[[0],[1]]");
}

TEST_CASE("space caps refuse out-of-range enumeration") {
  CHECK_THROWS_AS(enumerate_space(SpaceKind::upsilon, 6), cap_error);
  CHECK_THROWS_AS(enumerate_space(SpaceKind::n2, 6), cap_error);
  CHECK_THROWS_AS(enumerate_space(SpaceKind::lambda, 7), cap_error);
  CHECK_THROWS_AS(enumerate_space(SpaceKind::phi, 8), cap_error);
  CHECK_THROWS_AS(enumerate_space(SpaceKind::upsilon, 0), input_error);
  const Caps low = Caps().clamped(3);
  CHECK_THROWS_AS(enumerate_space(SpaceKind::lambda, 4, low), cap_error);
}

TEST_CASE("space parsing round-trips") {
  for (const char* name : {"upsilon", "phi", "beta", "n2", "lambda"})
    CHECK(to_string(parse_space(name)) == name);
  CHECK_THROWS_AS(parse_space("gamma"), input_error);
}
