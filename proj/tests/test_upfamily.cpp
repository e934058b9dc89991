#include <doctest.h>

#include <set>

#include "upsem/errors.hpp"
#include "upsem/spaces.hpp"
#include "upsem/upfamily.hpp"

using namespace upsem;

TEST_CASE("upper closure canonicalizes to the minimal antichain") {
  // supersets are absorbed
  CHECK(up_closure(3, {0b001, 0b011}).minimal == std::vector<SubsetMask>{0b001});
  // the triangle family on 3: all sets of size >= 2
  const UpFamily delta = up_closure(3, {0b011, 0b101, 0b110});
  CHECK(delta.minimal == std::vector<SubsetMask>{0b011, 0b101, 0b110});
  // a single generator on a 2-carrier
  CHECK(up_closure(2, {0b11}).minimal == std::vector<SubsetMask>{0b11});
  // duplicates collapse
  CHECK(up_closure(2, {1, 1, 1}).minimal == std::vector<SubsetMask>{1});

  CHECK_THROWS_AS(up_closure(3, {}), input_error);
  CHECK_THROWS_AS(up_closure(3, {0}), input_error);
  CHECK_THROWS_AS(up_closure(2, {0b100}), input_error);
  CHECK_THROWS_AS(up_closure(0, {1}), input_error);
  CHECK_THROWS_AS(up_closure(9, {1}), input_error);
}

TEST_CASE("membership is superset-of-a-minimal-member") {
  const UpFamily delta = up_closure(3, {0b011, 0b101, 0b110});
  CHECK(member(delta, 0b011));
  CHECK(member(delta, 0b111));
  CHECK_FALSE(member(delta, 0b100));
  CHECK_FALSE(member(delta, 0));

  CHECK(member(point_family(3, 0), 0b111));
  CHECK(members(delta) == std::vector<SubsetMask>{0b011, 0b101, 0b110, 0b111});
}

TEST_CASE("classification of the standard families") {
  const FamilyFlags delta = classify_upfamily(up_closure(3, {0b011, 0b101, 0b110}));
  CHECK(delta.linked);
  CHECK(delta.maximal_linked);
  CHECK_FALSE(delta.filter);
  CHECK_FALSE(delta.ultrafilter);

  const FamilyFlags pair = classify_upfamily(principal(3, 0b011));
  CHECK(pair.filter);
  CHECK(pair.linked);
  CHECK_FALSE(pair.maximal_linked);  // extends to the point family at 0
  CHECK_FALSE(pair.ultrafilter);

  const FamilyFlags point = classify_upfamily(point_family(3, 0));
  CHECK(point.filter);
  CHECK(point.ultrafilter);
  CHECK(point.linked);
  CHECK(point.maximal_linked);

  const FamilyFlags split = classify_upfamily(up_closure(3, {0b001, 0b010}));
  CHECK_FALSE(split.linked);
  CHECK_FALSE(split.maximal_linked);
  CHECK_FALSE(split.filter);
}

TEST_CASE("both classification routes agree across whole spaces") {
  // classify_upfamily runs intersection-closure vs single-minimal and
  // no-extension vs self-duality internally and throws if they split.
  for (int n = 1; n <= 4; ++n) {
    std::set<UpFamily> maximal;
    for (const UpFamily& f : enumerate_space(SpaceKind::upsilon, n)) {
      const FamilyFlags flags = classify_upfamily(f);
      if (flags.maximal_linked) maximal.insert(f);
      if (flags.filter) CHECK(f.minimal.size() == 1);
    }
    const auto lambda = enumerate_space(SpaceKind::lambda, n);
    CHECK(maximal == std::set<UpFamily>(lambda.begin(), lambda.end()));
  }
}

TEST_CASE("membership tables round-trip") {
  for (int n = 1; n <= 4; ++n)
    for (const UpFamily& f : enumerate_space(SpaceKind::upsilon, n)) {
      const FamilyTable t = family_table(f);
      CHECK(family_from_table(n, t) == f);
      for (SubsetMask s = 0; s <= full_mask(n); ++s)
        CHECK(((t >> s) & 1) == static_cast<FamilyTable>(member(f, s)));
    }
}

TEST_CASE("table self-duality matches the maximal-linked flag") {
  for (const UpFamily& f : enumerate_space(SpaceKind::upsilon, 4))
    CHECK(table_self_dual(4, family_table(f)) ==
          classify_upfamily(f).maximal_linked);
}

TEST_CASE("upset tables enumerate supersets") {
  const FamilyTable t = upset_table(3, 0b011);
  for (SubsetMask s = 0; s <= 0b111; ++s)
    CHECK(((t >> s) & 1) == static_cast<FamilyTable>(mask_subset(0b011, s)));
}
