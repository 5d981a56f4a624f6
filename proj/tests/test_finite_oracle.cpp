#include <doctest.h>

#include "repzeta/errors.hpp"
#include "repzeta/finite_oracle.hpp"
#include "repzeta/local_sl2.hpp"

using namespace repzeta;
using namespace repzeta::oracle;

TEST_CASE("group orders") {
  CHECK(sl2_group(3).order() == 24);
  CHECK(sl2_group(9).order() == 648);
  CHECK(sl2_group(5).order() == 120);
  CHECK(generate_group(7, 2, {}).order() == 1);
  CHECK_THROWS_AS(sl2_group(27, 1000), BudgetError);
  try {
    sl2_group(27, 1000);
  } catch (const BudgetError& e) {
    CHECK(e.reached() >= 1000);
  }
  CHECK_THROWS_AS(generate_group(9, 2, {{3, 0, 0, 1}}), PreconditionError);
}

TEST_CASE("group closure") {
  const auto g = sl2_group(9);
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; a += 37)
    for (std::size_t b = 0; b < n; b += 41) CHECK(g.multiply(a, b) < n);
  for (std::size_t a = 0; a < n; ++a) CHECK(g.multiply(a, g.inverse(a)) == 0);
}

TEST_CASE("conjugacy classes") {
  CHECK(conjugacy_classes(sl2_group(3)).count() == 7);
  CHECK(conjugacy_classes(sl2_group(9)).count() == 25);
  CHECK(conjugacy_classes(generate_group(5, 2, {})).count() == 1);
  const auto g = sl2_group(9);
  const auto cls = conjugacy_classes(g);
  std::size_t total = 0;
  for (auto s : cls.sizes) total += s;
  CHECK(total == g.order());
}

TEST_CASE("character degrees match the local factor censuses") {
  CHECK(character_degrees(sl2_group(3)).to_string() == "{1:3, 2:3, 3:1}");
  CHECK(character_degrees(sl2_group(9)).to_string() == "{1:3, 2:3, 3:1, 4:12, 6:4, 12:2}");
  CHECK(character_degrees(generate_group(5, 2, {})).to_string() == "{1:1}");
  for (auto [q, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{5, 1}, std::pair{7, 1}, std::pair{5, 2}}) {
    std::uint32_t m = 1;
    for (int i = 0; i < k; ++i) m *= q;
    const auto g = sl2_group(m);
    const auto cls = conjugacy_classes(g);
    const auto deg = character_degrees(g, cls);
    CAPTURE(m);
    CHECK(deg == local_sl2::level_census(q, k).census);
    CHECK(deg.mass() == g.order());
    CHECK(deg.irrep_count() == cls.count());
  }
}

TEST_CASE("linear characters count the abelianization") {
  for (std::uint32_t m : {3u, 5u, 7u, 9u, 15u}) {
    const auto g = sl2_group(m);
    const auto deg = character_degrees(g);
    CAPTURE(m);
    CHECK(deg.multiplicity_of(1) * commutator_subgroup_order(g) == g.order());
    CHECK(deg.mass() == g.order());
  }
}

TEST_CASE("class budget") {
  const auto g = sl2_group(9);
  CHECK_THROWS_AS(character_degrees(g, conjugacy_classes(g), 10), BudgetError);
}

TEST_CASE("class counts grow at least like q^k") {
  const std::size_t expected[] = {7, 25, 79};
  std::uint32_t m = 1;
  for (int k = 1; k <= 3; ++k) {
    m *= 3;
    const auto cls = conjugacy_classes(sl2_group(m));
    CHECK(cls.count() == expected[k - 1]);
    CHECK(cls.count() >= m);
  }
}
