#include <doctest.h>

#include <cmath>

#include "theta/errors.hpp"
#include "theta/verify.hpp"

using namespace theta;

TEST_SUITE("verify") {
  TEST_CASE("k = 3 certificate") {
    const TheoremCertificate c = verify_theorem_k(3);
    CHECK(c.overall);
    REQUIRE(!c.comparisons.empty());
    CHECK(std::abs(c.comparisons[0].lhs - 1.4655712319) < 5e-10);
    CHECK(std::abs(c.comparisons[0].rhs - 1.5247025799) < 5e-10);
  }

  TEST_CASE("k = 8 certificate names every frontier case") {
    const TheoremCertificate c = verify_theorem_k(8);
    CHECK(c.overall);
    const double expected[] = {3.0446178232, 3.0625912820, 3.4125677445, 3.2745245420};
    REQUIRE(c.comparisons.size() >= 4);
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(c.comparisons[static_cast<std::size_t>(i)].lhs - expected[i]) < 5e-10);
      CHECK(std::abs(c.comparisons[static_cast<std::size_t>(i)].rhs - 3.4201564280) < 5e-10);
    }
  }

  TEST_CASE("every k from 3 to 8 is certified") {
    for (int k = 3; k <= 8; ++k) {
      const TheoremCertificate c = verify_theorem_k(k);
      bool all = true;
      for (const auto& cmp : c.comparisons) all = all && cmp.holds;
      CHECK(c.overall == all);
      CHECK_MESSAGE(c.overall, "k = ", k);
      CHECK(c.comparisons.size() == (k <= 5 ? 2u : k <= 7 ? 5u : 6u));
    }
    CHECK_THROWS_AS(verify_theorem_k(2), DomainError);
    CHECK_THROWS_AS(verify_theorem_k(9), DomainError);
  }

  TEST_CASE("k = 9 obstruction") {
    const LimitObstruction o = limit_obstruction(9);
    CHECK(o.obstructs);
    CHECK(std::abs(o.rtilde_limit - 3.7959050193) < 5e-10);
    CHECK(std::abs(o.rho_all_two - 3.7468849281) < 5e-10);
    // Below 9 the limit stays under the target.
    for (int k = 4; k <= 8; ++k) CHECK_FALSE(limit_obstruction(k).obstructs);
  }

  TEST_CASE("published table") {
    CHECK(table1_rows().size() == 35);
    for (const Table1Check& c : reproduce_table1()) {
      CHECK_MESSAGE(c.ok, PathLengths(c.row.paths).to_string());
      for (double d : c.deviation) CHECK(d <= kTable1Tolerance);
    }
  }
}
