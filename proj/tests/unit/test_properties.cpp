#include "doctest.h"

#include "properties.hpp"

namespace {

  void require_ok(const props::Outcome & o)
  {
    INFO(o.first_failure);
    CHECK(o.cases > 0);
    CHECK(o.failures == 0);
  }

} // namespace

TEST_SUITE("properties") {

  TEST_CASE("ring laws") { require_ok(props::ring_laws(60, 11)); }

  TEST_CASE("Frobenius congruence") { require_ok(props::frobenius(40, 12)); }

  TEST_CASE("section and substitution") { require_ok(props::section_adjunction(60, 13)); }

  TEST_CASE("degree bound") { require_ok(props::degree_bound(60, 14)); }

  TEST_CASE("eval_mod against unrolling") { require_ok(props::eval_mod_vs_unroll(30, 20000, 15)); }

  TEST_CASE("minimal annihilator against Hankel rank") { require_ok(props::annihilator_vs_hankel(60, 16)); }

  TEST_CASE("witness round trip") { require_ok(props::witness_round_trip(40, 17)); }

  TEST_CASE("hypergeometric exact against modular") { require_ok(props::hypergeom_exact_vs_modular(60, 30)); }
}
