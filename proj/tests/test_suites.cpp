#include "herbert/suites.hpp"

#include <catch_amalgamated.hpp>

using namespace herbert;

TEST_CASE("every verification suite passes", "[suites]") {
  Verifier v;
  for (const auto& id : Verifier::suite_ids()) {
    const auto& r = v.run(id);
    for (const auto& c : r.claims) {
      INFO(id << " / " << c.id << ": " << c.statement << " computed " << c.computed << " expected " << c.expected);
      CHECK(c.pass);
    }
    CHECK(r.pass());
  }
}

TEST_CASE("suites agree across pivot seeds", "[suites]") {
  Verifier a(0), b(5);
  for (const std::string id : {"tauQ", "corDiagB", "lemma1d"}) {
    const auto &ra = a.run(id), &rb = b.run(id);
    REQUIRE(ra.claims.size() == rb.claims.size());
    for (std::size_t i = 0; i < ra.claims.size(); ++i) CHECK(ra.claims[i].pass == rb.claims[i].pass);
  }
}

TEST_CASE("unknown suites are rejected", "[suites]") {
  Verifier v;
  CHECK_THROWS_AS(v.run("lemma9"), std::invalid_argument);
}
