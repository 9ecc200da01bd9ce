#include "herbert/catalog.hpp"
#include "herbert/homology.hpp"

#include <catch_amalgamated.hpp>

using namespace herbert;
namespace cat = herbert::catalog;

namespace {

std::string hstr(Engine& eng, const GroupPtr& G, const GModule& M, std::size_t q, bool co = false) {
  return (co ? eng.cohomology(G, M, q) : eng.homology(G, M, q))->to_string();
}

}  // namespace

TEST_CASE("periodic, tensor and generic resolutions are exact", "[resolution]") {
  for (const auto& G : {cat::z4(), cat::z2(), cat::z4xz2(), cat::q8()}) {
    auto R = make_resolution(G, 5);
    INFO(G->name() << " " << R->builder());
    auto c = check_resolution(*R);
    CHECK(c.ok());
  }
  GenericResolution g4(cat::z4(), 5);
  CHECK(check_resolution(g4).ok());
  for (std::size_t q = 0; q <= 5; ++q) CHECK(g4.rank(q) == 1);
}

TEST_CASE("contracting homotopies satisfy ds + sd = 1", "[resolution]") {
  for (const auto& G : {cat::z4(), cat::z4xz2(), cat::q8()}) {
    auto R = make_resolution(G, 4);
    INFO(R->builder());
    for (std::size_t q = 0; q < 3; ++q)
      for (std::size_t key = 0; key < R->rank(q) * R->order(); ++key) {
        Chain x{{key, 1}};
        Chain lhs = R->boundary_of(q + 1, R->homotopy(q, x));
        if (q > 0) chain_axpy(lhs, 1, R->homotopy(q - 1, R->boundary_of(q, x)));
        else chain_axpy(lhs, R->augment(x), R->unit());
        CHECK(lhs == x);
      }
  }
}

TEST_CASE("homology of cyclic groups", "[homology]") {
  Engine eng;
  auto Z4 = cat::z4();
  auto Z = trivial_module(Z4);
  CHECK(hstr(eng, Z4, Z, 0) == "Z");
  CHECK(hstr(eng, Z4, Z, 1) == "Z/4");
  CHECK(hstr(eng, Z4, Z, 2) == "0");
  CHECK(hstr(eng, Z4, Z, 3) == "Z/4");
  CHECK(hstr(eng, Z4, Z, 4) == "0");
  CHECK(hstr(eng, Z4, Z, 5) == "Z/4");
  CHECK(hstr(eng, Z4, Z, 0, true) == "Z");
  CHECK(hstr(eng, Z4, Z, 1, true) == "0");
  CHECK(hstr(eng, Z4, Z, 2, true) == "Z/4");
  auto Z2 = cat::z2();
  CHECK(hstr(eng, Z2, trivial_module(Z2), 3) == "Z/2");
  // sign module on Z2: H_0 = Z/2, H_1 = 0
  GModule sgn(Z2, {IntMatrix{{-1}}}, "Z-");
  CHECK(hstr(eng, Z2, sgn, 0) == "Z/2");
  CHECK(hstr(eng, Z2, sgn, 1) == "0");
  CHECK(hstr(eng, Z2, sgn, 2) == "Z/2");
}

TEST_CASE("products and quaternions", "[homology]") {
  Engine eng;
  CHECK(hstr(eng, cat::z4xz2(), trivial_module(cat::z4xz2()), 1) == "Z/2 + Z/4");
  CHECK(hstr(eng, cat::z4xz2(), trivial_module(cat::z4xz2()), 2) == "Z/2");
  CHECK(hstr(eng, cat::z4xz4(), trivial_module(cat::z4xz4()), 2) == "Z/4");
  CHECK(hstr(eng, cat::z4xz4(), trivial_module(cat::z4xz4()), 3) == "Z/4 + Z/4 + Z/4");
  auto Q = cat::q8();
  CHECK(hstr(eng, Q, trivial_module(Q), 1) == "Z/2 + Z/2");
  CHECK(hstr(eng, Q, trivial_module(Q), 2) == "0");
  CHECK(hstr(eng, Q, trivial_module(Q), 3) == "Z/8");
}

TEST_CASE("generic and periodic resolutions agree on cyclic groups", "[homology]") {
  Engine eng;
  for (const auto& G : {cat::z4(), cat::z2()}) {
    auto gen = std::make_shared<GenericResolution>(G, 7);
    auto M = trivial_module(G);
    for (std::size_t q = 0; q <= 6; ++q) {
      HomologyGroup a(gen, M, q, Variance::Homology);
      CHECK(a.to_string() == eng.homology(G, M, q)->to_string());
      HomologyGroup b(gen, M, q, Variance::Cohomology);
      CHECK(b.to_string() == eng.cohomology(G, M, q)->to_string());
    }
  }
}

TEST_CASE("lifted chain maps commute with d and do not depend on the seed", "[chain_map]") {
  Engine eng;
  auto Z4 = cat::z4();
  auto inv = inversion_aut(Z4).hom();
  auto R = eng.resolution(Z4, 8);
  for (std::uint64_t seed : {0u, 1u, 7u}) {
    auto f = lift_chain_map(inv, R, R, 6, seed);
    CHECK(check_chain_map(f));
  }
  const std::vector<Integer> expected{-1, 1, -1};
  for (std::size_t i = 0; i < 3; ++i) {
    auto h = eng.homology(Z4, trivial_module(Z4), 2 * i + 1);
    for (std::uint64_t seed : {0u, 3u, 11u}) {
      auto m = induced_map(eng, inv, h, h, seed);
      CHECK(m == scalar_map(h, expected[i]));
    }
  }
}

TEST_CASE("inclusion Z2 in Z4 on H_1 hits the subgroup of order 2", "[chain_map]") {
  Engine eng;
  auto Z2 = cat::z2(), Z4 = cat::z4();
  auto inc = make_hom(Z2, Z4, std::vector<Element>{Z4->power(Z4->generators()[0].element, 2)}, "incl");
  auto src = eng.homology(Z2, trivial_module(Z2), 1);
  auto tgt = eng.homology(Z4, trivial_module(Z4), 1);
  auto m = induced_map(eng, inc, src, tgt);
  auto im = m.image();
  REQUIRE(im.size() == 2);
  CHECK(im[1] == Integer(2) * HClass::generator(tgt, 0));
}

TEST_CASE("diagonal approximation is a chain map", "[chain_map]") {
  for (const auto& G : {cat::z4(), cat::z2()}) {
    auto R = make_resolution(G, 6);
    auto D = diagonal_approx(R, 5, 0);
    CHECK(check_chain_map(D.map));
    CHECK(check_chain_map(diagonal_approx(R, 4, 5).map));
  }
}

TEST_CASE("restricted resolution is a resolution of the subgroup", "[resolution]") {
  auto R = make_resolution(cat::z4xz2(), 4);
  RestrictedResolution rr(R, cat::z4_in_z4xz2());
  CHECK(rr.index() == 2);
  CHECK(check_resolution(rr).ok());
}
