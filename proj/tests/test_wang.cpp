#include "herbert/catalog.hpp"
#include "herbert/wang.hpp"

#include <catch_amalgamated.hpp>

using namespace herbert;
namespace cat = herbert::catalog;

namespace {

GModule ztw(const ZExtension& E) { return sign_module(E); }
GModule zz(const ZExtension& E) { return trivial_module(E); }

}  // namespace

TEST_CASE("Wang sequence of Z4 ⋊ Z in low degrees", "[wang]") {
  Engine eng;
  const auto& E = cat::z4_ext();
  {
    auto w = wang_homology(eng, E, ztw(E), 5);
    CHECK(w.left->to_string() == "Z/4");
    CHECK(w.right->to_string() == "0");
    REQUIRE(w.resolved());
    CHECK(w.total()->to_string() == "Z/4");
    CHECK(wang_induced(w).is_iso());
  }
  {
    auto w = wang_homology(eng, E, zz(E), 3);
    CHECK(w.total()->to_string() == "Z/4");
    CHECK(wang_induced(w).is_iso());
  }
  {
    auto w = wang_homology(eng, E, zz(E), 5);
    CHECK(w.left->to_string() == "Z/2");
    CHECK(w.right->to_string() == "0");
    auto i = wang_induced(w);
    CHECK(i.surjective());
    auto k = i.kernel();
    CHECK(k.presentation().to_string() == "Z/2");
    CHECK(i(Integer(2) * HClass::generator(w.fiber_top, 0)).is_zero());
  }
  // degree 0 and 1 with trivial coefficients: H_0 = Z, H_1 = Z/2 + Z
  CHECK(wang_homology(eng, E, zz(E), 0).total()->to_string() == "Z");
  auto w1 = wang_homology(eng, E, zz(E), 1);
  CHECK(w1.left->to_string() == "Z/2");
  CHECK(w1.right->to_string() == "Z");
  CHECK_FALSE(w1.resolved());
  CHECK_THROWS_AS(w1.total(), ExtensionAmbiguous);
  // twisted coefficients in degree 0: coinvariants of -1
  CHECK(wang_homology(eng, E, ztw(E), 0).total()->to_string() == "Z/2");
}

TEST_CASE("degrees 4m+1 twisted and 4m+3 trivial give Z/4", "[wang]") {
  Engine eng;
  const auto& E = cat::z4_ext();
  for (std::size_t m : {0u, 1u}) {
    auto b = wang_homology(eng, E, ztw(E), 4 * m + 1);
    CHECK(b.total()->to_string() == "Z/4");
    CHECK(wang_induced(b).is_iso());
    auto c = wang_homology(eng, E, zz(E), 4 * m + 3);
    CHECK(c.total()->to_string() == "Z/4");
    CHECK(wang_induced(c).is_iso());
  }
  // the twisted module squares to the trivial one
  CHECK(tensor_power(ztw(E), 2).same_action(zz(E)));
}

TEST_CASE("Wang cohomology in degree 2 and the restriction", "[wang]") {
  Engine eng;
  const auto& E = cat::z4_ext();
  auto w = wang_cohomology(eng, E, ztw(E), 2);
  CHECK(w.left->to_string() == "0");
  CHECK(w.total()->to_string() == "Z/4");
  auto r = wang_restriction(w);
  CHECK(r.is_iso());
  auto e = euler_class_cyclic(eng, cat::rep_a());
  CHECK(e.home.get() == w.fiber_top.get());
  // e generates and is invariant
  CHECK(wang_theta(eng, E, ztw(E), e.home)(e) == e);
  auto wz = wang_cohomology(eng, E, zz(E), 2);
  CHECK(wz.total()->to_string() == "Z/2");
}

TEST_CASE("cap with the Euler class across the Wang sequence", "[wang]") {
  Engine eng;
  const auto& E = cat::z4_ext();
  auto e = euler_class_cyclic(eng, cat::rep_a());
  auto h5 = wang_homology(eng, E, ztw(E), 5);
  auto h3 = wang_homology(eng, E, tensor(ztw(E), ztw(E)), 3);
  auto h1 = wang_homology(eng, E, tensor(tensor(ztw(E), ztw(E)), ztw(E)), 1);
  auto c53 = wang_cap(eng, h5, h3, e, ztw(E));
  auto c31 = wang_cap(eng, h3, h1, e, ztw(E));
  CHECK(c53.is_iso());
  CHECK(c31.is_iso());
  // naturality: i_* after fiber cap equals Wang cap after i_*
  auto fiber53 = cap_map(eng, h5.fiber_top, e, fiber_module(h3.module));
  CHECK(compose(wang_induced(h3), fiber53) == compose(c53, wang_induced(h5)));
  // the negated cap is an isomorphism as well
  CHECK(add(c53, add(c53, c53)).is_iso());
  // a non-invariant class is rejected
  CHECK_THROWS(wang_cap(eng, wang_homology(eng, E, zz(E), 3), wang_homology(eng, E, zz(E), 1), e, zz(E)));
}

TEST_CASE("Wang transfer for the diagonal sub-extension", "[wang]") {
  Engine eng;
  const auto& big = cat::z4xz2_ext();
  const auto& small = cat::z4_ext();
  // Z4 ⋊ Z inside (Z4 x Z2) ⋊ Z along b ↦ (1,0)
  ExtensionHom incl(small, big, cat::z4_in_z4xz2());
  for (std::size_t q : {1u, 3u, 5u}) {
    auto wb = wang_homology(eng, big, ztw(big), q);
    auto ws = wang_homology(eng, small, ztw(small), q);
    auto tr = wang_transfer(eng, incl, wb, ws, true);
    auto in = wang_extension_map(eng, incl, ws, wb, true);
    CHECK(compose(in, tr) == scalar_map(wb.left, 2));
  }
}
