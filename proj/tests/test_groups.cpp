#include "herbert/catalog.hpp"
#include "herbert/module.hpp"

#include <catch_amalgamated.hpp>

using namespace herbert;
namespace cat = herbert::catalog;

namespace {

bool group_axioms_hold(const FiniteGroup& G) {
  for (Element a = 0; a < G.order(); ++a) {
    if (G.mul(G.identity(), a) != a || G.mul(a, G.inv(a)) != G.identity()) return false;
    for (Element b = 0; b < G.order(); ++b)
      for (Element c = 0; c < G.order(); ++c)
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build_group examples", "[groups]") {
  SECTION("Cyclic(4): b^4 = e") {
    auto g = build_group("Cyclic(4)");
    REQUIRE(g->order() == 4);
    CHECK(g->power(g->generators()[0].element, 4) == g->identity());
    CHECK(g->element_order(g->generators()[0].element) == 4);
  }
  SECTION("Quaternion8: center {±1}, i^2 = j^2 = k^2 = -1") {
    auto q = build_group("Quaternion8");
    REQUIRE(q->order() == 8);
    const Element m1 = q->element("-1");
    for (auto u : {"i", "j", "k"}) CHECK(q->mul(q->element(u), q->element(u)) == m1);
    CHECK(q->mul(q->element("i"), q->element("j")) == q->element("k"));
    std::vector<std::string> center;
    for (Element z = 0; z < 8; ++z) {
      bool central = true;
      for (Element x = 0; x < 8; ++x) central = central && q->mul(z, x) == q->mul(x, z);
      if (central) center.push_back(q->label(z));
    }
    CHECK(center == std::vector<std::string>{"1", "-1"});
  }
  SECTION("SemidirectZ2(Product(Cyclic(4),Cyclic(4)), swap): order 32, t(x,y)t = (y,x)") {
    auto g = build_group("SemidirectZ2(Product(Cyclic(4),Cyclic(4)), swap)");
    REQUIRE(g->order() == 32);
    const Element t = g->generator("t");
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) CHECK(g->mul(g->mul(t, cat::w_elem(x, y, 0)), t) == cat::w_elem(y, x, 0));
  }
  SECTION("JSON form and presets agree with the text form") {
    auto a = build_group(R"({"SemidirectZ2": [{"Product": [{"Cyclic": 4}, {"Cyclic": 4}]}, "swap"]})");
    CHECK(a->order() == 32);
    CHECK(build_group("Z4xZ2")->order() == 8);
    CHECK(build_group("\"Q8\"")->order() == 8);
  }
  SECTION("every preset satisfies the group axioms") {
    for (auto p : {"Z2", "Z4", "Q8", "Z4xZ2", "Z4xZ4", "Z4xZ4_sd_Z2"}) CHECK(group_axioms_hold(*build_group(p)));
  }
  SECTION("errors") {
    CHECK_THROWS_AS(build_group("Cyclic(4"), GroupError);
    CHECK_THROWS_AS(build_group("Nonsense"), GroupError);
    CHECK_THROWS_AS(build_group("SemidirectZ2(Cyclic(4), swap)"), GroupError);
    CHECK_THROWS_AS(build_group("Product(Cyclic(16),Cyclic(8))"), GroupError);
    // the only nontrivial automorphism of Z3 has order 2, so test with Q8 where inverse is not a hom
    CHECK_THROWS_AS(build_group("SemidirectZ2(Quaternion8, inverse)"), GroupError);
  }
}

TEST_CASE("make_hom examples", "[groups][hom]") {
  SECTION("Q8 -> W: i -> ((1,-1),0), j -> ((1,1),1), k -> ((2,0),1)") {
    const auto& h = cat::q8_in_w();
    CHECK(h.injective());
    CHECK_FALSE(h.surjective());
    CHECK(h(cat::q8()->element("k")) == cat::w_elem(2, 0, 1));
    // semidirect multiplication: ((1,-1),0)((1,1),1) = ((1+1, -1+1),1)
    CHECK(cat::w()->mul(cat::w_elem(1, -1, 0), cat::w_elem(1, 1, 1)) == cat::w_elem(2, 0, 1));
    CHECK(cat::w()->label(cat::w_elem(2, 0, 1)) == "((2,0),1)");
  }
  SECTION("diagonal Z4 -> Z4 x Z4 is injective") { CHECK(cat::z4_diagonal().injective()); }
  SECTION("b -> b^2 on Z4 is a homomorphism, not injective") {
    auto h = make_hom(cat::z4(), cat::z4(), std::vector<Element>{2}, "square");
    CHECK_FALSE(h.injective());
    CHECK(h.kernel() == std::vector<Element>{0, 2});
  }
  SECTION("relation violations are reported") {
    // b -> generator of Z2 inside Z4 x Z2 works; b -> element of order 3 does not exist, so use Z2 -> Z4, t -> 1
    try {
      make_hom(cat::z2(), cat::z4(), std::vector<Element>{1}, "bad");
      FAIL("expected an error");
    } catch (const GroupError& e) {
      CHECK(std::string(e.what()).find("relation violated") != std::string::npos);
    }
  }
  SECTION("exhaustive homomorphism property of the catalog maps") {
    for (const GroupHom* h : {&cat::q8_in_w(), &cat::z4xz2_in_w(), &cat::z4xz4_in_w(), &cat::z4_in_q8(),
                              &cat::z4_in_z4xz2(), &cat::z4xz2_to_z4(), &cat::first_projection()}) {
      const auto& G = *h->source();
      for (Element a = 0; a < G.order(); ++a)
        for (Element b = 0; b < G.order(); ++b) REQUIRE((*h)(G.mul(a, b)) == h->target()->mul((*h)(a), (*h)(b)));
    }
  }
}

TEST_CASE("conjugation automorphisms", "[groups][aut]") {
  SECTION("conjugation by j restricted to <i> inverts i") {
    auto tau = restrict_aut(conjugation_aut(cat::q8(), cat::q8()->element("j")), cat::z4_in_q8());
    CHECK(tau(1) == 3);
    CHECK(tau.order() == 2);
  }
  SECTION("conjugation in an abelian group is the identity") {
    CHECK(conjugation_aut(cat::z4xz2(), cat::z4xz2()->element("(1,1)")).hom().is_identity());
  }
  SECTION("conjugation by t on Z4 x Z4 swaps the coordinates") {
    auto s = cat::swap_aut();
    const auto& G = cat::z4xz4();
    CHECK(s(G->element("(1,2)")) == G->element("(2,1)"));
    CHECK(s(G->element("(3,0)")) == G->element("(0,3)"));
  }
  SECTION("restricting to a non-invariant subgroup fails") {
    auto c = conjugation_aut(cat::w(), cat::w_elem(0, 0, 1));
    auto first_factor = make_hom(cat::z4(), cat::w(), std::vector<Element>{cat::w_elem(1, 0, 0)});
    CHECK_THROWS_AS(restrict_aut(c, first_factor), GroupError);
  }
}

TEST_CASE("Z-extensions", "[groups][extension]") {
  SECTION("restriction of the order-32 extension to the diagonal Z4 x Z2") {
    const auto& e = cat::z4xz2_ext();
    const auto& G = *e.fiber();
    CHECK(e.theta()(G.element("(1,0)")) == G.element("(3,0)"));
    CHECK(e.theta()(G.element("(0,1)")) == G.element("(0,1)"));
  }
  SECTION("restriction to the full fiber is the same extension") {
    auto e = restrict_extension(cat::z4_ext(), identity_hom(cat::z4()));
    for (Element g = 0; g < 4; ++g) CHECK(e.theta()(g) == cat::z4_ext().theta()(g));
  }
  SECTION("restriction to <b^2>: theta is trivial") {
    auto sub = make_hom(cat::z2(), cat::z4(), std::vector<Element>{2});
    auto e = restrict_extension(cat::z4_ext(), sub);
    CHECK(e.theta().hom().is_identity());
  }
  SECTION("a non-invariant subgroup is rejected") {
    auto first_factor = make_hom(cat::z4(), cat::w(), std::vector<Element>{cat::w_elem(1, 0, 0)});
    auto swap_ext = ZExtension(conjugation_aut(cat::w(), cat::w_elem(0, 0, 1)));
    CHECK_THROWS_AS(restrict_extension(swap_ext, first_factor), GroupError);
  }
  SECTION("the Z- and Z2-actions on Z4 x Z4 commute") {
    auto theta = restrict_aut(cat::w_theta(), cat::z4xz4_in_w());
    CHECK(theta.commutes_with(cat::swap_aut()));
    CHECK(cat::w_theta().commutes_with(conjugation_aut(cat::w(), cat::w_elem(0, 0, 1))));
  }
  SECTION("extension morphisms must intertwine theta") {
    CHECK_NOTHROW(extension_inclusion(cat::z4xz2_ext(), cat::w_ext(), cat::z4xz2_in_w()));
    auto bad = ZExtension(GroupAut(identity_hom(cat::z4xz2())));
    CHECK_THROWS_AS(ExtensionHom(bad, cat::w_ext(), cat::z4xz2_in_w()), GroupError);
  }
}

TEST_CASE("matrix representations", "[groups][reps]") {
  SECTION("A on Z4 ⋊ Z") {
    auto r = verify_matrix_rep(cat::rep_a());
    CHECK(r.ok());
    CHECK(r.det_character == std::vector<std::pair<std::string, int>>{{"b", 1}, {"a", -1}});
    CHECK(r.rotation_weight == 1);
  }
  SECTION("A[2] on ((Z4 x Z4) ⋊ Z2) ⋊ Z") {
    auto rep = cat::rep_a2();
    auto r = verify_matrix_rep(rep);
    CHECK(r.ok());
    const auto& b1 = rep.generator_images[0];
    const auto& b2 = rep.generator_images[1];
    const auto& t = rep.generator_images[2];
    const auto& a = *rep.z_image;
    auto pow4 = [](const IntMatrix& m) { return m * m * m * m; };
    CHECK(pow4(b1) == IntMatrix::identity(4));
    CHECK(pow4(b2) == IntMatrix::identity(4));
    CHECK(t * b1 * t == b2);
    CHECK(a * b1 * a == b1 * b1 * b1);  // a is an involution, so a b1 a^-1 = b1^-1
    CHECK(a * t == t * a);
    for (const auto& [g, d] : r.det_character) CHECK(d == 1);
  }
  SECTION("Q8 matrices: i^2 = j^2 = k^2 = -1, ij = k") {
    auto m = cat::q8_matrices();
    IntMatrix minus = Integer(-1) * IntMatrix::identity(4);
    for (const auto& x : m) CHECK(x * x == minus);
    CHECK(m[0] * m[1] == m[2]);
    CHECK(verify_matrix_rep(cat::rep_q8()).ok());
    // the same matrices are A[2] restricted along Q8 -> W
    auto restricted = restrict_rep(cat::rep_a2(), cat::q8_in_w());
    CHECK(restricted.generator_images[0] == m[0]);
    CHECK(restricted.generator_images[1] == m[1]);
  }
  SECTION("Z4 x Z2 matrices are A[2] restricted to the diagonal subgroup") {
    CHECK(verify_matrix_rep(cat::rep_z4xz2()).ok());
    auto restricted = restrict_rep(cat::rep_a2(), cat::z4xz2_in_w());
    CHECK(restricted.generator_images == cat::rep_z4xz2().generator_images);
  }
  SECTION("a broken relation is reported, not thrown") {
    auto rep = cat::rep_a();
    rep.z_image = IntMatrix::identity(2);
    auto r = verify_matrix_rep(rep);
    CHECK_FALSE(r.ok());
  }
  SECTION("rotation weights") {
    CHECK(rotation_weight(IntMatrix::identity(2), 4) == 0);
    CHECK(rotation_weight(quarter_turn_power(2), 4) == 2);
    CHECK(rotation_weight(quarter_turn_power(3), 4) == 3);
    CHECK_FALSE(rotation_weight(cat::flip(), 4).has_value());
  }
}

TEST_CASE("coefficient modules", "[gmodules]") {
  const auto& E = cat::z4_ext();
  auto tw = sign_module(E);
  SECTION("trivial modules") {
    CHECK(trivial_module(cat::z4()).is_trivial());
    CHECK(trivial_module(cat::q8()).rank() == 1);
  }
  SECTION("Z^tw restricted to the fiber is trivial") {
    CHECK(fiber_module(tw).same_action(trivial_module(cat::z4())));
    CHECK(tw.theta_action() == IntMatrix{{-1}});
  }
  SECTION("tensor powers of Z^tw") {
    CHECK(tensor_power(tw, 0).same_action(trivial_module(E)));
    CHECK(tensor_power(tw, 2).same_action(trivial_module(E)));
    CHECK(tensor_power(tw, 3).same_action(tw));
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k)
        CHECK(tensor_power(tw, j + k).same_action(tensor(tensor_power(tw, j), tensor_power(tw, k))));
  }
  SECTION("sign module on the order-32 extension") {
    auto m = sign_module(cat::w_ext());
    CHECK(fiber_module(m).is_trivial());
    CHECK(m.theta_action() == IntMatrix{{-1}});
  }
  SECTION("restriction along sub-extensions") {
    auto sub = make_hom(cat::z4(), cat::z4xz2(), std::vector<Element>{cat::z4xz2()->element("(1,0)")});
    auto sub_ext = restrict_extension(cat::z4xz2_ext(), sub);
    auto r = restrict_module(sign_module(cat::z4xz2_ext()), extension_inclusion(sub_ext, cat::z4xz2_ext(), sub));
    CHECK(r.theta_action() == IntMatrix{{-1}});
    CHECK(fiber_module(r).is_trivial());
    CHECK(restrict_module(trivial_module(cat::w()), cat::q8_in_w()).is_trivial());
  }
  SECTION("restriction is functorial") {
    auto sign = GModule(cat::z4xz2(), {IntMatrix{{-1}}, IntMatrix{{-1}}}, "chi");
    const auto& psi = cat::z4_in_z4xz2();
    auto square = make_hom(cat::z2(), cat::z4(), std::vector<Element>{2});
    CHECK(restrict_module(restrict_module(sign, psi), square).same_action(restrict_module(sign, compose(psi, square))));
  }
  SECTION("invalid actions are rejected") {
    CHECK_THROWS_AS(GModule(cat::z4(), {IntMatrix{{2}}}, "bad"), GroupError);
    CHECK_THROWS_AS(GModule(cat::z2(), {IntMatrix{{0, -1}, {1, 0}}}, "bad"), GroupError);
    CHECK_THROWS_AS(module_by_name("Ztw", cat::z4(), std::nullopt), GroupError);
    CHECK(module_by_name("Ztw^2", cat::z4(), E).is_trivial());
  }
}
