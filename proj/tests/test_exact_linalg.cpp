#include "herbert/normal_form.hpp"
#include "herbert/subquotient.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace herbert;
using namespace herbert::oracle;

TEST_CASE("smith normal form on small fixed inputs", "[linalg][smith]") {
  SECTION("identity") {
    auto s = smith_normal_form(IntMatrix::identity(2));
    CHECK(s.D == IntMatrix::identity(2));
    CHECK(s.diagonal() == std::vector<Integer>{1, 1});
  }
  SECTION("zero matrix") {
    auto s = smith_normal_form(IntMatrix(3, 2));
    CHECK(s.rank == 0);
    CHECK(s.D.is_zero());
  }
  SECTION("[[2,4],[-2,6]] has invariant factors 2 | 10") {
    IntMatrix a{{2, 4}, {-2, 6}};
    CHECK(invariant_factors_by_minors(a) == std::vector<Integer>{2, 10});
    auto s = smith_normal_form(a);
    CHECK(s.diagonal() == std::vector<Integer>{2, 10});
    CHECK(s.P * a * s.Q == s.D);
    CHECK(s.P * s.P_inv == IntMatrix::identity(2));
  }
}

TEST_CASE("smith normal form agrees with the determinantal-divisor oracle", "[linalg][smith][property]") {
  std::mt19937 rng(20260917);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a = random_matrix(rng);
    auto s = smith_normal_form(a);
    INFO("A = " << a);
    REQUIRE(s.P * a * s.Q == s.D);
    REQUIRE(is_diagonal(s.D));
    REQUIRE(is_unimodular(s.P));
    REQUIRE(is_unimodular(s.Q));
    auto d = s.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) REQUIRE(d[i + 1] % d[i] == 0);
    REQUIRE(d == invariant_factors_by_minors(a));
  }
}

TEST_CASE("smith normal form is deterministic", "[linalg][smith]") {
  IntMatrix a{{3, 5, 7}, {2, 4, 6}, {1, 1, 9}};
  auto s1 = smith_normal_form(a), s2 = smith_normal_form(a);
  CHECK(s1.P == s2.P);
  CHECK(s1.Q == s2.Q);
}

TEST_CASE("hermite normal form", "[linalg][hermite]") {
  SECTION("identity") {
    auto h = hermite_normal_form(IntMatrix::identity(3));
    CHECK(h.H == IntMatrix::identity(3));
  }
  SECTION("row swap only") {
    auto h = hermite_normal_form(IntMatrix{{0, 0}, {3, 0}});
    CHECK(h.H == IntMatrix{{3, 0}, {0, 0}});
  }
  SECTION("[[2,1],[4,4]]") {
    IntMatrix a{{2, 1}, {4, 4}};
    auto h = hermite_normal_form(a);
    // gcd row reduction by hand: r2 - 2 r1 = (0,2); entry above the second pivot already in [0,2).
    CHECK(h.H == IntMatrix{{2, 1}, {0, 2}});
    CHECK(h.U * a == h.H);
    CHECK(is_unimodular(h.U));
  }
  SECTION("random inputs: U A = H, echelon shape, reduced columns") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
      IntMatrix a = random_matrix(rng);
      auto h = hermite_normal_form(a);
      REQUIRE(h.U * a == h.H);
      REQUIRE(is_unimodular(h.U));
      for (std::size_t k = 0; k < h.rank(); ++k) {
        const std::size_t p = h.pivot_cols[k];
        REQUIRE(h.H(k, p) > 0);
        for (std::size_t i = 0; i < k; ++i) REQUIRE((h.H(i, p) >= 0 && h.H(i, p) < h.H(k, p)));
        for (std::size_t i = k + 1; i < a.rows(); ++i) REQUIRE(h.H(i, p) == 0);
      }
      // uniqueness: the form of any row-equivalent matrix is the same
      IntMatrix shuffled = a;
      if (a.rows() > 1) {
        shuffled.swap_rows(0, a.rows() - 1);
        shuffled.add_row(0, a.rows() - 1, Integer(3));
      }
      REQUIRE(hermite_form(shuffled) == h.H);
    }
  }
}

TEST_CASE("kernel basis", "[linalg][kernel]") {
  SECTION("identity has empty kernel") { CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0); }
  SECTION("zero 2x3 matrix") { CHECK(kernel_basis(IntMatrix(2, 3)) == IntMatrix::identity(3)); }
  SECTION("[[1,2,3]]") {
    IntMatrix a{{1, 2, 3}};
    IntMatrix k = kernel_basis(a);
    REQUIRE(k.cols() == 2);
    CHECK((a * k).is_zero());
    auto s = smith_normal_form(k);
    CHECK(s.diagonal() == std::vector<Integer>{1, 1});
  }
  SECTION("random inputs: A K = 0 and K saturated") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      IntMatrix a = random_matrix(rng);
      IntMatrix k = kernel_basis(a);
      REQUIRE(k.cols() + rank_of(a) == a.cols());
      if (k.cols() == 0) continue;
      REQUIRE((a * k).is_zero());
      for (const auto& d : smith_normal_form(k).diagonal()) REQUIRE(d == 1);
    }
  }
}

TEST_CASE("cokernel presentation", "[linalg][cokernel]") {
  SECTION("Z / 4Z") {
    auto p = cokernel_presentation(1, IntMatrix{{4}});
    CHECK(p.to_string() == "Z/4");
    CHECK(p.order() == 4);
  }
  SECTION("no relations") {
    auto p = cokernel_presentation(2, IntMatrix(2, 0));
    CHECK(p.free_rank == 2);
    CHECK(p.invariant_factors.empty());
    CHECK(p.to_string() == "Z^2");
  }
  SECTION("[[2,0],[0,1]]") { CHECK(cokernel_presentation(2, IntMatrix{{2, 0}, {0, 1}}).to_string() == "Z/2"); }
  SECTION("projection kills relations; order equals |det| for nonsingular squares") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      IntMatrix r = random_matrix(rng, 5);
      auto p = cokernel_presentation(r.rows(), r);
      IntMatrix image = p.projection * r;
      for (std::size_t i = 0; i < image.rows(); ++i)
        for (std::size_t j = 0; j < image.cols(); ++j) REQUIRE(mod_floor(image(i, j), p.modulus(i)) == 0);
      REQUIRE(p.projection * p.section == IntMatrix::identity(p.num_generators()));
      if (r.rows() == r.cols()) {
        Integer det = abs(determinant(r));
        if (det != 0) REQUIRE(p.order() == det);
      }
    }
  }
}

TEST_CASE("integer system solving", "[linalg][solve]") {
  SECTION("identity") {
    IntVector b = to_int_vector({3, -7, 2});
    CHECK(solve_integer(IntMatrix::identity(3), b) == b);
  }
  SECTION("parity obstruction") { CHECK_FALSE(solve_integer(IntMatrix{{2}}, to_int_vector({1})).has_value()); }
  SECTION("2x + 3y = 1") {
    IntMatrix a{{2, 3}};
    auto x = solve_integer(a, to_int_vector({1}));
    REQUIRE(x.has_value());
    CHECK(2 * (*x)[0] + 3 * (*x)[1] == 1);
  }
  SECTION("solvable exactly when the Smith criterion holds") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
      IntMatrix a = random_matrix(rng, 5);
      IntVector b(a.rows());
      for (auto& v : b) v = entry(rng);
      auto s = smith_normal_form(a);
      IntVector pb = s.P * b;
      bool criterion = true;
      for (std::size_t i = 0; i < pb.size(); ++i) {
        if (i < s.rank) criterion = criterion && (pb[i] % s.D(i, i) == 0);
        else criterion = criterion && pb[i] == 0;
      }
      auto x = solve_integer(a, b);
      REQUIRE(x.has_value() == criterion);
      if (x) REQUIRE(a * *x == b);
      IntVector x0(a.cols());
      for (auto& v : x0) v = entry(rng);
      auto y = solve_integer(a, a * x0);
      REQUIRE(y.has_value());
      REQUIRE(a * *y == a * x0);
    }
  }
}

TEST_CASE("large entries fall back to arbitrary precision", "[linalg]") {
  IntMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = Integer(1) << 80;
  a(1, 1) = (Integer(1) << 70) * 3;
  auto s = smith_normal_form(a);
  CHECK(s.diagonal() == std::vector<Integer>{Integer(1) << 70, (Integer(1) << 80) * 3});
  CHECK(s.P * a * s.Q == s.D);
}

TEST_CASE("subquotient kernel and cokernel of group maps", "[linalg][subquotient]") {
  auto z4 = cokernel_presentation(1, IntMatrix{{4}});
  // multiplication by 2 on Z/4
  IntMatrix two{{2}};
  auto ker = kernel_of(z4, z4, two);
  auto cok = cokernel_of(z4, two);
  CHECK(ker.presentation().to_string() == "Z/2");
  CHECK(cok.presentation().to_string() == "Z/2");
  // the kernel is generated by 2
  CHECK(ker.coords(to_int_vector({2})).has_value());
  CHECK(ker.coords(to_int_vector({2}))->at(0) == 1);
  CHECK_FALSE(ker.coords(to_int_vector({1})).has_value());
}
