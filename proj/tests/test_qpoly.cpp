#include <catch2/catch_amalgamated.hpp>

#include "minuscule/catalog.hpp"
#include "minuscule/qpoly.hpp"
#include "oracles.hpp"

using namespace minuscule;

namespace {
QPolynomial poly(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return QPolynomial::from_coeffs(std::move(v));
}
}  // namespace

TEST_CASE("q-integers and q-binomials") {
  CHECK(qint(1) == QPolynomial{1});
  CHECK(qint(0).is_zero());
  CHECK(qbinomial(4, 0) == QPolynomial{1});
  CHECK(qbinomial(4, 2) == poly({1, 1, 2, 1, 1}));
  CHECK(qbinomial(5, 2) == poly({1, 1, 2, 2, 2, 1, 1}));
  CHECK_THROWS_AS(qbinomial(2, 3), DomainError);
  CHECK_THROWS_AS(qbinomial(2, -1), DomainError);
  CHECK(qfactorial(3) == qint(1) * qint(2) * qint(3));

  SECTION("q -> 1 specializes to binomial coefficients") {
    for (int a = 0; a <= 12; ++a)
      for (int b = 0; b <= a; ++b) CHECK(qbinomial(a, b).at_one() == binomial(a, b));
  }
  SECTION("symmetry in the lower index") {
    for (int a = 0; a <= 10; ++a)
      for (int b = 0; b <= a; ++b) CHECK(qbinomial(a, b) == qbinomial(a, a - b));
  }
}

TEST_CASE("macmahon box product") {
  CHECK(macmahon(1, 1, 1) == poly({1, 1}));
  CHECK(macmahon(2, 2, 2).at_one() == 20);
  CHECK_THROWS_AS(macmahon(0, 1, 1), DomainError);

  SECTION("symmetric in the box sides") {
    CHECK(macmahon(2, 3, 4) == macmahon(4, 2, 3));
    CHECK(macmahon(1, 2, 5) == macmahon(5, 1, 2));
  }
  SECTION("m = 2 collapses to the two-binomial form") {
    for (int k = 1; k <= 6; ++k)
      for (int n = 1; n <= 6; ++n) {
        QPolynomial expect =
            (qbinomial(k + n + 1, n) * qbinomial(k + n, n) * qint(1)).exact_div(qint(n + 1));
        CHECK(macmahon(k, n, 2) == expect);
      }
  }
  SECTION("equals the brute-force rank generating function") {
    for (int k = 1; k <= 3; ++k)
      for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
          Poset box = product(product(chain(k), chain(n)), chain(m));
          CHECK(macmahon(k, n, m) == rank_generating_function(box));
        }
  }
}

TEST_CASE("bender-knuth symmetric product") {
  for (int m = 1; m <= 5; ++m) CHECK(bender_knuth(1, m) == qint(m + 1));
  for (int n = 1; n <= 6; ++n) CHECK(bender_knuth(n, 2) == qbinomial(2 * n + 1, n));
  // ([2]x[2])/S_2 is a 3-chain, so the m = 1 count is its 4 ideals.
  CHECK(bender_knuth(2, 1).at_one() == 4);

  SECTION("equals the brute-force rank generating function") {
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m <= 3; ++m) {
        Poset p = product(shifted_staircase(n), chain(m));
        CHECK(bender_knuth(n, m) == rank_generating_function(p));
      }
  }
}

TEST_CASE("gaussian product formula") {
  SECTION("single point") {
    for (int m = 1; m <= 5; ++m) CHECK(gaussian_product(chain(1), m) == qint(m + 1));
  }
  SECTION("rectangles match macmahon") {
    for (int k = 1; k <= 4; ++k)
      for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
          CHECK(gaussian_product(rectangle(k, n), m) == macmahon(k, n, m));
  }
  SECTION("unranked input is rejected") {
    Poset bad = Poset::from_covers(4, {{0, 1}, {1, 2}, {3, 2}});
    CHECK_THROWS_AS(gaussian_product(bad, 1), NotRankedError);
  }
  SECTION("a ranked non-Gaussian poset trips the exact division") {
    // The 3-element wedge 0 < 1, 0 < 2.
    Poset wedge = Poset::from_covers(3, {{0, 1}, {0, 2}});
    CHECK_THROWS_AS(gaussian_product(wedge, 1), InexactDivisionError);
  }
  SECTION("the 27-element exceptional poset counts 56 ideals") {
    CHECK(gaussian_product(exceptional(Exceptional::E7), 1).at_one() == 56);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(2) == poly({1, 1}));
  CHECK(cyclotomic(4) == poly({1, 0, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  for (int prime : {2, 3, 5, 7, 11}) CHECK(cyclotomic(prime) == qint(prime));

  SECTION("product over divisors of 12") {
    QPolynomial prod{1};
    for (int d : {1, 2, 3, 4, 6, 12}) prod *= cyclotomic(d);
    CHECK(prod == QPolynomial::monomial(1, 12) - QPolynomial{1});
  }
  CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
  CHECK_THROWS_AS(cyclotomic(0), DomainError);
}

TEST_CASE("evaluation at roots of unity") {
  SECTION("power zero means q = 1") {
    QPolynomial f = qbinomial(6, 3);
    auto v = eval_at_root(f, 7, 0);
    CHECK(v.primitive_order == 1);
    REQUIRE(v.is_integer());
    CHECK(v.value() == f.at_one());
  }
  SECTION("qbinomial(5,2) vanishes at a primitive fifth root") {
    auto v = eval_at_root(qbinomial(5, 2), 5, 1);
    REQUIRE(v.is_integer());
    CHECK(v.value() == 0);
  }
  SECTION("q-binomial at -1") {
    auto v = eval_at_root(qbinomial(4, 2), 2, 1);
    REQUIRE(v.is_integer());
    CHECK(v.value() == 2);
  }
  SECTION("non-rational evaluations carry their residue") {
    auto v = eval_at_root(qint(2), 4, 1);  // 1 + i
    CHECK_FALSE(v.is_integer());
    CHECK(v.residue == poly({1, 1}));
    CHECK_THROWS_AS(v.value(), DomainError);
  }
  SECTION("zero polynomial evaluates to zero everywhere") {
    auto v = eval_at_root(QPolynomial{}, 6, 5);
    REQUIRE(v.is_integer());
    CHECK(v.value() == 0);
  }
  SECTION("multiplicative on integer outcomes") {
    QPolynomial f = qbinomial(6, 2), g = qbinomial(9, 3);
    for (std::uint64_t n : {2, 3, 4, 6}) {
      for (std::int64_t d = 0; d < static_cast<std::int64_t>(n); ++d) {
        auto vf = eval_at_root(f, n, d), vg = eval_at_root(g, n, d);
        auto vfg = eval_at_root(f * g, n, d);
        if (vf.is_integer() && vg.is_integer()) {
          REQUIRE(vfg.is_integer());
          CHECK(vfg.value() == vf.value() * vg.value());
        }
      }
    }
  }
  SECTION("negative and large powers wrap") {
    QPolynomial f = qbinomial(7, 3);
    for (std::int64_t d : {-5, -1, 9, 23}) {
      auto a = eval_at_root(f, 6, d);
      auto b = eval_at_root(f, 6, ((d % 6) + 6) % 6);
      CHECK(a.residue == b.residue);
    }
  }
}

TEST_CASE("guo-zeng factorization") {
  SECTION("d = 1 is the plain binomial") {
    auto gz = guo_zeng(7, 3, 1);
    CHECK(gz.binomial_part == binomial(7, 3));
    CHECK(gz.residual == QPolynomial{1});
  }
  SECTION("4 choose 2 at q = -1") {
    auto gz = guo_zeng(4, 2, 2);
    CHECK(gz.binomial_part == 2);
    CHECK(gz.residual == QPolynomial{1});
    auto v = gz.residual_at_root(2);
    REQUIRE(v.is_integer());
    CHECK(v.value() == 2);
  }
  SECTION("remainder shape s > r forces zero") {
    auto gz = guo_zeng(5, 2, 5);
    CHECK(gz.residual.is_zero());
    CHECK(gz.residual_at_root(5).value() == 0);
  }
  SECTION("agrees with direct cyclotomic evaluation on a sample") {
    for (int a : {6, 11, 15})
      for (int b = 0; b <= a; b += 2)
        for (int d : {2, 3, 4, 5, 7}) {
          auto direct = eval_at_root(qbinomial(a, b), static_cast<std::uint64_t>(d), 1);
          auto factored = guo_zeng(a, b, d).residual_at_root(d);
          CHECK(direct.residue == factored.residue);
        }
  }
}

TEST_CASE("polynomial printing and serialization") {
  CHECK(QPolynomial{}.to_string() == "0");
  CHECK(QPolynomial{5}.to_string() == "5");
  CHECK(poly({1, 1, 2, 0, 1}).to_string() == "1 + q + 2*q^2 + q^4");
  CHECK((QPolynomial{1} - qint(3)).to_string() == "-q - q^2");
  CHECK(poly({0, -3}).to_string() == "-3*q");
  CHECK(poly({1, 1}).coeff_strings() == std::vector<std::string>{"1", "1"});
}

TEST_CASE("big coefficients stay exact") {
  // 64 q-integer factors make the numerator coefficients far beyond 2^64.
  QPolynomial f = macmahon(4, 4, 4);
  CHECK(f.at_one() == 232848);
  CHECK(f == rank_generating_function(product(product(chain(4), chain(4)), chain(4))));
}
