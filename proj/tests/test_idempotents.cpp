#include <catch2/catch_amalgamated.hpp>

#include "facealg/idempotents.hpp"

using namespace facealg;

namespace {
  bool passed(FamilyReport const& report, std::string const& name) {
    for (auto const& c : report.checks) {
      if (c.name == name) {
        return c.passed;
      }
    }
    FAIL("no check named " << name);
    return false;
  }
}  // namespace

TEST_CASE("n = 1 has the identity face as its only idempotent") {
  auto const& fam = family(1);
  REQUIRE(fam.by_support.size() == 1);
  CHECK(fam.by_support.begin()->second == FaceAlgebraElement::identity(1));
  CHECK(fam.by_orbit.at({1}) == FaceAlgebraElement::identity(1));
}

TEST_CASE("n = 3 family by direct algebra") {
  auto const& fam = family(3);
  REQUIRE(fam.by_support.size() == 5);
  FaceAlgebraElement total(3);
  for (auto const& [x, e] : fam.by_support) {
    total += e;
    Rational fiber = 0;
    for (auto const& [f, c] : e.terms()) {
      CHECK(leq(support(f), x));
      if (support(f) == x) {
        fiber += c;
      }
    }
    CHECK(fiber == 1);
    for (auto const& [y, d] : fam.by_support) {
      auto const prod = e * d;
      if (x == y) {
        CHECK(prod == e);
      } else {
        CHECK(prod.is_zero());
      }
    }
    for (auto const& f : enumerate_faces(3)) {
      auto const fe = FaceAlgebraElement(f) * e;
      if (!leq(x, support(f))) {
        CHECK(fe.is_zero());
      }
    }
  }
  CHECK(total == FaceAlgebraElement::identity(3));
  // The identity face is the only face with top support.
  CHECK(fam.by_support.at(top_set_partition(3)).coefficient(Face::identity(3)) == 1);
}

TEST_CASE("every property holds for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    auto const report = verify_family(family(n));
    for (auto const& c : report.checks) {
      INFO("n = " << n << ", " << c.name);
      CHECK(c.passed);
      CHECK(c.violations.empty());
    }
    CHECK(report.ok());
  }
  auto const report = verify_family(family(4));
  CHECK(passed(report, "{f E_support(f)} is a basis"));
  CHECK(report.checks.size() == 11);
}

TEST_CASE("orbit annihilation") {
  for (int n = 1; n <= 4; ++n) {
    auto const check = orbit_annihilation_check(family(n));
    CHECK(check.passed);
  }
  // A face of support type (2,1) kills E_(3), since (3) does not refine (2,1).
  auto const& fam = family(3);
  Face const  f(3, {{1, 2}, {3}});
  CHECK((FaceAlgebraElement(f) * fam.by_orbit.at({3})).is_zero());
  CHECK_FALSE((FaceAlgebraElement(f) * fam.by_orbit.at({2, 1})).is_zero());
  // A chamber is killed by every E_mu except E_(1^n).
  auto const& fam4    = family(4);
  Face const  chamber = Face::from_labels({0, 1, 2, 3});
  for (auto const& [mu, e] : fam4.by_orbit) {
    CHECK((FaceAlgebraElement(chamber) * e).is_zero() == (mu != Partition{1, 1, 1, 1}));
  }
}

TEST_CASE("orbit sums and equivariance") {
  auto const& fam = family(4);
  CHECK(fam.by_orbit.size() == 5);
  for (auto const& pi : all_permutations(4)) {
    for (auto const& [x, e] : fam.by_support) {
      CHECK(act_linear(pi, e) == fam.by_support.at(act(pi, x)));
    }
    for (auto const& [lambda, e] : fam.by_orbit) {
      CHECK(act_linear(pi, e) == e);
    }
  }
}

TEST_CASE("verification catches a broken family") {
  IdempotentFamily broken = family(3);
  auto&            e      = broken.by_support.begin()->second;
  e.add_term(Face::identity(3), make_rational(1, 7));
  auto const report = verify_family(broken);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(passed(report, "completeness"));
  CHECK_FALSE(passed(report, "idempotency"));
}

TEST_CASE("build options and caps") {
  BuildOptions options;
  options.jobs = 3;
  auto const threaded = build_family(4, options);
  CHECK(threaded.by_support == family(4).by_support);
  CHECK_THROWS_AS(build_family(7), std::out_of_range);
  CHECK(family(3).by_support.size() == 5);
  CHECK(&family(3) == &family(3));
}
