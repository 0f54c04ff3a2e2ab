#include <doctest.h>

#include <random>

#include "waring/bounds.hpp"

using namespace waring;

TEST_CASE("generic rank with the four exceptions") {
  CHECK(generic_rank(3, 5) == 7);
  CHECK(generic_rank(3, 4) == 6);
  CHECK(generic_rank(4, 7) == 30);
  CHECK(generic_rank(4, 4) == 10);
  CHECK(generic_rank(5, 4) == 15);
  CHECK(generic_rank(5, 3) == 8);
  CHECK(generic_rank(7, 2) == 7);  // d = 2 rule
  // n = 2: floor((d+2)/2)
  for (int d = 1; d <= 12; ++d) CHECK(generic_rank(2, d) == (d + 2) / 2);
}

TEST_CASE("generic rank reproduces both table rows") {
  const std::vector<long> table1 = {4, 6, 7, 10, 12, 15, 19, 22, 26, 31};
  for (int d = 3; d <= 12; ++d) CHECK(generic_rank(3, d) == table1[d - 3]);
  const std::vector<long> table2 = {5, 10, 14, 21, 30, 42, 55, 72};
  for (int d = 3; d <= 10; ++d) CHECK(generic_rank(4, d) == table2[d - 3]);
}

TEST_CASE("hseq values") {
  CHECK(hseq_capped(3, 6, 8) == HSeq{1, 3, 6, 8, 6, 3, 1});
  CHECK(hseq(1, 5) == HSeq{1, 1, 1, 1, 1, 1});
  CHECK(hseq(3, 4) == HSeq{1, 3, 6, 3, 1});
}

TEST_CASE("algen closed form") {
  CHECK(algen(2, 4) == 9);
  CHECK(algen(3, 4) == 14);
  CHECK(algen(3, 6) == 30);
  // equals the sum of hseq
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= 12; ++d) {
      long total = 0;
      for (long v : hseq(n, d)) total += v;
      CHECK(algen(n, d) == total);
    }
  }
}

TEST_CASE("al_capped formula agrees with the capped sum") {
  CHECK(al_capped(2, 4, 2) == 8);
  CHECK(al_capped(3, 6, 8) == 28);
  // cap inactive
  CHECK(al_capped(3, 6, 100) == algen(3, 6));
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= 12; ++d) {
      for (long s = 1; s <= graded_dim(n, d / 2) + 2; ++s) {
        long total = 0;
        for (long v : hseq_capped(n, d, s)) total += v;
        CHECK(al_capped(n, d, s) == total);
      }
    }
  }
}

TEST_CASE("algen and generic rank parity relations") {
  for (int d = 3; d <= 21; d += 2) CHECK(algen(3, d - 1) == generic_rank(4, d));
  for (int d = 4; d <= 20; d += 2) CHECK(algen(3, d - 1) < generic_rank(4, d));
  for (int d = 5; d <= 21; ++d) CHECK(algen(2, d - 1) > generic_rank(3, d));
}

TEST_CASE("monomial ranks") {
  CHECK(monomial_rank({1, 2, 2}) == 9);
  CHECK(monomial_rank({1, 1, 1}) == 4);
  CHECK(monomial_rank({1, 3, 3}) == 16);
  CHECK(monomial_rank({5}) == 1);
  CHECK_THROWS_AS(monomial_rank({}), std::invalid_argument);
  CHECK_THROWS_AS(monomial_rank({0, 2}), std::invalid_argument);
}

TEST_CASE("max monomial rank matches the closed forms and tables") {
  CHECK(max_monomial_rank(3, 5) == 9);
  CHECK(max_monomial_rank(3, 12) == 42);
  CHECK(max_monomial_rank(4, 7) == 27);
  for (int d = 3; d <= 15; ++d) {
    const long expected =
        d % 2 == 1 ? ((d + 1) / 2) * ((d + 1) / 2) : d * (d + 2) / 4;
    CHECK(max_monomial_rank(3, d) == expected);
  }
  const std::vector<long> table1 = {4, 6, 9, 12, 16, 20, 25, 30, 36, 42};
  for (int d = 3; d <= 12; ++d) CHECK(max_monomial_rank(3, d) == table1[d - 3]);
  const std::vector<long> table2 = {4, 8, 12, 18, 27, 36, 48, 64};
  for (int d = 3; d <= 10; ++d) CHECK(max_monomial_rank(4, d) == table2[d - 3]);
}

TEST_CASE("derksen bound examples") {
  const Form quintic = parse_form("x*y*z^3 + y^4*z", 3);
  const Form alpha = parse_form("a", 3);
  CHECK(derksen_bound(quintic, alpha).bound == 8);
  CHECK(derksen_bound(parse_form("x*y^2*z^2", 3), alpha).bound == 9);
  CHECK(derksen_bound(parse_form("x^6", 3), alpha).bound == 1);
  CHECK_THROWS_AS(derksen_bound(quintic, parse_form("a^2", 3)),
                  std::invalid_argument);
}

TEST_CASE("improved bound examples") {
  const Form quintic = parse_form("x*y*z^3 + y^4*z", 3);
  const Form alpha = parse_form("a", 3);
  CHECK(improved_bound(quintic, alpha).bound == 9);  // 18 - 8 = 10 > 8
  CHECK(improved_bound(parse_form("x^6", 3), alpha).bound == 1);  // 1 = 1
}

TEST_CASE("improved bound on x*H + K instances") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 4 + static_cast<int>(rng() % 3);
    Form h(2, d - 1), k(2, d);
    for (const Exponents& e : monomial_basis(2, d - 1))
      h.set_coeff(e, coeff(rng));
    for (const Exponents& e : monomial_basis(2, d)) k.set_coeff(e, coeff(rng));
    if (h.is_zero()) continue;
    Exponents xe(3, 0);
    xe[0] = 1;
    const Form f =
        Form::monomial(3, xe) * h.extended(3, 0) + k.extended(3, 0);
    const long al_h = apolar_length(h);
    const long al_f = apolar_length(f);
    const BoundCertificate cert = improved_bound(f, parse_form("a", 3));
    const long expected = al_h + (al_f - al_h > al_h ? 1 : 0);
    CHECK(cert.bound == expected);
  }
}

TEST_CASE("improved never drops below derksen and gains at most one") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int d = 2 + static_cast<int>(rng() % 4);
    Form f(n, d);
    for (const Exponents& e : monomial_basis(n, d)) f.set_coeff(e, coeff(rng));
    if (f.is_zero()) continue;
    Exponents ae(n, 0);
    ae[rng() % n] = 1;
    const Form alpha = Form::monomial(n, ae);
    const long derksen = derksen_bound(f, alpha).bound;
    const long improved = improved_bound(f, alpha).bound;
    CHECK(improved >= derksen);
    CHECK(improved - derksen <= 1);
  }
}

TEST_CASE("cactus bound examples") {
  const Form alpha = parse_form("a", 3), beta = parse_form("b", 3);
  const BoundCertificate c1 = cactus_bound(parse_form("y^2*z^2", 3), beta);
  CHECK(c1.bound == 3);  // 9 - 6
  CHECK(c1.conditional);
  CHECK(cactus_bound(parse_form("x^5", 3), alpha).bound == 1);
  const Form quintic = parse_form("x*y*z^3 + y^4*z", 3);
  CHECK(cactus_bound(quintic, alpha).bound ==
        18 - apolar_length(apply(alpha, quintic)));
}

TEST_CASE("best bound searches coordinates plus random duals") {
  CHECK(best_bound(parse_form("x*y*z^3 + y^4*z", 3), 5, 1).bound >= 9);
  CHECK(best_bound(parse_form("x*y^2*z^2", 3), 5, 1).bound >= 9);
  CHECK(best_bound(parse_form("x^6", 3), 5, 1).bound == 1);
  // deterministic for a fixed seed
  const Json a = best_bound(parse_form("x*y^2*z^2", 3), 3, 7).to_json();
  const Json b = best_bound(parse_form("x*y^2*z^2", 3), 3, 7).to_json();
  CHECK(a.dump() == b.dump());
}

TEST_CASE("monomial derksen bound with the minimal-exponent dual recovers the rank") {
  // alpha dual to a minimum-exponent variable realizes the monomial rank
  for (const std::vector<int>& exps :
       {std::vector<int>{1, 2, 2}, {1, 1, 1}, {2, 2, 3}, {1, 3, 3}}) {
    Form f = Form::monomial(3, Exponents(exps.begin(), exps.end()));
    const int min_var = static_cast<int>(
        std::min_element(exps.begin(), exps.end()) - exps.begin());
    Exponents ae(3, 0);
    ae[min_var] = 1;
    CHECK(derksen_bound(f, Form::monomial(3, ae)).bound ==
          monomial_rank(exps));
  }
}

TEST_CASE("bound certificates replay through the checker") {
  const Form f = parse_form("x*y^2*z^2", 3);
  const Form alpha = parse_form("a", 3);
  for (const BoundCertificate& cert :
       {derksen_bound(f, alpha), improved_bound(f, alpha),
        cactus_bound(f, alpha), best_bound(f, 4, 9)}) {
    const CheckReport report = check_certificate(cert.to_json());
    for (const auto& msg : report.failures) MESSAGE(msg);
    CHECK(report.ok);
  }
}
