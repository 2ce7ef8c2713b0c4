#include "doctest.h"

#include <optional>
#include <stdexcept>

#include "qt_poly.hpp"

using namespace macq;

namespace {

QTPoly q() { return QTPoly::q(); }
QTPoly t() { return QTPoly::t(); }

}  // namespace

TEST_CASE("laurent polynomial arithmetic") {
  QTPoly f = (q() + t()) * (q() - t());
  CHECK(f == q().pow(2) - t().pow(2));
  CHECK((q() - t()).pow(2) == q().pow(2) - QTPoly(2) * q() * t() + t().pow(2));
  CHECK((f - f).is_zero());
  CHECK((-f) + f == QTPoly());
  CHECK(QTPoly(1).is_one());
  CHECK(QTPoly(-7).is_constant());
  CHECK(QTPoly::term(3, 2, -1).is_monomial());
  CHECK_FALSE((q() + t()).is_monomial());
  CHECK(f.pow(0).is_one());
}

TEST_CASE("exponent range accessors") {
  QTPoly f = QTPoly::term(2, 3, -1) - QTPoly::term(5, 0, 4);
  CHECK(f.min_q_exp() == 0);
  CHECK(f.max_q_exp() == 3);
  CHECK(f.min_t_exp() == -1);
  CHECK(f.max_t_exp() == 4);
  CHECK(f.leading_exp() == QTExp{3, -1});
  CHECK(f.leading_coeff() == 2);
  CHECK(f.shifted(-3, 1) ==
        QTPoly::term(2, 0, 0) - QTPoly::term(5, -3, 5));
  CHECK_THROWS_AS(QTPoly().min_q_exp(), std::domain_error);
  CHECK_THROWS_AS(QTPoly().leading_exp(), std::domain_error);
}

TEST_CASE("parameter inversion and q=1 substitution") {
  QTPoly f = q() + t().pow(2);
  CHECK(f.inverted_params() == QTPoly::q(-1) + QTPoly::t(-2));
  CHECK(f.inverted_params().inverted_params() == f);
  CHECK((q() - QTPoly(1)).pow(2).at_q1().is_zero());
  CHECK((q() + t()).pow(2).at_q1() ==
        (QTPoly(1) + t()) * (QTPoly(1) + t()));
  CHECK((q().pow(2) * t()).derivative_q() == QTPoly(2) * q() * t());
  CHECK(QTPoly::q(-1).derivative_q() == QTPoly::term(-1, -2, 0));
}

TEST_CASE("multiplicity of q-1") {
  QTPoly f = (q() - QTPoly(1)).pow(3) * (q() + t());
  CHECK(f.q1_multiplicity() == 3);
  CHECK(QTPoly(5).q1_multiplicity() == 0);
  CHECK((q() * t() - t()).q1_multiplicity() == 1);
  CHECK_THROWS_AS(QTPoly().q1_multiplicity(), std::domain_error);
}

TEST_CASE("signed content follows the leading coefficient") {
  CHECK((QTPoly::term(-2, 1, 0) - QTPoly::term(4, 0, 1)).signed_content() ==
        -2);
  CHECK((QTPoly(6) * q().pow(2) - QTPoly(9)).signed_content() == 3);
  CHECK(QTPoly().signed_content() == 0);
}

TEST_CASE("exact division") {
  QTPoly num = q().pow(2) - t().pow(2);
  CHECK(QTPoly::div_exact(num, q() - t()) == q() + t());
  CHECK(QTPoly::div_exact(num, q() + t()) == q() - t());
  QTPoly lf = QTPoly::term(1, -1, 2) * (q() + t());
  CHECK(QTPoly::div_exact(lf, QTPoly::term(1, -1, 2)) == q() + t());
  CHECK_THROWS_AS(QTPoly::div_exact(q().pow(2) + QTPoly(1), q() + t()),
                  std::domain_error);
  CHECK_THROWS_AS(QTPoly::div_exact(QTPoly(3), QTPoly(2)),
                  std::domain_error);
}

TEST_CASE("gcd recovers a common factor") {
  QTPoly g0 = QTPoly(1) + q() + t() * q().pow(3);
  QTPoly a = g0 * (QTPoly(1) + QTPoly(2) * t() + q().pow(2));
  QTPoly b = g0 * (QTPoly(3) + t().pow(2) * q());
  CHECK(QTPoly::gcd(a, b) == g0);
  CHECK(QTPoly::gcd(QTPoly(2) * q(), QTPoly(4) * q().pow(2)) ==
        QTPoly(2) * q());
  CHECK(QTPoly::gcd(q() + t(), q() - t()).is_one());
  QTPoly neg = QTPoly(-1) * g0;
  CHECK(QTPoly::gcd(neg * (q() + QTPoly(1)), neg * (t() + QTPoly(2))) == g0);
}

TEST_CASE("ratio canonical form") {
  QTRatio r = QTRatio::fraction(q().pow(2) - QTPoly(1), q() - QTPoly(1));
  CHECK(r == QTRatio(q() + QTPoly(1)));
  CHECK(r.is_polynomial());

  QTRatio half_q = QTRatio::fraction(QTPoly(2) * q(), QTPoly(4));
  CHECK(half_q.num() == q());
  CHECK(half_q.den() == QTPoly(2));

  QTRatio val = QTRatio::fraction(q().pow(2) * t(), q() * t().pow(2));
  CHECK(val.num() == q());
  CHECK(val.den() == t());

  QTRatio flipped = QTRatio::fraction(q(), t() - q());
  CHECK(flipped.num() == -q());
  CHECK(flipped.den() == q() - t());

  CHECK(QTRatio::fraction(QTPoly(), q() + t()) == QTRatio(0));
  CHECK(QTRatio::fraction(QTPoly(), q()).den().is_one());
  CHECK_THROWS_AS(QTRatio::fraction(q(), QTPoly()), std::domain_error);
}

TEST_CASE("ratio arithmetic") {
  QTRatio a = QTRatio::fraction(QTPoly(1), q() - t());
  QTRatio b = QTRatio::fraction(QTPoly(1), q() + t());
  QTRatio sum = a + b;
  CHECK(sum == QTRatio::fraction(QTPoly(2) * q(), q().pow(2) - t().pow(2)));
  CHECK(a - a == QTRatio(0));
  CHECK(a * b == QTRatio::fraction(QTPoly(1), q().pow(2) - t().pow(2)));
  CHECK(a / b ==
        QTRatio::fraction(q() + t(), q() - t()));
  CHECK_THROWS_AS(a / QTRatio(0), std::domain_error);
  CHECK(QTRatio(q()).pow(-2) == QTRatio::fraction(QTPoly(1), q().pow(2)));
  CHECK(QTRatio(0).pow(0) == QTRatio(1));
  CHECK_THROWS_AS(QTRatio(0).pow(-1), std::domain_error);
}

TEST_CASE("laurent view of a ratio") {
  QTRatio r = QTRatio::fraction(QTPoly(1) + q(), q().pow(2));
  CHECK(r.is_laurent());
  CHECK_FALSE(r.is_polynomial());
  CHECK(r.laurent() == QTPoly::q(-2) + QTPoly::q(-1));
  CHECK_FALSE(QTRatio::fraction(QTPoly(1), QTPoly(1) + q()).is_laurent());
  CHECK_THROWS_AS(QTRatio::fraction(QTPoly(1), QTPoly(1) + q()).laurent(),
                  std::domain_error);
}

TEST_CASE("order at q=1") {
  QTRatio a =
      QTRatio::fraction((q() - QTPoly(1)).pow(3) * (QTPoly(1) + t()),
                        q() - QTPoly(1));
  CHECK(a.ord_at_q1() == std::optional<long>(2));
  QTRatio b =
      QTRatio::fraction(QTPoly(1) + t(), (q() - QTPoly(1)).pow(2));
  CHECK(b.ord_at_q1() == std::optional<long>(-2));
  CHECK_FALSE(QTRatio(0).ord_at_q1().has_value());
  CHECK(QTRatio(7).ord_at_q1() == std::optional<long>(0));
}

TEST_CASE("ratio q=1 substitution") {
  QTRatio r = QTRatio::fraction(q().pow(2) - QTPoly(1), q() - QTPoly(1));
  CHECK(r.at_q1() == QTRatio(2));
  QTRatio s = QTRatio::fraction((q() - QTPoly(1)).pow(2) * (q() + t()),
                                QTPoly(1) + q() * t());
  CHECK(s.at_q1() == QTRatio(0));
  CHECK_THROWS_AS(
      QTRatio::fraction(QTPoly(1), q() - QTPoly(1)).at_q1(),
      std::domain_error);
}

TEST_CASE("ratio parameter inversion") {
  QTRatio f = QTRatio::fraction(q(), QTPoly(1) - t());
  CHECK(f.inverted_params() ==
        QTRatio::fraction(t(), q() * t() - q()));
  CHECK(f.inverted_params().inverted_params() == f);
  CHECK(QTRatio(5).inverted_params() == QTRatio(5));
}

TEST_CASE("expansion around q=1") {
  CHECK(qm1_coeff_at(q(), 0, 0) == QTPoly(1));
  CHECK(qm1_coeff_at(q(), 1, 0) == QTPoly(1));
  CHECK(qm1_coeff_at(q(), 2, 0).is_zero());
  for (long k = 0; k <= 4; ++k)
    CHECK(qm1_coeff_at(QTPoly::q(-1), k, 0) == QTPoly(k % 2 == 0 ? 1 : -1));
  CHECK(qm1_coeff_at(QTPoly::q(-1), 1, 1).is_zero());
  QTPoly f = q() * t() - t();
  CHECK(qm1_coeff(f, 0).is_zero());
  CHECK(qm1_coeff(f, 1) == t());
  CHECK(q_clear_degree(QTPoly::q(-3) * t() + q().pow(2)) == 3);
  CHECK(q_clear_degree(QTPoly(4)) == 0);
  QTRatio lr = QTRatio::fraction(QTPoly(1) + q(), q().pow(2));
  CHECK(q_clear_degree(lr) == 2);
  CHECK(qm1_coeff(lr, 0) == QTPoly(2));
}

TEST_CASE("generalized binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(-2, 1) == -2);
  CHECK(binomial(-3, 3) == -10);
}

TEST_CASE("canonical text round trip") {
  QTPoly f = QTPoly::term(2, 2, -1) - QTPoly(3) + q() * t();
  CHECK(QTPoly::parse(f.str()) == f);
  CHECK(QTPoly::parse("0").is_zero());
  CHECK(QTPoly().str() == "0");
  CHECK_THROWS_AS(QTPoly::parse("garbage"), std::invalid_argument);
  QTRatio r = QTRatio::fraction(q() + t(), QTPoly(1) - q() * t());
  CHECK(QTRatio::parse(r.str()) == r);
  CHECK_THROWS_AS(QTRatio::parse("no slash here"), std::invalid_argument);
}

TEST_CASE("deterministic compare") {
  QTPoly a = q() + t();
  QTPoly b = q() - t();
  CHECK(QTPoly::compare(a, a) == 0);
  CHECK(QTPoly::compare(a, b) == -QTPoly::compare(b, a));
  CHECK(QTPoly::compare(QTPoly(), a) != 0);
  QTRatio ra(a), rb(b);
  CHECK(QTRatio::compare(ra, ra) == 0);
  CHECK(QTRatio::compare(ra, rb) == -QTRatio::compare(rb, ra));
}
