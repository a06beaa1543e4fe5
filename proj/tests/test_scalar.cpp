#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclo/scalar.hpp"

using namespace cyclo;

namespace {

LaurentPoly P(const char* s, int m = 2) { return parse_laurent(s, m); }
RatFn F(const char* s, int m = 2) { return parse_ratfn(s, m); }

struct RandomPolys {
    std::mt19937 rng{12345};

    LaurentPoly poly(int m, int max_terms = 4) {
        std::uniform_int_distribution<int> nterms(0, max_terms), ex(-3, 3), co(-5, 5);
        std::vector<LaurentPoly::Term> t;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            Exponent e;
            for (int j = 0; j <= m; ++j) e[j] = ex(rng);
            Rational c(co(rng), 1 + std::abs(co(rng)));
            c.canonicalize();
            t.push_back({e, c});
        }
        return LaurentPoly::from_terms(m, std::move(t));
    }

    LaurentPoly nonzero(int m) {
        for (;;) {
            auto p = poly(m, 3);
            if (!p.is_zero()) return p;
        }
    }

    ParamSpec point(int m) {
        std::uniform_int_distribution<int> d(2, 40);
        ParamSpec s;
        auto draw = [&] {
            Rational x(d(rng), d(rng));
            x.canonicalize();
            return x;
        };
        s.q = draw();
        for (int i = 0; i < m; ++i) s.v.push_back(draw());
        return s;
    }
};

// Independent evaluation oracle: sums coefficient times powers directly.
Rational oracle_eval(const LaurentPoly& p, const ParamSpec& s) {
    Rational sum = 0;
    for (const auto& t : p.terms()) {
        Rational x = t.coef;
        for (int i = 0; i <= p.arity(); ++i) {
            Rational b = i == 0 ? s.q : s.v[i - 1];
            int e = t.exp[i];
            for (int k = 0; k < std::abs(e); ++k) x = e > 0 ? Rational(x * b) : Rational(x / b);
        }
        sum += x;
    }
    return sum;
}

}  // namespace

TEST_CASE("poly_arith examples") {
    CHECK(P("q") + P("q^-1") == P("q + q^-1"));
    CHECK((P("q - q^-1") * P("q + q^-1")) == P("q^2 - q^-2"));
    LaurentPoly z = P("v1*q^2") + P("-v1*q^2");
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
}

TEST_CASE("poly_arith rejects mismatched arity") {
    CHECK_THROWS_AS(LaurentPoly::q(1) + LaurentPoly::q(2), ArityError);
    CHECK_THROWS_AS(RatFn::q(1) * RatFn::q(2), ArityError);
}

TEST_CASE("ring axioms on random sparse operands") {
    RandomPolys r;
    for (int it = 0; it < 200; ++it) {
        int m = it % 3;
        auto a = r.poly(m), b = r.poly(m), c = r.poly(m);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        auto pt = r.point(m);
        CHECK(oracle_eval(a * b, pt) == oracle_eval(a, pt) * oracle_eval(b, pt));
        CHECK(oracle_eval(a + b, pt) == oracle_eval(a, pt) + oracle_eval(b, pt));
    }
}

TEST_CASE("exact division") {
    RandomPolys r;
    for (int it = 0; it < 100; ++it) {
        auto a = r.nonzero(2), b = r.nonzero(2);
        auto prod = a * b;
        auto qt = prod.divide_exact(b);
        REQUIRE(qt.has_value());
        CHECK(*qt == a);
    }
    CHECK_FALSE(P("q^2 + 1").divide_exact(P("q - 1")).has_value());
    CHECK(P("q^2 - 1").divide_exact(P("q - 1")).value() == P("q + 1"));
}

TEST_CASE("ratfn_eq examples") {
    CHECK(ratfn_eq(F("(q^2-1)/(q-1)"), F("(q+1)/1")));
    CHECK_FALSE(ratfn_eq(F("v1/v2"), F("v2/v1")));
    RatFn x = F("((q - q^-1)*v2)/(v1 - v2)");
    RatFn y = F("((q - q^-1)*v2*q)/((v1 - v2)*q)");
    CHECK(ratfn_eq(x, y));
}

TEST_CASE("ratfn_eq is an equivalence relation and agrees with cross multiplication") {
    RandomPolys r;
    for (int it = 0; it < 60; ++it) {
        auto a = r.poly(2), b = r.nonzero(2), c = r.nonzero(2);
        RatFn x = RatFn::fraction(a, b);
        RatFn y = RatFn::fraction(a * c, b * c);
        RatFn z = RatFn::fraction(a * c * c, b * c * c);
        CHECK(ratfn_eq(x, x));
        CHECK(ratfn_eq(x, y) == ratfn_eq(y, x));
        CHECK(ratfn_eq(x, y));
        CHECK(ratfn_eq(y, z));
        CHECK(ratfn_eq(x, z));
        // cross-multiplication oracle on the raw parts
        RatFn w = RatFn::fraction(r.poly(2), r.nonzero(2));
        bool cross = x.numerator() * w.denominator() == w.numerator() * x.denominator();
        CHECK(ratfn_eq(x, w) == cross);
    }
}

TEST_CASE("field operations agree with evaluation") {
    RandomPolys r;
    for (int it = 0; it < 60; ++it) {
        RatFn x = RatFn::fraction(r.poly(2), r.nonzero(2));
        RatFn y = RatFn::fraction(r.nonzero(2), r.nonzero(2));
        auto pt = r.point(2);
        auto ev = [&](const RatFn& f) -> Rational { return oracle_eval(f.numerator(), pt) / oracle_eval(f.denominator(), pt); };
        CHECK(ev(x + y) == ev(x) + ev(y));
        CHECK(ev(x * y) == ev(x) * ev(y));
        CHECK(ev(x / y) == ev(x) / ev(y));
        CHECK(ev(x - y) == ev(x) - ev(y));
        CHECK((x / y) * y == x);
    }
}

TEST_CASE("q_number") {
    CHECK(q_number(2) == RatFn(parse_laurent("q + q^-1", 0)));
    CHECK(q_number(1) == RatFn::constant(0, 1));
    CHECK(q_number(3) == RatFn(parse_laurent("q^2 + 1 + q^-2", 0)));
    CHECK(q_number(3).is_polynomial());
    RatFn q = RatFn::q(0);
    for (int j = -6; j <= 6; ++j) CHECK(q_number(j) * (q - q.inverse()) == q.pow(j) - q.pow(-j));
}

TEST_CASE("apply_omega") {
    CHECK(apply_omega(F("q*v1")) == F("q^-1*v1^-1"));
    RatFn g = F("(q^-1*v1 - q*v2)/(v1 - v2)");
    CHECK(apply_omega(g) == g);
    CHECK(apply_omega(RatFn::constant(2, 5)) == RatFn::constant(2, 5));
    RandomPolys r;
    for (int it = 0; it < 40; ++it) {
        RatFn x = RatFn::fraction(r.poly(2), r.nonzero(2));
        CHECK(apply_omega(apply_omega(x)) == x);
        auto pt = r.point(2);
        ParamSpec inv{1 / pt.q, {1 / pt.v[0], 1 / pt.v[1]}, 1};
        try {
            CHECK(specialize(apply_omega(x), inv) == specialize(x, pt));
        } catch (const SingularityError&) {
        }
    }
}

TEST_CASE("specialize") {
    ParamSpec s{2, {}, 1};
    CHECK(specialize(q_number(2), s) == Rational(5, 2));
    ParamSpec t{2, {1, 3}, 1};
    CHECK(specialize(F("v1/(v1-v2)"), t) == Rational(-1, 2));
    ParamSpec u{2, {3, 3}, 1};
    CHECK_THROWS_AS(specialize(F("1/(v1-v2)"), u), SingularityError);
    CHECK_THROWS_AS(specialize(F("v1"), ParamSpec{2, {1}, 1}), ArityError);
}

TEST_CASE("check_genericity") {
    CHECK(check_genericity(ParamSpec{2, {1, 3}, 4}).ok());
    auto r = check_genericity(ParamSpec{2, {1, 4}, 2});
    REQUIRE_FALSE(r.ok());
    bool found = false;
    for (const auto& v : r.violations)
        if (v.kind == GenericityViolation::Kind::ContentCollision && v.i == 1 && v.j == 1 && v.k == 2) found = true;
    CHECK(found);
    auto z = check_genericity(ParamSpec{1, {0}, 1});
    REQUIRE(z.violations.size() == 1);
    CHECK(z.violations[0].kind == GenericityViolation::Kind::ZeroParameter);
    CHECK(z.violations[0].j == 1);
    CHECK_THROWS_AS(require_generic(ParamSpec{2, {1, 4}, 2}), GenericityError);
}

TEST_CASE("render and parse round trip") {
    RandomPolys r;
    for (int it = 0; it < 80; ++it) {
        int m = 1 + it % 3;
        RatFn x = RatFn::fraction(r.poly(m), r.nonzero(m));
        std::string s = x.to_string();
        CHECK(parse_ratfn(s, m) == x);
    }
    CHECK(P("3/2*q^2 - q^-1*v2", 2).to_string() == "3/2*q^2 - q^-1*v2");
    CHECK(F("(q*v2 - q^-1*v2)/(v1 - v2)").to_string() == "(q*v2 - q^-1*v2)/(v1 - v2)");
    CHECK(P("0").to_string() == "0");
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_ratfn("q + v3", 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_ratfn("q +", 1), ParseError);
    CHECK_THROWS_AS(parse_ratfn("(q", 1), ParseError);
    CHECK_THROWS_AS(parse_ratfn("q/0", 1), ParseError);
    CHECK_THROWS_AS(parse_ratfn("q $ 1", 1), ParseError);
}
