#ifndef CYCLO_SCALAR_HPP
#define CYCLO_SCALAR_HPP

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/errors.hpp"

namespace cyclo {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Slot 0 is q, slots 1..m are v1..vm.
inline constexpr int kMaxVars = 8;
inline constexpr int kMaxV = kMaxVars - 1;

struct Exponent {
    std::array<std::int32_t, kMaxVars> e{};

    std::int32_t& operator[](int i) { return e[i]; }
    std::int32_t operator[](int i) const { return e[i]; }
    auto operator<=>(const Exponent&) const = default;
    bool operator==(const Exponent&) const = default;
};

Exponent operator+(const Exponent& a, const Exponent& b);
Exponent operator-(const Exponent& a, const Exponent& b);

class LaurentPoly {
public:
    struct Term {
        Exponent exp;
        Rational coef;
    };

    explicit LaurentPoly(int m = 0);

    static LaurentPoly constant(int m, const Rational& c);
    static LaurentPoly monomial(int m, const Exponent& exp, const Rational& c = 1);
    static LaurentPoly q(int m);
    /// v_k with 1 <= k <= m.
    static LaurentPoly v(int m, int k);
    /// Builds from arbitrary terms; merges duplicates and drops zeros.
    static LaurentPoly from_terms(int m, std::vector<Term> terms);

    int arity() const { return m_; }
    /// Sorted by exponent vector, descending.
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    const Term& leading() const { return terms_.front(); }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(const Exponent& by) const;
    LaurentPoly pow(unsigned k) const;

    /// Componentwise minimum / maximum exponent over all terms (zero poly: zeros).
    Exponent min_exponents() const;
    Exponent max_exponents() const;

    /// Exact quotient this / d in the Laurent ring, or nullopt when d does not divide.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

    /// Negates every exponent vector.
    LaurentPoly omega() const;

    Rational evaluate(const Rational& q, const std::vector<Rational>& v) const;

    std::string to_string() const;

    /// Total order used for sorting and canonical storage.
    static int compare(const LaurentPoly& a, const LaurentPoly& b);

private:
    void check_arity(const LaurentPoly& o) const;

    int m_ = 0;
    std::vector<Term> terms_;
};

/// Splits p = unit * rest where unit is a monomial and rest is shifted to
/// nonnegative exponents with minimum 0 in every variable and leading coefficient 1.
std::pair<LaurentPoly, LaurentPoly> split_unit(const LaurentPoly& p);

class RatFn {
public:
    struct Factor {
        LaurentPoly base;
        int exp;
    };

    /// The zero function over m parameters.
    explicit RatFn(int m = 0);
    RatFn(const LaurentPoly& p);  // NOLINT: polynomials embed implicitly

    static RatFn fraction(const LaurentPoly& num, const LaurentPoly& den);
    static RatFn constant(int m, const Rational& c);
    static RatFn q(int m);
    static RatFn v(int m, int k);
    static RatFn monomial(int m, const Exponent& exp, const Rational& c = 1);

    int arity() const { return num_.arity(); }
    bool is_zero() const { return num_.is_zero(); }
    const LaurentPoly& numerator() const { return num_; }
    /// Expanded product of the stored denominator factors.
    LaurentPoly denominator() const;
    const std::vector<Factor>& denominator_factors() const { return den_; }
    bool is_polynomial() const { return den_.empty(); }

    RatFn operator-() const;
    RatFn& operator+=(const RatFn& o);
    RatFn& operator-=(const RatFn& o);
    RatFn& operator*=(const RatFn& o);
    RatFn& operator/=(const RatFn& o);
    friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
    friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
    friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
    friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
    friend bool operator==(const RatFn& a, const RatFn& b);

    RatFn inverse() const;
    RatFn pow(int k) const;
    RatFn omega() const;

    std::string to_string() const;

private:
    void reduce_against_factors();

    LaurentPoly num_;
    std::vector<Factor> den_;
};

/// a == b decided by cross-multiplication; a modular evaluation may short-circuit "false".
bool ratfn_eq(const RatFn& a, const RatFn& b);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const RatFn& x) { return x.is_zero(); }

/// (q^j - q^-j)/(q - q^-1) over m v-parameters.
RatFn q_number(int j, int m = 0);

RatFn apply_omega(const RatFn& f);

/// Parses the textual grammar: + - * / ^, parentheses, integers, q, v1..vm.
RatFn parse_ratfn(std::string_view text, int m);
LaurentPoly parse_laurent(std::string_view text, int m);

struct ParamSpec {
    Rational q;
    std::vector<Rational> v;
    int n = 1;

    int m() const { return static_cast<int>(v.size()); }
};

Rational specialize(const RatFn& f, const ParamSpec& spec);
Rational specialize(const LaurentPoly& f, const ParamSpec& spec);

struct GenericityViolation {
    enum class Kind { QPolynomialZero, ContentCollision, ZeroParameter };
    Kind kind;
    int N = 0;  // QPolynomialZero: 1 + q^2 + ... + q^{2N} = 0
    int i = 0;  // ContentCollision: q^{2i} v_j = v_k
    int j = 0;
    int k = 0;  // ZeroParameter: v_j = 0 (j = 0 means q)

    std::string describe() const;
};

struct GenericityReport {
    std::vector<GenericityViolation> violations;
    bool ok() const { return violations.empty(); }
};

GenericityReport check_genericity(const ParamSpec& spec);
/// Throws GenericityError listing the violations.
void require_generic(const ParamSpec& spec);

Rational rational_pow(const Rational& x, long e);
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& x);

}  // namespace cyclo

#endif
