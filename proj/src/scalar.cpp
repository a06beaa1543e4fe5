#include "cyclo/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cyclo {

Exponent operator+(const Exponent& a, const Exponent& b) {
    Exponent r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
    Exponent r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

namespace {

void check_m(int m) {
    if (m < 0 || m > kMaxV)
        throw ArityError("number of v-parameters must lie in [0, " + std::to_string(kMaxV) + "], got " +
                         std::to_string(m));
}

// Merges a sorted (descending) run of terms with equal exponents and drops zeros.
void canonicalize(std::vector<LaurentPoly::Term>& t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.exp > b.exp; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i + 1;
        Rational c = t[i].coef;
        while (j < t.size() && t[j].exp == t[i].exp) c += t[j++].coef;
        if (sgn(c) != 0) {
            t[out].exp = t[i].exp;
            t[out].coef = c;
            ++out;
        }
        i = j;
    }
    t.resize(out);
}

}  // namespace

LaurentPoly::LaurentPoly(int m) : m_(m) { check_m(m); }

LaurentPoly LaurentPoly::constant(int m, const Rational& c) { return monomial(m, Exponent{}, c); }

LaurentPoly LaurentPoly::monomial(int m, const Exponent& exp, const Rational& c) {
    LaurentPoly p(m);
    for (int i = m + 1; i < kMaxVars; ++i)
        if (exp.e[i] != 0) throw ArityError("exponent uses a parameter beyond v" + std::to_string(m));
    if (sgn(c) != 0) {
        p.terms_.push_back({exp, c});
        p.terms_.back().coef.canonicalize();
    }
    return p;
}

LaurentPoly LaurentPoly::q(int m) {
    Exponent e;
    e.e[0] = 1;
    return monomial(m, e);
}

LaurentPoly LaurentPoly::v(int m, int k) {
    if (k < 1 || k > m) throw ArityError("v" + std::to_string(k) + " is not among v1..v" + std::to_string(m));
    Exponent e;
    e.e[k] = 1;
    return monomial(m, e);
}

LaurentPoly LaurentPoly::from_terms(int m, std::vector<Term> terms) {
    LaurentPoly p(m);
    for (auto& t : terms) {
        for (int i = m + 1; i < kMaxVars; ++i)
            if (t.exp.e[i] != 0) throw ArityError("exponent uses a parameter beyond v" + std::to_string(m));
        t.coef.canonicalize();
    }
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{}); }

void LaurentPoly::check_arity(const LaurentPoly& o) const {
    if (m_ != o.m_)
        throw ArityError("operands over " + std::to_string(m_) + " and " + std::to_string(o.m_) + " v-parameters");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_arity(o);
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].exp > o.terms_[j].exp) {
            out.push_back(std::move(terms_[i++]));
        } else if (o.terms_[j].exp > terms_[i].exp) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].coef + o.terms_[j].coef;
            if (sgn(c) != 0) out.push_back({terms_[i].exp, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_arity(b);
    LaurentPoly r(a.m_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1) return b.shifted(a.terms_[0].exp).scaled(a.terms_[0].coef);
    if (b.terms_.size() == 1) return a.shifted(b.terms_[0].exp).scaled(b.terms_[0].coef);
    std::vector<LaurentPoly::Term> t;
    t.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) t.push_back({x.exp + y.exp, x.coef * y.coef});
    canonicalize(t);
    r.terms_ = std::move(t);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_arity(b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r(m_);
    if (sgn(c) == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& by) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.exp = t.exp + by;
    for (int i = m_ + 1; i < kMaxVars; ++i)
        if (by.e[i] != 0) throw ArityError("shift uses a parameter beyond v" + std::to_string(m_));
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result = constant(m_, 1);
    LaurentPoly base = *this;
    while (k) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k) base *= base;
    }
    return result;
}

Exponent LaurentPoly::min_exponents() const {
    Exponent r;
    if (terms_.empty()) return r;
    r = terms_[0].exp;
    for (const auto& t : terms_)
        for (int i = 0; i <= m_; ++i) r.e[i] = std::min(r.e[i], t.exp.e[i]);
    return r;
}

Exponent LaurentPoly::max_exponents() const {
    Exponent r;
    if (terms_.empty()) return r;
    r = terms_[0].exp;
    for (const auto& t : terms_)
        for (int i = 0; i <= m_; ++i) r.e[i] = std::max(r.e[i], t.exp.e[i]);
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
    check_arity(d);
    if (d.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
    if (is_zero()) return LaurentPoly(m_);
    if (d.is_monomial()) {
        Exponent neg;
        for (int i = 0; i <= m_; ++i) neg.e[i] = -d.terms_[0].exp.e[i];
        return shifted(neg).scaled(1 / d.terms_[0].coef);
    }
    // Work with honest polynomials: shift both so every variable has minimum exponent 0.
    const Exponent sf = min_exponents(), sg = d.min_exponents();
    Exponent nsf, nsg;
    for (int i = 0; i <= m_; ++i) {
        nsf.e[i] = -sf.e[i];
        nsg.e[i] = -sg.e[i];
    }
    LaurentPoly r = shifted(nsf);
    const LaurentPoly g = d.shifted(nsg);
    const Exponent fmax = r.max_exponents(), gmax = g.max_exponents();
    Exponent box;  // the quotient's exponents must stay inside [0, fmax - gmax]
    for (int i = 0; i <= m_; ++i) {
        box.e[i] = fmax.e[i] - gmax.e[i];
        if (box.e[i] < 0) return std::nullopt;
    }
    const Term& lg = g.terms_[0];
    std::vector<Term> quot;
    while (!r.is_zero()) {
        const Term& lt = r.terms_[0];
        Exponent e = lt.exp - lg.exp;
        for (int i = 0; i <= m_; ++i)
            if (e.e[i] < 0 || e.e[i] > box.e[i]) return std::nullopt;
        Rational c = lt.coef / lg.coef;
        r -= g.shifted(e).scaled(c);
        quot.push_back({e, std::move(c)});
    }
    LaurentPoly q = from_terms(m_, std::move(quot));
    return q.shifted(sf - sg);
}

LaurentPoly LaurentPoly::omega() const {
    std::vector<Term> t = terms_;
    for (auto& x : t)
        for (int i = 0; i <= m_; ++i) x.exp.e[i] = -x.exp.e[i];
    return from_terms(m_, std::move(t));
}

Rational rational_pow(const Rational& x, long e) {
    if (e == 0) return 1;
    Rational base = x;
    if (e < 0) {
        if (sgn(x) == 0) throw SingularityError("negative power of zero");
        base = 1 / x;
        e = -e;
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Rational LaurentPoly::evaluate(const Rational& qv, const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != m_)
        throw ArityError("evaluation point has " + std::to_string(v.size()) + " v-values, expected " +
                         std::to_string(m_));
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational x = t.coef;
        if (t.exp.e[0] != 0) x *= rational_pow(qv, t.exp.e[0]);
        for (int i = 1; i <= m_; ++i)
            if (t.exp.e[i] != 0) x *= rational_pow(v[i - 1], t.exp.e[i]);
        sum += x;
    }
    return sum;
}

std::string rational_to_string(const Rational& x) { return x.get_str(); }

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        std::string mono;
        for (int i = 0; i <= m_; ++i) {
            int e = t.exp.e[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += (i == 0) ? std::string("q") : "v" + std::to_string(i);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        Rational a = abs(t.coef);
        std::string body;
        if (mono.empty())
            body = rational_to_string(a);
        else if (a == 1)
            body = mono;
        else
            body = rational_to_string(a) + "*" + mono;
        if (first)
            out += (sgn(t.coef) < 0 ? "-" : "") + body;
        else
            out += (sgn(t.coef) < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.m_ != b.m_) return a.m_ < b.m_ ? -1 : 1;
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.terms_[i].exp != b.terms_[i].exp) return a.terms_[i].exp > b.terms_[i].exp ? -1 : 1;
        int c = cmp(a.terms_[i].coef, b.terms_[i].coef);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (a.terms_.size() == b.terms_.size()) return 0;
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
}

std::pair<LaurentPoly, LaurentPoly> split_unit(const LaurentPoly& p) {
    const int m = p.arity();
    if (p.is_zero()) throw DivisionByZeroError("zero polynomial has no unit part");
    Exponent lo = p.min_exponents();
    Exponent neg;
    for (int i = 0; i <= m; ++i) neg.e[i] = -lo.e[i];
    const Rational lc = p.leading().coef;
    LaurentPoly rest = p.shifted(neg).scaled(1 / lc);
    return {LaurentPoly::monomial(m, lo, lc), std::move(rest)};
}

// ---------------------------------------------------------------------------
// RatFn

namespace {

using Factor = RatFn::Factor;

bool same_factors(const std::vector<Factor>& a, const std::vector<Factor>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].exp != b[i].exp || !(a[i].base == b[i].base)) return false;
    return true;
}

void sort_and_merge(std::vector<Factor>& f) {
    std::sort(f.begin(), f.end(), [](const Factor& x, const Factor& y) {
        return LaurentPoly::compare(x.base, y.base) < 0;
    });
    std::vector<Factor> out;
    for (auto& x : f) {
        if (!out.empty() && out.back().base == x.base)
            out.back().exp += x.exp;
        else
            out.push_back(std::move(x));
    }
    std::erase_if(out, [](const Factor& x) { return x.exp == 0; });
    f = std::move(out);
}

// Least common multiple of two factor lists (maximum exponent per base).
std::vector<Factor> lcm_factors(const std::vector<Factor>& a, const std::vector<Factor>& b) {
    std::vector<Factor> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c = (i == a.size()) ? 1 : (j == b.size()) ? -1 : LaurentPoly::compare(a[i].base, b[j].base);
        if (c < 0) {
            out.push_back(a[i++]);
        } else if (c > 0) {
            out.push_back(b[j++]);
        } else {
            out.push_back({a[i].base, std::max(a[i].exp, b[j].exp)});
            ++i;
            ++j;
        }
    }
    return out;
}

int exponent_of(const std::vector<Factor>& f, const LaurentPoly& base) {
    for (const auto& x : f)
        if (x.base == base) return x.exp;
    return 0;
}

// num * prod(L / den) for den dividing L.
LaurentPoly lift_to(const LaurentPoly& num, const std::vector<Factor>& den, const std::vector<Factor>& L) {
    LaurentPoly r = num;
    for (const auto& x : L) {
        int k = x.exp - exponent_of(den, x.base);
        if (k > 0) r *= x.base.pow(static_cast<unsigned>(k));
    }
    return r;
}

// Divides p by the candidate bases as often as possible; the rest becomes one new base.
std::pair<LaurentPoly, std::vector<Factor>> factor_against(const LaurentPoly& p,
                                                           const std::vector<const LaurentPoly*>& candidates) {
    auto [unit, rest] = split_unit(p);
    std::vector<Factor> out;
    for (const LaurentPoly* c : candidates) {
        if (rest.is_constant()) break;
        int k = 0;
        while (!rest.is_constant()) {
            auto qt = rest.divide_exact(*c);
            if (!qt) break;
            rest = std::move(*qt);
            ++k;
        }
        if (k > 0) out.push_back({*c, k});
    }
    if (!rest.is_constant()) {
        auto [u2, r2] = split_unit(rest);
        unit *= u2;
        out.push_back({std::move(r2), 1});
    } else {
        unit *= rest;
    }
    sort_and_merge(out);
    return {unit, out};
}

// Fixed modular evaluation point used to refute equality quickly.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1U) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1U;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

const std::array<std::uint64_t, kMaxVars>& eval_point() {
    static const std::array<std::uint64_t, kMaxVars> pt = [] {
        std::array<std::uint64_t, kMaxVars> p{};
        std::uint64_t s = 0x9E3779B97F4A7C15ULL;
        for (auto& x : p) {
            s += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = s;
            z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
            z ^= z >> 31U;
            x = z % (kPrime - 2) + 2;
        }
        return p;
    }();
    return pt;
}

std::optional<std::uint64_t> mod_eval(const LaurentPoly& p) {
    const auto& pt = eval_point();
    std::uint64_t sum = 0;
    for (const auto& t : p.terms()) {
        std::uint64_t d = mpz_fdiv_ui(t.coef.get_den_mpz_t(), kPrime);
        if (d == 0) return std::nullopt;
        std::uint64_t x = mulmod(mpz_fdiv_ui(t.coef.get_num_mpz_t(), kPrime), invmod(d));
        for (int i = 0; i <= p.arity(); ++i) {
            std::int32_t e = t.exp.e[i];
            if (e > 0) x = mulmod(x, powmod(pt[i], static_cast<std::uint64_t>(e)));
            if (e < 0) x = mulmod(x, powmod(invmod(pt[i]), static_cast<std::uint64_t>(-e)));
        }
        sum = (sum + x) % kPrime;
    }
    return sum;
}

std::optional<std::uint64_t> mod_eval(const RatFn& f) {
    auto n = mod_eval(f.numerator());
    if (!n) return std::nullopt;
    std::uint64_t den = 1;
    for (const auto& x : f.denominator_factors()) {
        auto b = mod_eval(x.base);
        if (!b || *b == 0) return std::nullopt;
        den = mulmod(den, powmod(*b, static_cast<std::uint64_t>(x.exp)));
    }
    return mulmod(*n, invmod(den));
}

}  // namespace

RatFn::RatFn(int m) : num_(m) {}

RatFn::RatFn(const LaurentPoly& p) : num_(p) {}

RatFn RatFn::fraction(const LaurentPoly& num, const LaurentPoly& den) {
    if (num.arity() != den.arity()) throw ArityError("numerator and denominator over different parameter counts");
    if (den.is_zero()) throw DivisionByZeroError("zero denominator");
    return RatFn(num) / RatFn(den);
}

RatFn RatFn::constant(int m, const Rational& c) { return RatFn(LaurentPoly::constant(m, c)); }
RatFn RatFn::q(int m) { return RatFn(LaurentPoly::q(m)); }
RatFn RatFn::v(int m, int k) { return RatFn(LaurentPoly::v(m, k)); }
RatFn RatFn::monomial(int m, const Exponent& exp, const Rational& c) { return RatFn(LaurentPoly::monomial(m, exp, c)); }

LaurentPoly RatFn::denominator() const {
    LaurentPoly d = LaurentPoly::constant(arity(), 1);
    for (const auto& x : den_) d *= x.base.pow(static_cast<unsigned>(x.exp));
    return d;
}

void RatFn::reduce_against_factors() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& x : den_) {
        while (x.exp > 0) {
            auto qt = num_.divide_exact(x.base);
            if (!qt) break;
            num_ = std::move(*qt);
            --x.exp;
        }
    }
    std::erase_if(den_, [](const Factor& x) { return x.exp == 0; });
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn& RatFn::operator+=(const RatFn& o) {
    if (arity() != o.arity()) throw ArityError("adding rational functions over different parameter counts");
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (same_factors(den_, o.den_)) {
        num_ += o.num_;
    } else {
        std::vector<Factor> L = lcm_factors(den_, o.den_);
        num_ = lift_to(num_, den_, L) + lift_to(o.num_, o.den_, L);
        den_ = std::move(L);
    }
    reduce_against_factors();
    return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
    if (arity() != o.arity()) throw ArityError("multiplying rational functions over different parameter counts");
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFn(arity());
    LaurentPoly other_num = o.num_;
    std::vector<Factor> other_den = o.den_;
    // cross-cancel: our denominator against their numerator and vice versa
    for (auto& x : den_) {
        while (x.exp > 0 && !other_num.is_monomial()) {
            auto qt = other_num.divide_exact(x.base);
            if (!qt) break;
            other_num = std::move(*qt);
            --x.exp;
        }
    }
    for (auto& x : other_den) {
        while (x.exp > 0 && !num_.is_monomial()) {
            auto qt = num_.divide_exact(x.base);
            if (!qt) break;
            num_ = std::move(*qt);
            --x.exp;
        }
    }
    num_ *= other_num;
    den_.insert(den_.end(), other_den.begin(), other_den.end());
    sort_and_merge(den_);
    return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) {
    if (arity() != o.arity()) throw ArityError("dividing rational functions over different parameter counts");
    if (o.is_zero()) throw DivisionByZeroError("division by zero rational function");
    std::vector<const LaurentPoly*> candidates;
    for (const auto& x : den_) candidates.push_back(&x.base);
    for (const auto& x : o.den_) candidates.push_back(&x.base);
    auto [unit, factors] = factor_against(o.num_, candidates);
    RatFn inv(arity());
    const auto& ut = unit.leading();
    Exponent neg;
    for (int i = 0; i <= arity(); ++i) neg.e[i] = -ut.exp.e[i];
    inv.num_ = o.denominator().shifted(neg).scaled(1 / ut.coef);
    inv.den_ = std::move(factors);
    return *this *= inv;
}

RatFn RatFn::inverse() const { return constant(arity(), 1) / *this; }

RatFn RatFn::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RatFn r = constant(arity(), 1);
    RatFn base = *this;
    unsigned e = static_cast<unsigned>(k);
    while (e) {
        if (e & 1U) r *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return r;
}

RatFn RatFn::omega() const {
    RatFn r(arity());
    r.num_ = num_.omega();
    for (const auto& x : den_) {
        auto [unit, rest] = split_unit(x.base.omega());
        // 1/(u*rest)^e = u^-e / rest^e
        const auto& ut = unit.leading();
        Exponent neg;
        for (int i = 0; i <= arity(); ++i) neg.e[i] = -ut.exp.e[i] * x.exp;
        r.num_ = r.num_.shifted(neg).scaled(1 / rational_pow(ut.coef, x.exp));
        r.den_.push_back({std::move(rest), x.exp});
    }
    sort_and_merge(r.den_);
    return r;
}

bool operator==(const RatFn& a, const RatFn& b) { return ratfn_eq(a, b); }

bool ratfn_eq(const RatFn& a, const RatFn& b) {
    if (a.arity() != b.arity()) throw ArityError("comparing rational functions over different parameter counts");
    const auto& fa = a.denominator_factors();
    const auto& fb = b.denominator_factors();
    if (same_factors(fa, fb)) return a.numerator() == b.numerator();
    auto ea = mod_eval(a), eb = mod_eval(b);
    if (ea && eb && *ea != *eb) return false;
    std::vector<Factor> L = lcm_factors(fa, fb);
    return lift_to(a.numerator(), fa, L) == lift_to(b.numerator(), fb, L);
}

std::string RatFn::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string den;
    if (den_.size() == 1 && den_[0].exp == 1) {
        den = "(" + den_[0].base.to_string() + ")";
    } else {
        std::string inner;
        for (const auto& x : den_) {
            if (!inner.empty()) inner += "*";
            inner += "(" + x.base.to_string() + ")";
            if (x.exp != 1) inner += "^" + std::to_string(x.exp);
        }
        den = "(" + inner + ")";
    }
    return "(" + num_.to_string() + ")/" + den;
}

RatFn q_number(int j, int m) {
    RatFn q = RatFn::q(m);
    RatFn qi = q.inverse();
    return (q.pow(j) - q.pow(-j)) / (q - qi);
}

RatFn apply_omega(const RatFn& f) { return f.omega(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(std::string_view s, int m) : s_(s), m_(m) {}

    RatFn parse_all() {
        RatFn r = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return r;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatFn expr() {
        RatFn r = term();
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }

    RatFn term() {
        RatFn r = unary();
        for (;;) {
            if (eat('*')) {
                r *= unary();
            } else if (eat('/')) {
                std::size_t at = pos_;
                RatFn d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                r /= d;
            } else {
                return r;
            }
        }
    }

    RatFn unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    long integer_exponent() {
        skip();
        bool paren = eat('(');
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent", pos_);
        long e = std::stol(std::string(s_.substr(start, pos_ - start)));
        if (paren && !eat(')')) throw ParseError("expected ')'", pos_);
        return neg ? -e : e;
    }

    RatFn power() {
        RatFn base = primary();
        if (eat('^')) {
            std::size_t at = pos_;
            long e = integer_exponent();
            if (e < 0 && base.is_zero()) throw ParseError("negative power of zero", at);
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    RatFn primary() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFn r = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Rational value(mpz_class(std::string(s_.substr(start, pos_ - start))));
            return RatFn::constant(m_, value);
        }
        if (c == 'q') {
            ++pos_;
            return RatFn::q(m_);
        }
        if (c == 'v') {
            std::size_t start = pos_++;
            std::size_t ds = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (ds == pos_) throw ParseError("expected parameter index after 'v'", pos_);
            int k = std::stoi(std::string(s_.substr(ds, pos_ - ds)));
            if (k < 1 || k > m_)
                throw ParseError("unknown parameter 'v" + std::to_string(k) + "' (have v1..v" + std::to_string(m_) + ")",
                                 start);
            return RatFn::v(m_, k);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view s_;
    int m_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFn parse_ratfn(std::string_view text, int m) {
    check_m(m);
    return Parser(text, m).parse_all();
}

LaurentPoly parse_laurent(std::string_view text, int m) {
    RatFn r = parse_ratfn(text, m);
    if (!r.is_polynomial()) throw ParseError("expression is not a Laurent polynomial", 0);
    return r.numerator();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty rational", 0);
    s = s.substr(b, e - b + 1);
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || ((c == '-' || c == '+') && i == 0);
        if (!ok) throw ParseError(std::string("unexpected '") + c + "' in rational", i);
    }
    if (s[0] == '+') s = s.substr(1);
    auto slash = s.find('/');
    if (slash != std::string::npos && (slash == 0 || slash + 1 == s.size() || s.find('/', slash + 1) != std::string::npos))
        throw ParseError("malformed rational", slash);
    Rational r;
    try {
        r = Rational(s);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational", 0);
    }
    if (r.get_den() == 0) throw ParseError("zero denominator in rational", slash);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------------------
// Specialization and genericity

Rational specialize(const LaurentPoly& f, const ParamSpec& spec) {
    if (spec.m() != f.arity())
        throw ArityError("specialization supplies " + std::to_string(spec.m()) + " v-values for a function of " +
                         std::to_string(f.arity()));
    return f.evaluate(spec.q, spec.v);
}

Rational specialize(const RatFn& f, const ParamSpec& spec) {
    if (spec.m() != f.arity())
        throw ArityError("specialization supplies " + std::to_string(spec.m()) + " v-values for a function of " +
                         std::to_string(f.arity()));
    Rational den = 1;
    for (const auto& x : f.denominator_factors()) {
        Rational b = x.base.evaluate(spec.q, spec.v);
        if (sgn(b) == 0) throw SingularityError("denominator factor " + x.base.to_string() + " vanishes");
        den *= rational_pow(b, x.exp);
    }
    return f.numerator().evaluate(spec.q, spec.v) / den;
}

std::string GenericityViolation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::QPolynomialZero:
            os << "1 + q^2 + ... + q^" << 2 * N << " vanishes (N=" << N << ")";
            break;
        case Kind::ContentCollision:
            os << "q^" << 2 * i << "*v" << j << " = v" << k << " (i=" << i << ", j=" << j << ", k=" << k << ")";
            break;
        case Kind::ZeroParameter:
            if (j == 0)
                os << "q = 0";
            else
                os << "v" << j << " = 0";
            break;
    }
    return os.str();
}

GenericityReport check_genericity(const ParamSpec& spec) {
    GenericityReport rep;
    using K = GenericityViolation::Kind;
    const bool q_zero = sgn(spec.q) == 0;
    if (q_zero) rep.violations.push_back({K::ZeroParameter, 0, 0, 0, 0});
    for (int j = 0; j < spec.m(); ++j)
        if (sgn(spec.v[j]) == 0) rep.violations.push_back({K::ZeroParameter, 0, 0, j + 1, 0});
    Rational q2 = spec.q * spec.q;
    Rational sum = 1, p = 1;
    for (int N = 1; N < spec.n; ++N) {
        p *= q2;
        sum += p;
        if (sgn(sum) == 0) rep.violations.push_back({K::QPolynomialZero, N, 0, 0, 0});
    }
    if (!q_zero) {
        for (int i = -(spec.n - 1); i <= spec.n - 1; ++i) {
            Rational f = rational_pow(q2, i);
            for (int j = 0; j < spec.m(); ++j)
                for (int k = 0; k < spec.m(); ++k)
                    if (j != k && f * spec.v[j] == spec.v[k])
                        rep.violations.push_back({K::ContentCollision, 0, i, j + 1, k + 1});
        }
    }
    return rep;
}

void require_generic(const ParamSpec& spec) {
    auto rep = check_genericity(spec);
    if (rep.ok()) return;
    std::string msg = "parameters are not generic:";
    for (const auto& v : rep.violations) msg += " [" + v.describe() + "]";
    throw GenericityError(msg);
}

}  // namespace cyclo
