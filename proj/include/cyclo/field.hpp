#ifndef CYCLO_FIELD_HPP
#define CYCLO_FIELD_HPP

#include <vector>

#include "cyclo/scalar.hpp"

namespace cyclo {

/// The values of q and v1..vm in a scalar type T: RatFn for symbolic work,
/// Rational for a checked numeric specialization.
template <class T>
struct Parameters {
    int m = 0;
    T q;
    T q_inv;
    std::vector<T> v;
    T zero_value;
    T one_value;

    const T& zero() const { return zero_value; }
    const T& one() const { return one_value; }
    T constant(long c) const;
    T q_power(int e) const;
    /// v_k q^{2z}, k is 1-based.
    T content(int k, int z) const { return v.at(static_cast<std::size_t>(k - 1)) * q_power(2 * z); }
};

template <>
inline RatFn Parameters<RatFn>::constant(long c) const {
    return RatFn::constant(m, c);
}

template <>
inline Rational Parameters<Rational>::constant(long c) const {
    return Rational(c);
}

template <>
inline RatFn Parameters<RatFn>::q_power(int e) const {
    Exponent x;
    x.e[0] = e;
    return RatFn::monomial(m, x);
}

template <>
inline Rational Parameters<Rational>::q_power(int e) const {
    return rational_pow(q, e);
}

inline Parameters<RatFn> symbolic_parameters(int m) {
    Parameters<RatFn> p;
    p.m = m;
    p.q = RatFn::q(m);
    p.q_inv = p.q_power(-1);
    for (int k = 1; k <= m; ++k) p.v.push_back(RatFn::v(m, k));
    p.zero_value = RatFn(m);
    p.one_value = RatFn::constant(m, 1);
    return p;
}

/// Throws GenericityError unless the specialization passes check_genericity.
inline Parameters<Rational> numeric_parameters(const ParamSpec& spec) {
    require_generic(spec);
    Parameters<Rational> p;
    p.m = spec.m();
    p.q = spec.q;
    p.q_inv = 1 / spec.q;
    p.v = spec.v;
    p.zero_value = 0;
    p.one_value = 1;
    return p;
}

}  // namespace cyclo

#endif
