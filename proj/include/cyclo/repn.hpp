#ifndef CYCLO_REPN_HPP
#define CYCLO_REPN_HPP

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/combinatorics.hpp"
#include "cyclo/field.hpp"
#include "cyclo/matrix.hpp"

namespace cyclo {

/// Images of tau and sigma_1..sigma_{n-1}.
template <class T>
struct GeneratorMatrices {
    Matrix<T> tau;
    std::vector<Matrix<T>> sigma;  // sigma[i-1] is sigma_i
    /// Set for n = 0, where tau is absent and the stored 1x1 identity is only a placeholder.
    bool tau_placeholder = false;

    std::size_t dim() const { return tau.rows(); }
    int n() const { return static_cast<int>(sigma.size()) + 1; }
};

/// Value of sigma_i on the one-dimensional vacuum module: q (standard) or -1/q.
enum class Vacuum { Standard, Alternative };

template <class T>
struct BasicRepresentation {
    int m = 1;
    int n = 0;
    MPartition shape;
    std::vector<StandardMTableau> basis;
    GeneratorMatrices<T> gens;
    Parameters<T> params;

    std::size_t dim() const { return basis.size(); }
    const Matrix<T>& tau() const { return gens.tau; }
    /// 1-based; throws LookupError when out of range.
    const Matrix<T>& sigma(int i) const {
        if (i < 1 || i >= n) throw LookupError("sigma_" + std::to_string(i) + " is not a generator for n = " + std::to_string(n));
        return gens.sigma[static_cast<std::size_t>(i - 1)];
    }
    std::size_t index_of(const StandardMTableau& x) const {
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (basis[k] == x) return k;
        throw LookupError("tableau " + x.to_string() + " is not in the basis");
    }
};

using Representation = BasicRepresentation<RatFn>;
using NumericRepresentation = BasicRepresentation<Rational>;

/// c(X|i) in the parameter field.
template <class T>
T tableau_content(const StandardMTableau& x, int i, const Parameters<T>& p) {
    const MNode& a = x.node_of(i);
    return p.content(a.pos, a.col - a.row);
}

template <class T>
T node_content(const MNode& a, const Parameters<T>& p) {
    return p.content(a.pos, a.col - a.row);
}

template <class T>
BasicRepresentation<T> build_representation(const MPartition& lambda, const Parameters<T>& p,
                                            Vacuum vacuum = Vacuum::Standard) {
    if (!lambda.is_valid()) throw PreconditionError("invalid m-partition " + lambda.to_string());
    if (lambda.m() != p.m)
        throw ArityError("shape has " + std::to_string(lambda.m()) + " components but there are " +
                         std::to_string(p.m) + " parameters v");
    BasicRepresentation<T> r;
    r.m = lambda.m();
    r.n = lambda.size();
    r.shape = lambda;
    r.params = p;
    r.basis = enumerate_standard_tableaux(lambda);
    const std::size_t d = r.basis.size();
    std::map<std::string, std::size_t> where;
    for (std::size_t k = 0; k < d; ++k) where[r.basis[k].to_string()] = k;

    if (r.n == 0) {
        r.gens.tau = Matrix<T>::identity(1, p.zero(), p.one());
        r.gens.tau_placeholder = true;
        return r;
    }
    std::vector<T> first;
    for (const auto& x : r.basis) first.push_back(tableau_content(x, 1, p));
    r.gens.tau = Matrix<T>::diagonal(first, p.zero());

    const T qq = p.q - p.q_inv;
    for (int i = 1; i < r.n; ++i) {
        Matrix<T> s(d, d, p.zero());
        for (std::size_t col = 0; col < d; ++col) {
            const auto& x = r.basis[col];
            const T ci = tableau_content(x, i, p);
            const T cj = tableau_content(x, i + 1, p);
            const T den = cj - ci;
            s(col, col) = qq * cj / den;
            if (auto y = apply_adjacent_transposition(x, i)) {
                const std::size_t row = where.at(y->to_string());
                s(row, col) = vacuum == Vacuum::Standard ? (p.q * cj - p.q_inv * ci) / den : (p.q * ci - p.q_inv * cj) / den;
            }
        }
        r.gens.sigma.push_back(std::move(s));
    }
    return r;
}

Representation build_representation(const MPartition& lambda, Vacuum vacuum = Vacuum::Standard);
/// Checks |lambda| = n and lambda.m() = m before building symbolically.
Representation build_representation(const MPartition& lambda, int m, int n);
/// Numeric build at a checked specialization; throws GenericityError when not generic.
NumericRepresentation build_representation(const MPartition& lambda, const ParamSpec& spec);

Parameters<Rational> checked_parameters(const ParamSpec& spec, int n);

GeneratorMatrices<Rational> specialize(const GeneratorMatrices<RatFn>& g, const ParamSpec& spec);
NumericRepresentation specialize(const Representation& r, const ParamSpec& spec);

// ---------------------------------------------------------------- relations

struct RelationFailure {
    std::string relation;  // braid, commutation, tau-braid, tau-commutation, quadratic, cyclotomic
    int i = 0;
    int j = 0;
    std::size_t row = 0;
    std::size_t col = 0;

    std::string describe() const;
};

struct RelationReport {
    std::optional<RelationFailure> failure;
    bool ok() const { return !failure.has_value(); }
    std::string describe() const { return ok() ? std::string("pass") : failure->describe(); }
};

namespace detail {

template <class T>
std::optional<RelationFailure> compare(const Matrix<T>& a, const Matrix<T>& b, const char* rel, int i, int j) {
    if (auto d = a.first_difference(b)) return RelationFailure{rel, i, j, d->first, d->second};
    return std::nullopt;
}

}  // namespace detail

template <class T>
Matrix<T> identity_like(const GeneratorMatrices<T>& g, const Parameters<T>& p) {
    return Matrix<T>::identity(g.dim(), p.zero(), p.one());
}

template <class T>
RelationReport verify_defining_relations(const GeneratorMatrices<T>& g, const Parameters<T>& p) {
    RelationReport rep;
    const auto& s = g.sigma;
    const int k = static_cast<int>(s.size());
    auto fail = [&](std::optional<RelationFailure> f) {
        if (f) rep.failure = std::move(f);
        return rep.failure.has_value();
    };
    for (int i = 1; i + 1 <= k; ++i) {
        const auto& a = s[static_cast<std::size_t>(i - 1)];
        const auto& b = s[static_cast<std::size_t>(i)];
        if (fail(detail::compare(a * b * a, b * a * b, "braid", i, i + 1))) return rep;
    }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 2; j <= k; ++j) {
            const auto& a = s[static_cast<std::size_t>(i - 1)];
            const auto& b = s[static_cast<std::size_t>(j - 1)];
            if (fail(detail::compare(a * b, b * a, "commutation", i, j))) return rep;
        }
    const auto& t = g.tau;
    if (k >= 1) {
        const auto& s1 = s[0];
        if (fail(detail::compare(t * s1 * t * s1, s1 * t * s1 * t, "tau-braid", 0, 1))) return rep;
    }
    for (int i = 2; i <= k; ++i) {
        const auto& a = s[static_cast<std::size_t>(i - 1)];
        if (fail(detail::compare(t * a, a * t, "tau-commutation", 0, i))) return rep;
    }
    const Matrix<T> id = identity_like(g, p);
    for (int i = 1; i <= k; ++i) {
        const auto& a = s[static_cast<std::size_t>(i - 1)];
        if (fail(detail::compare(a * a, a * (p.q - p.q_inv) + id, "quadratic", i, i))) return rep;
    }
    if (g.tau_placeholder) return rep;
    Matrix<T> prod = id;
    for (const auto& vk : p.v) prod = prod * (t - id * vk);
    if (fail(detail::compare(prod, Matrix<T>(g.dim(), g.dim(), p.zero()), "cyclotomic", 0, 0))) return rep;
    return rep;
}

template <class T>
RelationReport verify_defining_relations(const BasicRepresentation<T>& r) {
    return verify_defining_relations(r.gens, r.params);
}

// ---------------------------------------------------------------- JM elements

/// J_1 = tau, J_{i+1} = sigma_i J_i sigma_i.
template <class T>
std::vector<Matrix<T>> jm_matrices(const GeneratorMatrices<T>& g) {
    std::vector<Matrix<T>> j{g.tau};
    for (const auto& s : g.sigma) j.push_back(s * j.back() * s);
    return j;
}

template <class T>
std::vector<Matrix<T>> jm_matrices(const BasicRepresentation<T>& r) {
    if (r.n == 0) return {};
    return jm_matrices(r.gens);
}

template <class T>
Matrix<T> sigma_inverse(const Matrix<T>& s, const Parameters<T>& p) {
    return s - Matrix<T>::identity(s.rows(), p.zero(), p.one()) * (p.q - p.q_inv);
}

// ---------------------------------------------------------------- sparse action

/// A vector of the seminormal module as tableau -> coefficient, for shapes too large
/// to hold dense matrices.
template <class T>
using SparseVector = std::map<std::string, std::pair<StandardMTableau, T>>;

template <class T>
void sparse_add(SparseVector<T>& v, const StandardMTableau& x, const T& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = v.try_emplace(x.to_string(), x, c);
    if (!fresh) {
        it->second.second += c;
        if (is_zero(it->second.second)) v.erase(it);
    }
}

template <class T>
SparseVector<T> sparse_apply_sigma(int i, const SparseVector<T>& v, const Parameters<T>& p) {
    SparseVector<T> out;
    const T qq = p.q - p.q_inv;
    for (const auto& [key, entry] : v) {
        const auto& [x, c] = entry;
        const T ci = tableau_content(x, i, p);
        const T cj = tableau_content(x, i + 1, p);
        const T den = cj - ci;
        sparse_add(out, x, T(c * qq * cj / den));
        if (auto y = apply_adjacent_transposition(x, i)) sparse_add(out, *y, T(c * (p.q * cj - p.q_inv * ci) / den));
    }
    return out;
}

template <class T>
SparseVector<T> sparse_apply_tau(const SparseVector<T>& v, const Parameters<T>& p) {
    SparseVector<T> out;
    for (const auto& [key, entry] : v) sparse_add(out, entry.first, T(entry.second * tableau_content(entry.first, 1, p)));
    return out;
}

/// J_k v through J_{k+1} = sigma_k J_k sigma_k.
template <class T>
SparseVector<T> sparse_apply_jm(int k, const SparseVector<T>& v, const Parameters<T>& p) {
    if (k == 1) return sparse_apply_tau(v, p);
    return sparse_apply_sigma(k - 1, sparse_apply_jm(k - 1, sparse_apply_sigma(k - 1, v, p), p), p);
}

// ---------------------------------------------------------------- Baxterization

/// (q a - b/q)/(a - b)
template <class T>
T spectral_f(const T& a, const T& b, const Parameters<T>& p) {
    return (p.q * a - p.q_inv * b) / (a - b);
}

/// A + (q - 1/q) b/(a - b) for an arbitrary square matrix A.
template <class T>
Matrix<T> baxterize(const Matrix<T>& a, const T& alpha, const T& beta, const Parameters<T>& p) {
    if (alpha == beta) throw SpectralCollisionError("spectral parameters coincide");
    return a + Matrix<T>::identity(a.rows(), p.zero(), p.one()) * ((p.q - p.q_inv) * beta / (alpha - beta));
}

template <class T>
Matrix<T> baxterized_sigma(const BasicRepresentation<T>& r, int i, const T& alpha, const T& beta) {
    return baxterize(r.sigma(i), alpha, beta, r.params);
}

template <class T>
struct SpectralParameters {
    T alpha, beta, gamma, delta;
};

/// (v1, v2, v1 q^2, v2 q^2) when m >= 2, otherwise (v1, 2 v1, v1 q^2, 3 v1).
template <class T>
SpectralParameters<T> default_spectral_parameters(const Parameters<T>& p) {
    const T& v1 = p.v.at(0);
    const T q2 = p.q_power(2);
    if (p.m >= 2) return {v1, p.v[1], v1 * q2, p.v[1] * q2};
    return {v1, v1 * p.constant(2), v1 * q2, v1 * p.constant(3)};
}

/// Checks sigma_i(a,b) sigma_i(b,a) = f(a,b) f(b,a), the spectral Yang-Baxter relation
/// and far commutation; the report names unitarity, yang-baxter or far-commutation.
template <class T>
RelationReport verify_baxter_relations(const BasicRepresentation<T>& r, const SpectralParameters<T>& sp) {
    RelationReport rep;
    const auto& p = r.params;
    const auto& [a, b, c, d] = sp;
    const Matrix<T> id = Matrix<T>::identity(r.dim(), p.zero(), p.one());
    for (int i = 1; i < r.n; ++i) {
        auto lhs = baxterized_sigma(r, i, a, b) * baxterized_sigma(r, i, b, a);
        if (auto f = detail::compare(lhs, id * (spectral_f(a, b, p) * spectral_f(b, a, p)), "unitarity", i, i)) {
            rep.failure = f;
            return rep;
        }
    }
    for (int i = 1; i + 1 < r.n; ++i) {
        auto lhs = baxterized_sigma(r, i, a, b) * baxterized_sigma(r, i + 1, a, c) * baxterized_sigma(r, i, b, c);
        auto rhs = baxterized_sigma(r, i + 1, b, c) * baxterized_sigma(r, i, a, c) * baxterized_sigma(r, i + 1, a, b);
        if (auto f = detail::compare(lhs, rhs, "yang-baxter", i, i + 1)) {
            rep.failure = f;
            return rep;
        }
    }
    for (int i = 1; i < r.n; ++i)
        for (int j = i + 2; j < r.n; ++j) {
            auto x = baxterized_sigma(r, i, a, b);
            auto y = baxterized_sigma(r, j, c, d);
            if (auto f = detail::compare(x * y, y * x, "far-commutation", i, j)) {
                rep.failure = f;
                return rep;
            }
        }
    return rep;
}

/// U_{i+1} = sigma_i J_i - J_i sigma_i for i = 1..n-1.
template <class T>
std::vector<Matrix<T>> intertwiner_matrices(const BasicRepresentation<T>& r) {
    auto j = jm_matrices(r);
    std::vector<Matrix<T>> u;
    for (int i = 1; i < r.n; ++i) {
        const auto& s = r.sigma(i);
        const auto& ji = j[static_cast<std::size_t>(i - 1)];
        u.push_back(s * ji - ji * s);
    }
    return u;
}

// ---------------------------------------------------------------- restriction

template <class T>
struct RestrictionBlock {
    MPartition shape;
    MNode removed;
    std::vector<std::size_t> indices;  // positions in the parent basis
    BasicRepresentation<T> rep;
};

template <class T>
Matrix<T> submatrix(const Matrix<T>& a, const std::vector<std::size_t>& idx) {
    Matrix<T> s(idx.size(), idx.size(), a.zero());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = a(idx[i], idx[j]);
    return s;
}

/// Splits the basis by the position of n; each block carries tau and sigma_1..sigma_{n-2}.
template <class T>
std::vector<RestrictionBlock<T>> restriction(const BasicRepresentation<T>& r) {
    if (r.n < 1) throw PreconditionError("restriction needs n >= 1");
    std::vector<RestrictionBlock<T>> out;
    for (const MNode& x : boundary_nodes(r.shape, BoundaryKind::Removable)) {
        RestrictionBlock<T> b;
        b.removed = x;
        b.shape = r.shape.without_node(x);
        for (std::size_t k = 0; k < r.basis.size(); ++k)
            if (r.basis[k].node_of(r.n) == x) {
                b.indices.push_back(k);
                b.rep.basis.push_back(r.basis[k].restricted());
            }
        b.rep.m = r.m;
        b.rep.n = r.n - 1;
        b.rep.shape = b.shape;
        b.rep.params = r.params;
        if (b.rep.n == 0) {
            b.rep.gens.tau = Matrix<T>::identity(1, r.params.zero(), r.params.one());
            b.rep.gens.tau_placeholder = true;
        } else
            b.rep.gens.tau = submatrix(r.gens.tau, b.indices);
        for (int i = 1; i + 1 < r.n; ++i) b.rep.gens.sigma.push_back(submatrix(r.sigma(i), b.indices));
        out.push_back(std::move(b));
    }
    return out;
}

/// Whether sigma_1..sigma_{n-2} and tau have no entries between distinct restriction blocks.
template <class T>
bool restriction_is_block_diagonal(const BasicRepresentation<T>& r, const std::vector<RestrictionBlock<T>>& blocks) {
    std::vector<std::size_t> owner(r.dim(), 0);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (auto k : blocks[b].indices) owner[k] = b;
    std::vector<const Matrix<T>*> ms{&r.gens.tau};
    for (int i = 1; i + 1 < r.n; ++i) ms.push_back(&r.sigma(i));
    for (const auto* m : ms)
        for (std::size_t a = 0; a < r.dim(); ++a)
            for (std::size_t c = 0; c < r.dim(); ++c)
                if (owner[a] != owner[c] && !is_zero((*m)(a, c))) return false;
    return true;
}

// ---------------------------------------------------------------- idempotents

/// E_X evaluated in an ambient representation through its JM matrices.
template <class T>
Matrix<T> idempotent(const StandardMTableau& x, const Parameters<T>& p, const std::vector<Matrix<T>>& jm,
                     std::size_t dim) {
    if (x.m() != p.m) throw PreconditionError("tableau and representation have different m");
    if (static_cast<std::size_t>(x.size()) != jm.size())
        throw PreconditionError("tableau size differs from the ambient n");
    Matrix<T> e = Matrix<T>::identity(dim, p.zero(), p.one());
    const Matrix<T> id = e;
    MPartition mu = MPartition::empty(p.m);
    for (int k = 1; k <= x.size(); ++k) {
        const MNode& a = x.node_of(k);
        const T ca = node_content(a, p);
        for (const MNode& b : boundary_nodes(mu, BoundaryKind::Addable)) {
            if (b == a) continue;
            const T cb = node_content(b, p);
            e = e * ((jm[static_cast<std::size_t>(k - 1)] - id * cb) * (p.one() / (ca - cb)));
        }
        mu = mu.with_node(a);
    }
    return e;
}

template <class T>
Matrix<T> idempotent(const StandardMTableau& x, const BasicRepresentation<T>& ambient) {
    return idempotent(x, ambient.params, jm_matrices(ambient), ambient.dim());
}

template <class T>
struct MatrixUnitReport {
    bool equal = false;
    bool nonzero = false;
    Matrix<T> left;
    bool ok() const { return equal && nonzero; }
};

/// (sigma_i + (q-1/q)c_{i+1}/(c_i - c_{i+1})) E_X = E_{X^{s_i}} (sigma_i + (q-1/q)c_i/(c_{i+1} - c_i)).
template <class T>
MatrixUnitReport<T> verify_matrix_unit_identity(const BasicRepresentation<T>& r, int i, const StandardMTableau& x) {
    auto y = apply_adjacent_transposition(x, i);
    if (!y) throw PreconditionError("s_" + std::to_string(i) + " applied to " + x.to_string() + " is not standard");
    const auto& p = r.params;
    auto jm = jm_matrices(r);
    const T ci = tableau_content(x, i, p);
    const T cj = tableau_content(x, i + 1, p);
    const T qq = p.q - p.q_inv;
    const Matrix<T> id = Matrix<T>::identity(r.dim(), p.zero(), p.one());
    MatrixUnitReport<T> out;
    out.left = (r.sigma(i) + id * (qq * cj / (ci - cj))) * idempotent(x, p, jm, r.dim());
    auto right = idempotent(*y, p, jm, r.dim()) * (r.sigma(i) + id * (qq * ci / (cj - ci)));
    out.equal = out.left == right;
    out.nonzero = !out.left.is_zero();
    return out;
}

// ---------------------------------------------------------------- alternative vacuum

/// Diagonal constant relating the two vacuum conventions: the product of (q c_j - c_k/q)
/// over pairs j < k whose contents are neither equal nor q^{+-2} apart.
template <class T>
T alternative_vacuum_constant(const StandardMTableau& x, const Parameters<T>& p) {
    T c = p.one();
    const T q2 = p.q_power(2), qm2 = p.q_power(-2);
    for (int j = 1; j <= x.size(); ++j)
        for (int k = j + 1; k <= x.size(); ++k) {
            const T a = tableau_content(x, j, p), b = tableau_content(x, k, p);
            if (a == b || a == b * q2 || a == b * qm2) continue;
            c *= p.q * a - p.q_inv * b;
        }
    return c;
}

/// The product over i with X^{s_i} standard of (q c_i - c_{i+1}/q). Kept for comparison; it is not a valid
/// change of basis in general.
template <class T>
T alternative_vacuum_constant_adjacent(const StandardMTableau& x, const Parameters<T>& p) {
    T c = p.one();
    for (int i = 1; i < x.size(); ++i)
        if (apply_adjacent_transposition(x, i))
            c *= p.q * tableau_content(x, i, p) - p.q_inv * tableau_content(x, i + 1, p);
    return c;
}

/// Whether tilde = C^{-1} V C on every generator for C = diag(constants).
template <class T>
bool related_by_diagonal(const BasicRepresentation<T>& v, const BasicRepresentation<T>& tilde, const std::vector<T>& c) {
    auto conj = [&](const Matrix<T>& a) {
        Matrix<T> b = a;
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                if (!is_zero(a(i, j))) b(i, j) = a(i, j) * c[j] / c[i];
        return b;
    };
    if (!(conj(v.gens.tau) == tilde.gens.tau)) return false;
    for (std::size_t i = 0; i < v.gens.sigma.size(); ++i)
        if (!(conj(v.gens.sigma[i]) == tilde.gens.sigma[i])) return false;
    return true;
}

// ---------------------------------------------------------------- affine H_2

struct H2Representation {
    Matrix<RatFn> x, y, sigma;
    std::size_t dim() const { return sigma.rows(); }
};

/// X -> a, Y -> q^{2e} a, sigma -> e q^e with e = +-1.
H2Representation h2_one_dimensional(const RatFn& a, int epsilon);
/// The diagonalized two-dimensional irrep; DegeneracyError when b = a or b = q^{+-2} a.
H2Representation h2_two_dimensional(const RatFn& a, const RatFn& b);
/// One-dimensional when b = q^{+-2} a, two-dimensional otherwise.
H2Representation h2_affine_irreps(const RatFn& a, const RatFn& b);
bool verify_h2_relations(const H2Representation& h);

// ---------------------------------------------------------------- words and traces

struct GeneratorLetter {
    int index = 0;  // 0 is tau, i >= 1 is sigma_i
    bool inverse = false;
    bool operator==(const GeneratorLetter&) const = default;
};

struct GeneratorWord {
    std::vector<GeneratorLetter> letters;
    std::string to_string() const;
};

/// Space-separated letters t, s1, s2, ... each optionally followed by ^-1; "" or "1" is the empty word.
GeneratorWord parse_word(std::string_view text);

template <class T>
Matrix<T> evaluate_word(const GeneratorMatrices<T>& g, const Parameters<T>& p, const GeneratorWord& w) {
    Matrix<T> acc = Matrix<T>::identity(g.dim(), p.zero(), p.one());
    for (const auto& l : w.letters) {
        if (l.index < 0 || l.index > static_cast<int>(g.sigma.size()))
            throw LookupError("generator index " + std::to_string(l.index) + " is out of range");
        if (l.index == 0) {
            acc = acc * (l.inverse ? inverse(g.tau, p.one()) : g.tau);
        } else {
            const auto& s = g.sigma[static_cast<std::size_t>(l.index - 1)];
            acc = acc * (l.inverse ? sigma_inverse(s, p) : s);
        }
    }
    return acc;
}

template <class T>
T word_trace(const GeneratorMatrices<T>& g, const Parameters<T>& p, const GeneratorWord& w) {
    return evaluate_word(g, p, w).trace();
}

template <class T>
T word_trace(const BasicRepresentation<T>& r, const GeneratorWord& w) {
    return word_trace(r.gens, r.params, w);
}

template <class T>
GeneratorMatrices<T> direct_sum(const GeneratorMatrices<T>& a, const GeneratorMatrices<T>& b) {
    if (a.sigma.size() != b.sigma.size()) throw SizeMismatchError("direct sum of representations with different n");
    GeneratorMatrices<T> r;
    r.tau = direct_sum(a.tau, b.tau);
    for (std::size_t i = 0; i < a.sigma.size(); ++i) r.sigma.push_back(direct_sum(a.sigma[i], b.sigma[i]));
    return r;
}

// ---------------------------------------------------------------- commutant

/// Dimension of {M : M A = A M for every generator A}, by exact sparse elimination.
std::size_t commutant_dimension(const GeneratorMatrices<Rational>& g);
/// Specializes at the given point (which must be generic) and computes the commutant dimension.
std::size_t commutant_dimension(const Representation& r, const ParamSpec& spec);

// ---------------------------------------------------------------- serialization

std::string scalar_text(const RatFn& x);
std::string scalar_text(const Rational& x);

nlohmann::ordered_json matrix_json(const Matrix<RatFn>& a);
nlohmann::ordered_json matrix_json(const Matrix<Rational>& a);
/// {shape, basis, generators: {tau, sigma}} with entries rendered as text.
nlohmann::ordered_json representation_json(const Representation& r);
nlohmann::ordered_json representation_json(const NumericRepresentation& r);
/// Parses the symbolic schema back; throws ParseError on malformed entries.
Representation representation_from_json(const nlohmann::ordered_json& j);

}  // namespace cyclo

#endif
