#ifndef CYCLO_SMASH_HPP
#define CYCLO_SMASH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/repn.hpp"

namespace cyclo {

// ---------------------------------------------------------------- push-through

/// a * Id + b * sigma_i; for tau pushes b is zero and index is 0.
struct AffineResidual {
    RatFn a;
    RatFn b;
    int index = 0;
};

struct PushTerm {
    RatFn coefficient;
    StandardMTableau tableau;
    AffineResidual residual;
};

struct PushResult {
    std::vector<PushTerm> terms;
};

/// Moves tau (index 0) or sigma_index to the right of the tableau generator.
/// At most two terms; the swapped term is omitted when the swap is not standard.
PushResult push_through(int index, const StandardMTableau& x);

/// A linear combination of X * w, with w a word in the free algebra on tau (letter 0) and
/// sigma_i (letter i).
struct SmashTerm {
    StandardMTableau tableau;
    std::vector<int> word;
    RatFn coefficient;
};
using SmashElement = std::vector<SmashTerm>;

/// Left multiplication by a generator, with every tableau moved back to the left.
SmashElement left_multiply(int index, const SmashElement& e);

/// J_k * X rewritten as a combination of X' * (word).
SmashElement push_jm(int k, const StandardMTableau& x);

/// Groups the terms of e by tableau and evaluates each residual in every irreducible module
/// of the algebra. Passes when J_k X = c(X|k) X holds in the quotient: the residual of X is
/// c(X|k) and the residual of every other tableau vanishes.
bool verify_jm_push(int k, const StandardMTableau& x, std::string* why = nullptr);

// ---------------------------------------------------------------- tensor modules

template <class T>
struct TensorModule {
    std::vector<MPartition> shapes;
    std::vector<std::vector<StandardMTableau>> factor_bases;
    std::vector<std::vector<std::size_t>> basis;  // index tuples, lexicographic
    GeneratorMatrices<T> gens;
    Parameters<T> params;

    std::size_t dim() const { return basis.size(); }
    int n() const { return shapes.empty() ? 0 : shapes.front().size(); }
};

/// Module on the tensor product of the given factor bases. The generators are pushed through
/// the factors left to right and the final residual acts on the vacuum (sigma_i = q).
template <class T>
TensorModule<T> build_tensor_module_on(const std::vector<std::vector<StandardMTableau>>& bases,
                                       const Parameters<T>& p) {
    if (bases.empty()) throw PreconditionError("a tensor module needs at least one factor");
    TensorModule<T> t;
    t.params = p;
    t.factor_bases = bases;
    const int n = bases.front().empty() ? 0 : bases.front().front().size();
    for (const auto& b : bases) {
        if (b.empty()) throw PreconditionError("empty factor basis");
        if (b.front().size() != n) throw SizeMismatchError("tensor factors must have the same size");
        if (b.front().m() != p.m) throw ArityError("factor has a different number of components");
        t.shapes.push_back(b.front().shape());
    }

    std::vector<std::vector<std::size_t>> tuples{{}};
    for (auto f = bases.rbegin(); f != bases.rend(); ++f) {
        std::vector<std::vector<std::size_t>> next;
        for (std::size_t k = 0; k < f->size(); ++k)
            for (const auto& tail : tuples) {
                std::vector<std::size_t> v{k};
                v.insert(v.end(), tail.begin(), tail.end());
                next.push_back(std::move(v));
            }
        tuples = std::move(next);
    }
    t.basis = std::move(tuples);

    const std::size_t total = t.basis.size();
    if (n == 0) {
        t.gens.tau = Matrix<T>::identity(total, p.zero(), p.one());
        t.gens.tau_placeholder = true;
        return t;
    }

    // rest[i-1] is sigma_i on the factors after the current one, starting from the vacuum.
    std::vector<Matrix<T>> rest(static_cast<std::size_t>(n - 1), Matrix<T>(1, 1, p.zero()));
    for (auto& r : rest) r(0, 0) = p.q;
    const T qq = p.q - p.q_inv;
    for (auto f = bases.rbegin(); f != bases.rend(); ++f) {
        const auto& b = *f;
        const std::size_t d = b.size(), r = rest.empty() ? 1 : rest.front().rows();
        std::vector<Matrix<T>> next;
        for (int i = 1; i < n; ++i) {
            Matrix<T> s(d * r, d * r, p.zero());
            const auto& ri = rest[static_cast<std::size_t>(i - 1)];
            for (std::size_t x = 0; x < d; ++x) {
                const T ci = tableau_content(b[x], i, p), cj = tableau_content(b[x], i + 1, p);
                const T diag = qq * cj / (cj - ci);
                for (std::size_t u = 0; u < r; ++u) s(x * r + u, x * r + u) = diag;
                auto y = apply_adjacent_transposition(b[x], i);
                if (!y) continue;
                std::size_t yi = 0;
                while (yi < d && !(b[yi] == *y)) ++yi;
                if (yi == d) throw LookupError("factor basis is missing " + y->to_string());
                const T shift = qq * ci / (cj - ci);
                for (std::size_t u = 0; u < r; ++u) {
                    for (std::size_t w = 0; w < r; ++w) s(yi * r + u, x * r + w) = ri(u, w);
                    s(yi * r + u, x * r + u) += shift;
                }
            }
            next.push_back(std::move(s));
        }
        rest = std::move(next);
    }
    t.gens.sigma = std::move(rest);

    const std::size_t tail = total / bases.front().size();
    std::vector<T> first;
    for (const auto& x : bases.front())
        for (std::size_t u = 0; u < tail; ++u) first.push_back(tableau_content(x, 1, p));
    t.gens.tau = Matrix<T>::diagonal(first, p.zero());
    return t;
}

template <class T>
TensorModule<T> build_tensor_module(const std::vector<MPartition>& shapes, const Parameters<T>& p) {
    std::vector<std::vector<StandardMTableau>> bases;
    for (const auto& s : shapes) {
        if (!s.is_valid()) throw PreconditionError("invalid m-partition " + s.to_string());
        if (s.size() != shapes.front().size()) throw SizeMismatchError("tensor factors must have the same size");
        bases.push_back(enumerate_standard_tableaux(s));
    }
    return build_tensor_module_on(bases, p);
}

TensorModule<RatFn> build_tensor_module(const std::vector<MPartition>& shapes);
TensorModule<Rational> build_tensor_module(const std::vector<MPartition>& shapes, const ParamSpec& spec);

using Multiset = std::vector<std::pair<MPartition, std::size_t>>;

/// Multiplicities through idempotent ranks. Every tableau of a shape is tried and the ranks
/// must agree (a DegeneracyError otherwise). Shapes with multiplicity zero are omitted.
Multiset decompose(const GeneratorMatrices<Rational>& g, const Parameters<Rational>& p);
Multiset decompose(const TensorModule<RatFn>& t, const ParamSpec& spec);
Multiset decompose(const TensorModule<Rational>& t);

/// dim V_{lambda'} copies of V_lambda for each pair, or the dimension product for longer lists.
Multiset expected_decomposition(const std::vector<MPartition>& shapes);

std::string multiset_to_string(const Multiset& s);

struct RestrictionComparison {
    Multiset restricted;   // decomposition of the restricted tensor module
    Multiset factorwise;   // sum over restricted factor tuples of their tensor modules
    bool ok() const { return restricted == factorwise; }
};

RestrictionComparison verify_restriction_compatibility(const std::vector<MPartition>& shapes, const ParamSpec& spec);

// ---------------------------------------------------------------- worked tensor examples

struct WorkedTensorCase {
    std::string name;
    std::vector<std::vector<StandardMTableau>> factor_bases;
    /// Each subspace is a list of spanning vectors; a vector is a list of (index tuple, coefficient).
    std::vector<std::vector<std::vector<std::pair<std::vector<std::size_t>, RatFn>>>> subspaces;
    /// Target matrices of sigma_1..sigma_{n-1}; tau acts by v1.
    std::vector<Matrix<RatFn>> target;
};

std::vector<WorkedTensorCase> worked_tensor_cases();

/// The two small m = 1 modules the subspaces must reproduce, in the order used by the cases.
std::vector<Matrix<RatFn>> target_rep21();
std::vector<Matrix<RatFn>> target_rep211();

struct SubspaceResult {
    std::string case_name;
    std::size_t subspace = 0;
    bool invariant = false;
    bool full_rank = false;
    std::string failure;
};

struct SubspaceReport {
    std::vector<SubspaceResult> subspaces;
    std::vector<std::string> case_failures;  // independence or dimension-count problems
    bool ok() const;
};

SubspaceReport verify_worked_subspaces();
SubspaceReport verify_worked_subspaces(const std::vector<WorkedTensorCase>& cases);

nlohmann::ordered_json multiset_json(const Multiset& s);
nlohmann::ordered_json tensor_json(const TensorModule<RatFn>& t);

}  // namespace cyclo

#endif
