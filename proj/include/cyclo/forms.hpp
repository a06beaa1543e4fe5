#ifndef CYCLO_FORMS_HPP
#define CYCLO_FORMS_HPP

#include <string>
#include <vector>

#include "cyclo/repn.hpp"

namespace cyclo {

/// Diagonal pairing on the tableau basis of one shape.
struct GramMatrix {
    MPartition shape;
    std::vector<StandardMTableau> basis;
    std::vector<RatFn> diagonal;

    Matrix<RatFn> matrix() const;
    Matrix<RatFn> inverse_matrix() const;
};

/// Product over pairs j < k whose contents are neither equal nor q^{+-2} apart of
/// (c_j/q - q c_k)/(c_j - c_k).
template <class T>
T gram_entry(const StandardMTableau& x, const Parameters<T>& p) {
    T g = p.one();
    const T q2 = p.q_power(2), qm2 = p.q_power(-2);
    for (int j = 1; j <= x.size(); ++j)
        for (int k = j + 1; k <= x.size(); ++k) {
            const T a = tableau_content(x, j, p), b = tableau_content(x, k, p);
            if (a == b || a == b * q2 || a == b * qm2) continue;
            g *= (p.q_inv * a - p.q * b) / (a - b);
        }
    return g;
}

GramMatrix gram_matrix(const MPartition& lambda);

/// For m = 1: the product of (a_j - a_k - 1)_q/(a_j - a_k)_q with a the classical contents.
RatFn gram_entry_qnumber(const StandardMTableau& x);

/// <X^{s_i}, X^{s_i}> / <X, X> = (q c_i - c_{i+1}/q)/(c_i/q - q c_{i+1}).
RatFn neighbour_ratio(const StandardMTableau& x, int i);

enum class InvarianceKind {
    BilinearSMinus,  // A^T G = G A
    OmegaS,          // A^T G omega(A) = G
    VarpiS,          // same identity: conjugating rational coefficients is the identity
};

struct FormReport {
    bool ok = true;
    std::string generator;  // "tau" or "sigma_i"
    std::string law;
    std::size_t row = 0, col = 0;

    std::string describe() const;
};

Matrix<RatFn> apply_omega(const Matrix<RatFn>& a);

/// Throws BasisMismatchError when G was built for a different basis.
FormReport verify_invariance(const Representation& rep, const GramMatrix& g, InvarianceKind kind);

/// A G^{-1} (A^{-1})^T = G^{-1} and A G^{-1} omega(A)^T = G^{-1} for every generator; these are the
/// unitarity laws of the rescaled basis with the rescaling squared away (d^2 = G^{-1}).
FormReport verify_orthogonality_squared(const Representation& rep, const GramMatrix& g);

nlohmann::ordered_json gram_json(const GramMatrix& g);

}  // namespace cyclo

#endif
