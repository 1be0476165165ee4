#pragma once

#include <vector>

#include "qsym/ring.hpp"
#include "qsym/shapes.hpp"
#include "qsym/tableaux.hpp"

namespace qsym {

/// Multiset of variable images, all in one ambient ring of nvars variables.
struct Alphabet {
    std::size_t nvars = 0;
    std::vector<Monomial> monomials;

    /// x_1, x_1^-1, ..., x_k, x_k^-1 in n = k+m variables.
    static Alphabet symplectic(const VariableSpec &spec);
    /// x_{k+1}, ..., x_n.
    static Alphabet type_a(const VariableSpec &spec);
    /// Union of the two above.
    static Alphabet combined(const VariableSpec &spec);
    /// x_1, ..., x_n.
    static Alphabet plain(std::size_t n);
};

LaurentPoly complete_h(int r, const Alphabet &a);
LaurentPoly elementary_e(int r, const Alphabet &a);

/// det[h_{lambda_i - mu_j - i + j}]; zero when mu is not inside lambda.
LaurentPoly schur_skew(const Partition &lambda, const Partition &mu, const Alphabet &a);
/// det[e_{lambda'_i - mu'_j - i + j}].
LaurentPoly schur_skew_e(const Partition &lambda, const Partition &mu, const Alphabet &a);

/// Symplectic Schur determinant on an arbitrary alphabet, first column halved.
LaurentPoly symp_schur_on(const Partition &lambda, const Alphabet &a);
/// Symplectic Schur polynomial in x_1^{+-1}, ..., x_k^{+-1}; requires l(lambda) <= k.
LaurentPoly symp_schur(const Partition &lambda, int k);

enum class SchurMethod { definition, tableau };

/// Intermediate symplectic Schur polynomial in n = k+m variables.
LaurentPoly inter_schur(const Partition &lambda, const VariableSpec &spec,
                        SchurMethod method = SchurMethod::definition);

/// Compares inter_schur with the symplectic determinant on the combined
/// alphabet. Requires l(lambda) <= k+1.
bool check_union_identity(const Partition &lambda, const VariableSpec &spec);

} // namespace qsym
