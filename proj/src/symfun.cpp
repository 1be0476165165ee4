#include "qsym/symfun.hpp"

#include <algorithm>

#include "qsym/linalg.hpp"

namespace qsym {

namespace {

void check_spec(const VariableSpec &spec)
{
    if (spec.k < 0 || spec.m < 0) {
        throw precondition_error("spec " + spec.to_string() + " has a negative part");
    }
}

// h_0..h_D (or e_0..e_D) on the alphabet; out-of-range indices read as zero.
class Sequence {
public:
    Sequence(const Alphabet &a, int degree, bool elementary) : zero_(a.nvars)
    {
        const auto d = static_cast<std::size_t>(std::max(degree, 0));
        const std::span<const Monomial> none;
        TruncatedSeries s = elementary ? TruncatedSeries::from_linear_factors(a.monomials, none, d, a.nvars)
                                       : TruncatedSeries::from_linear_factors(none, a.monomials, d, a.nvars);
        values_ = s.coeffs();
    }

    const LaurentPoly &operator()(int r) const
    {
        if (r < 0 || r >= static_cast<int>(values_.size())) {
            return zero_;
        }
        return values_[static_cast<std::size_t>(r)];
    }

private:
    LaurentPoly zero_;
    std::vector<LaurentPoly> values_;
};

LaurentPoly jacobi_trudi(const Partition &lambda, const Partition &mu, const Alphabet &a, bool elementary)
{
    if (!lambda.contains(mu)) {
        return LaurentPoly(a.nvars);
    }
    const int l = lambda.length();
    const Sequence seq(a, lambda.empty() ? 0 : lambda[0] + l, elementary);
    RingMatrix m(static_cast<std::size_t>(l), static_cast<std::size_t>(l), a.nvars);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) {
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = seq(lambda[i] - mu[j] - i + j);
        }
    }
    return determinant(m);
}

} // namespace

Alphabet Alphabet::symplectic(const VariableSpec &spec)
{
    check_spec(spec);
    const auto n = static_cast<std::size_t>(spec.n());
    Alphabet a{n, {}};
    for (std::size_t i = 0; i < static_cast<std::size_t>(spec.k); ++i) {
        a.monomials.push_back(Monomial::variable(n, i, 1));
        a.monomials.push_back(Monomial::variable(n, i, -1));
    }
    return a;
}

Alphabet Alphabet::type_a(const VariableSpec &spec)
{
    check_spec(spec);
    const auto n = static_cast<std::size_t>(spec.n());
    Alphabet a{n, {}};
    for (auto i = static_cast<std::size_t>(spec.k); i < n; ++i) {
        a.monomials.push_back(Monomial::variable(n, i, 1));
    }
    return a;
}

Alphabet Alphabet::combined(const VariableSpec &spec)
{
    Alphabet a = symplectic(spec);
    const Alphabet rest = type_a(spec);
    a.monomials.insert(a.monomials.end(), rest.monomials.begin(), rest.monomials.end());
    return a;
}

Alphabet Alphabet::plain(std::size_t n)
{
    Alphabet a{n, {}};
    for (std::size_t i = 0; i < n; ++i) {
        a.monomials.push_back(Monomial::variable(n, i, 1));
    }
    return a;
}

LaurentPoly complete_h(int r, const Alphabet &a) { return Sequence(a, r, false)(r); }

LaurentPoly elementary_e(int r, const Alphabet &a) { return Sequence(a, r, true)(r); }

LaurentPoly schur_skew(const Partition &lambda, const Partition &mu, const Alphabet &a)
{
    return jacobi_trudi(lambda, mu, a, false);
}

LaurentPoly schur_skew_e(const Partition &lambda, const Partition &mu, const Alphabet &a)
{
    return jacobi_trudi(lambda.transpose(), mu.transpose(), a, true);
}

LaurentPoly symp_schur_on(const Partition &lambda, const Alphabet &a)
{
    const int l = lambda.length();
    const Sequence h(a, lambda.empty() ? 0 : lambda[0] + l, false);
    RingMatrix m(static_cast<std::size_t>(l), static_cast<std::size_t>(l), a.nvars);
    // 1-based entry (i,j) is h_{lambda_i-i+j} + h_{lambda_i-i-j+2}; in column 1 both
    // terms coincide and the halved entry is a single h.
    for (int i = 1; i <= l; ++i) {
        const auto row = static_cast<std::size_t>(i - 1);
        m(row, 0) = h(lambda[i - 1] - i + 1);
        for (int j = 2; j <= l; ++j) {
            m(row, static_cast<std::size_t>(j - 1)) = h(lambda[i - 1] - i + j) + h(lambda[i - 1] - i - j + 2);
        }
    }
    return determinant(m);
}

LaurentPoly symp_schur(const Partition &lambda, int k)
{
    if (lambda.length() > k) {
        throw precondition_error("symplectic Schur polynomial needs l(lambda) <= k, got l = "
                                 + std::to_string(lambda.length()) + ", k = " + std::to_string(k));
    }
    return symp_schur_on(lambda, Alphabet::symplectic({k, 0}));
}

LaurentPoly inter_schur(const Partition &lambda, const VariableSpec &spec, SchurMethod method)
{
    check_spec(spec);
    if (lambda.length() > spec.n()) {
        throw precondition_error("partition length " + std::to_string(lambda.length()) + " exceeds n = "
                                 + std::to_string(spec.n()));
    }
    if (method == SchurMethod::tableau) {
        return spt_weight_sum(spec, lambda, Partition());
    }
    const Alphabet c = Alphabet::symplectic(spec);
    const Alphabet a = Alphabet::type_a(spec);
    LaurentPoly sum(static_cast<std::size_t>(spec.n()));
    for (const Partition &mu : partitions_between(Partition(), lambda)) {
        // s^C_mu(x_1..x_k) vanishes for l(mu) > k.
        if (mu.length() > spec.k) {
            continue;
        }
        LaurentPoly left = symp_schur_on(mu, c);
        if (left.is_zero()) {
            continue;
        }
        sum += left * schur_skew(lambda, mu, a);
    }
    return sum;
}

bool check_union_identity(const Partition &lambda, const VariableSpec &spec)
{
    check_spec(spec);
    if (lambda.length() > spec.k + 1) {
        throw precondition_error("union identity needs l(lambda) <= k+1");
    }
    return inter_schur(lambda, spec) == symp_schur_on(lambda, Alphabet::combined(spec));
}

} // namespace qsym
