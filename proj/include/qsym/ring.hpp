#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qsym/errors.hpp"

namespace qsym {

using Integer = mpz_class;

/// Exponent vector of a Laurent monomial x_1^{e_1} ... x_n^{e_n}.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

    /// x_{i+1}^e in n variables (i is 0-based).
    static Monomial variable(std::size_t n, std::size_t i, int e = 1);

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    int &operator[](std::size_t i) { return exps_[i]; }
    std::span<const int> exps() const { return exps_; }

    bool is_one() const;
    Monomial inverse() const;
    Monomial &operator*=(const Monomial &other);
    friend Monomial operator*(Monomial a, const Monomial &b) { return a *= b; }

    friend bool operator==(const Monomial &, const Monomial &) = default;

    std::string to_string() const;

private:
    std::vector<int> exps_;
};

/// Canonical term order: lexicographic on exponent vectors, where the
/// exponents of one variable rank as x^2 < x < x^-1 < x^-2 < ... < 1.
struct MonomialOrder {
    bool operator()(const Monomial &a, const Monomial &b) const;
};

/// Sparse Laurent polynomial in a fixed number of variables with
/// arbitrary-precision integer coefficients. No stored coefficient is zero.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Integer, MonomialOrder>;

    explicit LaurentPoly(std::size_t n = 0) : n_(n) {}

    static LaurentPoly constant(std::size_t n, const Integer &c);
    static LaurentPoly one(std::size_t n) { return constant(n, 1); }
    static LaurentPoly variable(std::size_t n, std::size_t i, int e = 1);
    static LaurentPoly term(const Monomial &m, const Integer &c = 1);

    std::size_t nvars() const { return n_; }
    const TermMap &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    Integer coeff(const Monomial &m) const;

    /// Adds c*m in place, dropping the term if it cancels.
    void add_term(const Monomial &m, const Integer &c);

    LaurentPoly &operator+=(const LaurentPoly &other);
    LaurentPoly &operator-=(const LaurentPoly &other);
    LaurentPoly &operator*=(const LaurentPoly &other);
    LaurentPoly &operator*=(const Integer &c);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(LaurentPoly a, const Integer &c) { return a *= c; }
    friend LaurentPoly operator*(const Integer &c, LaurentPoly a) { return a *= c; }

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    LaurentPoly pow(unsigned e) const;

    /// Ring homomorphism x_i -> images[i]. Variables occurring with a
    /// negative exponent must map to units (a single term with coefficient +-1).
    LaurentPoly substitute(std::span<const LaurentPoly> images) const;

    /// Sum of coefficients (value at x_1 = ... = x_n = 1).
    Integer coefficient_sum() const;

    std::string to_string() const;
    static LaurentPoly from_string(std::string_view text, std::size_t n);

    std::string to_json() const;
    static LaurentPoly from_json(std::string_view text);

private:
    void check_compatible(const LaurentPoly &other) const;
    void check_limit() const;

    std::size_t n_;
    TermMap terms_;
};

inline std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << p.to_string(); }

/// Optional process-wide guard on polynomial size (0 disables it).
void set_max_terms(std::size_t limit);
std::size_t max_terms();

/// Power series in z truncated after z^D, with Laurent polynomial coefficients.
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t nvars, std::size_t degree);

    std::size_t nvars() const { return n_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    const LaurentPoly &operator[](std::size_t d) const { return coeffs_[d]; }
    LaurentPoly &operator[](std::size_t d) { return coeffs_[d]; }
    const std::vector<LaurentPoly> &coeffs() const { return coeffs_; }

    /// Multiplies in place by (1 + sign*u*z).
    void mul_linear(const Monomial &u, int sign);
    /// Multiplies in place by 1/(1 - u*z).
    void div_linear(const Monomial &u);

    TruncatedSeries &operator*=(const TruncatedSeries &other);
    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    /// Expansion of prod (1 + u z) / prod (1 - v z) up to z^D.
    static TruncatedSeries from_linear_factors(std::span<const Monomial> numerators,
                                               std::span<const Monomial> denominators,
                                               std::size_t degree, std::size_t nvars);

private:
    std::size_t n_;
    std::vector<LaurentPoly> coeffs_;
};

} // namespace qsym
