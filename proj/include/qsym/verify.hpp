#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/linalg.hpp"
#include "qsym/ring.hpp"
#include "qsym/tableaux.hpp"

namespace qsym {

/// Bounds for the verification suites: partition weight and k+m.
struct VerifyBudget {
    int max_weight = 5;
    int max_vars = 3;
};

struct PropertyReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
    std::string to_string() const;
};

/// Suites: ring, tableaux, schur, qfun, lgv, all. Reports are sorted by name.
std::vector<PropertyReport> run_suite(std::string_view suite, const VerifyBudget &budget);

/// All specs with k, m >= 0 and k+m <= max_vars.
std::vector<VariableSpec> specs_up_to(int max_vars);

/// Invariance under x_i -> x_i^-1 for i <= k and under every transposition
/// of two variables among x_{k+1..n}.
bool is_w_invariant(const LaurentPoly &p, const VariableSpec &spec);

/// Sparse random polynomial: up to `terms` terms, exponents in [-2, 2],
/// coefficients in [-3, 3].
LaurentPoly random_laurent(std::mt19937 &rng, std::size_t n, int terms);
RingMatrix random_skew_matrix(std::mt19937 &rng, std::size_t size, std::size_t n);

} // namespace qsym
