#pragma once

#include <deque>
#include <map>
#include <tuple>
#include <vector>

#include "qsym/linalg.hpp"
#include "qsym/ring.hpp"
#include "qsym/shapes.hpp"
#include "qsym/tableaux.hpp"

namespace qsym {

/// Which one-row generator a Q-value is built from. A uses x_{k+1}..x_n,
/// C uses x_1^{+-1}..x_k^{+-1}, I uses all of them. Every value lives in the
/// n-variable ring of the context's spec.
enum class QFamily { A, C, I };

/// Memo of one-row and two-row Q-values for one spec. Not thread-safe;
/// concurrent tasks each own a context.
class QContext {
public:
    explicit QContext(const VariableSpec &spec);

    const VariableSpec &spec() const { return spec_; }
    std::size_t nvars() const { return static_cast<std::size_t>(spec_.n()); }

    /// Coefficient of z^l in the family's generating series; 0 for l < 0.
    const LaurentPoly &q(QFamily f, int l);
    /// Q_{(r,s)} with Q_{(r,r)} = 0, Q_{(s,r)} = -Q_{(r,s)} and Q_{(r,0)} = q_r.
    /// The I family is evaluated through qI_def on the two-row shape.
    const LaurentPoly &two_row(QFamily f, int r, int s);

    /// Skew Pfaffian for the family; zero when mu is not inside lambda.
    LaurentPoly jp(QFamily f, const StrictPartition &lambda, const StrictPartition &mu);
    /// The skew-symmetric block matrix behind jp, after padding.
    RingMatrix jp_matrix(QFamily f, const StrictPartition &lambda, const StrictPartition &mu);

    /// Sum over strict nu between mu and lambda of C(nu/mu) * A(lambda/nu).
    LaurentPoly definition(const StrictPartition &lambda, const StrictPartition &mu);

private:
    void extend(QFamily f, int degree);

    VariableSpec spec_;
    std::map<QFamily, std::deque<LaurentPoly>> rows_;
    std::map<std::tuple<QFamily, int, int>, LaurentPoly> two_rows_;
    LaurentPoly zero_;
};

LaurentPoly q_row(int l, const VariableSpec &spec);
LaurentPoly qA_two_row(int r, int s, int n);
LaurentPoly qC_two_row(int r, int s, int k);

/// Family A needs spec k = 0, family C needs m = 0.
LaurentPoly q_skew_jp(QFamily family, const StrictPartition &lambda, const StrictPartition &mu,
                      const VariableSpec &spec);

LaurentPoly qI_def(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec);
LaurentPoly qI_tableau(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec);
/// Pfaffian of two-row and one-row intermediate values; needs l(lambda) >= 2.
LaurentPoly qI_jp(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec);
RingMatrix qI_jp_matrix(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec);
LaurentPoly qI_branch(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec);

/// One-variable skew value: 0 unless l(lambda) - l(mu) <= 1, otherwise
/// det[q_{lambda_a - mu_b}(x)] with mu padded by zeros. Family A or C.
LaurentPoly q_single_var(QFamily family, const StrictPartition &lambda, const StrictPartition &mu);

enum class QMethod { definition, tableau, pfaffian, branch };

/// Dispatcher. The Pfaffian route sends one-row and empty lambda to q_row.
LaurentPoly qI(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec,
               QMethod method, QContext *ctx = nullptr);

} // namespace qsym
