#include "qsym/qfun.hpp"

#include <algorithm>

namespace qsym {

namespace {

void require_length(const StrictPartition &lambda, const VariableSpec &spec)
{
    if (spec.k < 0 || spec.m < 0) {
        throw precondition_error("spec " + spec.to_string() + " has a negative part");
    }
    if (lambda.length() > spec.n()) {
        throw precondition_error("partition length " + std::to_string(lambda.length()) + " exceeds n = "
                                 + std::to_string(spec.n()));
    }
}

// Monomials u with the factor (1+uz)/(1-uz) in the family's generating series.
std::vector<Monomial> series_letters(QFamily f, const VariableSpec &spec)
{
    const auto n = static_cast<std::size_t>(spec.n());
    std::vector<Monomial> out;
    if (f != QFamily::A) {
        for (std::size_t i = 0; i < static_cast<std::size_t>(spec.k); ++i) {
            out.push_back(Monomial::variable(n, i, 1));
            out.push_back(Monomial::variable(n, i, -1));
        }
    }
    if (f != QFamily::C) {
        for (auto i = static_cast<std::size_t>(spec.k); i < n; ++i) {
            out.push_back(Monomial::variable(n, i, 1));
        }
    }
    return out;
}

} // namespace

QContext::QContext(const VariableSpec &spec) : spec_(spec), zero_(static_cast<std::size_t>(std::max(spec.n(), 0)))
{
    if (spec.k < 0 || spec.m < 0) {
        throw precondition_error("spec " + spec.to_string() + " has a negative part");
    }
}

void QContext::extend(QFamily f, int degree)
{
    auto &row = rows_[f];
    if (static_cast<int>(row.size()) > degree) {
        return;
    }
    const int target = std::max({degree, 2 * static_cast<int>(row.size()), 8});
    const auto letters = series_letters(f, spec_);
    const TruncatedSeries s =
        TruncatedSeries::from_linear_factors(letters, letters, static_cast<std::size_t>(target), nvars());
    for (std::size_t d = row.size(); d < s.coeffs().size(); ++d) {
        row.push_back(s[d]);
    }
}

const LaurentPoly &QContext::q(QFamily f, int l)
{
    if (l < 0) {
        return zero_;
    }
    extend(f, l);
    return rows_[f][static_cast<std::size_t>(l)];
}

const LaurentPoly &QContext::two_row(QFamily f, int r, int s)
{
    if (r < 0 || s < 0) {
        throw precondition_error("two-row index must be nonnegative");
    }
    if (r == s) {
        return zero_;
    }
    if (s == 0) {
        return q(f, r);
    }
    const auto key = std::make_tuple(f, r, s);
    if (auto it = two_rows_.find(key); it != two_rows_.end()) {
        return it->second;
    }
    LaurentPoly value(nvars());
    if (r < s) {
        value = -two_row(f, s, r);
    }
    else if (f == QFamily::I) {
        value = definition(StrictPartition({r, s}), StrictPartition());
    }
    else {
        extend(f, r + s);
        value = q(f, r) * q(f, s);
        for (int t = 1; t <= s; ++t) {
            LaurentPoly left = q(f, r + t);
            if (f == QFamily::C) {
                for (int i = 1; i < t; ++i) {
                    left += Integer(2) * q(f, r + t - 2 * i);
                }
                left += q(f, r - t);
            }
            LaurentPoly term = Integer(2) * (left * q(f, s - t));
            if (t % 2 == 0) {
                value += term;
            }
            else {
                value -= term;
            }
        }
    }
    return two_rows_.emplace(key, std::move(value)).first->second;
}

RingMatrix QContext::jp_matrix(QFamily f, const StrictPartition &lambda, const StrictPartition &mu)
{
    const auto [l, m] = pad_for_pfaffian(lambda, mu);
    const std::size_t a = l.size();
    const std::size_t b = m.size();
    RingMatrix mat(a + b, a + b, nvars());
    for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < a; ++j) {
            mat(i, j) = two_row(f, l[i], l[j]);
        }
        // Columns of N run over mu in reverse order.
        for (std::size_t j = 0; j < b; ++j) {
            const LaurentPoly &v = q(f, l[i] - m[b - 1 - j]);
            mat(i, a + j) = v;
            mat(a + j, i) = -v;
        }
    }
    return mat;
}

LaurentPoly QContext::jp(QFamily f, const StrictPartition &lambda, const StrictPartition &mu)
{
    if (!lambda.contains(mu)) {
        return LaurentPoly(nvars());
    }
    return pfaffian(jp_matrix(f, lambda, mu));
}

LaurentPoly QContext::definition(const StrictPartition &lambda, const StrictPartition &mu)
{
    LaurentPoly sum(nvars());
    for (const StrictPartition &nu : enum_strict_between(mu, lambda)) {
        const LaurentPoly inner = jp(QFamily::C, nu, mu);
        if (inner.is_zero()) {
            continue;
        }
        sum += inner * jp(QFamily::A, lambda, nu);
    }
    return sum;
}

LaurentPoly q_row(int l, const VariableSpec &spec)
{
    QContext ctx(spec);
    return ctx.q(QFamily::I, l);
}

LaurentPoly qA_two_row(int r, int s, int n)
{
    QContext ctx({0, n});
    return ctx.two_row(QFamily::A, r, s);
}

LaurentPoly qC_two_row(int r, int s, int k)
{
    QContext ctx({k, 0});
    return ctx.two_row(QFamily::C, r, s);
}

LaurentPoly q_skew_jp(QFamily family, const StrictPartition &lambda, const StrictPartition &mu,
                      const VariableSpec &spec)
{
    if (family == QFamily::A && spec.k != 0) {
        throw precondition_error("type A Pfaffian needs k = 0, got spec " + spec.to_string());
    }
    if (family == QFamily::C && spec.m != 0) {
        throw precondition_error("type C Pfaffian needs m = 0, got spec " + spec.to_string());
    }
    if (family == QFamily::I) {
        return qI_jp(lambda, mu, spec);
    }
    QContext ctx(spec);
    return ctx.jp(family, lambda, mu);
}

LaurentPoly qI_def(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec)
{
    require_length(lambda, spec);
    QContext ctx(spec);
    return ctx.definition(lambda, mu);
}

LaurentPoly qI_tableau(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec)
{
    require_length(lambda, spec);
    return qt_weight_sum(spec, lambda, mu);
}

RingMatrix qI_jp_matrix(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec)
{
    require_length(lambda, spec);
    if (lambda.length() < 2) {
        throw precondition_error("the intermediate Pfaffian needs at least two rows");
    }
    QContext ctx(spec);
    return ctx.jp_matrix(QFamily::I, lambda, mu);
}

LaurentPoly qI_jp(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec)
{
    return pfaffian(qI_jp_matrix(lambda, mu, spec));
}

LaurentPoly q_single_var(QFamily family, const StrictPartition &lambda, const StrictPartition &mu)
{
    if (family == QFamily::I) {
        throw precondition_error("single-variable values are defined for families A and C");
    }
    if (!lambda.contains(mu) || lambda.length() - mu.length() > 1) {
        return LaurentPoly(1);
    }
    QContext ctx(family == QFamily::A ? VariableSpec{0, 1} : VariableSpec{1, 0});
    const auto l = static_cast<std::size_t>(lambda.length());
    RingMatrix mat(l, l, 1);
    for (std::size_t a = 0; a < l; ++a) {
        for (std::size_t b = 0; b < l; ++b) {
            mat(a, b) = ctx.q(family, lambda[static_cast<int>(a)] - mu[static_cast<int>(b)]);
        }
    }
    return determinant(mat);
}

LaurentPoly qI_branch(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec)
{
    require_length(lambda, spec);
    const auto n = static_cast<std::size_t>(spec.n());
    if (!lambda.contains(mu)) {
        return LaurentPoly(n);
    }
    std::map<StrictPartition, LaurentPoly> layer{{mu, LaurentPoly::one(n)}};
    std::map<std::tuple<QFamily, StrictPartition, StrictPartition>, LaurentPoly> single;
    for (std::size_t t = 0; t < n; ++t) {
        const QFamily f = t < static_cast<std::size_t>(spec.k) ? QFamily::C : QFamily::A;
        std::vector<LaurentPoly> images(1, LaurentPoly::variable(n, t));
        std::map<StrictPartition, LaurentPoly> next;
        for (const auto &[nu, value] : layer) {
            for (const StrictPartition &up : enum_strict_between(nu, lambda)) {
                if (up.length() - nu.length() > 1) {
                    continue;
                }
                const auto key = std::make_tuple(f, up, nu);
                auto it = single.find(key);
                if (it == single.end()) {
                    it = single.emplace(key, q_single_var(f, up, nu)).first;
                }
                if (it->second.is_zero()) {
                    continue;
                }
                LaurentPoly step = value * it->second.substitute(images);
                auto [slot, fresh] = next.try_emplace(up, std::move(step));
                if (!fresh) {
                    slot->second += step;
                }
            }
        }
        layer = std::move(next);
    }
    const auto it = layer.find(lambda);
    return it == layer.end() ? LaurentPoly(n) : it->second;
}

LaurentPoly qI(const StrictPartition &lambda, const StrictPartition &mu, const VariableSpec &spec, QMethod method,
               QContext *ctx)
{
    require_length(lambda, spec);
    QContext local(spec);
    if (ctx == nullptr) {
        ctx = &local;
    }
    else if (ctx->spec() != spec) {
        throw precondition_error("context spec does not match the requested spec");
    }
    switch (method) {
    case QMethod::definition:
        return ctx->definition(lambda, mu);
    case QMethod::tableau:
        return qt_weight_sum(spec, lambda, mu);
    case QMethod::branch:
        return qI_branch(lambda, mu, spec);
    case QMethod::pfaffian:
        if (lambda.length() >= 2) {
            return pfaffian(ctx->jp_matrix(QFamily::I, lambda, mu));
        }
        if (!lambda.contains(mu)) {
            return LaurentPoly(ctx->nvars());
        }
        return ctx->q(QFamily::I, lambda[0] - mu[0]);
    }
    throw precondition_error("unknown method");
}

} // namespace qsym
