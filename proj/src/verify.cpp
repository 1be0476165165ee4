#include "qsym/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>

#include "qsym/lgv.hpp"
#include "qsym/qfun.hpp"
#include "qsym/symfun.hpp"

namespace qsym {

std::string PropertyReport::to_string() const
{
    std::string out = (passed() ? "PASS " : "FAIL ") + name + " (" + std::to_string(cases) + " cases";
    if (!passed()) {
        out += ", " + std::to_string(failures) + " failed; first: " + first_failure;
    }
    return out + ")";
}

std::vector<VariableSpec> specs_up_to(int max_vars)
{
    std::vector<VariableSpec> out;
    for (int n = 0; n <= max_vars; ++n) {
        for (int k = 0; k <= n; ++k) {
            out.push_back({k, n - k});
        }
    }
    return out;
}

bool is_w_invariant(const LaurentPoly &p, const VariableSpec &spec)
{
    const auto n = static_cast<std::size_t>(spec.n());
    std::vector<LaurentPoly> identity;
    for (std::size_t i = 0; i < n; ++i) {
        identity.push_back(LaurentPoly::variable(n, i));
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(spec.k); ++i) {
        auto images = identity;
        images[i] = LaurentPoly::variable(n, i, -1);
        if (!(p.substitute(images) == p)) {
            return false;
        }
    }
    for (auto a = static_cast<std::size_t>(spec.k); a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            auto images = identity;
            std::swap(images[a], images[b]);
            if (!(p.substitute(images) == p)) {
                return false;
            }
        }
    }
    return true;
}

LaurentPoly random_laurent(std::mt19937 &rng, std::size_t n, int terms)
{
    std::uniform_int_distribution<int> exp(-2, 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> count(0, std::max(terms, 0));
    LaurentPoly p(n);
    for (int t = count(rng); t > 0; --t) {
        Monomial m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = exp(rng);
        }
        p.add_term(m, coeff(rng));
    }
    return p;
}

RingMatrix random_skew_matrix(std::mt19937 &rng, std::size_t size, std::size_t n)
{
    RingMatrix a(size, size, n);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) {
            a(i, j) = random_laurent(rng, n, 2);
            a(j, i) = -a(i, j);
        }
    }
    return a;
}

namespace {

class Recorder {
public:
    explicit Recorder(std::string name) { report_.name = std::move(name); }

    void check(bool ok, const std::string &label)
    {
        ++report_.cases;
        if (!ok) {
            if (report_.failures == 0) {
                report_.first_failure = label;
            }
            ++report_.failures;
        }
    }

    PropertyReport result() && { return std::move(report_); }

private:
    PropertyReport report_;
};

std::string label(const VariableSpec &s, const StrictPartition &l, const StrictPartition &m)
{
    return s.to_string() + " " + l.to_string() + "/" + m.to_string();
}

// Strict lambda with |lambda| <= W and l(lambda) <= n, paired with every strict mu inside.
template <typename F>
void for_each_skew(const VerifyBudget &b, F &&f)
{
    for (const VariableSpec &s : specs_up_to(b.max_vars)) {
        for (const StrictPartition &l : strict_partitions_up_to(b.max_weight)) {
            if (l.length() > s.n()) {
                continue;
            }
            for (const StrictPartition &m : enum_strict_between(StrictPartition(), l)) {
                f(s, l, m);
            }
        }
    }
}

using Property = std::function<PropertyReport(const VerifyBudget &)>;

// ring

PropertyReport ring_axioms(const VerifyBudget &)
{
    Recorder r("ring.axioms");
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 3);
        const auto a = random_laurent(rng, n, 4);
        const auto b = random_laurent(rng, n, 4);
        const auto c = random_laurent(rng, n, 4);
        r.check(a + b == b + a && a * b == b * a, "commutativity");
        r.check((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c), "associativity");
        r.check(a * (b + c) == a * b + a * c, "distributivity");
        r.check(a - a == LaurentPoly(n) && a * LaurentPoly::one(n) == a, "identities");
    }
    return std::move(r).result();
}

PropertyReport ring_roundtrip(const VerifyBudget &)
{
    Recorder r("ring.roundtrip");
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
        const auto a = random_laurent(rng, n, 5);
        const std::string text = a.to_string();
        r.check(LaurentPoly::from_string(text, n).to_string() == text, "text: " + text);
        r.check(LaurentPoly::from_json(a.to_json()) == a, "json: " + text);
    }
    return std::move(r).result();
}

PropertyReport ring_series(const VerifyBudget &b)
{
    Recorder r("ring.series_inverse");
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> count(0, 3);
    std::uniform_int_distribution<int> exp(-1, 1);
    const auto degree = static_cast<std::size_t>(std::max(b.max_weight, 1));
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = 2;
        auto draw = [&] {
            std::vector<Monomial> out(static_cast<std::size_t>(count(rng)), Monomial(n));
            for (auto &m : out) {
                m[0] = exp(rng);
                m[1] = exp(rng);
            }
            return out;
        };
        const auto nums = draw();
        const auto dens = draw();
        TruncatedSeries s = TruncatedSeries::from_linear_factors(nums, dens, degree, n);
        for (const Monomial &v : dens) {
            s.mul_linear(v, -1);
        }
        const TruncatedSeries expect = TruncatedSeries::from_linear_factors(nums, {}, degree, n);
        r.check(s == expect, "series " + std::to_string(i));
    }
    return std::move(r).result();
}

PropertyReport ring_pfaffian(const VerifyBudget &)
{
    Recorder r("ring.pfaffian_square");
    std::mt19937 rng(17);
    for (int i = 0; i < 60; ++i) {
        const std::size_t size = 2 + 2 * static_cast<std::size_t>(i % 3);
        RingMatrix a = random_skew_matrix(rng, size, 2);
        const LaurentPoly pf = pfaffian(a);
        r.check(pf * pf == determinant(a), "size " + std::to_string(size));
        // Simultaneous swap of rows and columns 0 and 1 negates the Pfaffian.
        RingMatrix s(size, size, 2);
        auto p = [](std::size_t x) { return x == 0 ? 1 : (x == 1 ? 0 : x); };
        for (std::size_t u = 0; u < size; ++u) {
            for (std::size_t v = 0; v < size; ++v) {
                s(u, v) = a(p(u), p(v));
            }
        }
        r.check(pfaffian(s) == -pf, "swap size " + std::to_string(size));
    }
    return std::move(r).result();
}

// tableaux

PropertyReport tableaux_split(const VerifyBudget &b)
{
    Recorder r("tableaux.split_count");
    for_each_skew(b, [&](const VariableSpec &s, const StrictPartition &l, const StrictPartition &m) {
        std::uint64_t sum = 0;
        for (const StrictPartition &nu : enum_strict_between(m, l)) {
            sum += qt_count({s.k, 0}, nu, m, LengthCheck::skip) * qt_count({0, s.m}, l, nu, LengthCheck::skip);
        }
        r.check(sum == qt_count(s, l, m), label(s, l, m));
    });
    return std::move(r).result();
}

PropertyReport tableaux_distinct(const VerifyBudget &b)
{
    Recorder r("tableaux.duplicate_free");
    VerifyBudget small{std::min(b.max_weight, 4), std::min(b.max_vars, 3)};
    for_each_skew(small, [&](const VariableSpec &s, const StrictPartition &l, const StrictPartition &m) {
        std::set<std::string> seen;
        std::size_t count = 0;
        bool valid = true;
        for_each_qt(s, l, m, [&](const PrimedTableau &t) {
            seen.insert(t.to_string());
            valid = valid && is_valid_qt(t, s);
            ++count;
        });
        r.check(valid && seen.size() == count, label(s, l, m));
    });
    return std::move(r).result();
}

PropertyReport tableaux_spt_split(const VerifyBudget &b)
{
    Recorder r("tableaux.spt_split_count");
    for (const VariableSpec &s : specs_up_to(b.max_vars)) {
        for (const Partition &l : partitions_up_to(b.max_weight)) {
            if (l.length() > s.n()) {
                continue;
            }
            Integer sum = 0;
            for (const Partition &mu : partitions_between(Partition(), l)) {
                if (mu.length() > s.k) {
                    continue;
                }
                const auto c = enum_spt({s.k, 0}, mu, Partition()).size();
                const Integer a = schur_skew(l, mu, Alphabet::plain(static_cast<std::size_t>(s.m))).coefficient_sum();
                sum += Integer(static_cast<unsigned long>(c)) * a;
            }
            r.check(sum == Integer(static_cast<unsigned long>(enum_spt(s, l, Partition()).size())),
                    s.to_string() + " " + l.to_string());
        }
    }
    return std::move(r).result();
}

// schur

PropertyReport schur_methods(const VerifyBudget &b)
{
    Recorder r("schur.definition_vs_tableau");
    for (const VariableSpec &s : specs_up_to(b.max_vars + 1)) {
        for (const Partition &l : partitions_up_to(b.max_weight)) {
            if (l.length() > s.n()) {
                continue;
            }
            const auto d = inter_schur(l, s);
            r.check(d == inter_schur(l, s, SchurMethod::tableau), s.to_string() + " " + l.to_string());
        }
    }
    return std::move(r).result();
}

PropertyReport schur_invariance(const VerifyBudget &b)
{
    Recorder r("schur.invariance");
    for (const VariableSpec &s : specs_up_to(b.max_vars + 1)) {
        for (const Partition &l : partitions_up_to(b.max_weight)) {
            if (l.length() <= s.n()) {
                r.check(is_w_invariant(inter_schur(l, s), s), s.to_string() + " " + l.to_string());
            }
        }
    }
    return std::move(r).result();
}

PropertyReport schur_union(const VerifyBudget &b)
{
    Recorder r("schur.union_identity");
    for (const VariableSpec &s : specs_up_to(b.max_vars + 1)) {
        for (const Partition &l : partitions_up_to(b.max_weight)) {
            if (l.length() <= s.n() && l.length() <= s.k + 1) {
                r.check(check_union_identity(l, s), s.to_string() + " " + l.to_string());
            }
        }
    }
    return std::move(r).result();
}

PropertyReport schur_jt(const VerifyBudget &b)
{
    Recorder r("schur.jacobi_trudi_h_vs_e");
    for (std::size_t n = 0; n <= static_cast<std::size_t>(std::max(b.max_vars, 0)); ++n) {
        const Alphabet a = Alphabet::plain(n);
        for (const Partition &l : partitions_up_to(b.max_weight + 1)) {
            for (const Partition &m : partitions_between(Partition(), l)) {
                r.check(schur_skew(l, m, a) == schur_skew_e(l, m, a),
                        std::to_string(n) + " " + l.to_string() + "/" + m.to_string());
            }
        }
    }
    return std::move(r).result();
}

// qfun

PropertyReport qfun_routes(const VerifyBudget &b)
{
    Recorder r("qfun.four_route_agreement");
    std::map<VariableSpec, QContext> contexts;
    for_each_skew(b, [&](const VariableSpec &s, const StrictPartition &l, const StrictPartition &m) {
        QContext &ctx = contexts.try_emplace(s, s).first->second;
        const auto d = qI(l, m, s, QMethod::definition, &ctx);
        bool ok = d == qI(l, m, s, QMethod::tableau, &ctx) && d == qI(l, m, s, QMethod::branch, &ctx);
        if (l.length() >= 2) {
            ok = ok && d == qI(l, m, s, QMethod::pfaffian, &ctx);
        }
        r.check(ok, label(s, l, m));
    });
    return std::move(r).result();
}

PropertyReport qfun_degenerate(const VerifyBudget &b)
{
    Recorder r("qfun.degeneration");
    for_each_skew(b, [&](const VariableSpec &s, const StrictPartition &l, const StrictPartition &m) {
        if (s.k == 0) {
            r.check(qI_def(l, m, s) == q_skew_jp(QFamily::A, l, m, s), label(s, l, m));
        }
        if (s.m == 0) {
            r.check(qI_def(l, m, s) == q_skew_jp(QFamily::C, l, m, s), label(s, l, m));
        }
    });
    return std::move(r).result();
}

PropertyReport qfun_series(const VerifyBudget &b)
{
    Recorder r("qfun.series");
    const int degree = std::max(b.max_weight, 0);
    for (const VariableSpec &s : specs_up_to(b.max_vars)) {
        const auto n = static_cast<std::size_t>(s.n());
        std::vector<Monomial> letters;
        for (std::size_t i = 0; i < n; ++i) {
            letters.push_back(Monomial::variable(n, i));
            if (i < static_cast<std::size_t>(s.k)) {
                letters.push_back(Monomial::variable(n, i, -1));
            }
        }
        const auto product = TruncatedSeries::from_linear_factors(letters, letters, static_cast<std::size_t>(degree), n);
        bool ok = true;
        for (int l = 0; l <= degree; ++l) {
            const StrictPartition row = l == 0 ? StrictPartition() : StrictPartition({l});
            ok = ok && qt_weight_sum(s, row, StrictPartition(), LengthCheck::skip) == product[static_cast<std::size_t>(l)];
        }
        r.check(ok, s.to_string());
    }
    return std::move(r).result();
}

PropertyReport qfun_symmetry(const VerifyBudget &b)
{
    Recorder r("qfun.symmetry");
    for_each_skew(b, [&](const VariableSpec &s, const StrictPartition &l, const StrictPartition &m) {
        r.check(is_w_invariant(qI_def(l, m, s), s), label(s, l, m));
    });
    return std::move(r).result();
}

PropertyReport qfun_vanishing(const VerifyBudget &b)
{
    Recorder r("qfun.vanishing");
    for (const VariableSpec &s : specs_up_to(b.max_vars)) {
        for (const StrictPartition &l : strict_partitions_up_to(b.max_weight)) {
            if (l.length() > s.n()) {
                continue;
            }
            for (const StrictPartition &m : strict_partitions_up_to(b.max_weight)) {
                if (!l.contains(m)) {
                    r.check(qI_tableau(l, m, s).is_zero() && qI_def(l, m, s).is_zero(), label(s, l, m));
                }
            }
        }
    }
    return std::move(r).result();
}

PropertyReport qfun_pfaffian_square(const VerifyBudget &b)
{
    Recorder r("qfun.pfaffian_square");
    for_each_skew(b, [&](const VariableSpec &s, const StrictPartition &l, const StrictPartition &m) {
        if (l.length() >= 2) {
            const RingMatrix a = qI_jp_matrix(l, m, s);
            const LaurentPoly pf = pfaffian(a);
            r.check(pf * pf == determinant(a), label(s, l, m));
        }
    });
    return std::move(r).result();
}

// lgv

PropertyReport lgv_sum(const VerifyBudget &b)
{
    Recorder r("lgv.weight_sum");
    for_each_skew(b, [&](const VariableSpec &s, const StrictPartition &l, const StrictPartition &m) {
        r.check(lgv_weight_sum(l, m, s) == qt_weight_sum(s, l, m), label(s, l, m));
    });
    return std::move(r).result();
}

PropertyReport lgv_bijection(const VerifyBudget &b)
{
    Recorder r("lgv.bijection");
    for_each_skew(b, [&](const VariableSpec &s, const StrictPartition &l, const StrictPartition &m) {
        std::set<std::string> image;
        std::size_t families = 0;
        bool ok = true;
        for_each_path_family(l, m, s, [&](const PathFamily &f) {
            const PrimedTableau t = family_to_tableau(f, l, m);
            ok = ok && is_valid_family(f, l, m, s) && is_valid_qt(t, s) && qt_weight(t, s) == family_weight(f, s);
            image.insert(t.to_string());
            ++families;
        });
        std::set<std::string> tableaux;
        for_each_qt(s, l, m, [&](const PrimedTableau &t) { tableaux.insert(t.to_string()); });
        r.check(ok && families == image.size() && image == tableaux, label(s, l, m));
    });
    return std::move(r).result();
}

const std::map<std::string, std::vector<Property>, std::less<>> &suites()
{
    static const std::map<std::string, std::vector<Property>, std::less<>> table{
        {"ring", {ring_axioms, ring_roundtrip, ring_series, ring_pfaffian}},
        {"tableaux", {tableaux_split, tableaux_distinct, tableaux_spt_split}},
        {"schur", {schur_methods, schur_invariance, schur_union, schur_jt}},
        {"qfun", {qfun_routes, qfun_degenerate, qfun_series, qfun_symmetry, qfun_vanishing, qfun_pfaffian_square}},
        {"lgv", {lgv_sum, lgv_bijection}},
    };
    return table;
}

} // namespace

std::vector<PropertyReport> run_suite(std::string_view suite, const VerifyBudget &budget)
{
    std::vector<Property> selected;
    if (suite == "all") {
        for (const auto &[name, props] : suites()) {
            selected.insert(selected.end(), props.begin(), props.end());
        }
    }
    else if (auto it = suites().find(suite); it != suites().end()) {
        selected = it->second;
    }
    else {
        throw precondition_error("unknown suite '" + std::string(suite) + "'");
    }
    std::vector<std::future<PropertyReport>> tasks;
    for (const Property &p : selected) {
        tasks.push_back(std::async(std::launch::async, p, budget));
    }
    std::vector<PropertyReport> reports;
    for (auto &t : tasks) {
        reports.push_back(t.get());
    }
    std::sort(reports.begin(), reports.end(),
              [](const PropertyReport &a, const PropertyReport &b) { return a.name < b.name; });
    return reports;
}

} // namespace qsym
