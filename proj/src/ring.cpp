#include "qsym/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace qsym {

namespace {

std::atomic<std::size_t> g_max_terms{0};

// Rank of a single exponent in the canonical order.
std::pair<int, int> exponent_rank(int e)
{
    if (e > 0) {
        return {0, -e};
    }
    if (e < 0) {
        return {1, -e};
    }
    return {2, 0};
}

} // namespace

void set_max_terms(std::size_t limit) { g_max_terms.store(limit); }
std::size_t max_terms() { return g_max_terms.load(); }

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t n, std::size_t i, int e)
{
    if (i >= n) {
        throw precondition_error("variable index " + std::to_string(i + 1) + " out of range for "
                                 + std::to_string(n) + " variables");
    }
    Monomial m(n);
    m.exps_[i] = e;
    return m;
}

bool Monomial::is_one() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::inverse() const
{
    Monomial r(*this);
    for (auto &e : r.exps_) {
        e = -e;
    }
    return r;
}

Monomial &Monomial::operator*=(const Monomial &other)
{
    if (other.size() != size()) {
        throw precondition_error("monomial variable counts differ");
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        exps_[i] += other.exps_[i];
    }
    return *this;
}

std::string Monomial::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += 'x' + std::to_string(i + 1);
        if (exps_[i] != 1) {
            out += '^' + std::to_string(exps_[i]);
        }
    }
    return out.empty() ? "1" : out;
}

bool MonomialOrder::operator()(const Monomial &a, const Monomial &b) const
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            return exponent_rank(a[i]) < exponent_rank(b[i]);
        }
    }
    return a.size() < b.size();
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(std::size_t n, const Integer &c)
{
    LaurentPoly p(n);
    p.add_term(Monomial(n), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t n, std::size_t i, int e)
{
    return term(Monomial::variable(n, i, e));
}

LaurentPoly LaurentPoly::term(const Monomial &m, const Integer &c)
{
    LaurentPoly p(m.size());
    p.add_term(m, c);
    return p;
}

bool LaurentPoly::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

Integer LaurentPoly::coeff(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(const Monomial &m, const Integer &c)
{
    if (m.size() != n_) {
        throw precondition_error("monomial has " + std::to_string(m.size())
                                 + " variables, polynomial has " + std::to_string(n_));
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
    else {
        check_limit();
    }
}

void LaurentPoly::check_compatible(const LaurentPoly &other) const
{
    if (other.n_ != n_) {
        throw precondition_error("variable count mismatch: " + std::to_string(n_) + " vs "
                                 + std::to_string(other.n_));
    }
}

void LaurentPoly::check_limit() const
{
    const std::size_t limit = g_max_terms.load(std::memory_order_relaxed);
    if (limit != 0 && terms_.size() > limit) {
        throw term_limit_error("polynomial exceeded " + std::to_string(limit) + " terms");
    }
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other)
{
    check_compatible(other);
    for (const auto &[m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &other)
{
    check_compatible(other);
    for (const auto &[m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    a.check_compatible(b);
    LaurentPoly r(a.n_);
    if (a.is_zero() || b.is_zero()) {
        return r;
    }
    Integer prod;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            prod = ca * cb;
            r.add_term(ma * mb, prod);
        }
    }
    return r;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &other)
{
    *this = *this * other;
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const Integer &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, coef] : terms_) {
        coef *= c;
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(*this);
    for (auto &[m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const
{
    LaurentPoly result = one(n_);
    LaurentPoly base = *this;
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

LaurentPoly LaurentPoly::substitute(std::span<const LaurentPoly> images) const
{
    if (images.size() != n_) {
        throw precondition_error("substitution needs " + std::to_string(n_) + " images, got "
                                 + std::to_string(images.size()));
    }
    const std::size_t target = images.empty() ? 0 : images.front().nvars();
    for (const auto &img : images) {
        if (img.nvars() != target) {
            throw precondition_error("substitution images disagree on variable count");
        }
    }

    // Per-variable power tables, including inverses where needed.
    std::vector<std::map<int, LaurentPoly>> powers(n_);
    auto power_of = [&](std::size_t i, int e) -> const LaurentPoly & {
        auto it = powers[i].find(e);
        if (it != powers[i].end()) {
            return it->second;
        }
        LaurentPoly value(target);
        if (e >= 0) {
            value = images[i].pow(static_cast<unsigned>(e));
        }
        else {
            const LaurentPoly &img = images[i];
            if (img.size() != 1 || (img.terms_.begin()->second != 1 && img.terms_.begin()->second != -1)) {
                throw precondition_error("x" + std::to_string(i + 1)
                                         + " occurs with a negative exponent but its image "
                                         + img.to_string() + " is not a unit");
            }
            const auto &[m, c] = *img.terms_.begin();
            value = term(m.inverse(), c).pow(static_cast<unsigned>(-e));
        }
        return powers[i].emplace(e, std::move(value)).first->second;
    };

    LaurentPoly result(target);
    for (const auto &[m, c] : terms_) {
        LaurentPoly t = constant(target, c);
        for (std::size_t i = 0; i < n_ && !t.is_zero(); ++i) {
            if (m[i] != 0) {
                t *= power_of(i, m[i]);
            }
        }
        result += t;
    }
    return result;
}

Integer LaurentPoly::coefficient_sum() const
{
    Integer s = 0;
    for (const auto &[m, c] : terms_) {
        s += c;
    }
    return s;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, c] : terms_) {
        if (!out.empty()) {
            out += " + ";
        }
        if (m.is_one()) {
            out += c.get_str();
        }
        else if (c == 1) {
            out += m.to_string();
        }
        else if (c == -1) {
            out += '-' + m.to_string();
        }
        else {
            out += c.get_str() + '*' + m.to_string();
        }
    }
    return out;
}

namespace {

class TermParser {
public:
    TermParser(std::string_view text, std::size_t n) : n_(n)
    {
        for (char ch : text) {
            if (!std::isspace(static_cast<unsigned char>(ch))) {
                s_ += ch;
            }
        }
    }

    LaurentPoly parse()
    {
        LaurentPoly p(n_);
        if (s_.empty()) {
            fail("empty polynomial text");
        }
        while (pos_ < s_.size()) {
            int sign = 1;
            bool saw_sign = false;
            while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
                if (s_[pos_] == '-') {
                    sign = -sign;
                }
                saw_sign = true;
                ++pos_;
            }
            if (!saw_sign && pos_ != 0) {
                fail("expected '+' or '-'");
            }
            parse_term(p, sign);
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw parse_error("polynomial text at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return s_.substr(start, pos_ - start);
    }

    void parse_term(LaurentPoly &p, int sign)
    {
        Integer coeff = 1;
        Monomial m(n_);
        bool need_factor = true;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            coeff = Integer(digits());
            need_factor = false;
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                need_factor = true;
            }
        }
        if (need_factor) {
            parse_factor(m);
            while (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                parse_factor(m);
            }
        }
        p.add_term(m, sign * coeff);
    }

    void parse_factor(Monomial &m)
    {
        if (pos_ >= s_.size() || s_[pos_] != 'x') {
            fail("expected variable 'x<i>'");
        }
        ++pos_;
        const long idx = std::stol(digits());
        if (idx < 1 || static_cast<std::size_t>(idx) > n_) {
            fail("variable x" + std::to_string(idx) + " outside 1.." + std::to_string(n_));
        }
        int e = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            int esign = 1;
            if (pos_ < s_.size() && s_[pos_] == '-') {
                esign = -1;
                ++pos_;
            }
            e = esign * std::stoi(digits());
        }
        m[static_cast<std::size_t>(idx - 1)] += e;
    }

    std::string s_;
    std::size_t pos_ = 0;
    std::size_t n_;
};

} // namespace

LaurentPoly LaurentPoly::from_string(std::string_view text, std::size_t n)
{
    return TermParser(text, n).parse();
}

std::string LaurentPoly::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[m, c] : terms_) {
        terms.push_back({{"exps", std::vector<int>(m.exps().begin(), m.exps().end())},
                         {"coeff", c.get_str()}});
    }
    nlohmann::json j = {{"n", n_}, {"terms", std::move(terms)}};
    return j.dump();
}

LaurentPoly LaurentPoly::from_json(std::string_view text)
{
    try {
        const auto j = nlohmann::json::parse(text);
        const auto n = j.at("n").get<std::size_t>();
        LaurentPoly p(n);
        for (const auto &t : j.at("terms")) {
            auto exps = t.at("exps").get<std::vector<int>>();
            if (exps.size() != n) {
                throw parse_error("term exponent vector has wrong length");
            }
            Integer c;
            if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) {
                throw parse_error("coefficient is not a decimal integer");
            }
            p.add_term(Monomial(std::move(exps)), c);
        }
        return p;
    }
    catch (const nlohmann::json::exception &e) {
        throw parse_error(std::string("polynomial JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// TruncatedSeries

TruncatedSeries::TruncatedSeries(std::size_t nvars, std::size_t degree)
    : n_(nvars), coeffs_(degree + 1, LaurentPoly(nvars))
{
    coeffs_[0] = LaurentPoly::one(nvars);
}

void TruncatedSeries::mul_linear(const Monomial &u, int sign)
{
    const LaurentPoly factor = LaurentPoly::term(u, sign);
    for (std::size_t d = coeffs_.size(); d-- > 1;) {
        coeffs_[d] += factor * coeffs_[d - 1];
    }
}

void TruncatedSeries::div_linear(const Monomial &u)
{
    const LaurentPoly factor = LaurentPoly::term(u);
    for (std::size_t d = 1; d < coeffs_.size(); ++d) {
        coeffs_[d] += factor * coeffs_[d - 1];
    }
}

TruncatedSeries &TruncatedSeries::operator*=(const TruncatedSeries &other)
{
    if (other.n_ != n_) {
        throw precondition_error("series variable counts differ");
    }
    const std::size_t deg = std::min(degree(), other.degree());
    std::vector<LaurentPoly> out(deg + 1, LaurentPoly(n_));
    for (std::size_t a = 0; a <= deg; ++a) {
        for (std::size_t b = 0; a + b <= deg; ++b) {
            out[a + b] += coeffs_[a] * other.coeffs_[b];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

TruncatedSeries TruncatedSeries::from_linear_factors(std::span<const Monomial> numerators,
                                                     std::span<const Monomial> denominators,
                                                     std::size_t degree, std::size_t nvars)
{
    TruncatedSeries s(nvars, degree);
    for (const auto &u : numerators) {
        if (u.size() != nvars) {
            throw precondition_error("numerator factor has the wrong variable count");
        }
        s.mul_linear(u, 1);
    }
    for (const auto &v : denominators) {
        if (v.size() != nvars) {
            throw precondition_error("denominator factor has the wrong variable count");
        }
        s.div_linear(v);
    }
    return s;
}

} // namespace qsym
