#include "verma/scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace verma
{

Rational parse_rational(std::string_view text)
{
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!valid_integer(num, true))
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    std::string num_str(num.front() == '+' ? num.substr(1) : num);
    if (slash == std::string_view::npos)
        return Rational(mpz_class(num_str));
    const auto den = text.substr(slash + 1);
    if (!valid_integer(den, false))
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    mpz_class d(std::string{den});
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(mpz_class(num_str), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q)
{
    return q.get_str();
}

bool is_integer(const Rational &q)
{
    return q.get_den() == 1;
}

Rational factorial(unsigned k)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

std::strong_ordering compare(const Rational &a, const Rational &b)
{
    const int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// LambdaPoly

namespace
{

void trim(SymbolPowers &p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

SymbolPowers multiply_powers(const SymbolPowers &a, const SymbolPowers &b)
{
    SymbolPowers r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    return r;
}

unsigned total_degree(const SymbolPowers &p)
{
    unsigned d = 0;
    for (auto e : p)
        d += e;
    return d;
}

} // namespace

LambdaPoly::LambdaPoly(const Rational &c)
{
    if (c != 0)
        m_terms.emplace(SymbolPowers{}, c);
}

LambdaPoly LambdaPoly::symbol(unsigned s)
{
    if (s == 0)
        throw std::invalid_argument("lambda symbols are numbered from 1");
    LambdaPoly p;
    SymbolPowers powers(s, 0);
    powers[s - 1] = 1;
    p.m_terms.emplace(std::move(powers), Rational(1));
    return p;
}

bool LambdaPoly::is_constant() const
{
    return m_terms.empty() || (m_terms.size() == 1 && m_terms.begin()->first.empty());
}

Rational LambdaPoly::constant_value() const
{
    if (!is_constant())
        throw std::domain_error("polynomial '" + to_text(*this) + "' is not a constant");
    return m_terms.empty() ? Rational(0) : m_terms.begin()->second;
}

unsigned LambdaPoly::degree() const
{
    unsigned d = 0;
    for (const auto &[powers, c] : m_terms)
        d = std::max(d, total_degree(powers));
    return d;
}

void LambdaPoly::add_term(const SymbolPowers &powers, const Rational &c)
{
    if (c == 0)
        return;
    SymbolPowers key = powers;
    trim(key);
    auto [it, inserted] = m_terms.try_emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            m_terms.erase(it);
    }
}

LambdaPoly &LambdaPoly::operator+=(const LambdaPoly &other)
{
    for (const auto &[powers, c] : other.m_terms)
        add_term(powers, c);
    return *this;
}

LambdaPoly &LambdaPoly::operator-=(const LambdaPoly &other)
{
    for (const auto &[powers, c] : other.m_terms)
        add_term(powers, -c);
    return *this;
}

LambdaPoly operator*(const LambdaPoly &a, const LambdaPoly &b)
{
    LambdaPoly r;
    for (const auto &[pa, ca] : a.m_terms)
        for (const auto &[pb, cb] : b.m_terms)
            r.add_term(multiply_powers(pa, pb), ca * cb);
    return r;
}

LambdaPoly &LambdaPoly::operator*=(const LambdaPoly &other)
{
    *this = *this * other;
    return *this;
}

LambdaPoly &LambdaPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &[powers, coeff] : m_terms)
        coeff *= c;
    return *this;
}

LambdaPoly LambdaPoly::operator-() const
{
    LambdaPoly r(*this);
    for (auto &[powers, coeff] : r.m_terms)
        coeff = -coeff;
    return r;
}

bool operator==(const LambdaPoly &a, const LambdaPoly &b)
{
    if (a.m_terms.size() != b.m_terms.size())
        return false;
    return std::equal(a.m_terms.begin(), a.m_terms.end(), b.m_terms.begin(),
                      [](const auto &x, const auto &y) { return x.first == y.first && x.second == y.second; });
}

LambdaPoly LambdaPoly::substitute(const std::vector<LambdaPoly> &images) const
{
    LambdaPoly result;
    for (const auto &[powers, c] : m_terms) {
        LambdaPoly term(c);
        SymbolPowers kept;
        for (std::size_t s = 0; s < powers.size(); ++s) {
            if (s < images.size()) {
                for (unsigned e = 0; e < powers[s]; ++e)
                    term *= images[s];
            } else {
                kept.resize(s + 1, 0);
                kept[s] = powers[s];
            }
        }
        if (!kept.empty()) {
            LambdaPoly mono;
            mono.m_terms.emplace(kept, Rational(1));
            term *= mono;
        }
        result += term;
    }
    return result;
}

// ---------------------------------------------------------------------------
// AffineExponent

AffineExponent AffineExponent::symbol(unsigned s)
{
    if (s == 0)
        throw std::invalid_argument("lambda symbols are numbered from 1");
    AffineExponent e;
    e.m_linear.emplace(s, Rational(1));
    return e;
}

void AffineExponent::set_linear(unsigned s, const Rational &c)
{
    if (c == 0)
        m_linear.erase(s);
    else
        m_linear[s] = c;
}

bool AffineExponent::is_integer() const
{
    return m_linear.empty() && verma::is_integer(m_constant);
}

bool AffineExponent::is_natural() const
{
    return is_integer() && m_constant >= 0;
}

LambdaPoly AffineExponent::to_poly() const
{
    LambdaPoly p(m_constant);
    for (const auto &[s, c] : m_linear)
        p += LambdaPoly::symbol(s) * c;
    return p;
}

AffineExponent &AffineExponent::operator+=(const AffineExponent &other)
{
    m_constant += other.m_constant;
    for (const auto &[s, c] : other.m_linear) {
        Rational v = c;
        if (auto it = m_linear.find(s); it != m_linear.end())
            v += it->second;
        set_linear(s, v);
    }
    return *this;
}

AffineExponent &AffineExponent::operator-=(const AffineExponent &other)
{
    return *this += -other;
}

AffineExponent &AffineExponent::operator*=(const Rational &c)
{
    if (c == 0) {
        m_linear.clear();
        m_constant = 0;
        return *this;
    }
    m_constant *= c;
    for (auto &[s, v] : m_linear)
        v *= c;
    return *this;
}

AffineExponent AffineExponent::operator-() const
{
    AffineExponent r(*this);
    r *= Rational(-1);
    return r;
}

bool operator==(const AffineExponent &a, const AffineExponent &b)
{
    return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const AffineExponent &a, const AffineExponent &b)
{
    if (auto c = compare(a.m_constant, b.m_constant); c != 0)
        return c;
    auto ia = a.m_linear.begin();
    auto ib = b.m_linear.begin();
    for (; ia != a.m_linear.end() && ib != b.m_linear.end(); ++ia, ++ib) {
        if (auto c = ia->first <=> ib->first; c != 0)
            return c;
        if (auto c = compare(ia->second, ib->second); c != 0)
            return c;
    }
    return a.m_linear.size() <=> b.m_linear.size();
}

AffineExponent AffineExponent::substitute(const std::map<unsigned, AffineExponent> &images) const
{
    AffineExponent r(m_constant);
    for (const auto &[s, c] : m_linear) {
        if (auto it = images.find(s); it != images.end()) {
            r += it->second * c;
        } else {
            AffineExponent t = symbol(s);
            r += t * c;
        }
    }
    return r;
}

LambdaPoly falling_factorial(const LambdaPoly &gamma, unsigned k)
{
    LambdaPoly r(Rational(1));
    for (unsigned j = 0; j < k; ++j) {
        r *= gamma - LambdaPoly(Rational(j));
        if (r.is_zero())
            break;
    }
    return r;
}

LambdaPoly falling_factorial(const AffineExponent &gamma, unsigned k)
{
    return falling_factorial(gamma.to_poly(), k);
}

// ---------------------------------------------------------------------------
// Printing

namespace
{

// Display order: higher total degree first, then reverse lexicographic powers.
std::vector<std::pair<SymbolPowers, Rational>> display_order(const LambdaPoly &p)
{
    std::vector<std::pair<SymbolPowers, Rational>> v(p.terms().begin(), p.terms().end());
    std::stable_sort(v.begin(), v.end(), [](const auto &x, const auto &y) {
        const auto dx = total_degree(x.first), dy = total_degree(y.first);
        if (dx != dy)
            return dx > dy;
        return x.first > y.first;
    });
    return v;
}

std::string latex_rational(const Rational &q)
{
    if (is_integer(q))
        return q.get_num().get_str();
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

template <typename MonoFn, typename CoeffFn>
std::string join_terms(const std::vector<std::pair<SymbolPowers, Rational>> &terms, MonoFn mono, CoeffFn coeff,
                       const char *plus, const char *minus, const char *times)
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[powers, c] : terms) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? minus : plus;
        first = false;
        const std::string m = mono(powers);
        if (m.empty())
            out += coeff(mag);
        else if (mag == 1)
            out += m;
        else
            out += coeff(mag) + times + m;
    }
    return out;
}

} // namespace

std::string to_text(const LambdaPoly &p)
{
    auto mono = [](const SymbolPowers &powers) {
        std::string s;
        for (std::size_t i = 0; i < powers.size(); ++i) {
            if (powers[i] == 0)
                continue;
            if (!s.empty())
                s += "*";
            s += "l" + std::to_string(i + 1);
            if (powers[i] > 1)
                s += "^" + std::to_string(powers[i]);
        }
        return s;
    };
    return join_terms(display_order(p), mono, [](const Rational &q) { return to_string(q); }, " + ", " - ", "*");
}

std::string to_latex(const LambdaPoly &p)
{
    auto mono = [](const SymbolPowers &powers) {
        std::string s;
        for (std::size_t i = 0; i < powers.size(); ++i) {
            if (powers[i] == 0)
                continue;
            s += "\\lambda_" + std::to_string(i + 1);
            if (powers[i] > 1)
                s += "^{" + std::to_string(powers[i]) + "}";
        }
        return s;
    };
    return join_terms(display_order(p), mono, latex_rational, "+", "-", "");
}

std::string to_text(const AffineExponent &e)
{
    std::string out;
    for (const auto &[s, c] : e.linear()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        out += negative ? "-" : (out.empty() ? "" : "+");
        if (mag != 1)
            out += to_string(mag) + "*";
        out += "l" + std::to_string(s);
    }
    if (out.empty())
        return to_string(e.constant());
    if (e.constant() > 0)
        out += "+" + to_string(e.constant());
    else if (e.constant() < 0)
        out += to_string(e.constant());
    return out;
}

std::string to_latex(const AffineExponent &e)
{
    std::string out;
    for (const auto &[s, c] : e.linear()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        out += negative ? "-" : (out.empty() ? "" : "+");
        if (mag != 1)
            out += latex_rational(mag);
        out += "\\lambda_" + std::to_string(s);
    }
    if (out.empty())
        return e.constant() < 0 ? "-" + latex_rational(-e.constant()) : latex_rational(e.constant());
    if (e.constant() > 0)
        out += "+" + latex_rational(e.constant());
    else if (e.constant() < 0)
        out += "-" + latex_rational(-e.constant());
    return out;
}

} // namespace verma
