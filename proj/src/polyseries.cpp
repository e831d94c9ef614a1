#include "verma/polyseries.hpp"

#include <string>

namespace verma
{

namespace
{

// (e_p - e_q)(H_i).
int variable_weight(unsigned p, unsigned q, unsigned i)
{
    auto delta = [](unsigned a, unsigned b) { return a == b ? 1 : 0; };
    return delta(p, i) - delta(p, i + 1) - delta(q, i) + delta(q, i + 1);
}

struct Derivative {
    LambdaPoly factor;
    Monomial result;
};

// d/dx_{p,q} x^m.
std::optional<Derivative> differentiate(const Monomial &m, unsigned p, unsigned q)
{
    if (p == q + 1) {
        auto it = m.sub.find(q);
        if (it == m.sub.end())
            return std::nullopt;
        Derivative d{it->second.to_poly(), m};
        d.result.multiply(p, q, AffineExponent(-1));
        return d;
    }
    auto it = m.off.find({p, q});
    if (it == m.off.end())
        return std::nullopt;
    Derivative d{LambdaPoly(Rational(it->second)), m};
    d.result.multiply(p, q, AffineExponent(-1));
    return d;
}

void check_index(unsigned i, unsigned n)
{
    if (i < 1 || i >= n)
        throw std::invalid_argument("operator index " + std::to_string(i) + " out of range for sl("
                                    + std::to_string(n) + ")");
}

// sum_{j<i} x_{i+1,j} d/dx_{i,j}
SeriesElement row_derivation(unsigned i, const SeriesElement &f)
{
    SeriesElement out(f.precision());
    for (const auto &[m, c] : f.terms()) {
        for (unsigned j = 1; j < i; ++j) {
            auto d = differentiate(m, i, j);
            if (!d)
                continue;
            d->result.multiply(i + 1, j);
            out.add_term(d->result, c * d->factor);
        }
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Monomial

unsigned Monomial::off_degree() const
{
    unsigned d = 0;
    for (const auto &[ij, e] : off)
        d += e;
    return d;
}

AffineExponent Monomial::exponent(unsigned p, unsigned q) const
{
    if (p <= q)
        throw std::invalid_argument("x_{p,q} requires p > q");
    if (p == q + 1) {
        auto it = sub.find(q);
        return it == sub.end() ? AffineExponent() : it->second;
    }
    auto it = off.find({p, q});
    return it == off.end() ? AffineExponent() : AffineExponent(static_cast<long>(it->second));
}

void Monomial::multiply(unsigned p, unsigned q, const AffineExponent &power)
{
    if (p <= q)
        throw std::invalid_argument("x_{p,q} requires p > q");
    if (p == q + 1) {
        AffineExponent e = exponent(p, q) + power;
        if (e.is_zero())
            sub.erase(q);
        else
            sub[q] = std::move(e);
        return;
    }
    const AffineExponent e = exponent(p, q) + power;
    if (!e.is_natural())
        throw std::domain_error("exponent of x_{" + std::to_string(p) + "," + std::to_string(q)
                                + "} must be a natural number, got " + to_text(e));
    const unsigned long v = e.constant().get_num().get_ui();
    if (v == 0)
        off.erase({p, q});
    else
        off[{p, q}] = static_cast<unsigned>(v);
}

bool Monomial::is_polynomial() const
{
    for (const auto &[i, e] : sub)
        if (!e.is_natural())
            return false;
    return true;
}

std::strong_ordering operator<=>(const Monomial &a, const Monomial &b)
{
    if (auto c = a.off <=> b.off; c != 0)
        return c;
    auto ia = a.sub.begin();
    auto ib = b.sub.begin();
    for (; ia != a.sub.end() && ib != b.sub.end(); ++ia, ++ib) {
        if (auto c = ia->first <=> ib->first; c != 0)
            return c;
        if (auto c = ia->second <=> ib->second; c != 0)
            return c;
    }
    return a.sub.size() <=> b.sub.size();
}

// ---------------------------------------------------------------------------
// SeriesElement

SeriesElement SeriesElement::one()
{
    return monomial(Monomial{});
}

SeriesElement SeriesElement::monomial(const Monomial &m, const LambdaPoly &c)
{
    SeriesElement f;
    f.add_term(m, c);
    return f;
}

LambdaPoly SeriesElement::coefficient(const Monomial &m) const
{
    auto it = m_terms.find(m);
    return it == m_terms.end() ? LambdaPoly() : it->second;
}

void SeriesElement::add_term(const Monomial &m, const LambdaPoly &c)
{
    if (c.is_zero())
        return;
    if (m_precision && m.off_degree() > *m_precision)
        return;
    auto [it, inserted] = m_terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            m_terms.erase(it);
    }
}

SeriesElement SeriesElement::truncated(std::optional<unsigned> bound) const
{
    SeriesElement r(min_precision(m_precision, bound));
    for (const auto &[m, c] : m_terms)
        r.add_term(m, c);
    return r;
}

bool SeriesElement::is_polynomial() const
{
    if (!is_complete())
        return false;
    for (const auto &[m, c] : m_terms)
        if (!m.is_polynomial())
            return false;
    return true;
}

SeriesElement &SeriesElement::operator+=(const SeriesElement &other)
{
    const auto p = min_precision(m_precision, other.m_precision);
    if (p != m_precision)
        *this = truncated(p);
    for (const auto &[m, c] : other.m_terms)
        add_term(m, c);
    return *this;
}

SeriesElement &SeriesElement::operator-=(const SeriesElement &other)
{
    const auto p = min_precision(m_precision, other.m_precision);
    if (p != m_precision)
        *this = truncated(p);
    for (const auto &[m, c] : other.m_terms)
        add_term(m, -c);
    return *this;
}

SeriesElement &SeriesElement::operator*=(const LambdaPoly &c)
{
    TermMap scaled;
    for (auto &[m, k] : m_terms) {
        LambdaPoly v = k * c;
        if (!v.is_zero())
            scaled.emplace(m, std::move(v));
    }
    m_terms = std::move(scaled);
    return *this;
}

std::optional<unsigned> min_precision(std::optional<unsigned> a, std::optional<unsigned> b)
{
    if (!a)
        return b;
    if (!b)
        return a;
    return std::min(*a, *b);
}

bool agree(const SeriesElement &a, const SeriesElement &b)
{
    const auto p = min_precision(a.precision(), b.precision());
    return a.truncated(p).terms() == b.truncated(p).terms();
}

// ---------------------------------------------------------------------------
// Operators

SeriesElement eta(unsigned i, const SeriesElement &f)
{
    if (i < 1)
        throw std::invalid_argument("eta index starts at 1");
    SeriesElement out = row_derivation(i, f);
    for (const auto &[m, c] : f.terms()) {
        Monomial shifted = m;
        shifted.multiply(i + 1, i);
        out.add_term(shifted, c);
    }
    return out;
}

SeriesElement eta_pow(unsigned i, const AffineExponent &c, const SeriesElement &f, std::optional<unsigned> bound)
{
    if (i < 1)
        throw std::invalid_argument("eta index starts at 1");
    // The expansion is finite when <c>_p vanishes eventually or when every
    // x_{i,i-1} exponent is natural; otherwise a precision is needed.
    bool finite = c.is_natural() || i == 1;
    if (!finite) {
        finite = true;
        for (const auto &[m, k] : f.terms())
            if (!m.exponent(i, i - 1).is_natural())
                finite = false;
    }
    const auto precision = finite ? f.precision() : min_precision(f.precision(), bound);
    if (!finite && !precision)
        throw TruncationRequired("eta_" + std::to_string(i) + "^(" + to_text(c)
                                 + ") has an infinite expansion on this element; a bound is required");
    SeriesElement current = f.truncated(precision);
    const LambdaPoly c_poly = c.to_poly();
    SeriesElement result(precision);
    LambdaPoly coeff(Rational(1)); // <c>_p / p!
    for (unsigned p = 0;; ++p) {
        if (p > 0) {
            coeff *= c_poly - LambdaPoly(Rational(p - 1));
            coeff *= Rational(1, p);
        }
        if (coeff.is_zero())
            break;
        const AffineExponent shift = c - AffineExponent(static_cast<long>(p));
        for (const auto &[m, k] : current.terms()) {
            Monomial moved = m;
            moved.multiply(i + 1, i, shift);
            result.add_term(moved, k * coeff);
        }
        current = row_derivation(i, current);
        if (current.is_zero())
            break;
    }
    return result;
}

SeriesElement d_op(unsigned i, const SeriesElement &f, const Weight &lambda)
{
    const unsigned n = lambda.rank();
    check_index(i, n);
    std::optional<unsigned> precision;
    if (f.precision()) {
        if (*f.precision() == 0)
            throw std::domain_error("d_op on an element of precision 0 determines no degree of the result");
        precision = *f.precision() - 1;
    }
    SeriesElement out(precision);
    for (const auto &[m, c] : f.terms()) {
        // (lambda_i - 1 - sum_{j=i+1}^n x_{j,i} d_{j,i} + sum_{j=i+2}^n x_{j,i+1} d_{j,i+1}) d_{i+1,i}
        if (auto d = differentiate(m, i + 1, i)) {
            AffineExponent factor = lambda[i] - AffineExponent(1);
            for (unsigned j = i + 1; j <= n; ++j)
                factor -= d->result.exponent(j, i);
            for (unsigned j = i + 2; j <= n; ++j)
                factor += d->result.exponent(j, i + 1);
            out.add_term(d->result, c * d->factor * factor.to_poly());
        }
        // sum_{j<i} x_{i,j} d_{i+1,j}
        for (unsigned j = 1; j < i; ++j) {
            if (auto d = differentiate(m, i + 1, j)) {
                d->result.multiply(i, j);
                out.add_term(d->result, c * d->factor);
            }
        }
        // - sum_{j=i+2}^n x_{j,i+1} d_{j,i}
        for (unsigned j = i + 2; j <= n; ++j) {
            if (auto d = differentiate(m, j, i)) {
                d->result.multiply(j, i + 1);
                out.add_term(d->result, -(c * d->factor));
            }
        }
    }
    return out;
}

AffineExponent zeta_eigenvalue(unsigned i, const Monomial &m, const Weight &lambda)
{
    check_index(i, lambda.rank());
    AffineExponent value = lambda.unshifted(i);
    for (const auto &[pq, e] : m.off)
        if (int w = variable_weight(pq.first, pq.second, i); w != 0)
            value += AffineExponent(static_cast<long>(e) * w);
    for (const auto &[q, e] : m.sub)
        if (int w = variable_weight(q + 1, q, i); w != 0)
            value += e * Rational(w);
    return value;
}

Weight monomial_weight(const Monomial &m, const Weight &lambda)
{
    std::vector<AffineExponent> coords;
    for (unsigned i = 1; i < lambda.rank(); ++i)
        coords.push_back(zeta_eigenvalue(i, m, lambda) + AffineExponent(1));
    return Weight(lambda.rank(), std::move(coords));
}

SeriesElement zeta(unsigned i, const SeriesElement &f, const Weight &lambda)
{
    check_index(i, lambda.rank());
    SeriesElement out(f.precision());
    for (const auto &[m, c] : f.terms())
        out.add_term(m, c * zeta_eigenvalue(i, m, lambda).to_poly());
    return out;
}

std::vector<WeightComponent> weight_decompose(const SeriesElement &f, const Weight &lambda)
{
    std::map<Weight, SeriesElement> parts;
    for (const auto &[m, c] : f.terms()) {
        auto [it, inserted] = parts.try_emplace(monomial_weight(m, lambda), f.precision());
        it->second.add_term(m, c);
    }
    std::vector<WeightComponent> out;
    for (auto &[w, part] : parts)
        out.push_back({w, std::move(part)});
    return out;
}

} // namespace verma
