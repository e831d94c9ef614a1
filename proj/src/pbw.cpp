#include "verma/pbw.hpp"

#include <string>

namespace verma
{

// ---------------------------------------------------------------------------
// PBWVector

PBWVector PBWVector::basis(const GammaIndex &a, const LambdaPoly &c)
{
    PBWVector v;
    v.add_term(a, c);
    return v;
}

LambdaPoly PBWVector::coefficient(const GammaIndex &a) const
{
    auto it = m_terms.find(a);
    return it == m_terms.end() ? LambdaPoly() : it->second;
}

void PBWVector::add_term(const GammaIndex &a, const LambdaPoly &c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = m_terms.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            m_terms.erase(it);
    }
}

PBWVector &PBWVector::operator+=(const PBWVector &other)
{
    for (const auto &[a, c] : other.m_terms)
        add_term(a, c);
    return *this;
}

PBWVector &PBWVector::operator-=(const PBWVector &other)
{
    for (const auto &[a, c] : other.m_terms)
        add_term(a, -c);
    return *this;
}

PBWVector &PBWVector::operator*=(const LambdaPoly &c)
{
    TermMap scaled;
    for (const auto &[a, k] : m_terms) {
        LambdaPoly v = k * c;
        if (!v.is_zero())
            scaled.emplace(a, std::move(v));
    }
    m_terms = std::move(scaled);
    return *this;
}

PBWVector PBWVector::substitute(const std::vector<LambdaPoly> &images) const
{
    PBWVector r;
    for (const auto &[a, c] : m_terms)
        r.add_term(a, c.substitute(images));
    return r;
}

// ---------------------------------------------------------------------------
// Straightening in U(n-)

namespace
{

void require_lowering(const Generator &g)
{
    if (!g.is_lowering())
        throw std::invalid_argument("E_{" + std::to_string(g.row) + "," + std::to_string(g.col)
                                    + "} is not a lowering generator");
}

struct Bracket {
    int sign = 0;
    Generator value;
};

// [E_{i,j}, E_{p,q}] = delta_{j,p} E_{i,q} - delta_{q,i} E_{p,j}; for two
// lowering generators at most one of the deltas is nonzero.
Bracket bracket(const Generator &x, const Generator &y)
{
    if (x.col == y.row)
        return {1, {x.row, y.col}};
    if (y.col == x.row)
        return {-1, {y.row, x.col}};
    return {};
}

// First generator of E^a in PBW order.
Generator leading_generator(const GammaIndex &a)
{
    const auto &[ij, v] = *a.entries().begin();
    return {ij.first, ij.second};
}

GammaIndex remove_one(GammaIndex a, const Generator &g)
{
    a.set(g.row, g.col, a(g.row, g.col) - 1);
    return a;
}

struct LeftKey {
    Generator g;
    GammaIndex a;
    auto operator<=>(const LeftKey &) const = default;
};

const PBWVector &left_multiply_cached(const Generator &g, const GammaIndex &a)
{
    thread_local std::map<LeftKey, PBWVector> cache;
    LeftKey key{g, a};
    if (auto it = cache.find(key); it != cache.end())
        return it->second;

    PBWVector result;
    if (a.is_zero() || g <= leading_generator(a)) {
        result = PBWVector::basis(a + GammaIndex::unit(g.row, g.col));
    } else {
        // g g1 rest = g1 (g rest) + [g, g1] rest
        const Generator g1 = leading_generator(a);
        const GammaIndex rest = remove_one(a, g1);
        const PBWVector moved = left_multiply_cached(g, rest);
        for (const auto &[b, c] : moved.terms()) {
            PBWVector part = left_multiply_cached(g1, b);
            part *= c;
            result += part;
        }
        if (const auto br = bracket(g, g1); br.sign != 0) {
            PBWVector part = left_multiply_cached(br.value, rest);
            part *= LambdaPoly(Rational(br.sign));
            result += part;
        }
    }
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

} // namespace

PBWVector left_multiply(const Generator &g, const GammaIndex &a)
{
    require_lowering(g);
    return left_multiply_cached(g, a);
}

PBWVector straighten_lowering(const std::vector<Generator> &word)
{
    for (const auto &g : word)
        require_lowering(g);
    PBWVector v = PBWVector::highest_weight_vector();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        PBWVector next;
        for (const auto &[a, c] : v.terms()) {
            PBWVector part = left_multiply_cached(*it, a);
            part *= c;
            next += part;
        }
        v = std::move(next);
    }
    return v;
}

namespace
{

std::vector<Generator> expand(const GammaIndex &a)
{
    std::vector<Generator> word;
    for (const auto &[ij, v] : a.entries())
        for (unsigned k = 0; k < v; ++k)
            word.push_back({ij.first, ij.second});
    return word;
}

PBWVector left_multiply_vector(const Generator &g, const PBWVector &v)
{
    PBWVector out;
    for (const auto &[a, c] : v.terms()) {
        PBWVector part = left_multiply_cached(g, a);
        part *= c;
        out += part;
    }
    return out;
}

} // namespace

PBWVector multiply(const PBWVector &u, const PBWVector &w)
{
    PBWVector out;
    for (const auto &[a, c] : u.terms()) {
        PBWVector part = w;
        const auto word = expand(a);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            part = left_multiply_vector(*it, part);
        part *= c;
        out += part;
    }
    return out;
}

PBWVector lower_action(unsigned i, const PBWVector &v)
{
    if (i < 1)
        throw std::invalid_argument("lowering index starts at 1");
    return left_multiply_vector({i + 1, i}, v);
}

// ---------------------------------------------------------------------------
// Action of gl(n) on M(lambda)

namespace
{

// Computes x E^{word[t..]} v_lambda for arbitrary matrix units x by commuting
// x to the right: x g rest = g (x rest) + [x, g] rest.
class VermaAction
{
public:
    VermaAction(const GammaIndex &a, const Weight &lambda) : m_word(expand(a))
    {
        // gl(n) lift: E_{p,p} v_lambda = Lambda_p v_lambda with
        // Lambda_p - Lambda_{p+1} = lambda_p - 1 and Lambda_n = 0.
        const unsigned n = lambda.rank();
        m_diagonal.assign(n + 1, AffineExponent());
        for (unsigned p = n - 1; p >= 1; --p)
            m_diagonal[p] = m_diagonal[p + 1] + lambda.unshifted(p);
    }

    PBWVector apply(const Generator &x) { return act(x, 0); }

private:
    GammaIndex suffix(std::size_t t) const
    {
        GammaIndex a;
        for (std::size_t k = t; k < m_word.size(); ++k)
            a.add(m_word[k].row, m_word[k].col);
        return a;
    }

    PBWVector act(const Generator &x, std::size_t t)
    {
        const auto key = std::make_pair(x, t);
        if (auto it = m_memo.find(key); it != m_memo.end())
            return it->second;
        PBWVector result;
        if (x.is_lowering()) {
            result = left_multiply_cached(x, suffix(t));
        } else if (x.row == x.col) {
            const GammaIndex b = suffix(t);
            AffineExponent eigen = m_diagonal[x.row];
            for (const auto &[ij, v] : b.entries()) {
                if (ij.first == x.row)
                    eigen += AffineExponent(static_cast<long>(v));
                if (ij.second == x.row)
                    eigen -= AffineExponent(static_cast<long>(v));
            }
            result = PBWVector::basis(b, eigen.to_poly());
        } else if (t < m_word.size()) {
            const Generator &g = m_word[t];
            result = left_multiply_vector(g, act(x, t + 1));
            // [E_{p,q}, E_{r,s}] = delta_{q,r} E_{p,s} - delta_{s,p} E_{r,q}
            if (x.col == g.row)
                result += act({x.row, g.col}, t + 1);
            if (g.col == x.row)
                result -= act({g.row, x.col}, t + 1);
        }
        m_memo.emplace(key, result);
        return result;
    }

    std::vector<Generator> m_word;
    std::vector<AffineExponent> m_diagonal;
    std::map<std::pair<Generator, std::size_t>, PBWVector> m_memo;
};

} // namespace

PBWVector raise_action(unsigned i, const PBWVector &v, const Weight &lambda)
{
    if (i < 1 || i >= lambda.rank())
        throw std::invalid_argument("raising index " + std::to_string(i) + " out of range for sl("
                                    + std::to_string(lambda.rank()) + ")");
    PBWVector out;
    for (const auto &[a, c] : v.terms()) {
        if (a.max_row() > lambda.rank())
            throw std::invalid_argument("PBW index " + to_string(a) + " does not belong to sl("
                                        + std::to_string(lambda.rank()) + ")");
        VermaAction action(a, lambda);
        PBWVector part = action.apply({i, i + 1});
        part *= c;
        out += part;
    }
    return out;
}

Weight pbw_weight(const GammaIndex &a, const Weight &lambda)
{
    Monomial m;
    for (const auto &[ij, v] : a.entries())
        m.multiply(ij.first, ij.second, AffineExponent(static_cast<long>(v)));
    return monomial_weight(m, lambda);
}

bool SingularityReport::singular() const
{
    if (!weight_vector)
        return false;
    for (const auto &r : residuals)
        if (!r.is_zero())
            return false;
    return true;
}

SingularityReport check_singular(const PBWVector &v, const Weight &lambda)
{
    SingularityReport report;
    for (const auto &[a, c] : v.terms()) {
        Weight w = pbw_weight(a, lambda);
        if (!report.weight) {
            report.weight = std::move(w);
        } else if (!(*report.weight == w)) {
            report.weight_vector = false;
            report.weight.reset();
            return report;
        }
    }
    for (unsigned i = 1; i < lambda.rank(); ++i)
        report.residuals.push_back(raise_action(i, v, lambda));
    return report;
}

bool is_singular(const PBWVector &v, const Weight &lambda)
{
    if (v.is_zero())
        throw std::invalid_argument("the zero vector is not a singular vector");
    const auto report = check_singular(v, lambda);
    if (!report.weight_vector)
        throw NotWeightVector("vector is not a weight vector");
    return report.singular();
}

SeriesElement tau(const PBWVector &v)
{
    SeriesElement f;
    for (const auto &[a, c] : v.terms()) {
        Monomial m;
        for (const auto &[ij, e] : a.entries())
            m.multiply(ij.first, ij.second, AffineExponent(static_cast<long>(e)));
        f.add_term(m, c);
    }
    return f;
}

PBWVector tau_inverse(const SeriesElement &f)
{
    if (!f.is_complete())
        throw std::domain_error("tau inverse needs a complete element, got one of precision "
                                + std::to_string(*f.precision()));
    PBWVector v;
    for (const auto &[m, c] : f.terms()) {
        GammaIndex a;
        for (const auto &[ij, e] : m.off)
            a.set(ij.first, ij.second, e);
        for (const auto &[i, e] : m.sub) {
            if (!e.is_natural())
                throw std::domain_error("tau inverse needs natural exponents, x_{" + std::to_string(i + 1) + ","
                                        + std::to_string(i) + "} has exponent " + to_text(e));
            a.set(i + 1, i, static_cast<unsigned>(e.constant().get_num().get_ui()));
        }
        v.add_term(a, c);
    }
    return v;
}

} // namespace verma
