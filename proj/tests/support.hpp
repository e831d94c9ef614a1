#ifndef VERMA_TESTS_SUPPORT_HPP
#define VERMA_TESTS_SUPPORT_HPP

#include <algorithm>
#include <initializer_list>
#include <random>
#include <tuple>
#include <vector>

#include "verma/gamma.hpp"
#include "verma/pbw.hpp"
#include "verma/polyseries.hpp"
#include "verma/rootdata.hpp"
#include "verma/scalar.hpp"

namespace testing
{

using namespace verma;

inline Rational Q(const char *text)
{
    return parse_rational(text);
}

inline LambdaPoly L(unsigned s)
{
    return LambdaPoly::symbol(s);
}

inline AffineExponent A(unsigned s)
{
    return AffineExponent::symbol(s);
}

inline Weight numeric(std::initializer_list<const char *> coords)
{
    std::vector<Rational> v;
    for (const char *c : coords)
        v.push_back(Q(c));
    return Weight::numeric(static_cast<unsigned>(v.size() + 1), v);
}

inline GammaIndex idx(std::initializer_list<std::tuple<unsigned, unsigned, unsigned>> entries)
{
    GammaIndex a;
    for (const auto &[i, j, e] : entries)
        a.add(i, j, e);
    return a;
}

inline Monomial mono(std::initializer_list<std::tuple<unsigned, unsigned, AffineExponent>> vars)
{
    Monomial m;
    for (const auto &[i, j, e] : vars)
        m.multiply(i, j, e);
    return m;
}

inline SeriesElement series(std::initializer_list<std::pair<Monomial, LambdaPoly>> terms)
{
    SeriesElement f;
    for (const auto &[m, c] : terms)
        f.add_term(m, c);
    return f;
}

// Hand-rolled generators over a fixed seed.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : m_rng(seed) {}

    unsigned uniform(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(m_rng); }
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(m_rng); }
    bool coin() { return uniform(0, 1) == 1; }

    // p/q with |p| <= 12, 1 <= q <= 6.
    Rational rational()
    {
        Rational r(integer(-12, 12), integer(1, 6));
        r.canonicalize();
        return r;
    }

    Rational non_integer()
    {
        Rational r;
        do
            r = rational();
        while (is_integer(r));
        return r;
    }

    Weight weight(unsigned n)
    {
        std::vector<Rational> v;
        for (unsigned i = 1; i < n; ++i)
            v.push_back(rational());
        return Weight::numeric(n, v);
    }

    // A random weight with <lambda+rho, e_k - e_l> = m.
    Weight weight_with_pairing(unsigned n, const Root &alpha, unsigned m)
    {
        std::vector<Rational> v;
        Rational sum = 0;
        for (unsigned i = 1; i < n; ++i) {
            v.push_back(rational());
            if (alpha.k <= i && i + 1 < alpha.l)
                sum += v.back();
        }
        v[alpha.l - 2] = Rational(m) - sum;
        return Weight::numeric(n, v);
    }

    // Random exponent: rational or a small affine form in the symbols.
    AffineExponent exponent(unsigned symbols)
    {
        AffineExponent e(rational());
        if (symbols > 0 && coin())
            e += A(uniform(1, symbols)) * Rational(integer(-1, 2));
        return e;
    }

    LambdaPoly coefficient(unsigned symbols)
    {
        LambdaPoly c(rational());
        if (symbols > 0 && coin())
            c += L(uniform(1, symbols)) * rational();
        return c.is_zero() ? LambdaPoly(1) : c;
    }

    // Random off-subdiagonal polynomial part times random subdiagonal
    // powers; at most `terms` terms, all of one weight when weighted.
    Monomial monomial(unsigned n, unsigned max_off, unsigned symbols, bool natural_sub)
    {
        Monomial m;
        for (unsigned i = 1; i < n; ++i) {
            if (coin()) {
                if (natural_sub)
                    m.multiply(i + 1, i, AffineExponent(static_cast<long>(uniform(1, 3))));
                else
                    m.multiply(i + 1, i, exponent(symbols));
            }
        }
        const unsigned off = uniform(0, max_off);
        for (unsigned t = 0; t < off && n >= 3; ++t) {
            const unsigned i = uniform(3, n), j = uniform(1, i - 2);
            m.multiply(i, j, AffineExponent(1));
        }
        return m;
    }

    SeriesElement element(unsigned n, unsigned terms, unsigned max_off, unsigned symbols, bool natural_sub)
    {
        SeriesElement f;
        for (unsigned t = 0; t < terms; ++t)
            f.add_term(monomial(n, max_off, symbols, natural_sub), coefficient(symbols));
        return f;
    }

    GammaIndex gamma(unsigned n, unsigned max_degree)
    {
        GammaIndex a;
        const unsigned d = uniform(0, max_degree);
        for (unsigned t = 0; t < d; ++t) {
            const unsigned i = uniform(2, n), j = uniform(1, i - 1);
            a.add(i, j);
        }
        return a;
    }

    PBWVector pbw(unsigned n, unsigned terms, unsigned max_degree, unsigned symbols)
    {
        PBWVector v;
        for (unsigned t = 0; t < terms; ++t)
            v.add_term(gamma(n, max_degree), coefficient(symbols));
        return v;
    }

    std::mt19937_64 &engine() { return m_rng; }

private:
    std::mt19937_64 m_rng;
};

// ---------------------------------------------------------------------------
// Word-rewriting oracle, kept independent of the library's straightening.

using Word = std::vector<Generator>;

struct WordTerm {
    LambdaPoly coeff;
    Word word;
};

// Bubble-sorts each word with adjacent transpositions
// x y = y x + [x, y] until every word is lowering and PBW-ordered. Raising
// and diagonal letters are pushed to the right and evaluated on v_lambda.
inline PBWVector rewrite_on_highest_weight(std::vector<WordTerm> work, const Weight &lambda)
{
    const unsigned n = lambda.rank();
    // Diagonal eigenvalues of a gl(n) lift; sl(n) only sees differences,
    // so the offset is arbitrary.
    std::vector<LambdaPoly> diag(n + 1, LambdaPoly(7));
    for (unsigned p = n - 1; p >= 1; --p)
        diag[p] = diag[p + 1] + lambda.unshifted(p).to_poly();

    PBWVector out;
    while (!work.empty()) {
        WordTerm t = std::move(work.back());
        work.pop_back();
        if (t.coeff.is_zero())
            continue;
        auto &w = t.word;
        // The rightmost non-lowering letter.
        std::size_t pos = w.size();
        for (std::size_t s = w.size(); s-- > 0;)
            if (!w[s].is_lowering()) {
                pos = s;
                break;
            }
        if (pos != w.size()) {
            const Generator x = w[pos];
            if (pos + 1 == w.size()) {
                if (x.is_raising())
                    continue;
                w.pop_back();
                work.push_back({t.coeff * diag[x.row], w});
                continue;
            }
            const Generator y = w[pos + 1];
            Word swapped = w;
            std::swap(swapped[pos], swapped[pos + 1]);
            work.push_back({t.coeff, swapped});
            // [E_ab, E_cd] = d_bc E_ad - d_da E_cb
            auto with = [&](const Generator &g) {
                Word r = w;
                r[pos] = g;
                r.erase(r.begin() + static_cast<long>(pos) + 1);
                return r;
            };
            if (x.col == y.row)
                work.push_back({t.coeff, with({x.row, y.col})});
            if (y.col == x.row)
                work.push_back({-t.coeff, with({y.row, x.col})});
            continue;
        }
        // Lowering only: find the first descent in PBW order.
        std::size_t d = w.size();
        for (std::size_t s = 0; s + 1 < w.size(); ++s)
            if (w[s + 1] < w[s]) {
                d = s;
                break;
            }
        if (d == w.size()) {
            GammaIndex a;
            for (const auto &g : w)
                a.add(g.row, g.col);
            out.add_term(a, t.coeff);
            continue;
        }
        const Generator x = w[d], y = w[d + 1];
        Word swapped = w;
        std::swap(swapped[d], swapped[d + 1]);
        work.push_back({t.coeff, swapped});
        Word r = w;
        r.erase(r.begin() + static_cast<long>(d) + 1);
        if (x.col == y.row) {
            r[d] = {x.row, y.col};
            work.push_back({t.coeff, r});
        } else if (y.col == x.row) {
            r[d] = {y.row, x.col};
            work.push_back({-t.coeff, r});
        }
    }
    return out;
}

inline Word pbw_word(const GammaIndex &a)
{
    Word w;
    for (const auto &[ij, e] : a.entries())
        for (unsigned k = 0; k < e; ++k)
            w.push_back({ij.first, ij.second});
    return w;
}

// x * v computed by the rewriting oracle.
inline PBWVector oracle_act(const Generator &x, const PBWVector &v, const Weight &lambda)
{
    std::vector<WordTerm> work;
    for (const auto &[a, c] : v.terms()) {
        Word w = pbw_word(a);
        w.insert(w.begin(), x);
        work.push_back({c, w});
    }
    return rewrite_on_highest_weight(work, lambda);
}

// Product of lowering letters applied to v_lambda, by the rewriting oracle.
inline PBWVector oracle_straighten(const Word &w)
{
    unsigned n = 2;
    for (const auto &g : w)
        n = std::max(n, g.row);
    return rewrite_on_highest_weight({{LambdaPoly(1), w}}, Weight::rho(n));
}

inline LambdaPoly binomial(unsigned m, unsigned p)
{
    return LambdaPoly(factorial(m) / (factorial(p) * factorial(m - p)));
}

} // namespace testing

#endif
