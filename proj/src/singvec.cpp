#include "verma/singvec.hpp"

#include <algorithm>
#include <functional>

#include "verma/weylaction.hpp"

namespace verma
{

std::vector<GammaIndex> enumerate_gamma_klm(unsigned k, unsigned l, unsigned m)
{
    if (!(1 <= k && k < l))
        throw std::invalid_argument("Gamma_{k,l}^m requires 1 <= k < l");
    // Only entries inside the band k <= j < i <= l touch nothing but the
    // columns k..l-1; any other entry would put weight on a column that must
    // stay zero.
    std::vector<std::pair<unsigned, unsigned>> slots;
    for (unsigned i = k + 1; i <= l; ++i)
        for (unsigned j = k; j < i; ++j)
            slots.emplace_back(i, j);
    std::vector<unsigned> column(l + 1, 0);
    std::vector<GammaIndex> out;
    GammaIndex a;
    std::function<void(std::size_t)> fill = [&](std::size_t s) {
        if (s == slots.size()) {
            for (unsigned i = k; i < l; ++i)
                if (column[i] != m)
                    return;
            out.push_back(a);
            return;
        }
        const auto [q, j] = slots[s];
        unsigned room = m;
        for (unsigned i = j; i < q; ++i)
            room = std::min(room, m - column[i]);
        for (unsigned v = 0; v <= room; ++v) {
            for (unsigned i = j; i < q; ++i)
                column[i] += v;
            a.set(q, j, v);
            fill(s + 1);
            for (unsigned i = j; i < q; ++i)
                column[i] -= v;
        }
        a.set(q, j, 0);
    };
    fill(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace
{

// Imposes <lambda+rho, e_k - e_l> = m on a weight with symbolic coordinates
// by solving for lambda_{l-1} (or the highest symbol that occurs).
Weight constrain(const Weight &lambda, const Root &alpha, unsigned m)
{
    const AffineExponent p = pairing(lambda, alpha);
    if (p.is_numeric()) {
        if (p.constant() != m)
            throw PairingMismatch("<lambda+rho, " + to_string(alpha) + "> = " + to_text(p) + ", expected "
                                      + std::to_string(m),
                                  p);
        return lambda;
    }
    unsigned symbol = p.linear().rbegin()->first;
    if (p.linear().count(alpha.l - 1))
        symbol = alpha.l - 1;
    const Rational c = p.linear().at(symbol);
    AffineExponent rest = p;
    rest.set_linear(symbol, 0);
    AffineExponent image = (AffineExponent(static_cast<long>(m)) - rest) * (Rational(1) / c);
    return lambda.substitute({{symbol, image}});
}

} // namespace

SingularVector singular_vector(unsigned k, unsigned l, unsigned m, const Weight &lambda)
{
    const Root alpha{k, l};
    check_root(alpha, lambda.rank());
    const Weight constrained = constrain(lambda, alpha, m);

    std::vector<LambdaPoly> u; // u_i at i - k
    {
        AffineExponent sum;
        for (unsigned i = k; i < l; ++i) {
            sum += constrained[i];
            u.push_back(sum.to_poly());
        }
    }

    PBWVector v;
    for (const auto &a : enumerate_gamma_klm(k, l, m)) {
        const auto st = column_statistics(a, k, l);
        LambdaPoly coeff(Rational(1));
        for (unsigned i = k; i < l; ++i) {
            const unsigned r = st.r[i - k];
            coeff *= falling_factorial(u[i - k], r);
            coeff *= factorial(m - r);
        }
        coeff *= Rational(1) / Rational(mpz_class(std::to_string(a.factorial_product())));
        v.add_term(a, coeff);
    }
    return {constrained, std::move(v), dot_reflect(alpha, constrained)};
}

GammaIndex leading_index(const PBWVector &v)
{
    if (v.is_zero())
        throw std::domain_error("the zero vector has no leading index");
    const unsigned top = v.terms().rbegin()->first.degree();
    unsigned count = 0;
    for (const auto &[a, c] : v.terms())
        if (a.degree() == top)
            ++count;
    if (count != 1)
        throw std::domain_error("maximal degree " + std::to_string(top) + " is attained by " + std::to_string(count)
                                + " indices");
    return v.terms().rbegin()->first;
}

PBWVector monic_leading(const PBWVector &v)
{
    const LambdaPoly lead = v.coefficient(leading_index(v));
    if (!lead.is_constant())
        throw std::domain_error("leading coefficient " + to_text(lead) + " is not a constant");
    PBWVector r = v;
    r *= LambdaPoly(Rational(1) / lead.constant_value());
    return r;
}

ComposedVector compose_chain(const std::vector<Root> &chain, const Weight &lambda)
{
    if (!lambda.is_numeric())
        throw std::domain_error("chain composition needs a numeric weight, got " + to_string(lambda));
    PBWVector u = PBWVector::highest_weight_vector();
    Weight current = lambda;
    for (std::size_t s = 0; s < chain.size(); ++s) {
        const Root &beta = chain[s];
        check_root(beta, lambda.rank());
        const AffineExponent p = pairing(current, beta);
        if (!p.is_integer() || p.constant() <= 0)
            throw PairingMismatch("chain step " + std::to_string(s + 1) + " (" + to_string(beta) + ") has pairing "
                                      + to_text(p) + " with " + to_string(current)
                                      + ", which is not a positive integer",
                                  p);
        const auto step = singular_vector(beta.k, beta.l, static_cast<unsigned>(p.constant().get_num().get_ui()),
                                          current);
        u = multiply(step.vector, u);
        current = step.weight;
    }
    return {std::move(u), std::move(current)};
}

} // namespace verma
