#include "verma/weylaction.hpp"

#include <algorithm>
#include <functional>

namespace verma
{

SeriesElement simple_reflection(unsigned i, const SeriesElement &f, const Weight &lambda,
                                std::optional<unsigned> bound)
{
    if (i < 1 || i >= lambda.rank())
        throw std::invalid_argument("s_" + std::to_string(i) + " is not a simple reflection of S_"
                                    + std::to_string(lambda.rank()));
    SeriesElement result(f.precision());
    for (const auto &[mu, part] : weight_decompose(f, lambda))
        result += eta_pow(i, mu[i], part, bound);
    return result;
}

SeriesElement sigma_of_one(const SimpleWord &word, const Weight &lambda, std::optional<unsigned> bound)
{
    check_word(word, lambda.rank());
    SeriesElement f = SeriesElement::one();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        f = simple_reflection(*it, f, lambda, bound);
    return f;
}

std::vector<GammaIndex> enumerate_gamma_kl(unsigned k, unsigned l, unsigned bound)
{
    if (!(1 <= k && k < l))
        throw std::invalid_argument("Gamma_{k,l} requires 1 <= k < l");
    std::vector<std::pair<unsigned, unsigned>> slots;
    for (unsigned i = k + 2; i <= l; ++i)
        for (unsigned j = k; j + 2 <= i; ++j)
            slots.emplace_back(i, j);
    std::vector<GammaIndex> out;
    GammaIndex a;
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t slot, unsigned remaining) {
        if (slot == slots.size()) {
            out.push_back(a);
            return;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            a.set(slots[slot].first, slots[slot].second, v);
            fill(slot + 1, remaining - v);
        }
        a.set(slots[slot].first, slots[slot].second, 0);
    };
    fill(0, bound);
    std::sort(out.begin(), out.end());
    return out;
}

ColumnStatistics column_statistics(const GammaIndex &a, unsigned k, unsigned l)
{
    ColumnStatistics s;
    for (unsigned i = k; i < l; ++i) {
        unsigned r = 0, row = 0;
        for (const auto &[qj, v] : a.entries()) {
            const auto [q, j] = qj;
            if (j <= i && q > i + 1)
                r += v;
            if (q == i + 1 && j < i)
                row += v;
        }
        s.r.push_back(r);
        s.t.push_back(r + row);
    }
    return s;
}

SeriesElement s_alpha_closed_form(const Root &alpha, const Weight &lambda, std::optional<unsigned> bound)
{
    check_root(alpha, lambda.rank());
    const auto [k, l] = alpha;
    std::vector<AffineExponent> u; // u_i at i - k
    {
        AffineExponent sum;
        for (unsigned i = k; i < l; ++i) {
            sum += lambda[i];
            u.push_back(sum);
        }
    }
    const AffineExponent &top = u.back();

    std::optional<unsigned> precision = bound;
    unsigned degree_cap = 0;
    if (alpha.is_simple()) {
        // Gamma_{k,k+1} = {0}.
        precision = std::nullopt;
    } else if (top.is_natural()) {
        // Nonzero terms have t_i <= u_{l-1} = m, hence |a| <= (l-k) m.
        precision = std::nullopt;
        degree_cap = (l - k) * static_cast<unsigned>(top.constant().get_num().get_ui());
    } else if (!bound) {
        throw TruncationRequired("s_" + to_string(alpha) + "(1) is an infinite series for <lambda+rho,alpha> = "
                                 + to_text(top) + "; a bound is required");
    } else {
        degree_cap = *bound;
    }

    SeriesElement result(precision);
    for (const auto &a : enumerate_gamma_kl(k, l, degree_cap)) {
        const auto st = column_statistics(a, k, l);
        LambdaPoly coeff(Rational(1));
        Monomial m;
        for (const auto &[ij, v] : a.entries())
            m.multiply(ij.first, ij.second, AffineExponent(static_cast<long>(v)));
        for (unsigned i = k; i < l && !coeff.is_zero(); ++i) {
            const unsigned r = st.r[i - k], t = st.t[i - k];
            coeff *= falling_factorial(u[i - k], r);
            coeff *= falling_factorial(top - AffineExponent(static_cast<long>(r)), t - r);
            m.multiply(i + 1, i, top - AffineExponent(static_cast<long>(t)));
        }
        coeff *= Rational(1) / Rational(mpz_class(std::to_string(a.factorial_product())));
        result.add_term(m, coeff);
    }
    return result;
}

bool polynomiality_check(const Root &alpha, const Weight &lambda)
{
    if (!lambda.is_numeric())
        throw std::domain_error("polynomiality of s_alpha(1) is undecidable for symbolic weight "
                                + to_string(lambda));
    return pairing(lambda, alpha).is_natural();
}

} // namespace verma
