#include "verma/rootdata.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace verma
{

int Root::on_coroot(unsigned i) const
{
    auto delta = [](unsigned a, unsigned b) { return a == b ? 1 : 0; };
    return delta(k, i) - delta(k, i + 1) - delta(l, i) + delta(l, i + 1);
}

void check_root(const Root &alpha, unsigned n)
{
    if (!(1 <= alpha.k && alpha.k < alpha.l && alpha.l <= n))
        throw std::invalid_argument("e" + std::to_string(alpha.k) + "-e" + std::to_string(alpha.l)
                                    + " is not a positive root of sl(" + std::to_string(n) + ")");
}

std::vector<Root> positive_roots(unsigned n)
{
    std::vector<Root> roots;
    for (unsigned k = 1; k <= n; ++k)
        for (unsigned l = k + 1; l <= n; ++l)
            roots.push_back({k, l});
    return roots;
}

std::string to_string(const Root &alpha)
{
    return "e" + std::to_string(alpha.k) + "-e" + std::to_string(alpha.l);
}

Weight::Weight(unsigned n, std::vector<AffineExponent> coords) : m_n(n), m_coords(std::move(coords))
{
    if (n < 2)
        throw std::invalid_argument("sl(n) requires n >= 2");
    if (m_coords.size() != n - 1)
        throw std::invalid_argument("a weight of sl(" + std::to_string(n) + ") has " + std::to_string(n - 1)
                                    + " coordinates, got " + std::to_string(m_coords.size()));
}

Weight Weight::symbolic(unsigned n)
{
    std::vector<AffineExponent> c;
    for (unsigned i = 1; i + 1 <= n; ++i)
        c.push_back(AffineExponent::symbol(i));
    return Weight(n, std::move(c));
}

Weight Weight::numeric(unsigned n, const std::vector<Rational> &coords)
{
    return Weight(n, std::vector<AffineExponent>(coords.begin(), coords.end()));
}

Weight Weight::from_unshifted(unsigned n, const std::vector<Rational> &values)
{
    std::vector<AffineExponent> c;
    for (const auto &v : values)
        c.emplace_back(v + 1);
    return Weight(n, std::move(c));
}

Weight Weight::rho(unsigned n)
{
    return Weight(n, std::vector<AffineExponent>(n - 1, AffineExponent(1)));
}

bool Weight::is_numeric() const
{
    for (const auto &c : m_coords)
        if (!c.is_numeric())
            return false;
    return true;
}

std::vector<Rational> Weight::numeric_coords() const
{
    std::vector<Rational> r;
    for (const auto &c : m_coords) {
        if (!c.is_numeric())
            throw std::domain_error("weight " + to_string(*this) + " is symbolic");
        r.push_back(c.constant());
    }
    return r;
}

Weight Weight::substitute(const std::map<unsigned, AffineExponent> &images) const
{
    std::vector<AffineExponent> c;
    for (const auto &x : m_coords)
        c.push_back(x.substitute(images));
    return Weight(m_n, std::move(c));
}

std::strong_ordering operator<=>(const Weight &a, const Weight &b)
{
    if (auto c = a.m_n <=> b.m_n; c != 0)
        return c;
    for (std::size_t i = 0; i < a.m_coords.size(); ++i)
        if (auto c = a.m_coords[i] <=> b.m_coords[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

std::string to_string(const Weight &w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.coords().size(); ++i) {
        if (i)
            s += ",";
        s += to_text(w.coords()[i]);
    }
    return s + ")";
}

int cartan_entry(unsigned i, unsigned j, unsigned n)
{
    if (i < 1 || j < 1 || i >= n || j >= n)
        throw std::invalid_argument("Cartan matrix index out of range for sl(" + std::to_string(n) + ")");
    if (i == j)
        return 2;
    return (i + 1 == j || j + 1 == i) ? -1 : 0;
}

AffineExponent pairing(const Weight &lambda, const Root &alpha)
{
    check_root(alpha, lambda.rank());
    AffineExponent sum;
    for (unsigned j = alpha.k; j < alpha.l; ++j)
        sum += lambda[j];
    return sum;
}

Weight dot_reflect(const Root &alpha, const Weight &lambda)
{
    const AffineExponent p = pairing(lambda, alpha);
    std::vector<AffineExponent> c = lambda.coords();
    for (unsigned i = 1; i < lambda.rank(); ++i)
        if (int a = alpha.on_coroot(i); a != 0)
            c[i - 1] -= p * Rational(a);
    return Weight(lambda.rank(), std::move(c));
}

void check_word(const SimpleWord &word, unsigned n)
{
    for (auto s : word)
        if (s < 1 || s >= n)
            throw std::invalid_argument("s_" + std::to_string(s) + " is not a simple reflection of S_"
                                        + std::to_string(n));
}

Weight dot_action(const SimpleWord &word, const Weight &lambda)
{
    check_word(word, lambda.rank());
    Weight w = lambda;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        w = dot_reflect(Root{*it, *it + 1}, w);
    return w;
}

namespace
{

std::optional<unsigned long> positive_integer(const AffineExponent &e)
{
    if (!e.is_integer() || e.constant() <= 0)
        return std::nullopt;
    return e.constant().get_num().get_ui();
}

// Breadth-first over the up-arrow relation; discovery order yields the
// shortest, then lexicographically least, chain for each weight.
std::vector<LinkedWeight> linkage_bfs(const Weight &lambda, const Weight *target)
{
    if (!lambda.is_numeric())
        throw std::domain_error("strong linkage needs a numeric weight, got " + to_string(lambda));
    const auto roots = positive_roots(lambda.rank());
    std::vector<LinkedWeight> found{{lambda, {}}};
    std::map<Weight, std::size_t> seen{{lambda, 0}};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t at = queue.front();
        queue.pop_front();
        if (target && found[at].weight == *target)
            return {found[at]};
        for (const auto &beta : roots) {
            const Weight current = found[at].weight;
            if (!positive_integer(pairing(current, beta)))
                continue;
            Weight next = dot_reflect(beta, current);
            if (seen.count(next))
                continue;
            auto chain = found[at].chain;
            chain.push_back(beta);
            seen.emplace(next, found.size());
            found.push_back({std::move(next), std::move(chain)});
            queue.push_back(found.size() - 1);
        }
    }
    if (target)
        return {};
    return found;
}

} // namespace

std::optional<std::vector<Root>> strongly_linked_chain(const Weight &mu, const Weight &lambda)
{
    if (mu.rank() != lambda.rank())
        throw std::invalid_argument("weights of different rank");
    if (!mu.is_numeric())
        throw std::domain_error("strong linkage needs a numeric weight, got " + to_string(mu));
    auto hit = linkage_bfs(lambda, &mu);
    if (hit.empty())
        return std::nullopt;
    return hit.front().chain;
}

std::vector<LinkedWeight> strongly_linked_orbit(const Weight &lambda)
{
    return linkage_bfs(lambda, nullptr);
}

SimpleWord reduced_word(const Root &alpha)
{
    SimpleWord w;
    for (unsigned i = alpha.k; i < alpha.l; ++i)
        w.push_back(i);
    for (unsigned i = alpha.l - 1; i-- > alpha.k;)
        w.push_back(i);
    return w;
}

std::vector<unsigned> word_permutation(const SimpleWord &word, unsigned n)
{
    check_word(word, n);
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i)
        perm[i] = i + 1;
    // perm = s_{w_1} o ... o s_{w_r}: apply letters right to left to each point.
    for (unsigned x = 1; x <= n; ++x) {
        unsigned y = x;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            if (y == *it)
                y = *it + 1;
            else if (y == *it + 1)
                y = *it;
        }
        perm[x - 1] = y;
    }
    return perm;
}

std::vector<Rational> simple_root_coordinates(const Weight &lambda, const Weight &mu)
{
    const unsigned n = lambda.rank();
    if (mu.rank() != n)
        throw std::invalid_argument("weights of different rank");
    const auto l = lambda.numeric_coords();
    const auto m = mu.numeric_coords();
    // Inverse Cartan matrix of A_{n-1}: min(i,j) (n - max(i,j)) / n.
    std::vector<Rational> a(n - 1, Rational(0));
    for (unsigned i = 1; i < n; ++i) {
        for (unsigned j = 1; j < n; ++j) {
            Rational inv(std::min(i, j) * (n - std::max(i, j)), n);
            inv.canonicalize();
            a[i - 1] += inv * (l[j - 1] - m[j - 1]);
        }
        if (!is_integer(a[i - 1]))
            throw std::domain_error("weight difference is not in the root lattice");
    }
    return a;
}

} // namespace verma
