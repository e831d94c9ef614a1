// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"
#include "verma/cli.hpp"
#include "verma/serialize.hpp"
#include "verma/singvec.hpp"
#include "verma/weylaction.hpp"

using namespace testing;

namespace
{

constexpr double limit_cli_example = 1.0;
constexpr double limit_series_example = 1.0;
constexpr double limit_double_oracle = 60.0;
constexpr double limit_word_independence = 30.0;
constexpr double limit_lemmas = 30.0;
constexpr double limit_polynomiality = 30.0;
constexpr double limit_orbit_count = 10.0;
constexpr double limit_chains = 30.0;

constexpr unsigned series_depth = 8;
constexpr unsigned random_weights_per_case = 20;
constexpr unsigned word_bound = 6;
constexpr unsigned lemma_instances = 50;
constexpr unsigned lemma_bound = 4;
constexpr unsigned polynomiality_cases = 50;
constexpr unsigned polynomiality_bound = 6;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string &what)
    {
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(unsigned number, const std::string &name, double limit, const std::function<void(Outcome &)> &body)
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception &e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds < limit, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit) + " s");
    std::ostringstream line;
    line << std::fixed << std::setprecision(3);
    line << (o.ok ? "PASS" : "FAIL") << "  " << number << ". " << name << " (" << seconds << " s)";
    if (!o.ok)
        line << ": " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.ok)
        ++failures;
}

SeriesElement expected_rank3_series(unsigned depth)
{
    const AffineExponent u = A(1) + A(2);
    SeriesElement f(depth);
    for (unsigned p = 0; p <= depth; ++p) {
        const AffineExponent ps(static_cast<long>(p));
        f.add_term(mono({{3, 2, u - ps}, {2, 1, u - ps}, {3, 1, ps}}),
                   falling_factorial(u, p) * falling_factorial(A(1), p) * (Rational(1) / factorial(p)));
    }
    return f;
}

// s_{l-1} ... s_{k+1} s_k s_{k+1} ... s_{l-1}
SimpleWord mirrored_word(const Root &alpha)
{
    SimpleWord w;
    for (unsigned i = alpha.l - 1; i > alpha.k; --i)
        w.push_back(i);
    w.push_back(alpha.k);
    for (unsigned i = alpha.k + 1; i < alpha.l; ++i)
        w.push_back(i);
    return w;
}

bool proportional(const PBWVector &a, const PBWVector &b)
{
    if (a.size() != b.size() || a.is_zero())
        return a.size() == b.size();
    const auto &[lead, ca] = *a.terms().begin();
    const LambdaPoly cb = b.coefficient(lead);
    if (cb.is_zero())
        return false;
    // Numeric coefficients only.
    return a * cb == b * ca;
}

// lambda - mu in simple-root coordinates, through epsilon coordinates.
std::vector<Rational> epsilon_decomposition(const Weight &lambda, const Weight &mu)
{
    const unsigned n = lambda.rank();
    std::vector<Rational> dx(n + 1, 0);
    for (unsigned i = n - 1; i >= 1; --i)
        dx[i] = dx[i + 1] + lambda[i].constant() - mu[i].constant();
    Rational mean = 0;
    for (unsigned i = 1; i <= n; ++i)
        mean += dx[i];
    mean /= n;
    std::vector<Rational> a;
    Rational run = 0;
    for (unsigned i = 1; i < n; ++i) {
        run += dx[i] - mean;
        a.push_back(run);
    }
    return a;
}

// Every chain of `length` strong-linkage steps from lambda ending at target.
void chains_to(const Weight &at, const Weight &target, unsigned length, std::vector<Root> &prefix,
               std::vector<std::vector<Root>> &out)
{
    if (prefix.size() == length) {
        if (at == target)
            out.push_back(prefix);
        return;
    }
    for (const auto &b : positive_roots(at.rank())) {
        const AffineExponent p = pairing(at, b);
        if (!p.is_natural() || p.is_zero())
            continue;
        prefix.push_back(b);
        chains_to(dot_reflect(b, at), target, length, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

int main()
{
    criterion(1, "sl(4) singular vector from the command line", limit_cli_example, [](Outcome &o) {
        std::ostringstream out, err;
        const int status =
            run_cli({"singular", "--n", "4", "--root", "1,4", "--m", "1", "--lambda", "symbolic"}, out, err);
        o.require(status == exit_ok, "exit status " + std::to_string(status));
        const auto v = pbw_from_json_text(out.str()).vector;
        PBWVector expected;
        expected.add_term(idx({{2, 1, 1}, {3, 2, 1}, {4, 3, 1}}), 1);
        expected.add_term(idx({{3, 1, 1}, {4, 3, 1}}), L(1));
        expected.add_term(idx({{2, 1, 1}, {4, 2, 1}}), L(1) + L(2));
        expected.add_term(idx({{4, 1, 1}}), L(1) * (L(1) + L(2)));
        o.require(v.size() == 4, "term count " + std::to_string(v.size()));
        o.require(v == expected, "got " + to_text(v));
    });

    criterion(2, "s1 s2 s1 (1) against the n = 3 series through degree 8", limit_series_example, [](Outcome &o) {
        const SeriesElement f = sigma_of_one({1, 2, 1}, Weight::symbolic(3), series_depth);
        o.require(f.precision() == series_depth, "precision");
        o.require(f == expected_rank3_series(series_depth), "mismatch: " + to_text(f));
    });

    criterion(3, "double-oracle singularity sweep", limit_double_oracle, [](Outcome &o) {
        Gen g(3001);
        unsigned checked = 0;
        for (unsigned n = 2; n <= 4; ++n)
            for (const auto &a : positive_roots(n))
                for (unsigned m = 1; m <= 3; ++m)
                    for (unsigned t = 0; t < random_weights_per_case; ++t) {
                        const Weight lam = g.weight_with_pairing(n, a, m);
                        const auto sv = singular_vector(a.k, a.l, m, lam);
                        const SeriesElement f = tau(sv.vector);
                        const std::string where = to_string(a) + " m=" + std::to_string(m) + " at " + to_string(lam);
                        o.require(!sv.vector.is_zero(), "zero vector " + where);
                        for (unsigned i = 1; i < n; ++i) {
                            o.require(raise_action(i, sv.vector, lam).is_zero(), "raise " + where);
                            const SeriesElement d = d_op(i, f, lam);
                            o.require(d.is_zero() && d.is_complete(), "d_i " + where);
                        }
                        ++checked;
                    }
        o.require(checked == 600, "case count " + std::to_string(checked));
    });

    criterion(4, "two reduced words give the same s_alpha(1)", limit_word_independence, [](Outcome &o) {
        for (unsigned n = 2; n <= 4; ++n)
            for (const auto &a : positive_roots(n)) {
                const Weight lam = Weight::symbolic(n);
                const SimpleWord w1 = reduced_word(a), w2 = mirrored_word(a);
                // A simple reflection has one reduced word.
                o.require(a.is_simple() || w1 != w2, "words coincide for " + to_string(a));
                o.require(word_permutation(w1, n) == word_permutation(w2, n), "words differ in S_n");
                const SeriesElement f1 = sigma_of_one(w1, lam, word_bound), f2 = sigma_of_one(w2, lam, word_bound);
                const auto p = min_precision(f1.precision(), f2.precision());
                o.require(!p || *p >= word_bound, "precision below bound for " + to_string(a));
                o.require(f1.truncated(word_bound) == f2.truncated(word_bound), "disagree for " + to_string(a));
            }
    });

    criterion(5, "operator lemmas on random instances", limit_lemmas, [](Outcome &o) {
        Gen g(5003);
        const unsigned B = lemma_bound;
        unsigned commutator = 0, cartan = 0, additivity = 0, braid = 0;
        auto close = [&](const SeriesElement &x, const SeriesElement &y, unsigned depth, const std::string &what) {
            const auto p = min_precision(x.precision(), y.precision());
            o.require(agree(x, y) && (!p || *p >= depth), what);
        };
        while (braid < lemma_instances || commutator < lemma_instances) {
            const unsigned n = g.uniform(2, 4);
            const Weight lam = g.coin() ? Weight::symbolic(n) : g.weight(n);
            const SeriesElement f = g.element(n, g.uniform(1, 3), 2, n - 1, false);
            const AffineExponent c = g.exponent(n - 1);
            const unsigned i = g.uniform(1, n - 1), j = g.uniform(1, n - 1);

            const SeriesElement dl = d_op(i, eta_pow(j, c, f, B), lam) - eta_pow(j, c, d_op(i, f, lam), B);
            const SeriesElement inner = f * (LambdaPoly(1) - c.to_poly()) + zeta(j, f, lam);
            const SeriesElement dr =
                eta_pow(j, c - AffineExponent(1), inner, B) * (c.to_poly() * LambdaPoly(i == j ? 1 : 0));
            close(dl, dr, B - 1, "commutator");
            ++commutator;

            const SeriesElement zl = zeta(i, eta_pow(j, c, f, B), lam) - eta_pow(j, c, zeta(i, f, lam), B);
            const SeriesElement zr = eta_pow(j, c, f, B) * (c.to_poly() * LambdaPoly(-cartan_entry(i, j, n)));
            close(zl, zr, B, "Cartan shift");
            ++cartan;

            const AffineExponent c2 = g.exponent(n - 1);
            close(eta_pow(j, c, eta_pow(j, c2, f, B), B), eta_pow(j, c + c2, f, B), B, "additivity");
            ++additivity;

            if (n >= 3) {
                const unsigned b = g.uniform(1, n - 2);
                const SeriesElement left = eta_pow(b, c, eta_pow(b + 1, c + c2, eta_pow(b, c2, f, B), B), B);
                const SeriesElement right = eta_pow(b + 1, c2, eta_pow(b, c + c2, eta_pow(b + 1, c, f, B), B), B);
                close(left, right, B, "braid");
                ++braid;
            }
        }
        o.require(std::min({commutator, cartan, additivity, braid}) >= lemma_instances, "too few instances");
    });

    criterion(6, "polynomiality criterion against a term scan", limit_polynomiality, [](Outcome &o) {
        Gen g(6007);
        unsigned polynomial = 0;
        for (unsigned t = 0; t < polynomiality_cases; ++t) {
            const unsigned n = g.uniform(2, 4);
            const auto roots = positive_roots(n);
            const Root a = roots[g.uniform(0, static_cast<unsigned>(roots.size() - 1))];
            const Weight lam = g.coin() ? g.weight_with_pairing(n, a, g.uniform(0, 4)) : g.weight(n);
            const SeriesElement f = s_alpha_closed_form(a, lam, polynomiality_bound);
            bool all_natural = true;
            for (const auto &[m, c] : f.terms()) {
                if (c.is_zero())
                    continue;
                for (const auto &[i, e] : m.sub)
                    all_natural = all_natural && e.is_natural();
            }
            o.require(polynomiality_check(a, lam) == all_natural, to_string(a) + " at " + to_string(lam));
            polynomial += all_natural;
        }
        o.require(polynomial > 0 && polynomial < polynomiality_cases, "sample covers only one side");
    });

    criterion(7, "six singular vectors for a regular dominant integral weight", limit_orbit_count, [](Outcome &o) {
        for (const Weight &lam : {numeric({"1", "1"}), numeric({"2", "3"}), numeric({"4", "1"})}) {
            const std::vector<SimpleWord> group = {{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};
            std::vector<PBWVector> vectors;
            std::set<std::string> weights;
            for (const auto &w : group) {
                const SeriesElement f = sigma_of_one(w, lam);
                const std::string where = to_string(lam) + " word size " + std::to_string(w.size());
                o.require(f.is_complete() && f.is_polynomial(), "not a polynomial " + where);
                const PBWVector v = tau_inverse(f);
                o.require(is_singular(v, lam), "not singular " + where);
                const Weight target = dot_action(w, lam);
                for (const auto &[a, c] : v.terms())
                    o.require(pbw_weight(a, lam) == target, "wrong weight " + where);
                weights.insert(to_string(target));
                vectors.push_back(v);
            }
            o.require(weights.size() == 6, "distinct weights " + std::to_string(weights.size()));
            for (std::size_t x = 0; x < vectors.size(); ++x)
                for (std::size_t y = x + 1; y < vectors.size(); ++y)
                    o.require(!proportional(vectors[x], vectors[y]), "proportional pair at " + to_string(lam));
        }
    });

    criterion(8, "maximal chains compose to singular vectors", limit_chains, [](Outcome &o) {
        for (const Weight &lam : {numeric({"1", "1"}), numeric({"2", "3"}), numeric({"3", "1"}), numeric({"1", "0"}),
                                  numeric({"5", "2"})}) {
            const Weight bottom = dot_action({1, 2, 1}, lam);
            std::vector<std::vector<Root>> chains;
            std::vector<Root> prefix;
            chains_to(lam, bottom, 3, prefix, chains);
            const bool regular = lam[1].constant() > 0 && lam[2].constant() > 0;
            o.require(!regular || chains.size() == 4, "maximal chains at " + to_string(lam) + ": "
                                                          + std::to_string(chains.size()));
            const auto a = epsilon_decomposition(lam, bottom);
            GammaIndex expected;
            for (unsigned i = 1; i <= 2; ++i)
                expected.add(i + 1, i, static_cast<unsigned>(a[i - 1].get_num().get_ui()));
            for (const auto &chain : chains) {
                const auto c = compose_chain(chain, lam);
                std::string where = to_string(lam) + " chain";
                for (const auto &r : chain)
                    where += " " + to_string(r);
                o.require(c.weight == bottom, "end weight " + where);
                o.require(is_singular(c.vector, lam), "not singular " + where);
                o.require(leading_index(c.vector) == expected, "leading index " + where);
            }
        }
    });

    return failures == 0 ? 0 : 1;
}
