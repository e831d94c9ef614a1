#include "verma/serialize.hpp"

#include <algorithm>

namespace verma
{

using nlohmann::json;

namespace
{

[[noreturn]] void fail(const std::string &what)
{
    throw ParseError(what);
}

Rational rational_from_json(const json &j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        fail("expected a rational string, got " + j.dump());
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
        fail(e.what());
    }
}

unsigned natural_from_json(const json &j, const char *what)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
        fail(std::string("expected a natural number for ") + what + ", got " + j.dump());
    return j.get<unsigned>();
}

const json &field(const json &j, const char *name)
{
    if (!j.is_object() || !j.contains(name))
        fail(std::string("missing field '") + name + "'");
    return j.at(name);
}

void require_array(const json &j, const char *what)
{
    if (!j.is_array())
        fail(std::string("expected an array for ") + what + ", got " + j.dump());
}

std::string generator_name(unsigned i, unsigned j, bool wide)
{
    if (wide)
        return "{" + std::to_string(i) + "," + std::to_string(j) + "}";
    return std::to_string(i) + std::to_string(j);
}

bool wide_indices(unsigned max_index)
{
    return max_index > 9;
}

// Wraps multi-term coefficients in parentheses; empty for 1, "-" for -1.
std::string coefficient_prefix(const LambdaPoly &c, bool latex, bool &negative)
{
    negative = false;
    LambdaPoly mag = c;
    if (c.terms().size() == 1 && c.terms().begin()->second < 0) {
        negative = true;
        mag = -c;
    }
    if (mag == LambdaPoly(1))
        return "";
    const std::string body = latex ? to_latex(mag) : to_text(mag);
    if (mag.terms().size() > 1)
        return "(" + body + ")";
    return body;
}

std::string join_signed(const std::vector<std::pair<LambdaPoly, std::string>> &terms, bool latex)
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[c, body] : terms) {
        bool negative = false;
        std::string prefix = coefficient_prefix(c, latex, negative);
        if (first)
            out += negative ? "-" : "";
        else
            out += latex ? (negative ? "-" : "+") : (negative ? " - " : " + ");
        first = false;
        if (!prefix.empty())
            out += prefix + (latex || body.empty() ? "" : " ");
        out += body;
    }
    return out;
}

} // namespace

json to_json(const LambdaPoly &p)
{
    json out = json::array();
    for (const auto &[powers, c] : p.terms()) {
        json mono = json::array();
        for (std::size_t s = 0; s < powers.size(); ++s)
            if (powers[s] != 0)
                mono.push_back({s + 1, powers[s]});
        out.push_back({mono, to_string(c)});
    }
    return out;
}

json to_json(const AffineExponent &e)
{
    json linear = json::array();
    for (const auto &[s, c] : e.linear())
        linear.push_back({s, to_string(c)});
    return {{"constant", to_string(e.constant())}, {"linear", linear}};
}

json to_json(const SeriesElement &f, unsigned n)
{
    json terms = json::array();
    for (const auto &[m, c] : f.terms()) {
        json off = json::array();
        for (const auto &[ij, e] : m.off)
            off.push_back({ij.first, ij.second, e});
        json sub = json::array();
        for (const auto &[i, e] : m.sub)
            sub.push_back({i + 1, i, to_json(e)});
        terms.push_back({{"off", off}, {"sub", sub}, {"coeff", to_json(c)}});
    }
    json precision = f.precision() ? json(*f.precision()) : json(nullptr);
    return {{"n", n}, {"precision", precision}, {"terms", terms}};
}

json to_json(const PBWVector &v, unsigned n)
{
    json terms = json::array();
    for (const auto &[a, c] : v.terms()) {
        json index = json::array();
        for (const auto &[ij, e] : a.entries())
            index.push_back({ij.first, ij.second, e});
        terms.push_back({{"index", index}, {"coeff", to_json(c)}});
    }
    return {{"n", n}, {"terms", terms}};
}

LambdaPoly lambda_poly_from_json(const json &j)
{
    require_array(j, "a lambda polynomial");
    LambdaPoly p;
    for (const auto &term : j) {
        if (!term.is_array() || term.size() != 2)
            fail("a lambda polynomial term is [[[s, e], ...], \"c\"], got " + term.dump());
        require_array(term[0], "a lambda monomial");
        SymbolPowers powers;
        for (const auto &se : term[0]) {
            if (!se.is_array() || se.size() != 2)
                fail("a lambda power is [s, e], got " + se.dump());
            const unsigned s = natural_from_json(se[0], "a symbol index");
            const unsigned e = natural_from_json(se[1], "a symbol power");
            if (s == 0)
                fail("lambda symbols are numbered from 1");
            if (powers.size() < s)
                powers.resize(s, 0);
            powers[s - 1] += e;
        }
        while (!powers.empty() && powers.back() == 0)
            powers.pop_back();
        p.add_term(powers, rational_from_json(term[1]));
    }
    return p;
}

AffineExponent affine_from_json(const json &j)
{
    AffineExponent e(rational_from_json(field(j, "constant")));
    const json &linear = field(j, "linear");
    require_array(linear, "linear");
    for (const auto &sc : linear) {
        if (!sc.is_array() || sc.size() != 2)
            fail("a linear entry is [s, \"c\"], got " + sc.dump());
        const unsigned s = natural_from_json(sc[0], "a symbol index");
        if (s == 0)
            fail("lambda symbols are numbered from 1");
        e += AffineExponent::symbol(s) * rational_from_json(sc[1]);
    }
    return e;
}

SeriesElement series_from_json(const json &j)
{
    const unsigned n = natural_from_json(field(j, "n"), "n");
    const json &precision = field(j, "precision");
    std::optional<unsigned> p;
    if (!precision.is_null())
        p = natural_from_json(precision, "precision");
    SeriesElement f(p);
    const json &terms = field(j, "terms");
    require_array(terms, "terms");
    for (const auto &t : terms) {
        Monomial m;
        try {
            for (const auto &e : field(t, "off")) {
                if (!e.is_array() || e.size() != 3)
                    fail("an off entry is [i, j, e], got " + e.dump());
                const unsigned r = natural_from_json(e[0], "a row"), c = natural_from_json(e[1], "a column");
                if (r > n || c < 1 || r < c + 2)
                    fail("x_{" + std::to_string(r) + "," + std::to_string(c) + "} is not an off-subdiagonal variable");
                m.multiply(r, c, AffineExponent(static_cast<long>(natural_from_json(e[2], "an exponent"))));
            }
            for (const auto &e : field(t, "sub")) {
                if (!e.is_array() || e.size() != 3)
                    fail("a sub entry is [i+1, i, exponent], got " + e.dump());
                const unsigned r = natural_from_json(e[0], "a row"), c = natural_from_json(e[1], "a column");
                if (r > n || c < 1 || r != c + 1)
                    fail("x_{" + std::to_string(r) + "," + std::to_string(c) + "} is not a subdiagonal variable");
                m.multiply(r, c, affine_from_json(e[2]));
            }
        } catch (const std::logic_error &e) {
            fail(e.what());
        }
        f.add_term(m, lambda_poly_from_json(field(t, "coeff")));
    }
    return f;
}

ParsedPBWVector pbw_from_json(const json &j)
{
    const unsigned n = natural_from_json(field(j, "n"), "n");
    if (n < 2)
        fail("n must be at least 2");
    const json &terms = field(j, "terms");
    require_array(terms, "terms");
    PBWVector v;
    for (const auto &t : terms) {
        GammaIndex a;
        const json &index = field(t, "index");
        require_array(index, "index");
        for (const auto &e : index) {
            if (!e.is_array() || e.size() != 3)
                fail("an index entry is [i, j, a_ij], got " + e.dump());
            const unsigned r = natural_from_json(e[0], "a row"), c = natural_from_json(e[1], "a column");
            if (c < 1 || r <= c || r > n)
                fail("E_{" + std::to_string(r) + "," + std::to_string(c) + "} is not a lowering generator of sl("
                     + std::to_string(n) + ")");
            a.add(r, c, natural_from_json(e[2], "an exponent"));
        }
        v.add_term(a, lambda_poly_from_json(field(t, "coeff")));
    }
    return {n, std::move(v)};
}

ParsedPBWVector pbw_from_json_text(const std::string &text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    try {
        return pbw_from_json(j);
    } catch (const json::exception &e) {
        fail(std::string("malformed vector: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Human-readable forms

std::string to_latex(const PBWVector &v)
{
    std::vector<std::pair<LambdaPoly, std::string>> terms;
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        std::string body;
        for (const auto &[ij, e] : it->first.entries()) {
            body += "E_{" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "}";
            if (e > 1)
                body += "^{" + std::to_string(e) + "}";
        }
        terms.emplace_back(it->second, body + "v_\\lambda");
    }
    return join_signed(terms, true);
}

std::string to_text(const PBWVector &v)
{
    unsigned max_index = 0;
    for (const auto &[a, c] : v.terms())
        max_index = std::max(max_index, a.max_row());
    const bool wide = wide_indices(max_index);
    std::vector<std::pair<LambdaPoly, std::string>> terms;
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        std::string body;
        for (const auto &[ij, e] : it->first.entries()) {
            body += "E" + generator_name(ij.first, ij.second, wide);
            if (e > 1)
                body += "^" + std::to_string(e);
            body += " ";
        }
        terms.emplace_back(it->second, body + "v");
    }
    return join_signed(terms, false);
}

namespace
{

// Terms by off-degree, then canonical order; variables in row-major order.
template <typename VarFn>
std::vector<std::pair<LambdaPoly, std::string>> series_terms(const SeriesElement &f, VarFn var)
{
    std::vector<const SeriesElement::TermMap::value_type *> order;
    for (const auto &t : f.terms())
        order.push_back(&t);
    std::stable_sort(order.begin(), order.end(),
                     [](auto *x, auto *y) { return x->first.off_degree() < y->first.off_degree(); });
    std::vector<std::pair<LambdaPoly, std::string>> out;
    for (const auto *t : order) {
        std::map<std::pair<unsigned, unsigned>, AffineExponent> vars;
        for (const auto &[ij, e] : t->first.off)
            vars.emplace(ij, AffineExponent(static_cast<long>(e)));
        for (const auto &[i, e] : t->first.sub)
            vars.emplace(std::make_pair(i + 1, i), e);
        std::string body;
        for (const auto &[ij, e] : vars)
            body += var(ij.first, ij.second, e);
        out.emplace_back(t->second, body.empty() ? "1" : body);
    }
    return out;
}

} // namespace

std::string to_latex(const SeriesElement &f)
{
    auto terms = series_terms(f, [](unsigned i, unsigned j, const AffineExponent &e) {
        std::string s = "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
        if (!(e == AffineExponent(1)))
            s += "^{" + to_latex(e) + "}";
        return s;
    });
    // A lone "1" body only needs its coefficient.
    for (auto &[c, body] : terms)
        if (body == "1" && !(c == LambdaPoly(1)) && !(c == LambdaPoly(-1)))
            body.clear();
    return join_signed(terms, true);
}

std::string to_text(const SeriesElement &f)
{
    bool wide = false;
    for (const auto &[m, c] : f.terms())
        for (const auto &[ij, e] : m.off)
            wide = wide || wide_indices(ij.first);
    for (const auto &[m, c] : f.terms())
        if (!m.sub.empty())
            wide = wide || wide_indices(m.sub.rbegin()->first + 1);
    auto terms = series_terms(f, [wide](unsigned i, unsigned j, const AffineExponent &e) {
        std::string s = "x" + generator_name(i, j, wide);
        if (!(e == AffineExponent(1))) {
            const std::string t = to_text(e);
            s += "^" + (e.is_natural() ? t : "(" + t + ")");
        }
        return s + " ";
    });
    for (auto &[c, body] : terms) {
        if (body == "1" && !(c == LambdaPoly(1)) && !(c == LambdaPoly(-1)))
            body.clear();
        else if (!body.empty() && body.back() == ' ')
            body.pop_back();
    }
    return join_signed(terms, false);
}

} // namespace verma
