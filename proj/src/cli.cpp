#include "verma/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "verma/serialize.hpp"
#include "verma/singvec.hpp"
#include "verma/weylaction.hpp"

namespace verma
{

namespace
{

std::vector<std::string> split_commas(const std::string &text)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        parts.push_back(item);
    if (!text.empty() && text.back() == ',')
        parts.emplace_back();
    return parts;
}

unsigned parse_index(const std::string &text)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw std::invalid_argument("expected a positive integer, got '" + text + "'");
    return static_cast<unsigned>(std::stoul(text));
}

Weight parse_weight(const std::string &text, unsigned n, bool unshifted)
{
    if (n < 2)
        throw std::invalid_argument("n must be at least 2");
    if (text == "symbolic")
        return Weight::symbolic(n);
    const auto parts = split_commas(text);
    if (parts.size() != n - 1)
        throw std::invalid_argument("a weight of sl(" + std::to_string(n) + ") has " + std::to_string(n - 1)
                                    + " coordinates, got " + std::to_string(parts.size()));
    std::vector<Rational> values;
    for (const auto &p : parts)
        values.push_back(parse_rational(p));
    return unshifted ? Weight::from_unshifted(n, values) : Weight::numeric(n, values);
}

Root parse_root(const std::string &text, unsigned n)
{
    const auto parts = split_commas(text);
    if (parts.size() != 2)
        throw std::invalid_argument("a root is given as k,l, got '" + text + "'");
    Root alpha{parse_index(parts[0]), parse_index(parts[1])};
    check_root(alpha, n);
    return alpha;
}

SimpleWord parse_word(const std::string &text, unsigned n)
{
    SimpleWord word;
    for (const auto &p : split_commas(text))
        word.push_back(parse_index(p));
    check_word(word, n);
    return word;
}

// Values of lambda_1..lambda_{n-1} for substitution; empty when symbolic.
std::vector<LambdaPoly> coordinate_images(const Weight &lambda)
{
    std::vector<LambdaPoly> images;
    if (!lambda.is_numeric())
        return images;
    for (const auto &c : lambda.numeric_coords())
        images.emplace_back(c);
    return images;
}

std::string chain_text(const std::vector<Root> &chain)
{
    std::string out = "[";
    for (std::size_t s = 0; s < chain.size(); ++s)
        out += (s ? ", " : "") + to_string(chain[s]);
    return out + "]";
}

std::string first_term(const PBWVector &v)
{
    if (v.is_zero())
        return "0";
    const auto &[a, c] = *v.terms().rbegin();
    return to_text(PBWVector::basis(a, c));
}

std::string first_term(const SeriesElement &f)
{
    if (f.is_zero())
        return "0";
    SeriesElement one;
    auto best = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
        if (it->first.off_degree() < best->first.off_degree())
            best = it;
    one.add_term(best->first, best->second);
    return to_text(one);
}

struct Options {
    unsigned n = 0;
    std::string lambda;
    bool unshifted = false;
    std::string format = "json";

    std::string root;
    unsigned m = 0;
    std::string mode = "raw";
    bool monic = false;

    std::string word;
    unsigned bound = 0;

    std::string file;
    std::string oracle = "both";

    std::string mu;
    bool orbit = false;
};

int cmd_singular(const Options &o, std::ostream &out)
{
    const Weight lambda = parse_weight(o.lambda, o.n, o.unshifted);
    const Root alpha = parse_root(o.root, o.n);
    auto sv = singular_vector(alpha.k, alpha.l, o.m, lambda);
    PBWVector v = o.mode == "monic-leading" || o.monic ? monic_leading(sv.vector) : sv.vector;
    if (o.format == "json")
        out << to_json(v, o.n).dump() << "\n";
    else if (o.format == "latex")
        out << to_latex(v) << "\n";
    else
        out << to_text(v) << "\n";
    return exit_ok;
}

int cmd_solve(const Options &o, const CLI::App &sub, std::ostream &out)
{
    const bool by_word = sub.count("--word") > 0, by_root = sub.count("--root") > 0;
    if (by_word == by_root)
        throw std::invalid_argument("give exactly one of --word and --root");
    const Weight lambda = parse_weight(o.lambda, o.n, o.unshifted);
    std::optional<unsigned> bound;
    if (sub.count("--bound"))
        bound = o.bound;
    const SeriesElement f = by_word ? sigma_of_one(parse_word(o.word, o.n), lambda, bound)
                                    : s_alpha_closed_form(parse_root(o.root, o.n), lambda, bound);
    if (o.format == "json") {
        out << to_json(f, o.n).dump() << "\n";
        return exit_ok;
    }
    out << (o.format == "latex" ? to_latex(f) : to_text(f)) << "\n";
    if (f.is_complete())
        out << "complete\n";
    else
        out << "incomplete: exact through off-degree " << *f.precision() << "\n";
    return exit_ok;
}

int cmd_verify(const Options &o, std::ostream &out)
{
    const Weight lambda = parse_weight(o.lambda, o.n, o.unshifted);
    std::ifstream in(o.file);
    if (!in)
        throw std::invalid_argument("cannot read " + o.file);
    std::stringstream text;
    text << in.rdbuf();
    auto parsed = pbw_from_json_text(text.str());
    if (parsed.n != o.n)
        throw std::invalid_argument("the vector belongs to sl(" + std::to_string(parsed.n) + "), not sl("
                                    + std::to_string(o.n) + ")");
    PBWVector v = parsed.vector;
    if (const auto images = coordinate_images(lambda); !images.empty())
        v = v.substitute(images);
    if (v.is_zero())
        throw std::invalid_argument("the zero vector is not a singular vector");

    const auto report = check_singular(v, lambda);
    if (!report.weight_vector)
        throw NotWeightVector("the vector is not a weight vector");

    bool singular = true;
    if (o.oracle != "diff") {
        for (unsigned i = 1; i < o.n; ++i) {
            const auto &r = report.residuals[i - 1];
            singular = singular && r.is_zero();
            out << "ug i=" << i << ": " << first_term(r) << "\n";
        }
    }
    if (o.oracle != "ug") {
        const SeriesElement f = tau(v);
        for (unsigned i = 1; i < o.n; ++i) {
            const SeriesElement r = d_op(i, f, lambda);
            singular = singular && r.is_zero();
            out << "diff i=" << i << ": " << first_term(r) << "\n";
        }
    }
    out << "weight: " << to_string(*report.weight) << "\n";
    out << (singular ? "singular" : "not singular") << "\n";
    return singular ? exit_ok : exit_not_singular;
}

int cmd_linkage(const Options &o, const CLI::App &sub, std::ostream &out)
{
    const Weight lambda = parse_weight(o.lambda, o.n, o.unshifted);
    if (o.orbit == (sub.count("--mu") > 0))
        throw std::invalid_argument("give exactly one of --mu and --orbit");
    if (o.orbit) {
        for (const auto &lw : strongly_linked_orbit(lambda))
            out << to_string(lw.weight) << " " << chain_text(lw.chain) << "\n";
        return exit_ok;
    }
    const Weight mu = parse_weight(o.mu, o.n, o.unshifted);
    const auto chain = strongly_linked_chain(mu, lambda);
    out << (chain ? chain_text(*chain) : "none") << "\n";
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Singular vectors in Verma modules over sl(n)", "verma"};
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App *sub) {
        sub->add_option("--n", o.n, "rank parameter of sl(n)")->required()->check(CLI::Range(2u, 64u));
        sub->add_option("--lambda", o.lambda, "'symbolic' or comma-separated rationals, shifted coordinates")
            ->required();
        sub->add_flag("--unshifted", o.unshifted, "read numeric weights as lambda(H_i) instead of (lambda+rho)(H_i)");
    };
    const auto formats = CLI::IsMember({"json", "latex", "text"});

    auto *singular = app.add_subcommand("singular", "singular vector of weight s_alpha . lambda");
    common(singular);
    singular->add_option("--root", o.root, "k,l for alpha = e_k - e_l")->required();
    singular->add_option("--m", o.m, "pairing <lambda+rho, alpha>")->required()->check(CLI::PositiveNumber);
    singular->add_option("--mode", o.mode, "raw or monic-leading")->check(CLI::IsMember({"raw", "monic-leading"}));
    singular->add_flag("--monic-leading", o.monic, "same as --mode monic-leading");
    singular->add_option("--format", o.format)->check(formats);

    auto *solve = app.add_subcommand("solve", "sigma(1) or s_alpha(1) in the series algebra");
    common(solve);
    solve->add_option("--word", o.word, "simple reflections i1,i2,...; the last one acts first");
    solve->add_option("--root", o.root, "k,l; closed form of s_alpha(1)");
    solve->add_option("--bound", o.bound, "off-degree cap for infinite series");
    solve->add_option("--format", o.format)->check(formats);

    auto *verify = app.add_subcommand("verify", "check that a vector is singular");
    common(verify);
    verify->add_option("--file", o.file, "vector in the JSON form")->required();
    verify->add_option("--oracle", o.oracle, "ug, diff or both")->check(CLI::IsMember({"ug", "diff", "both"}));

    auto *linkage = app.add_subcommand("linkage", "strong linkage in the dot orbit");
    common(linkage);
    linkage->add_option("--mu", o.mu, "target weight");
    linkage->add_flag("--orbit", o.orbit, "every weight strongly linked to lambda");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (singular->parsed())
            return cmd_singular(o, out);
        if (solve->parsed())
            return cmd_solve(o, *solve, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        return cmd_linkage(o, *linkage, out);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_parse_failure;
    } catch (const NotWeightVector &e) {
        err << "error: " << e.what() << "\n";
        return exit_not_weight_vector;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
}

} // namespace verma
