#pragma once

// Command-line front end. run() parses argv-style arguments, writes one document to `out`
// and returns the exit code: 0 on success, 1 when a verification suite fails, 2 on bad input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catalan.hpp"
#include "double_tensor.hpp"
#include "hopf_dif.hpp"
#include "hopf_inv.hpp"
#include "io.hpp"
#include "series.hpp"
#include "tree_hopf.hpp"
#include "verify.hpp"

namespace nchopf::cli {

enum class OutputFormat { Text, Json };

/// Raised for malformed input; mapped to exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void emit(std::ostream& out, OutputFormat f, const std::string& text, const json& doc)
{
    if (f == OutputFormat::Json)
        out << doc.dump(2) << "\n";
    else
        out << text << "\n";
}

inline json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("input: cannot open \"" + path + "\"");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("input: \"" + path + "\" is not valid JSON (" + e.what() + ")");
    }
}

template <CoefficientAlgebra A>
Series<A> truncate(const Series<A>& s, std::optional<int> order)
{
    if (!order)
        return s;
    if (*order < 0)
        throw InputError("order: must be non-negative");
    if (*order > s.order)
        throw InputError("order: " + std::to_string(*order) + " exceeds input order " + std::to_string(s.order));
    Series<A> t = s;
    t.order = *order;
    t.coeffs.resize(static_cast<std::size_t>(*order) + 1);
    return t;
}

template <CoefficientAlgebra A>
void emit_series(std::ostream& out, OutputFormat f, const Series<A>& s)
{
    std::string text = format_series(s);
    if (!text.empty() && text.back() == '\n')
        text.pop_back();
    emit(out, f, text, series_to_json(s));
}

template <CoefficientAlgebra A>
void run_series_op(std::ostream& out, OutputFormat f, const std::string& op, const std::vector<Series<A>>& in)
{
    auto need = [&](std::size_t n) {
        if (in.size() != n)
            throw InputError("input: series " + op + " takes " + std::to_string(n) + " input file(s), got " +
                             std::to_string(in.size()));
    };
    if (op == "mul") {
        need(2);
        emit_series(out, f, series_mul(in[0], in[1]));
    } else if (op == "inv") {
        need(1);
        emit_series(out, f, series_inv(in[0]));
    } else if (op == "compose") {
        need(2);
        emit_series(out, f, series_compose(in[0], in[1]));
    } else if (op == "inverse-diffeo") {
        need(1);
        emit_series(out, f, compositional_inverse_via_antipode(in[0]));
    } else {
        need(3);
        const auto a = associator(in[0], in[1], in[2]);
        std::string text;
        json coeffs = json::array();
        for (std::size_t n = 0; n < a.size(); ++n) {
            text += (n ? "\n" : "") + ("x^" + std::to_string(n + 1) + ": ") + format_value(in[0].algebra, a[n]);
            coeffs.push_back(value_to_json(in[0].algebra, a[n]));
        }
        emit(out, f, text,
             {{"kind", "associator"}, {"order", in[0].order}, {"algebra", algebra_to_json(in[0].algebra)},
              {"coeffs", coeffs}});
    }
}

inline void series_command(std::ostream& out, OutputFormat f, const std::string& op,
                           const std::vector<std::string>& files, std::optional<int> order)
{
    if (files.empty())
        throw InputError("input: at least one --input file is required");
    std::vector<AnySeries> in;
    for (const auto& path : files) {
        try {
            in.push_back(series_from_json(load_json_file(path)));
        } catch (const InputError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw InputError(path + ": " + e.what());
        }
    }
    std::visit(
        [&](const auto& first) {
            using S = std::decay_t<decltype(first)>;
            std::vector<S> typed;
            for (const auto& s : in) {
                const S* p = std::get_if<S>(&s);
                if (!p)
                    throw InputError("algebra.type: all inputs must use the same coefficient algebra");
                typed.push_back(truncate(*p, order));
            }
            run_series_op(out, f, op, typed);
        },
        in.front());
}

inline std::pair<int, int> parse_q_ref(const std::string& s)
{
    static const std::regex re(R"(\s*Q\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw InputError("qpoly: expected Q[m,n], got \"" + s + "\"");
    return {std::stoi(m[1]), std::stoi(m[2])};
}

inline std::string report_text(const SuiteReport& r)
{
    std::string text = "suite " + r.suite + ": " + std::to_string(r.checks.size()) + " checks, " +
                       std::to_string(r.failures()) + " failed";
    if (const CheckResult* c = r.first_failure()) {
        text += "\ncounterexample: " + c->id;
        if (!c->detail.empty())
            text += "\n" + c->detail;
    }
    return text;
}

inline json report_json(const SuiteReport& r)
{
    json doc = {{"suite", r.suite}, {"checks", r.checks.size()}, {"failed", r.failures()}, {"passed", r.ok()}};
    if (const CheckResult* c = r.first_failure())
        doc["counterexample"] = {{"check", c->id}, {"detail", c->detail}};
    return doc;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Non-commutative Hopf algebras of formal series: coproducts, antipodes, trees and series."};
    app.name("nchopf");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    app.add_option("--format", format_name, "Output encoding")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("NCHOPF_FORMAT")
        ->capture_default_str();

    int gen_n = 0;
    std::string which, method = "recursive", tuple_arg, blocks_arg, q_ref, suite, arg;
    std::vector<std::string> inputs;
    std::optional<int> order, m_opt, n_opt;
    int enumerate_n = 0, max_degree = 6;
    std::uint64_t seed = SuiteOptions{}.seed;
    bool literal_a0 = false;

    auto* co = app.add_subcommand("coproduct", "Coproduct of a generator");
    co->add_option("algebra", which, "dif, inv, alpha, e, gamma, ttb or bdif")
        ->required()
        ->check(CLI::IsMember({"dif", "inv", "alpha", "e", "gamma", "ttb", "bdif"}));
    auto* co_gen = co->add_option("--gen", gen_n, "Generator index N");
    auto* co_blocks = co->add_option("--blocks", blocks_arg, "Block word such as [3,1] (ttb only)");
    co_gen->excludes(co_blocks);

    auto* an = app.add_subcommand("antipode", "Antipode of a generator");
    an->add_option("algebra", which, "dif or inv")->required()->check(CLI::IsMember({"dif", "inv"}));
    an->add_option("--method", method, "recursive or closed")
        ->check(CLI::IsMember({"recursive", "closed"}))
        ->capture_default_str();
    an->add_option("--gen", gen_n, "Generator index N")->required();

    auto* la = app.add_subcommand("lambda", "Coefficient λ(n_1,...,n_k) of the closed antipode");
    la->add_option("--tuple", tuple_arg, "Comma-separated positive integers")->required();

    auto* qp = app.add_subcommand("qpoly", "The polynomial Q_m^{(n)}");
    qp->add_option("ref", q_ref, "Q[m,n]");
    qp->add_option("--m", m_opt, "Degree m");
    qp->add_option("--n", n_opt, "Upper index n >= -1");
    qp->add_flag("--literal-a0", literal_a0, "Keep a0 as a letter instead of the unit");

    auto* bi = app.add_subcommand("bijection", "The bijection between M_k and planar binary trees");
    bi->add_option("direction", which, "to-tree or to-tuple")->required()->check(CLI::IsMember({"to-tree", "to-tuple"}));
    bi->add_option("value", arg, "A tuple n1,n2,... or a tree such as ((L L) L)")->required();

    auto* se = app.add_subcommand("series", "Operations on truncated series read from JSON files");
    se->add_option("op", which, "mul, inv, compose, inverse-diffeo or associator")
        ->required()
        ->check(CLI::IsMember({"mul", "inv", "compose", "inverse-diffeo", "associator"}));
    se->add_option("--input", inputs, "Series JSON file; repeat for each operand")->required();
    se->add_option("--order", order, "Truncation order");

    auto* tr = app.add_subcommand("trees", "Planar binary trees");
    tr->add_option("--enumerate", enumerate_n, "List all trees with N internal nodes")->required();

    auto* ve = app.add_subcommand("verify", "Run a verification suite");
    ve->add_option("--suite", suite, "Suite name")->required();
    ve->add_option("--max-degree", max_degree, "Degree bound")->capture_default_str();
    ve->add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();

    std::vector<std::string> argv_store{"nchopf"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const OutputFormat fmt = format_name == "json" ? OutputFormat::Json : OutputFormat::Text;
    auto require_gen = [&](int min) {
        if (gen_n < min)
            throw InputError("gen: must be >= " + std::to_string(min) + ", got " + std::to_string(gen_n));
    };

    try {
        if (co->parsed()) {
            if (which == "ttb") {
                BlockWord w;
                if (!blocks_arg.empty())
                    w = parse_block_word(blocks_arg);
                else if (co_gen->count())
                    w = BlockWord({gen_n});
                else
                    throw InputError("gen: --gen or --blocks is required");
                const BlockTensor t = coproduct_ttb(w);
                detail::emit(out, fmt, format(t), to_json(t));
                return 0;
            }
            if (!blocks_arg.empty())
                throw InputError("blocks: only valid for ttb");
            if (!co_gen->count())
                throw InputError("gen: --gen is required");
            if (which == "dif") {
                require_gen(1);
                const TensorElement t = coproduct_dif(gen(gen_n));
                detail::emit(out, fmt, format(t), to_json(t, {"a", "a"}));
            } else if (which == "inv") {
                require_gen(1);
                const TensorElement t = coproduct_inv(gen(gen_n));
                detail::emit(out, fmt, format(t, {'b'}), to_json(t, {"b", "b"}));
            } else if (which == "bdif") {
                require_gen(0);
                const TensorElement t = coproduct_bdif(gen(gen_n));
                detail::emit(out, fmt, format(t), to_json(t, {"a", "a"}));
            } else if (which == "alpha") {
                require_gen(0);
                const TreeTensor t = coproduct_alpha(t_sum(gen_n));
                detail::emit(out, fmt, format(t), to_json(t));
            } else {
                require_gen(0);
                const ForestTensor t =
                    which == "e" ? coproduct_e(t_sum_forest(gen_n)) : coproduct_gamma(t_sum_forest(gen_n));
                detail::emit(out, fmt, format(t), to_json(t));
            }
            return 0;
        }
        if (an->parsed()) {
            require_gen(1);
            NCPoly s;
            FormatOptions opt;
            if (which == "dif") {
                s = method == "closed" ? antipode_closed(gen_n) : antipode_recursive(gen_n);
            } else {
                s = method == "closed" ? antipode_inv_closed(gen_n) : antipode_inv(gen_n);
                opt.symbol = 'b';
            }
            detail::emit(out, fmt, format(s, opt), to_json(s));
            return 0;
        }
        if (la->parsed()) {
            const std::vector<int> t = parse_tuple(tuple_arg);
            const Integer l = lambda_coefficient(t);
            detail::emit(out, fmt, l.str(), {{"tuple", t}, {"lambda", l.str()}});
            return 0;
        }
        if (qp->parsed()) {
            int m = 0, n = 0;
            if (!q_ref.empty()) {
                if (m_opt || n_opt)
                    throw InputError("qpoly: give either Q[m,n] or --m/--n, not both");
                std::tie(m, n) = detail::parse_q_ref(q_ref);
            } else {
                if (!m_opt || !n_opt)
                    throw InputError("qpoly: --m and --n are required");
                m = *m_opt;
                n = *n_opt;
            }
            if (m < 0)
                throw InputError("m: must be non-negative");
            if (n < -1)
                throw InputError("n: must be >= -1");
            const NCPoly q = q_polynomial(m, n, !literal_a0);
            detail::emit(out, fmt, format(q), to_json(q));
            return 0;
        }
        if (bi->parsed()) {
            if (which == "to-tree") {
                const MTuple m = parse_tuple(arg);
                if (!is_mtuple(m))
                    throw InputError("tuple: (" + format_tuple(m) + ") is not in M_k");
                const Tree t = phi(m);
                detail::emit(out, fmt, to_text(t), {{"tuple", m}, {"tree", to_text(t)}});
            } else {
                const Tree t = parse_tree(arg);
                if (t.is_leaf())
                    throw InputError("tree: the root tree | has no tuple");
                const MTuple m = psi(t);
                detail::emit(out, fmt, format_tuple(m), {{"tree", to_text(t)}, {"tuple", m}});
            }
            return 0;
        }
        if (se->parsed()) {
            detail::series_command(out, fmt, which, inputs, order);
            return 0;
        }
        if (tr->parsed()) {
            if (enumerate_n < 0)
                throw InputError("enumerate: must be non-negative");
            std::string text;
            json list = json::array();
            for (const Tree& t : enumerate_trees(enumerate_n)) {
                text += (text.empty() ? "" : "\n") + to_text(t);
                list.push_back(to_text(t));
            }
            detail::emit(out, fmt, text, {{"nodes", enumerate_n}, {"count", list.size()}, {"trees", list}});
            return 0;
        }
        if (ve->parsed()) {
            const SuiteReport r = run_suite(suite, SuiteOptions{max_degree, seed});
            detail::emit(out, fmt, detail::report_text(r), detail::report_json(r));
            return r.ok() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace nchopf::cli
