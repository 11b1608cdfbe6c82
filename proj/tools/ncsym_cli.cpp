#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <ncsym/errors.hpp>
#include <ncsym/io.hpp>
#include <ncsym/lgv.hpp>
#include <ncsym/ncschur.hpp>
#include <ncsym/nsym.hpp>
#include <ncsym/verify.hpp>

using namespace ncsym;

namespace {

struct Globals {
    std::string format = "plain";
    int max_size = -1;
    int vars = -1;
    std::uint64_t seed = 1;

    bool json() const { return format == "json"; }
};

NCSymExpr read_expr(const std::string& text)
{
    if (!text.empty() && text.front() == '{') {
        return ncsym_expr_from_json(text);
    }
    return parse_ncsym_expr(text);
}

template <class T>
void emit(const Globals& g, const T& value)
{
    std::cout << (g.json() ? to_json(value) : format(value)) << '\n';
}

void emit_line(const Globals& g, const std::string& key, const std::string& value)
{
    if (g.json()) {
        std::cout << nlohmann::json{{key, value}}.dump() << '\n';
    } else {
        std::cout << value << '\n';
    }
}

int run_verify(const Globals& g, const std::string& suite)
{
    SuiteOptions options;
    options.max_size = g.max_size;
    options.vars = g.vars;
    options.seed = g.seed;
    const SuiteReport r = run_suite(suite, options);
    if (g.json()) {
        nlohmann::json j{{"suite", r.name},     {"range", r.range},       {"checks", r.checks},
                         {"passed", r.passed()}, {"failures", r.failures}, {"notes", r.notes}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << r.name << ": " << r.range << '\n';
        for (const auto& n : r.notes) {
            std::cout << "  " << n << '\n';
        }
        for (const auto& f : r.failures) {
            std::cout << "  FAIL " << f << '\n';
        }
        std::cout << (r.passed() ? "PASS" : "FAIL") << ' ' << r.checks << " checks\n";
    }
    return r.passed() ? 0 : 1;
}

int run_lgv(const SkewShape& shape, int cap, const std::string& delta_text)
{
    const Permutation delta = delta_text.empty() ? Permutation::identity(shape.size()) : parse_permutation(delta_text);
    if (delta.size() != shape.size()) {
        throw size_mismatch("delta must act on " + std::to_string(shape.size()) + " letters");
    }
    if (shape.size() > 7) {
        throw degree_guard_error("lgv-check supports shapes of size at most 7");
    }
    const auto tuples = enumerate_path_tuples(shape, cap);
    bool involution = true;
    for (const auto& p : tuples) {
        const auto swap = lgv_swap(p);
        std::cout << (sign(p) > 0 ? "+1" : "-1") << '\t' << format(monomial(delta, p)) << '\t' << format(p.epsilon)
                  << '\t' << (swap.fixed ? 1 : 0) << '\n';
        if (!swap.fixed && !(lgv_swap(swap.image).image == p)) {
            involution = false;
            std::cerr << "involution fails on\n" << dump(p);
        }
    }
    // The cancellation holds after summing over every labelling.
    std::map<Word, long long> signed_sum;
    std::map<Word, long long> fixed_sum;
    for (const auto& d : enumerate_permutations(shape.size())) {
        for (const auto& p : tuples) {
            const Word w = monomial(d, p);
            signed_sum[w] += sign(p);
            if (!has_intersection(p)) {
                fixed_sum[w] += 1;
            }
        }
    }
    std::erase_if(signed_sum, [](const auto& kv) { return kv.second == 0; });
    if (signed_sum != fixed_sum) {
        std::cerr << "signed sum differs from the fixed-point sum\n";
        return 1;
    }
    return involution ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Schur functions in noncommuting variables"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "plain or json")->check(CLI::IsMember({"plain", "json"}));
    app.add_option("--max-size", g.max_size, "degree bound for suites");
    app.add_option("--vars", g.vars, "oracle cutoff; defaults to the degree");
    app.add_option("--seed", g.seed, "seed for randomized checks");

    std::string expr, expr2, target, pi, shape, delta, tableau, content;
    bool transposed = false;
    int cap = 3;

    auto* expand = app.add_subcommand("expand", "expand into the m-basis, or into words with --vars");
    expand->add_option("expr", expr)->required();

    auto* conv = app.add_subcommand("convert", "change basis");
    conv->add_option("expr", expr)->required();
    conv->add_option("--to", target, "m, p, e, h, s, st or tabloid")->required();

    auto* schur = app.add_subcommand("schur", "Schur-type function in the h-basis");
    schur->add_option("--pi", pi, "set partition");
    schur->add_option("--shape", shape, "skew shape lambda/mu");
    schur->add_option("--delta", delta, "permutation acting on the source function");
    schur->add_flag("--transposed", transposed, "transposed Schur function of --pi");
    schur->add_option("--tableau", tableau, "tabloid Schur function, rows separated by '/'");

    auto* mult = app.add_subcommand("multiply", "product; the result uses the basis of the first factor");
    mult->add_option("left", expr)->required();
    mult->add_option("right", expr2)->required();

    auto* rho_cmd = app.add_subcommand("rho", "commutative image");
    rho_cmd->add_option("expr", expr)->required();
    rho_cmd->add_option("--to", target, "m, p, e, h or s")->default_val("s");

    auto* omega_cmd = app.add_subcommand("omega", "the omega involution");
    omega_cmd->add_option("expr", expr)->required();

    auto* act = app.add_subcommand("act", "delta action");
    act->add_option("--delta", delta)->required();
    act->add_option("expr", expr)->required();

    auto* rs = app.add_subcommand("rs", "Rosas-Sagan Schur function in the m-basis");
    rs->add_option("--shape", shape)->required();

    auto* lr = app.add_subcommand("lr", "expand S_{lambda/mu} over straight shapes");
    lr->add_option("--shape", shape)->required();

    auto* kostka_cmd = app.add_subcommand("kostka", "skew Kostka number");
    kostka_cmd->add_option("--shape", shape)->required();
    kostka_cmd->add_option("--content", content)->required();

    auto* specht = app.add_subcommand("specht-rank", "rank of the Specht vectors of a shape");
    specht->add_option("--shape", shape)->required();

    auto* lgv = app.add_subcommand("lgv-check", "signed monomial ledger as TSV");
    lgv->add_option("--shape", shape)->required();
    lgv->add_option("--cap", cap, "largest height")->default_val(3);
    lgv->add_option("--delta", delta, "labelling permutation; identity by default");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*expand) {
            const NCSymExpr f = read_expr(expr);
            if (g.vars > 0) {
                emit(g, oracle_expand(f, g.vars));
            } else {
                emit(g, to_m(f));
            }
        } else if (*conv) {
            emit(g, convert(read_expr(expr), parse_basis(target)));
        } else if (*schur) {
            NCSymExpr f;
            if (!tableau.empty()) {
                f = tabloid_schur(parse_tableau(tableau));
            } else if (!pi.empty()) {
                const SetPartition p = parse_set_partition(pi);
                f = transposed ? transposed_schur(p) : standard_schur(p);
            } else if (!shape.empty()) {
                const SkewShape sh = parse_skew_shape(shape);
                f = delta.empty() ? source_skew_schur(sh) : skew_schur_nc(parse_permutation(delta), sh);
            } else {
                std::cerr << "schur needs --pi, --shape or --tableau\n";
                return 2;
            }
            emit(g, convert(f, Basis::h));
        } else if (*mult) {
            const NCSymExpr f = read_expr(expr);
            emit(g, product(f, convert(read_expr(expr2), f.basis)));
        } else if (*rho_cmd) {
            emit(g, sym_convert(rho(read_expr(expr)), parse_sym_basis(target)));
        } else if (*omega_cmd) {
            emit(g, omega(read_expr(expr)));
        } else if (*act) {
            emit(g, delta_action(parse_permutation(delta), read_expr(expr)));
        } else if (*rs) {
            emit(g, rosas_sagan(parse_skew_shape(shape)));
        } else if (*lr) {
            const SkewShape sh = parse_skew_shape(shape);
            const auto res = rs_lr_expand(sh);
            if (g.json()) {
                nlohmann::json terms = nlohmann::json::object();
                for (const auto& [nu, c] : res.terms) {
                    terms[format(nu)] = to_string(c);
                }
                std::cout << nlohmann::json{{"shape", format(sh)}, {"terms", terms}, {"holds", res.holds}}.dump()
                          << '\n';
            } else {
                std::string line;
                for (const auto& [nu, c] : res.terms) {
                    line += (line.empty() ? "" : " + ") + (c == 1 ? std::string() : to_string(c) + " ") + "S[" +
                            format(nu) + "]";
                }
                std::cout << (line.empty() ? "0" : line) << '\n';
            }
            if (!res.holds) {
                std::cerr << "expansion does not match S[" << format(sh) << "]\n";
                return 1;
            }
        } else if (*kostka_cmd) {
            emit_line(g, "kostka", to_string(kostka(parse_skew_shape(shape), parse_partition(content))));
        } else if (*specht) {
            const IntegerPartition lambda = parse_partition(shape);
            const int rk = specht_rank(lambda);
            const Integer f = count_standard_tableaux(lambda);
            if (g.json()) {
                std::cout << nlohmann::json{{"shape", format(lambda)}, {"rank", rk}, {"f", to_string(f)}}.dump()
                          << '\n';
            } else {
                std::cout << rk << " (f = " << to_string(f) << ")\n";
            }
            if (rk != 0 && Integer(rk) != f) {
                return 1;
            }
        } else if (*lgv) {
            return run_lgv(parse_skew_shape(shape), cap, delta);
        } else if (*verify) {
            return run_verify(g, suite);
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const identity_violation& e) {
        std::cerr << "identity violated: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const degree_guard_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
