#include <ncsym/verify.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <ncsym/io.hpp>
#include <ncsym/lgv.hpp>
#include <ncsym/ncschur.hpp>
#include <ncsym/nsym.hpp>

namespace ncsym {

namespace {

using Counts = std::map<std::uint64_t, long long>;

void check(SuiteReport& r, bool ok, const std::string& what)
{
    ++r.checks;
    if (!ok && r.failures.size() < 50) {
        r.failures.push_back(what);
    } else if (!ok) {
        r.failures.back() = "(further failures suppressed) " + what;
    }
}

int pick(int requested, int fallback) { return requested < 0 ? fallback : requested; }

Counts normalized(const WordCounts& c)
{
    Counts out;
    for (const auto& [w, n] : c) {
        if (n != 0) {
            out[w] += n;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

void drop_zeros(Counts& c)
{
    std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
}

Counts multiply(const WordCounts& a, const WordCounts& b, int right_length)
{
    Counts out;
    for (const auto& [u, x] : a) {
        for (const auto& [v, y] : b) {
            out[(u << (4 * right_length)) | v] += x * y;
        }
    }
    drop_zeros(out);
    return out;
}

NCSymExpr random_h_expr(std::mt19937_64& rng, int degree)
{
    const auto parts = enumerate_set_partitions(degree);
    std::uniform_int_distribution<std::size_t> which(0, parts.size() - 1);
    std::uniform_int_distribution<int> terms(1, 3);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    NCSymExpr f;
    f.basis = Basis::h;
    const int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        f.terms.add(parts[which(rng)], Rational(num(rng), den(rng)));
    }
    if (f.is_zero()) {
        f.terms.add(parts[which(rng)], 1);
    }
    return f;
}

Permutation random_permutation(std::mt19937_64& rng, int n)
{
    std::vector<int> im = Permutation::identity(n).images();
    std::shuffle(im.begin(), im.end(), rng);
    return Permutation(std::move(im));
}

std::vector<SkewShape> skew_shapes_up_to(int max_size)
{
    std::vector<SkewShape> out;
    for (int n = 1; n <= max_size; ++n) {
        for (auto& s : enumerate_skew_shapes(n)) {
            out.push_back(std::move(s));
        }
    }
    return out;
}

bool same_in_h(const NCSymExpr& a, const NCSymExpr& b) { return convert(a, Basis::h) == convert(b, Basis::h); }

// ---------------------------------------------------------------- suites

SuiteReport suite_prod(const SuiteOptions& o)
{
    SuiteReport r;
    const int max = pick(o.max_size, 7);
    r.range = "source product rule |lambda|+|mu| <= " + std::to_string(max) +
              "; Schur basis product and classical rule |pi|+|sigma| <= " + std::to_string(std::min(max, 5));
    for (int a = 0; a <= max; ++a) {
        for (int b = 0; a + b <= max; ++b) {
            for (const auto& lambda : enumerate_partitions(a)) {
                for (const auto& mu : enumerate_partitions(b)) {
                    const auto res = schur_product(Permutation::identity(a), lambda, Permutation::identity(b), mu);
                    check(r, res.holds, "s_[" + format(lambda) + "] s_[" + format(mu) + "]: " + format(res.expanded) +
                                            " != " + format(res.structured));
                    SymExpr classical = skew_schur(res.concat_shape);
                    if (res.has_near) {
                        classical += skew_schur(res.near_shape);
                    }
                    const SymExpr lhs = sym_product(SymExpr::single(SymBasis::s, lambda), SymExpr::single(SymBasis::s, mu));
                    check(r, lhs == classical, "classical s_" + format(lambda) + " s_" + format(mu));
                }
            }
        }
    }
    const int small = std::min(max, 5);
    for (int a = 1; a < small; ++a) {
        for (int b = 1; a + b <= small; ++b) {
            for (const auto& pi : enumerate_set_partitions(a)) {
                for (const auto& sigma : enumerate_set_partitions(b)) {
                    const auto res = schur_product(pi, sigma);
                    check(r, res.holds, "s_" + format(pi) + " s_" + format(sigma));
                }
            }
        }
    }
    return r;
}

SuiteReport suite_ncschur(const SuiteOptions& o)
{
    SuiteReport r;
    const int max = pick(o.max_size, 5);
    r.range = "all pi |- [n], n <= " + std::to_string(max);
    for (int n = 1; n <= max; ++n) {
        const auto t = schur_transition(n);
        check(r, t.upper_triangular, "transition matrix not upper triangular at n=" + std::to_string(n));
        check(r, t.normalized_determinant == 1,
              "normalized determinant " + to_string(t.normalized_determinant) + " at n=" + std::to_string(n));
        for (std::size_t i = 0; i < t.order.size(); ++i) {
            const auto& pi = t.order[i];
            check(r, t.raw_diagonal[i] == Rational(1) / Rational(factorial_product(pi.shape())),
                  "diagonal entry at " + format(pi));
            const SymExpr image = sym_convert(rho(standard_schur(pi)), SymBasis::s);
            check(r, image == SymExpr::single(SymBasis::s, pi.shape()), "rho(s_" + format(pi) + ") = " + format(image));
        }
        r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(t.order.size()) +
                          " x " + std::to_string(t.order.size()) + " matrix, diagonal 1/lambda(pi)!");
    }
    return r;
}

SuiteReport suite_transpose(const SuiteOptions& o)
{
    SuiteReport r;
    const int max = pick(o.max_size, 5);
    r.range = "all pi |- [n], n <= " + std::to_string(max);
    for (int n = 1; n <= max; ++n) {
        for (const auto& pi : enumerate_set_partitions(n)) {
            check(r, same_in_h(omega(standard_schur(pi)), transposed_schur(pi)), "omega(s_" + format(pi) + ")");
            const SymExpr image = sym_convert(rho(transposed_schur(pi)), SymBasis::s);
            check(r, image == SymExpr::single(SymBasis::s, transpose(pi.shape())), "rho(s^t_" + format(pi) + ")");
        }
    }
    return r;
}

SuiteReport suite_deltaact(const SuiteOptions& o)
{
    SuiteReport r;
    const int count = 200;
    const int max = pick(o.max_size, 3);
    r.range = std::to_string(count) + " random instances, degrees 1.." + std::to_string(max) +
              ", seed " + std::to_string(o.seed);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> deg(1, max);
    for (int t = 0; t < count; ++t) {
        const int a = deg(rng);
        const int b = deg(rng);
        const NCSymExpr f = random_h_expr(rng, a);
        const NCSymExpr g = random_h_expr(rng, b);
        const Permutation delta = random_permutation(rng, a);
        const Permutation eta = random_permutation(rng, b);
        const NCSymExpr lhs = product(delta_action(delta, f), delta_action(eta, g));
        const NCSymExpr rhs = delta_action(shifted_concat(delta, eta), product(f, g));
        check(r, lhs == rhs, "delta=" + format(delta) + " eta=" + format(eta) + " f=" + format(f) + " g=" + format(g));
    }
    return r;
}

SuiteReport suite_rsrefines(const SuiteOptions& o)
{
    SuiteReport r;
    const int max = pick(o.max_size, 5);
    r.range = "skew shapes of size <= " + std::to_string(max) + " without empty rows or columns";
    for (const auto& shape : skew_shapes_up_to(max)) {
        const NCSymExpr rs = rosas_sagan(shape);
        check(r, sum_over_delta(shape) == rs, "sum over delta for " + format(shape));
        const SymExpr image = sym_convert(rho(rs), SymBasis::s);
        check(r, image == Rational(factorial(shape.size())) * skew_schur(shape), "rho(S_" + format(shape) + ")");
    }
    // Straight shapes: the tabloid sum gives the same function.
    for (int n = 1; n <= max; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            std::set<std::vector<std::vector<int>>> seen;
            NCSymExpr sum;
            sum.basis = Basis::h;
            for (const auto& t : enumerate_young_tableaux(SkewShape(lambda))) {
                auto rows = t.rows();
                for (auto& row : rows) {
                    std::sort(row.begin(), row.end());
                }
                if (seen.insert(rows).second) {
                    sum += tabloid_schur(t);
                }
            }
            check(r, to_m(sum) == rosas_sagan(SkewShape(lambda)), "tabloid sum for " + format(lambda));
        }
    }
    return r;
}

SuiteReport suite_rslr(const SuiteOptions& o)
{
    SuiteReport r;
    const int max = pick(o.max_size, 6);
    r.range = "skew shapes of size <= " + std::to_string(max) + " without empty rows or columns";
    for (const auto& shape : skew_shapes_up_to(max)) {
        const auto lr = rs_lr_expand(shape);
        check(r, lr.holds, "S_" + format(shape) + " != sum c S_nu");
        for (const auto& gamma : enumerate_partitions(shape.size())) {
            Integer sum = 0;
            for (const auto& [nu, c] : lr.terms) {
                sum += c * kostka(SkewShape(nu), gamma);
            }
            check(r, sum == kostka(shape, gamma), "skew Kostka " + format(shape) + " content " + format(gamma));
        }
    }
    return r;
}

SuiteReport suite_rscoprod(const SuiteOptions& o)
{
    SuiteReport r;
    const int max = pick(o.max_size, 4);
    r.range = "lambda |- n <= " + std::to_string(max) + ", all i";
    for (int n = 0; n <= max; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            for (int i = 0; i <= n; ++i) {
                const auto res = rs_coproduct_check(lambda, i);
                check(r, res.holds, "discrepancy: Delta_{" + std::to_string(i) + "," + std::to_string(n - i) + "}(S_" +
                                        format(lambda) + ") = " + format(res.lhs) + " but expected " + format(res.rhs));
            }
        }
    }
    return r;
}

SuiteReport suite_iota(const SuiteOptions& o)
{
    SuiteReport r;
    const int max = pick(o.max_size, 6);
    r.range = "compositions and partitions of n <= " + std::to_string(max);
    for (int n = 1; n <= max; ++n) {
        for (const auto& alpha : enumerate_compositions(n)) {
            const auto ribbon = ribbon_source(alpha);
            const NCSymExpr image = iota(NSymExpr::single(NSymBasis::R, alpha));
            check(r, ribbon.agree, "ribbon determinant vs coarsening formula for " + format(alpha));
            check(r, image == ribbon.from_determinant, "iota(R_" + format(alpha) + ")");
            const NSymExpr h = NSymExpr::single(NSymBasis::H, alpha);
            check(r, sym_convert(rho(iota(h)), SymBasis::h) == chi(h), "rho iota H_" + format(alpha));
        }
        for (const auto& lambda : enumerate_partitions(n)) {
            const NCSymExpr image = iota(NSymExpr::single(NSymBasis::Immaculate, Composition(lambda.parts())));
            check(r, image == source_skew_schur(SkewShape(lambda)), "iota(I_" + format(lambda) + ")");
        }
    }
    for (int a = 1; a < max; ++a) {
        for (int b = 1; a + b <= max; ++b) {
            for (const auto& alpha : enumerate_compositions(a)) {
                for (const auto& beta : enumerate_compositions(b)) {
                    const NSymExpr x = NSymExpr::single(NSymBasis::H, alpha);
                    const NSymExpr y = NSymExpr::single(NSymBasis::H, beta);
                    check(r, iota(nsym_product(x, y)) == product(iota(x), iota(y)),
                          "iota morphism on H_" + format(alpha) + " H_" + format(beta));
                }
            }
        }
    }
    return r;
}

SuiteReport suite_hmult(const SuiteOptions& o)
{
    SuiteReport r;
    const int max = pick(o.max_size, 6);
    r.range = "p, e, h with |pi|+|sigma| <= " + std::to_string(max) + ", oracle at k = |pi|+|sigma|";
    for (Basis b : {Basis::p, Basis::e, Basis::h}) {
        for (int a = 1; a < max; ++a) {
            for (int c = 1; a + c <= max; ++c) {
                const int k = o.vars > 0 ? o.vars : a + c;
                std::map<SetPartition, WordCounts> right;
                for (const auto& sigma : enumerate_set_partitions(c)) {
                    right.emplace(sigma, oracle_counts(b, sigma, k));
                }
                for (const auto& pi : enumerate_set_partitions(a)) {
                    const WordCounts left = oracle_counts(b, pi, k);
                    for (const auto& [sigma, rc] : right) {
                        const NCSymExpr prod = product(NCSymExpr::single(b, pi), NCSymExpr::single(b, sigma));
                        const SetPartition slash = slash_product(pi, sigma);
                        check(r, prod == NCSymExpr::single(b, slash), "symbolic product");
                        check(r, multiply(left, rc, c) == normalized(oracle_counts(b, slash, k)),
                              basis_name(b) + "_" + format(pi) + " " + basis_name(b) + "_" + format(sigma) + " oracle");
                    }
                }
            }
        }
    }
    return r;
}

SuiteReport suite_oracle(const SuiteOptions& o)
{
    SuiteReport r;
    const int max = pick(o.max_size, 4);
    r.range = "m, p, e, h for pi |- [n], n <= " + std::to_string(max) + ", k = n";
    for (int n = 1; n <= max; ++n) {
        const int k = o.vars > 0 ? o.vars : n;
        const auto parts = enumerate_set_partitions(n);
        const SetPartition bottom = SetPartition::minimum(n);
        for (Basis b : {Basis::m, Basis::p, Basis::e, Basis::h}) {
            for (const auto& pi : parts) {
                Counts expected;
                Word w(static_cast<std::size_t>(n), 1);
                while (true) {
                    std::map<int, std::vector<int>> by_letter;
                    for (int i = 0; i < n; ++i) {
                        by_letter[w[static_cast<std::size_t>(i)]].push_back(i + 1);
                    }
                    std::vector<std::vector<int>> blocks;
                    for (auto& [letter, pos] : by_letter) {
                        blocks.push_back(pos);
                    }
                    const SetPartition sigma(std::move(blocks));
                    long long coeff = 0;
                    switch (b) {
                    case Basis::m: coeff = sigma == pi ? 1 : 0; break;
                    case Basis::p: coeff = refinement_leq(pi, sigma) ? 1 : 0; break;
                    case Basis::e: coeff = set_partition_meet(sigma, pi) == bottom ? 1 : 0; break;
                    default: coeff = factorial_product(set_partition_meet(sigma, pi).shape()).get_si(); break;
                    }
                    if (coeff != 0) {
                        expected[pack_word(w)] = coeff;
                    }
                    int pos = n - 1;
                    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == k) {
                        w[static_cast<std::size_t>(pos--)] = 1;
                    }
                    if (pos < 0) {
                        break;
                    }
                    ++w[static_cast<std::size_t>(pos)];
                }
                const NCSymExpr f = NCSymExpr::single(b, pi);
                check(r, normalized(oracle_counts(b, pi, k)) == expected, "oracle " + basis_name(b) + "_" + format(pi));
                check(r, commutative_image(oracle_expand(f, k)) == sym_truncate(rho(f), k),
                      "commutative image of " + basis_name(b) + "_" + format(pi));
                check(r, to_m(f) == to_m(from_m(to_m(f), b)), "round trip " + basis_name(b) + "_" + format(pi));
            }
        }
    }
    return r;
}

SuiteReport suite_specht(const SuiteOptions& o)
{
    SuiteReport r;
    const int max = pick(o.max_size, 5);
    r.range = "lambda |- n <= " + std::to_string(max);
    for (int n = 1; n <= max; ++n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            const int rk = specht_rank(lambda);
            const Integer f = count_standard_tableaux(lambda);
            check(r, rk == 0 || Integer(rk) == f, "rank " + std::to_string(rk) + " for " + format(lambda));
            r.notes.push_back(format(lambda) + ": rank " + std::to_string(rk) + ", f = " + to_string(f));
        }
    }
    return r;
}

SuiteReport suite_bases(const SuiteOptions& o)
{
    SuiteReport r;
    const int n = std::max(pick(o.max_size, 5), 5);
    r.range = "s versus s^t at n = 3; 10 random delta != id at n = " + std::to_string(n) + ", seed " +
              std::to_string(o.seed);
    {
        const SetPartition top = SetPartition::maximum(3);
        const NCSymExpr s_top = standard_schur(top);
        bool found = false;
        for (const auto& pi : enumerate_set_partitions(3)) {
            found = found || same_in_h(transposed_schur(pi), s_top);
        }
        check(r, !found, "s_123 lies in the transposed family");
        NCSymExpr e_form;
        e_form.basis = Basis::h;
        for (const auto& tau : enumerate_set_partitions(3)) {
            e_form.terms.add(tau, Rational(set_partition_sign(tau) * factorial(tau.length())) / 6);
        }
        check(r, same_in_h(omega(s_top), e_form), "omega(s_123) = (1/3!) sum (-1)^tau l(tau)! h_tau");
        NCSymExpr bottom_form;
        bottom_form.basis = Basis::h;
        for (const auto& alpha : enumerate_compositions(3)) {
            const int sign = (3 + alpha.length()) % 2 == 0 ? 1 : -1;
            bottom_form.terms.add(canonical_partition(alpha), Rational(sign) / Rational(factorial_product(alpha)));
        }
        check(r, standard_schur(SetPartition::minimum(3)) == bottom_form, "s_1/2/3 composition formula");
    }
    std::mt19937_64 rng(o.seed);
    auto as_set = [](const std::vector<NCSymExpr>& v) {
        std::set<std::string> out;
        for (const auto& f : v) {
            out.insert(format(convert(f, Basis::h)));
        }
        return out;
    };
    const auto standard = as_set(permuted_basis(Permutation::identity(n), n));
    std::vector<std::pair<Permutation, std::set<std::string>>> seen;
    const auto bell = enumerate_set_partitions(n).size();
    while (seen.size() < 10) {
        const Permutation delta = random_permutation(rng, n);
        if (delta.is_identity() ||
            std::any_of(seen.begin(), seen.end(), [&](const auto& s) { return s.first == delta; })) {
            continue;
        }
        const auto family = permuted_basis(delta, n);
        check(r, rank_in_h(family) == static_cast<int>(bell), "delta=" + format(delta) + " is not a basis");
        const auto set = as_set(family);
        check(r, set != standard, "delta=" + format(delta) + " gives the standard basis");
        for (const auto& [other, other_set] : seen) {
            check(r, set != other_set, "delta=" + format(delta) + " and " + format(other) + " give the same basis");
        }
        const auto parts = enumerate_set_partitions(n);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            check(r, sym_convert(rho(family[i]), SymBasis::s) == SymExpr::single(SymBasis::s, parts[i].shape()),
                  "rho(delta o s_" + format(parts[i]) + ")");
        }
        seen.emplace_back(delta, set);
    }
    return r;
}

SuiteReport suite_lgv(const SuiteOptions& o)
{
    SuiteReport r;
    const int max = pick(o.max_size, 4);
    const int max_cap = o.vars > 0 ? o.vars : 3;
    r.range = "skew shapes of size <= " + std::to_string(max) + ", height cap <= " + std::to_string(max_cap);
    std::size_t involution_failures = 0;
    for (const auto& shape : skew_shapes_up_to(max)) {
        const int n = shape.size();
        const auto deltas = enumerate_permutations(n);
        for (int k = 1; k <= max_cap; ++k) {
            const auto tuples = enumerate_path_tuples(shape, k);
            const std::string where = format(shape) + " cap " + std::to_string(k);
            Counts signed_sum;
            Counts fixed_sum;
            for (const auto& p : tuples) {
                const auto swap = lgv_swap(p);
                const bool crossing = has_intersection(p);
                check(r, swap.fixed == !crossing, "fixed point iff no intersection at " + where);
                for (const auto& d : deltas) {
                    signed_sum[pack_word(monomial(d, p))] += sign(p);
                    if (!crossing) {
                        fixed_sum[pack_word(monomial(d, p))] += 1;
                    }
                }
                if (swap.fixed) {
                    check(r, p.epsilon.is_identity(), "fixed point with eps != id at " + where);
                    continue;
                }
                const auto back = lgv_swap(swap.image);
                if (!(back.image == p)) {
                    ++involution_failures;
                    check(r, false, "involution fails at " + where + ": P = [" + dump(p) + "] maps to [" +
                                        dump(swap.image) + "] which maps to [" + dump(back.image) + "]");
                }
                check(r, sign(swap.image) == -sign(p), "sign reversal at " + where);
                const auto h = label_heights(p);
                const auto h2 = label_heights(swap.image);
                bool part1 = true;
                for (int i = 1; i <= n; ++i) {
                    part1 = part1 && h[static_cast<std::size_t>(i - 1)] == h2[static_cast<std::size_t>(swap.xi(i) - 1)];
                }
                check(r, part1, "label heights preserved at " + where);
                bool part2 = true;
                for (const auto& d : deltas) {
                    part2 = part2 && monomial(d, p) == monomial(compose(swap.xi, d), swap.image);
                }
                check(r, part2, "monomials preserved at " + where);
            }
            drop_zeros(signed_sum);
            check(r, signed_sum == fixed_sum, "signed sum collapse at " + where);

            for (const auto& eps : enumerate_permutations(shape.rows())) {
                std::vector<int> c;
                bool dead = false;
                for (int i = 1; i <= shape.rows(); ++i) {
                    const int v = shape.outer().part(i - 1) - shape.inner().part(eps(i) - 1) - i + eps(i);
                    dead = dead || v < 0;
                    c.push_back(std::max(v, 0));
                }
                if (dead) {
                    continue;
                }
                const WeakComposition wc(c);
                const SetPartition base = canonical_partition(wc);
                const long long weight = factorial_product(wc).get_si();
                Counts lhs;
                for (const auto& d : deltas) {
                    for (const auto& [w, cnt] : oracle_counts(Basis::h, permute_set_partition(d, base), k)) {
                        lhs[w] += cnt;
                    }
                }
                Counts rhs;
                for (const auto& p : enumerate_path_tuples(shape, eps, k)) {
                    for (const auto& d : deltas) {
                        rhs[pack_word(monomial(d, p))] += weight;
                    }
                }
                drop_zeros(lhs);
                drop_zeros(rhs);
                check(r, lhs == rhs, "h-monomial bridge at " + where + " eps=" + format(eps));
            }
            const auto cert = fixed_points_to_ssyt(shape, k);
            check(r, cert.bijective, "fixed points vs SSYT at " + where + ": " + std::to_string(cert.path_count) +
                                         " vs " + std::to_string(cert.ssyt_count));
        }
    }
    r.notes.push_back("involution failures: " + std::to_string(involution_failures));
    return r;
}

const std::map<std::string, std::function<SuiteReport(const SuiteOptions&)>>& registry()
{
    static const std::map<std::string, std::function<SuiteReport(const SuiteOptions&)>> suites{
        {"prod", suite_prod},           {"ncschur-triangular", suite_ncschur},
        {"transpose", suite_transpose}, {"deltaact", suite_deltaact},
        {"rsrefines", suite_rsrefines}, {"rslr", suite_rslr},
        {"rscoprod", suite_rscoprod},   {"iota", suite_iota},
        {"lgv", suite_lgv},             {"hmult", suite_hmult},
        {"oracle", suite_oracle},       {"specht", suite_specht},
        {"bases", suite_bases},
    };
    return suites;
}

} // namespace

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) {
        out.push_back(name);
    }
    return out;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options)
{
    const auto& suites = registry();
    auto it = suites.find(name);
    if (it == suites.end()) {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    SuiteReport r = it->second(options);
    r.name = name;
    return r;
}

} // namespace ncsym
