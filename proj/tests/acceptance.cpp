// Acceptance criteria: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <ncsym/io.hpp>
#include <ncsym/lgv.hpp>
#include <ncsym/ncschur.hpp>
#include <ncsym/nsym.hpp>
#include <ncsym/verify.hpp>

using namespace ncsym;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failed items of a criterion.
struct Ledger {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            failures.push_back(what);
        }
    }

    // Runs item and also fails it when it exceeds the time limit.
    void timed(const std::string& what, double limit, const std::function<bool()>& item)
    {
        const auto start = Clock::now();
        bool ok = false;
        try {
            ok = item();
        } catch (const std::exception& e) {
            failures.push_back(what + ": threw " + e.what());
            return;
        }
        const double t = seconds_since(start);
        expect(ok, what);
        if (t > limit) {
            std::ostringstream os;
            os << what << ": " << t << " s exceeds " << limit << " s";
            failures.push_back(os.str());
        }
    }

    void suite(const std::string& name, double limit, const SuiteOptions& options = {})
    {
        timed("suite " + name, limit, [&] {
            const SuiteReport r = run_suite(name, options);
            for (const auto& f : r.failures) {
                failures.push_back(name + ": " + f);
            }
            for (const auto& n : r.notes) {
                notes.push_back(name + ": " + n);
            }
            return r.passed();
        });
    }
};

// ------------------------------------------------------------- criterion 1

Ledger worked_examples()
{
    Ledger l;
    const double limit = 1.0;
    l.timed("partition stats of 3221", limit, [] {
        const auto st = partition_stats(IntegerPartition{3, 2, 2, 1});
        return st.factorial_product == 24 && st.multiplicity_factorial == 2 &&
               st.transpose == IntegerPartition{4, 3, 1};
    });
    l.timed("134/25 | 1/23", limit, [] {
        return slash_product(parse_set_partition("134/25"), parse_set_partition("1/23")) ==
               parse_set_partition("134/25/6/78");
    });
    l.timed("delta of 169/2/378/45", limit, [] {
        return delta_pi(parse_set_partition("169/2/378/45")).delta == parse_permutation("169378452");
    });
    l.timed("h_13/2 in the m-basis", limit, [] {
        return to_m(parse_ncsym_expr("h[13/2]")) ==
               parse_ncsym_expr("2 m[123] + m[12/3] + m[1/23] + 2 m[13/2] + m[1/2/3]");
    });
    l.timed("s_[21]", limit, [] {
        return source_skew_schur(parse_skew_shape("2.1")) == parse_ncsym_expr("1/2 h[12/3] - 1/6 h[123]");
    });
    l.timed("s_[22/1]", limit, [] {
        return source_skew_schur(parse_skew_shape("2.2/1")) == parse_ncsym_expr("1/2 h[1/23] - 1/6 h[123]");
    });
    l.timed("s_12/3", limit, [] {
        return standard_schur(parse_set_partition("12/3")) == parse_ncsym_expr("1/2 h[12/3] - 1/6 h[123]");
    });
    l.timed("s_13/2", limit, [] {
        return standard_schur(parse_set_partition("13/2")) == parse_ncsym_expr("1/2 h[13/2] - 1/6 h[123]");
    });
    l.timed("s_[1] s_[21]", limit, [] {
        const auto r = schur_product(Permutation::identity(1), IntegerPartition{1}, Permutation::identity(3),
                                     IntegerPartition{2, 1});
        return r.holds && r.concat_shape == parse_skew_shape("2.2.1/1") && r.has_near &&
               r.near_shape == parse_skew_shape("3.1");
    });
    l.timed("s_[21] s_[1]", limit, [] {
        const auto r = schur_product(Permutation::identity(3), IntegerPartition{2, 1}, Permutation::identity(1),
                                     IntegerPartition{1});
        return r.holds && r.concat_shape == parse_skew_shape("2.1.1") && r.has_near &&
               r.near_shape == parse_skew_shape("3.2/1");
    });
    l.timed("13425 | 123", limit, [] {
        return shifted_concat(parse_permutation("13425"), parse_permutation("123")) == parse_permutation("13425678");
    });
    l.timed("r_12 = h_12 - h_3", limit, [] {
        return ribbon_to_H(Composition{1, 2}) == parse_nsym_expr("H[1.2] - H[3]");
    });
    l.timed("s_21 = h_21 - h_3", limit, [] {
        SymExpr expected = SymExpr::single(SymBasis::h, IntegerPartition{2, 1});
        expected -= SymExpr::single(SymBasis::h, IntegerPartition{3});
        return jacobi_trudi(SkewShape(IntegerPartition{2, 1}), JTFlavor::h) == expected &&
               sym_convert(SymExpr::single(SymBasis::s, IntegerPartition{2, 1}), SymBasis::h) == expected;
    });
    l.timed("LGV swap on 332/11", limit, [] {
        PathTuple p;
        p.shape = parse_skew_shape("3.3.2/1.1");
        p.epsilon = parse_permutation("213");
        p.paths = {LatticePath{-1, {2, 2, 3}}, LatticePath{0, {3}}, LatticePath{-3, {1, 3}}};
        const auto swap = lgv_swap(p);
        const std::vector<LatticePath> expected_image{LatticePath{0, {3, 3}}, LatticePath{-1, {2, 2}},
                                                      LatticePath{-3, {1, 3}}};
        return !swap.fixed && swap.xi == parse_permutation("342156") && swap.image.paths == expected_image &&
               swap.image.epsilon == Permutation::identity(3) &&
               monomial(parse_permutation("315462"), p) == Word{3, 2, 1, 3, 3, 2};
    });
    return l;
}

// ------------------------------------------------------------- criterion 2

Ledger identity_suites()
{
    Ledger l;
    l.suite("prod", 10.0);
    l.suite("ncschur-triangular", 30.0);
    l.suite("transpose", 30.0);
    l.suite("deltaact", 30.0);
    l.suite("rsrefines", 60.0);
    l.suite("rslr", 60.0);
    l.suite("iota", 30.0);
    l.suite("hmult", 60.0);
    return l;
}

// ------------------------------------------------------------- criterion 3

// Coefficient of the word w in b_pi straight from the definitions: the
// letters of w induce the set partition sigma (i ~ j iff w_i = w_j).
std::map<Word, Rational> definition_expansion(Basis b, const SetPartition& pi, int k)
{
    const int n = pi.size();
    std::map<Word, Rational> out;
    std::vector<int> block_of(static_cast<std::size_t>(n + 1));
    for (std::size_t i = 0; i < pi.blocks().size(); ++i) {
        for (int x : pi.blocks()[i]) {
            block_of[static_cast<std::size_t>(x)] = static_cast<int>(i);
        }
    }
    Word w(static_cast<std::size_t>(n), 1);
    for (;;) {
        bool same_kernel = true;  // m: w_i = w_j iff i, j share a block
        bool constant = true;     // p: letters constant on blocks
        bool injective = true;    // e: letters distinct within blocks
        std::map<std::pair<int, int>, int> meet_blocks; // (letter, block) classes of sigma ^ pi
        for (int i = 1; i <= n; ++i) {
            ++meet_blocks[{w[static_cast<std::size_t>(i - 1)], block_of[static_cast<std::size_t>(i)]}];
            for (int j = i + 1; j <= n; ++j) {
                const bool same_letter = w[static_cast<std::size_t>(i - 1)] == w[static_cast<std::size_t>(j - 1)];
                const bool same_block = block_of[static_cast<std::size_t>(i)] == block_of[static_cast<std::size_t>(j)];
                same_kernel = same_kernel && same_letter == same_block;
                constant = constant && (!same_block || same_letter);
                injective = injective && !(same_block && same_letter);
            }
        }
        Rational c = 0;
        switch (b) {
        case Basis::m: c = same_kernel ? 1 : 0; break;
        case Basis::p: c = constant ? 1 : 0; break;
        case Basis::e: c = injective ? 1 : 0; break;
        default: {
            Integer f = 1;
            for (const auto& [key, size] : meet_blocks) {
                for (int t = 2; t <= size; ++t) {
                    f *= t;
                }
            }
            c = Rational(f);
        }
        }
        if (c != 0) {
            out[w] = c;
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
    return out;
}

Integer factorial_of(int n)
{
    Integer f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

Ledger oracle_cross_validation()
{
    Ledger l;
    l.timed("oracle vs definitions, n <= 4", 30.0, [&] {
        bool ok = true;
        for (int n = 1; n <= 4; ++n) {
            for (Basis b : {Basis::m, Basis::p, Basis::e, Basis::h}) {
                for (const auto& pi : enumerate_set_partitions(n)) {
                    const NCPolynomial poly = oracle_expand(NCSymExpr::single(b, pi), n);
                    std::map<Word, Rational> got(poly.terms().begin(), poly.terms().end());
                    const bool match = got == definition_expansion(b, pi, n);
                    l.expect(match, "oracle " + basis_name(b) + "_" + format(pi));

                    // Scalings of the commutative image.
                    const IntegerPartition lambda = pi.shape();
                    Integer scale = 1;
                    SymBasis sb = SymBasis::m;
                    if (b == Basis::m) {
                        std::map<int, int> mult;
                        for (int part : lambda.parts()) {
                            ++mult[part];
                        }
                        for (const auto& [part, r] : mult) {
                            scale *= factorial_of(r);
                        }
                    } else if (b == Basis::p) {
                        sb = SymBasis::p;
                    } else {
                        sb = b == Basis::e ? SymBasis::e : SymBasis::h;
                        for (int part : lambda.parts()) {
                            scale *= factorial_of(part);
                        }
                    }
                    const bool image = commutative_image(poly) ==
                                       sym_truncate(SymExpr::single(sb, lambda, Rational(scale)), n);
                    l.expect(image, "commutative image of " + basis_name(b) + "_" + format(pi));
                    ok = ok && match && image;
                }
            }
        }
        return ok;
    });
    return l;
}

// ------------------------------------------------------------- criteria 4-7

Ledger lgv_suite()
{
    Ledger l;
    l.suite("lgv", 60.0);
    return l;
}

Integer hook_length_count(const IntegerPartition& lambda)
{
    const IntegerPartition conj = transpose(lambda);
    Integer hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.part(i); ++j) {
            hooks *= (lambda.part(i) - j - 1) + (conj.part(j) - i - 1) + 1;
        }
    }
    return factorial_of(lambda.size()) / hooks;
}

Ledger specht_suite()
{
    Ledger l;
    l.timed("Specht ranks, n <= 5", 60.0, [&] {
        bool ok = true;
        for (int n = 1; n <= 5; ++n) {
            for (const auto& lambda : enumerate_partitions(n)) {
                const int rk = specht_rank(lambda);
                const Integer f = hook_length_count(lambda);
                const bool good = rk == 0 || Integer(rk) == f;
                l.expect(good, "rank " + std::to_string(rk) + " at " + format(lambda));
                l.notes.push_back(format(lambda) + ": " + (rk == 0 ? "0" : "f = " + to_string(f)));
                ok = ok && good;
            }
        }
        return ok;
    });
    return l;
}

Ledger coproduct_suite()
{
    Ledger l;
    l.suite("rscoprod", 60.0);
    return l;
}

Ledger basis_witnesses()
{
    Ledger l;
    SuiteOptions o;
    o.seed = 2024;
    l.suite("bases", 60.0, o);
    return l;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        std::string title;
        std::function<Ledger()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "worked examples", worked_examples},
        {2, "identity suites", identity_suites},
        {3, "oracle cross-validation", oracle_cross_validation},
        {4, "LGV involution suite", lgv_suite},
        {5, "Specht ranks", specht_suite},
        {6, "coproduct suite", coproduct_suite},
        {7, "basis-difference witnesses", basis_witnesses},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Ledger l;
        try {
            l = c.run();
        } catch (const std::exception& e) {
            l.failures.push_back(std::string("threw ") + e.what());
        }
        const double t = seconds_since(start);
        const bool ok = l.failures.empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << t << " s)\n";
        for (const auto& n : l.notes) {
            std::cout << "    " << n << '\n';
        }
        for (const auto& f : l.failures) {
            std::cout << "    failed: " << f << '\n';
        }
    }
    return failed == 0 ? 0 : 1;
}
