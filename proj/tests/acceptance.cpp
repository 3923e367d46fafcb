// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "leibhom/complexes.hpp"
#include "leibhom/eulerian.hpp"
#include "leibhom/hopf.hpp"
#include "leibhom/report.hpp"
#include "support/random_algebra.hpp"

using namespace leibhom;

namespace {

using Clock = std::chrono::steady_clock;

std::vector<LeibnizAlgebra> builtins()
{
    std::vector<LeibnizAlgebra> out;
    for (const auto &name : builtin_catalog()) {
        if (name.rfind("abelian-", 0) == 0) {
            continue;
        }
        out.push_back(builtin(name));
    }
    for (int d = 1; d <= 4; ++d) {
        out.push_back(builtin("abelian-" + std::to_string(d)));
    }
    return out;
}

TensorElement letters(const SparseVector &v)
{
    TensorElement t(1);
    for (const auto &[k, c] : v) {
        t.add({static_cast<Letter>(k)}, c);
    }
    return t;
}

TensorElement letter(Letter l) { return TensorElement::word({l}); }

std::vector<long long> super_witt(long long d, std::size_t top)
{
    std::vector<long long> l(top + 1, 0);
    for (std::size_t n = 1; n <= top; ++n) {
        std::vector<long long> prod(top + 1, 0);
        prod[0] = 1;
        for (std::size_t k = 1; k < n; ++k) {
            for (long long rep = 0; rep < l[k]; ++rep) {
                std::vector<long long> next(top + 1, 0);
                for (std::size_t a = 0; a <= top; ++a) {
                    if (k % 2 == 1) {
                        next[a] += prod[a];
                        if (a + k <= top) {
                            next[a + k] += prod[a];
                        }
                    } else {
                        for (std::size_t b = a; b <= top; b += k) {
                            next[b] += prod[a];
                        }
                    }
                }
                prod = next;
            }
        }
        long long dn = 1;
        for (std::size_t k = 0; k < n; ++k) {
            dn *= d;
        }
        l[n] = dn - prod[n];
    }
    return l;
}

// δ_n applied to a tensor through the matrix of the implementation.
TensorElement delta_via_matrix(const LeibnizAlgebra &a, std::size_t n, const TensorElement &omega)
{
    const auto upper = lie_basis(a.dimension(), n + 1);
    const auto lower = lie_basis(a.dimension(), n);
    const auto coords = upper->coordinates(omega);
    return lower->embed(delta(a, n) * coords);
}

bool ac1(std::string &note)
{
    const auto start = Clock::now();
    for (const auto &a : builtins()) {
        RationalMatrix prev = loday_d(a, 1);
        for (std::size_t n = 2; n <= 6; ++n) {
            RationalMatrix cur = loday_d(a, n);
            if (!(prev * cur).is_zero()) {
                note = a.name() + " n=" + std::to_string(n);
                return false;
            }
            prev = std::move(cur);
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    note = std::to_string(secs) + "s";
    return secs < 60.0;
}

bool ac2(std::string &note)
{
    for (const auto &a : builtins()) {
        for (std::size_t n = 1; n <= 5; ++n) {
            if (!subcomplex_closed(a, n)) {
                note = a.name() + " n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool ac3(std::string &note)
{
    for (const auto &a : builtins()) {
        for (std::size_t n = 1; n <= 4; ++n) {
            if (!commutation_check(a, n)) {
                note = a.name() + " n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool ac4(std::string &note)
{
    const std::size_t d = 4;
    for (std::uint64_t point = 0; point < 5; ++point) {
        // Generic structure constants: no identity is imposed.
        SplitMix64 rng(1000 + point);
        LeibnizAlgebra a("generic", {"b1", "b2", "b3", "b4"});
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                SparseVector v;
                for (std::size_t k = 0; k < d; ++k) {
                    const Scalar c = rng.small();
                    if (!c.is_zero()) {
                        v.emplace(k, c);
                    }
                }
                a.set_bracket(i, j, v);
            }
        }
        auto br = [&](Letter p, Letter q) { return letters(a.structure(p, q)); };
        auto L = [](const TensorElement &p, const TensorElement &q) { return graded_bracket(p, q); };
        for (Letter x = 0; x < d; ++x) {
            for (Letter y = 0; y < d; ++y) {
                if (delta_via_matrix(a, 1, nested_bracket({x, y})) != br(x, y) + br(y, x)) {
                    note = "delta_1";
                    return false;
                }
                for (Letter z = 0; z < d; ++z) {
                    const auto X = letter(x);
                    const auto Y = letter(y);
                    const auto Z = letter(z);
                    const TensorElement two = L(X, br(y, z)) + L(X, br(z, y)) - L(Y, br(z, x)) - L(Z, br(y, x));
                    if (delta_via_matrix(a, 2, nested_bracket({x, y, z})) != two) {
                        note = "delta_2";
                        return false;
                    }
                    for (Letter u = 0; u < d; ++u) {
                        const auto U = letter(u);
                        TensorElement three = L(X, L(Y, br(z, u))) + L(X, L(Y, br(u, z))) - L(X, L(U, br(z, y))) -
                                              L(X, L(Z, br(u, y)));
                        three += L(Y, L(U, br(z, x))) + L(Y, L(Z, br(u, x))) - L(Z, L(U, br(y, x))) -
                                 L(U, L(Z, br(y, x)));
                        if (delta_via_matrix(a, 3, nested_bracket({x, y, z, u})) != three) {
                            note = "delta_3";
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

bool ac5(std::string &note)
{
    auto check = [&](const LeibnizAlgebra &a) {
        const std::size_t li1 = li_homology(a, 1).rows.front().homology_dim;
        const std::size_t lie = liezation(a).quotient.dimension();
        if (li1 != lie) {
            note = a.name();
            return false;
        }
        return true;
    };
    for (const auto &a : builtins()) {
        if (!check(a)) {
            return false;
        }
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = test_support::random_valid_algebra(seed);
        if (!validate(a).empty() || a.dimension() > 3 || !check(a)) {
            note = a.name();
            return false;
        }
    }
    return true;
}

bool ac6(std::string &note)
{
    const auto start = Clock::now();
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t n = 1; n <= 5; ++n) {
            SplitMix64 rng(600 + 10 * d + n);
            for (int trial = 0; trial < 100; ++trial) {
                const auto dm = random_matrix(rng, d, d);
                if (!wigner_check(dm, random_tensor(rng, d, n))) {
                    note = "wigner d=" + std::to_string(d) + " n=" + std::to_string(n);
                    return false;
                }
            }
            const auto basis = lie_basis(d, n);
            const auto dm = random_matrix(rng, d, d);
            for (std::size_t k = 0; k < basis->dimension(); ++k) {
                std::vector<Scalar> e(basis->dimension());
                e[k] = 1;
                if (!friedrichs_check(dm, *basis, e)) {
                    note = "p_D d=" + std::to_string(d) + " n=" + std::to_string(n);
                    return false;
                }
                const auto col = basis->column(k);
                if (bracket_image(col) != Scalar(static_cast<std::int64_t>(n)) * col) {
                    note = "dynkin d=" + std::to_string(d) + " n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    note = std::to_string(secs) + "s";
    return secs < 120.0;
}

bool ac7(std::string &note)
{
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t n = 2; n <= 5; ++n) {
            const auto basis = lie_basis(d, n);
            SplitMix64 rng(700 + 10 * d + n);
            for (int trial = 0; trial < 20; ++trial) {
                const auto dm = random_matrix(rng, d, d);
                for (std::size_t k = 0; k < basis->dimension(); ++k) {
                    if (!d_tilde(dm, basis->column(k)).is_zero()) {
                        note = "d=" + std::to_string(d) + " n=" + std::to_string(n);
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool ac8(std::string &note)
{
    const std::vector<std::size_t> d1{1, 1, 0, 0, 0};
    const std::vector<std::size_t> d2{2, 3, 2, 3};
    for (std::size_t n = 1; n <= 5; ++n) {
        if (lie_basis(1, n)->dimension() != d1[n - 1]) {
            note = "d=1 n=" + std::to_string(n);
            return false;
        }
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        if (lie_basis(2, n)->dimension() != d2[n - 1]) {
            note = "d=2 n=" + std::to_string(n);
            return false;
        }
    }
    const auto oracle = super_witt(3, 5);
    std::string dims;
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto got = lie_basis(3, n)->dimension();
        dims += (n == 1 ? "" : ",") + std::to_string(got);
        if (static_cast<long long>(got) != oracle[n]) {
            note = "d=3 n=" + std::to_string(n);
            return false;
        }
    }
    note = "d=3: " + dims;
    return true;
}

bool ac9(std::string &note)
{
    const auto start = Clock::now();
    for (std::size_t g = 1; g <= 2; ++g) {
        RunConfig cfg;
        cfg.command = Command::Conjecture1;
        cfg.generators = g;
        cfg.weight = 4;
        cfg.degree = 4;
        const auto r = run(cfg);
        if (r.exit_code != kSuccess) {
            note = "exit code g=" + std::to_string(g);
            return false;
        }
        std::vector<std::size_t> li1;
        std::size_t table = 0;
        std::size_t verdicts = 0;
        for (const auto &rec : r.results) {
            if (rec["kind"] == "witt_check") {
                li1.push_back(rec["li1_dim"].get<std::size_t>());
                if (!rec["equal"].get<bool>()) {
                    return false;
                }
            } else if (rec["kind"] == "weight_homology") {
                ++table;
            } else if (rec["kind"] == "verdict") {
                ++verdicts;
            }
        }
        // (n, w) with 1 <= n <= w <= 4, and a verdict for each n > 1
        if (table != 10 || verdicts != 6) {
            note = "table shape g=" + std::to_string(g);
            return false;
        }
        const std::vector<std::size_t> witt = g == 2 ? std::vector<std::size_t>{2, 1, 2, 3}
                                                     : std::vector<std::size_t>{1, 0, 0, 0};
        if (li1 != witt) {
            note = "Li_1 weights g=" + std::to_string(g);
            return false;
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    note = std::to_string(secs) + "s";
    return secs < 300.0;
}

bool ac10(std::string &note)
{
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto family = eulerian_family(n);
        GroupAlgebraElement sum(n);
        for (const auto &e : family) {
            sum += e;
        }
        if (sum != GroupAlgebraElement::identity(n)) {
            note = "completeness n=" + std::to_string(n);
            return false;
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto prod = family[i] * family[j];
                if (i == j ? prod != family[i] : !prod.terms().empty()) {
                    note = "orthogonality n=" + std::to_string(n);
                    return false;
                }
            }
        }
        for (std::size_t d = 1; d <= 2; ++d) {
            for (auto conv : {ActionConvention::Unsigned, ActionConvention::Signed}) {
                std::size_t total = 0;
                for (const auto &e : family) {
                    total += rank(action_matrix(e, d, conv));
                }
                if (total != (d == 1 ? 1u : (1u << n))) {
                    note = "rank additivity n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    for (const std::string name : {"abelian-2", "A2"}) {
        RunConfig cfg;
        cfg.command = Command::Conjecture2;
        cfg.input = "builtin:" + name;
        cfg.degree = 4;
        cfg.action = "both";
        const auto r = run(cfg);
        std::size_t cells = 0;
        for (const auto &rec : r.results) {
            if (rec["kind"] != "conjecture2") {
                continue;
            }
            ++cells;
            if (name == "abelian-2" && !rec["contained"].get<bool>()) {
                note = "abelian grid";
                return false;
            }
        }
        // Σ_{n=2..4} n cells per convention
        if (cells != 18 || r.exit_code != kSuccess) {
            note = name + " grid";
            return false;
        }
    }
    return true;
}

bool ac11(std::string &note)
{
    std::vector<RunConfig> suite;
    auto add = [&](Command c, std::string input, std::size_t degree) {
        RunConfig cfg;
        cfg.command = c;
        cfg.input = std::move(input);
        cfg.degree = degree;
        cfg.format = OutputFormat::Json;
        suite.push_back(cfg);
    };
    add(Command::Validate, "builtin:sl2", 3);
    add(Command::Hl, "builtin:A2-lie2-sum", 4);
    add(Command::Li, "builtin:hemisemidirect3", 4);
    add(Command::Conjecture1, "", 4);
    add(Command::Conjecture2, "builtin:A2", 4);
    add(Command::Wigner, "", 4);
    add(Command::Export, "builtin:cyclic3", 1);
    auto full = [&] {
        std::string out;
        for (const auto &cfg : suite) {
            out += render(run(cfg), OutputFormat::Json);
        }
        return out;
    };
    const std::string first = full();
    const std::string second = full();
    note = std::to_string(first.size()) + " bytes";
    return first == second;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<bool(std::string &)>>> criteria{
        {"AC1  d∘d = 0 on builtins, n <= 6", ac1},
        {"AC2  Lie subcomplex closed under d, n <= 5", ac2},
        {"AC3  d i_{n+1} = (-1)^n i_n delta_n, n <= 4", ac3},
        {"AC4  delta_1, delta_2, delta_3 displays on generic brackets", ac4},
        {"AC5  dim Li_1 = dim of the Liezation", ac5},
        {"AC6  Wigner identity, p_D = D_n and Dynkin on Lie bases", ac6},
        {"AC7  D~_n vanishes on Lie bases", ac7},
        {"AC8  dim L(V,1)_n matches the super-Witt numbers", ac8},
        {"AC9  weight-graded Li table, Li_1 = Witt numbers", ac9},
        {"AC10 Eulerian certification, rank additivity, verdict grid", ac10},
        {"AC11 byte-identical JSON across repeated runs", ac11},
    };
    int failures = 0;
    for (const auto &[label, check] : criteria) {
        std::string note;
        bool ok = false;
        try {
            ok = check(note);
        } catch (const std::exception &e) {
            note = std::string("exception: ") + e.what();
        }
        std::printf("%s %s%s%s\n", ok ? "PASS" : "FAIL", label.c_str(), note.empty() ? "" : "  ", note.c_str());
        failures += ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
