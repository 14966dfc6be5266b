#include "gbound/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gbound/bounds.hpp"
#include "gbound/oracle.hpp"
#include "gbound/primes.hpp"

namespace gbound {

namespace {

using Suite = std::function<void(std::vector<CheckResult>&)>;

void push(std::vector<CheckResult>& out, const std::string& suite, const std::string& name,
          bool passed, const std::string& witness) {
    out.push_back({suite, name, passed, witness});
}

template <typename T>
std::string pair_witness(const T& got, const T& want) {
    std::ostringstream ss;
    ss << "got=" << got << " want=" << want;
    return ss.str();
}

void suite_chevalley_gl(std::vector<CheckResult>& out) {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
            auto lhs = gl_order(n, q);
            auto rhs = chevalley_order(RootSystem{RootType::GL, n}, q);
            push(out, "chevalley-gl", "n=" + std::to_string(n) + " q=" + std::to_string(q),
                 lhs == rhs, pair_witness(lhs.to_string(), rhs.to_string()));
        }
}

void suite_sylow_formula(std::vector<CheckResult>& out) {
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t q : {2, 3, 4, 5, 7, 9, 11, 13, 16})
            for (std::uint64_t ell : {2, 3, 5, 7, 11, 13}) {
                if (q % ell == 0)
                    continue;
                long lhs = gl_order(n, q).exponent(ell);
                long rhs = sylow_exponent_formula(n, q, ell);
                push(out, "sylow-formula",
                     "n=" + std::to_string(n) + " q=" + std::to_string(q) +
                         " ell=" + std::to_string(ell),
                     lhs == rhs, pair_witness(lhs, rhs));
            }
}

void suite_gl2_enumeration(std::vector<CheckResult>& out) {
    for (std::uint64_t p : {2, 3, 5, 7})
        for (std::uint64_t ell : {2, 3, 5, 7}) {
            if (ell == p)
                continue;
            long counted = enumerate_gl2_sylow(p, ell);
            long formula = gl_order(2, p).exponent(ell);
            push(out, "gl2-enumeration", "p=" + std::to_string(p) + " ell=" + std::to_string(ell),
                 counted == formula, pair_witness(counted, formula));
        }
}

void suite_wreath(std::vector<CheckResult>& out) {
    for (int n = 1; n <= 30; ++n)
        for (std::uint64_t ell : {2, 3, 5, 7, 11, 13}) {
            WreathWitness w = wreath_witness(n, ell);
            long want = minkowski_exponent(n, ell);
            push(out, "wreath-optimality",
                 "n=" + std::to_string(n) + " ell=" + std::to_string(ell), w.v == want,
                 pair_witness(w.v, want));
        }
}

void suite_prime_selection(std::vector<CheckResult>& out) {
    for (std::uint64_t ell : {3, 5, 7, 11, 13}) {
        std::uint64_t p = least_generator_prime(ell);
        bool all = true;
        std::ostringstream ss;
        ss << "p=" << p;
        for (int n = 1; n <= 20; ++n) {
            long lhs = sylow_exponent_formula(n, p, ell);
            long rhs = minkowski_exponent(n, ell);
            if (lhs != rhs) {
                all = false;
                ss << " mismatch at n=" << n << " " << pair_witness(lhs, rhs);
                break;
            }
        }
        push(out, "prime-selection", "ell=" + std::to_string(ell), all, ss.str());
    }
}

void suite_kernel_valuation(std::vector<CheckResult>& out) {
    std::mt19937_64 rng(20240917);
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t ell : {2, 3, 5, 7}) {
            int checked = 0, failures = 0;
            std::string detail;
            while (checked < 500) {
                IntMatrix u(n, std::vector<BigInt>(n));
                for (auto& row : u)
                    for (auto& x : row)
                        x = static_cast<long>(rng() % 41) - 20;
                SmithForm snf = smith_form(u);
                if (snf.rank < n)
                    continue; // singular draw; the grid wants nonsingular ones
                ++checked;
                long maxv = 0;
                BigInt det = 1;
                for (const BigInt& s : snf.divisors) {
                    maxv = std::max(maxv, v_ell(s, ell));
                    det *= s;
                }
                auto got = kernel_valuation(u, ell, static_cast<int>(maxv) + 1);
                long want = v_ell(det, ell);
                if (!got || *got != want) {
                    ++failures;
                    if (detail.empty())
                        detail = pair_witness(got ? *got : -1, want);
                }
            }
            push(out, "kernel-valuation", "n=" + std::to_string(n) + " ell=" + std::to_string(ell),
                 failures == 0,
                 failures == 0 ? "500 nonsingular matrices" : detail);
        }
}

void suite_phi_valuation(std::vector<CheckResult>& out) {
    for (std::uint64_t ell : {3, 5, 7, 11, 13})
        for (long t = 1; t <= static_cast<long>(ell - 1); ++t) {
            if ((ell - 1) % t != 0)
                continue;
            for (long m = 1; m <= 3; ++m) {
                CycloInvariants inv = make_invariants(ell, t, MValue::finite(m));
                bool all = true;
                std::ostringstream ss;
                for (int d = 1; d <= 100 && all; ++d) {
                    long want = 0;
                    if (d == t)
                        want = m;
                    else if (d % t == 0) {
                        long q = d / t;
                        bool power = q > 1;
                        while (q % ell == 0)
                            q /= ell;
                        if (power && q == 1)
                            want = 1;
                    }
                    long got = phi_valuation(d, inv, ell, static_cast<int>(m) + 6);
                    if (got != want) {
                        all = false;
                        ss << "d=" << d << " " << pair_witness(got, want);
                    }
                }
                push(out, "phi-valuation",
                     "ell=" + std::to_string(ell) + " t=" + std::to_string(t) +
                         " m=" + std::to_string(m),
                     all, all ? "d<=100" : ss.str());
            }
        }
}

void suite_schur_witness(std::vector<CheckResult>& out) {
    for (std::uint64_t ell : {3, 5, 7, 11, 13})
        for (long t = 1; t <= 12; ++t) {
            if ((ell - 1) % t != 0)
                continue;
            for (long m = 1; m <= 3; ++m)
                for (int n_cap = 1; n_cap <= 10; ++n_cap) {
                    CycloInvariants inv = make_invariants(ell, t, MValue::finite(m));
                    SchurWitness w = schur_witness(n_cap, inv);
                    bool ok;
                    std::string witness;
                    if (t >= 2) {
                        RootSystem sl{RootType::A, static_cast<int>(t) * n_cap - 1};
                        long bound = m_bound(sl, inv, ell).finite();
                        ok = w.v_full == bound;
                        witness = pair_witness(w.v_full, bound);
                    } else if (n_cap >= 2) {
                        RootSystem sl{RootType::A, n_cap - 1};
                        long bound = m_bound(sl, inv, ell).finite();
                        ok = w.v_det1 == bound;
                        witness = pair_witness(w.v_det1, bound);
                    } else {
                        ok = w.v_det1 == 0; // SL_1 is trivial
                        witness = pair_witness(w.v_det1, 0L);
                    }
                    push(out, "schur-witness",
                         "ell=" + std::to_string(ell) + " t=" + std::to_string(t) +
                             " m=" + std::to_string(m) + " N=" + std::to_string(n_cap),
                         ok, witness);
                }
        }
}

void suite_mbound_direct(std::vector<CheckResult>& out) {
    for (const RootSystem& root : catalogue())
        for (std::uint64_t ell : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
            std::vector<CycloInvariants> cells;
            if (ell == 2) {
                for (long m = 2; m <= 4; ++m) {
                    cells.push_back(make_invariants(2, 1, MValue::finite(m)));
                    cells.push_back(make_invariants(2, 2, MValue::finite(m), TwoType::b));
                    cells.push_back(make_invariants(2, 2, MValue::finite(m), TwoType::c));
                }
            } else {
                for (long t = 1; t < static_cast<long>(ell); ++t) {
                    if ((ell - 1) % t != 0 || a_t(root, t) == 0)
                        continue;
                    for (long m = 1; m <= 4; ++m)
                        cells.push_back(make_invariants(ell, t, MValue::finite(m)));
                }
            }
            for (const CycloInvariants& inv : cells) {
                long closed = m_bound(root, inv, ell).finite();
                long direct = m_bound_direct(root, inv, ell, 0, 50);
                push(out, "mbound-direct",
                     root_to_string(root) + " ell=" + std::to_string(ell) + " " + inv.to_string(),
                     closed == direct, pair_witness(direct, closed));
            }
        }
}

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> table = {
        {"chevalley-gl", suite_chevalley_gl},
        {"gl2-enumeration", suite_gl2_enumeration},
        {"kernel-valuation", suite_kernel_valuation},
        {"mbound-direct", suite_mbound_direct},
        {"phi-valuation", suite_phi_valuation},
        {"prime-selection", suite_prime_selection},
        {"schur-witness", suite_schur_witness},
        {"sylow-formula", suite_sylow_formula},
        {"wreath-optimality", suite_wreath},
    };
    return table;
}

} // namespace

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> names;
    for (auto& [name, fn] : suites())
        names.push_back(name);
    return names;
}

std::vector<CheckResult> run_verify_suite(const std::string& name) {
    auto it = suites().find(name);
    if (it == suites().end())
        throw std::invalid_argument("unknown verification suite '" + name + "'");
    std::vector<CheckResult> out;
    it->second(out);
    return out;
}

std::vector<CheckResult> run_all_verify_suites() {
    std::vector<CheckResult> out;
    for (auto& [name, fn] : suites())
        fn(out);
    return out;
}

} // namespace gbound
