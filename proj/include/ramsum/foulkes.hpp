#pragma once

// Foulkes characters l_n^{(r)}, the coefficients Y_u[n, k], and the
// symmetric functions R_{n,u} = sum_{d|n} c_d(n/d)^u p_d^{n/d} in both the
// Foulkes basis and the Schur basis, with positivity verdicts.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "maj.hpp"
#include "ramat.hpp"
#include "schur.hpp"

namespace ramsum {

/// c_d(n/d)^u, with x^0 = 1 for every x (so u = 0 gives 1 even when c = 0).
inline BigInt diagonal_power(Int n, Int d, unsigned u) { return pow(ramanujan_sum(d, n / d), u); }

/// Foulkes characters l_n^{(r)} depend on r only through (n, r).
inline Int canonical_foulkes_index(Int n, Int r) {
    if (r < 1 || r > n) throw domain_error("Foulkes index r must satisfy 1 <= r <= n");
    return std::gcd(n, r);
}

/// Schur expansion of l_n^{(r)} = (1/n) sum_{d|n} c_d(r) p_d^{n/d}.
inline SchurExpansion foulkes_schur_multiplicities(int n, int r, ExpansionCache& cache = default_cache()) {
    if (n < 1) throw domain_error("foulkes_schur_multiplicities: n must be positive");
    canonical_foulkes_index(n, r);
    SchurExpansion sum(n, cache.cap());
    for (Int d : divisors(n)) sum.add_scaled(*power_sum_rectangle_expansion(n, static_cast<int>(d), cache), ramanujan_sum(d, r));
    for (auto& c : sum.dense()) {
        BigInt q, rem;
        boost::multiprecision::divide_qr(c, BigInt(n), q, rem);
        if (!rem.is_zero()) throw internal_error("foulkes_schur_multiplicities: character sum not divisible by n");
        c = std::move(q);
    }
    return sum;
}

/// Y_u[n, k] = sum_{d|n} c_k(n/d) c_d(n/d)^u, by direct summation.
inline BigInt y_coefficient(Int n, Int k, unsigned u) {
    detail::require_divisor(n, k, "y_coefficient");
    BigInt y = 0;
    for (Int d : divisors(n)) y += ramanujan_sum(k, n / d) * diagonal_power(n, d, u);
    return y;
}

struct StructuralY {
    BigInt value;
    /// Some prime-power factor had no closed form and was summed directly.
    bool used_fallback = false;
};

/// Y_u[n, k] via multiplicativity over the prime powers of n and the
/// closed forms for each factor: exponent 1 for any u, any exponent for u in {0, 1}.
inline StructuralY y_coefficient_structural(Int n, Int k, unsigned u) {
    detail::require_divisor(n, k, "y_coefficient_structural");
    StructuralY out{BigInt(1), false};
    const auto fk = factorize(k);
    for (const auto& [q, alpha] : factorize(n).factors) {
        const int beta = fk.exponent_of(q);
        Int q_beta = 1;
        for (int i = 0; i < beta; ++i) q_beta *= q;
        const Int phi_q_beta = beta == 0 ? 1 : q_beta / q * (q - 1);
        BigInt factor;
        if (alpha == 1) {
            if (u % 2 == 1)
                factor = beta == 1 ? q : 0;
            else
                factor = beta == 0 ? 2 : q - 2;  // row sum of M_q
        } else if (u == 1) {
            const int r = alpha / 2;
            if (alpha % 2 == 1) {
                Int q_alpha = 1;
                for (int i = 0; i < alpha; ++i) q_alpha *= q;
                factor = beta == r + 1 ? q_alpha : 0;
            } else {
                Int q_r = 1;
                for (int i = 0; i < r; ++i) q_r *= q;
                factor = beta <= r ? BigInt(q_r) * phi_q_beta : BigInt(0);
            }
        } else if (u == 0) {
            factor = BigInt(alpha - beta + 1) * phi_q_beta - (beta == 0 ? 0 : q_beta / q);
        } else {
            Int q_alpha = 1;
            for (int i = 0; i < alpha; ++i) q_alpha *= q;
            factor = y_coefficient(q_alpha, q_beta, u);
            out.used_fallback = true;
        }
        out.value *= factor;
    }
    return out;
}

/// sum_{m|n} coeff(m) l_n^{(m)}, all divisors m present, ascending.
struct EllExpansion {
    Int n = 1;
    std::vector<std::pair<Int, BigInt>> coeffs;

    [[nodiscard]] BigInt coefficient(Int r) const {
        const Int m = canonical_foulkes_index(n, r);
        for (const auto& [k, c] : coeffs)
            if (k == m) return c;
        return 0;
    }
    [[nodiscard]] bool is_nonnegative() const {
        for (const auto& [k, c] : coeffs)
            if (c < 0) return false;
        return true;
    }
    [[nodiscard]] BigInt total() const {
        BigInt s = 0;
        for (const auto& [k, c] : coeffs) s += c;
        return s;
    }
    friend bool operator==(const EllExpansion&, const EllExpansion&) = default;
};

/// R_{n,u} = sum_{k|n} Y_u[n, n/k] l_n^{(k)}.
inline EllExpansion rnu_ell_expansion(Int n, unsigned u) {
    detail::require_positive(n, "rnu_ell_expansion");
    EllExpansion out;
    out.n = n;
    for (Int k : divisors(n)) out.coeffs.emplace_back(k, y_coefficient(n, n / k, u));
    return out;
}

/// Pushes a Foulkes-basis expansion into the Schur basis.
inline SchurExpansion ell_to_schur(const EllExpansion& e, ExpansionCache& cache = default_cache()) {
    SchurExpansion out(static_cast<int>(e.n), cache.cap());
    for (const auto& [k, c] : e.coeffs)
        if (!c.is_zero()) out.add_scaled(foulkes_schur_multiplicities(static_cast<int>(e.n), static_cast<int>(k), cache), c);
    return out;
}

/// R_{n,u} in the Schur basis: coefficient of s_lambda is
/// sum_{d|n} c_d(n/d)^u chi^lambda(d^{n/d}).
inline SchurExpansion rnu_schur_expansion(int n, unsigned u, ExpansionCache& cache = default_cache()) {
    if (n < 1) throw domain_error("rnu_schur_expansion: n must be positive");
    detail::check_partition_cap(n, cache.cap(), "rnu_schur_expansion");
    SchurExpansion out(n, cache.cap());
    for (Int d : divisors(n)) {
        const BigInt w = diagonal_power(n, d, u);
        if (!w.is_zero()) out.add_scaled(*power_sum_rectangle_expansion(n, static_cast<int>(d), cache), w);
    }
    return out;
}

/// t(n, u): multiplicity of the trivial character in R_{n,u}.
inline BigInt trivial_multiplicity(Int n, unsigned u) {
    detail::require_positive(n, "trivial_multiplicity");
    BigInt t = 0;
    for (Int d : divisors(n)) t += diagonal_power(n, d, u);
    return t;
}

/// Multiplicity of the sign character: sum_{d|n} c_d(n/d)^u (-1)^{n - n/d}.
inline BigInt sign_multiplicity(Int n, unsigned u) {
    detail::require_positive(n, "sign_multiplicity");
    BigInt t = 0;
    for (Int d : divisors(n)) {
        const BigInt w = diagonal_power(n, d, u);
        if ((n - n / d) % 2 == 0)
            t += w;
        else
            t -= w;
    }
    return t;
}

struct PositivityVerdict {
    Int n = 1;
    unsigned u = 0;
    bool schur_positive = true;
    /// A partition with negative coefficient; present iff !schur_positive.
    std::optional<std::pair<Partition, BigInt>> witness;
    /// Every Y_u[n, k] >= 0.
    bool ell_nonneg = true;
    /// The Schur expansion was skipped because ell_nonneg already decides.
    bool fast_path = false;
};

inline PositivityVerdict check_positivity(int n, unsigned u, ExpansionCache& cache = default_cache()) {
    PositivityVerdict v;
    v.n = n;
    v.u = u;
    v.ell_nonneg = rnu_ell_expansion(n, u).is_nonnegative();
    if (v.ell_nonneg) {
        v.fast_path = true;
        return v;
    }
    v.witness = rnu_schur_expansion(n, u, cache).first_negative();
    v.schur_positive = !v.witness.has_value();
    return v;
}

struct Rejection {
    std::string bound;  // "trivial" or "sign"
    BigInt value;       // the multiplicity that fell outside [0, n]
    [[nodiscard]] std::string str() const { return bound + " multiplicity " + to_string(value) + " outside [0, n]"; }
};

/// Necessary conditions for positivity: restricted to S_{n-1}, R_{n,u} is n
/// copies of the regular representation, so the trivial and sign
/// multiplicities must lie in [0, n].
inline std::optional<Rejection> quick_reject(Int n, unsigned u) {
    const BigInt t = trivial_multiplicity(n, u);
    if (t < 0 || t > n) return Rejection{"trivial", t};
    const BigInt s = sign_multiplicity(n, u);
    if (s < 0 || s > n) return Rejection{"sign", s};
    return std::nullopt;
}

struct ScalarDivisibility {
    Int n_o = 1;  // product of p^a over odd exponents a
    Int n_e = 1;  // product of p^a over even exponents a
    Int scalar = 1;
    bool divides = false;
};

/// Whether n_o sqrt(n_e) divides R_n = R_{n,1} with a Schur-nonnegative quotient.
inline ScalarDivisibility scalar_divisibility_check(int n, ExpansionCache& cache = default_cache()) {
    ScalarDivisibility out;
    for (const auto& [p, a] : factorize(n).factors) {
        Int pa = 1;
        for (int i = 0; i < a; ++i) pa *= p;
        (a % 2 == 1 ? out.n_o : out.n_e) *= pa;
    }
    out.scalar = out.n_o * isqrt(out.n_e);
    out.divides = true;
    const SchurExpansion rn = rnu_schur_expansion(n, 1, cache);
    for (const auto& c : rn.dense()) {
        if (c < 0 || c % out.scalar != 0) {
            out.divides = false;
            break;
        }
    }
    return out;
}

struct MultiplicityReport {
    BigInt trivial;
    BigInt sign;
    BigInt hook_n_minus_1_1;  // (n-1, 1)
    BigInt hook_2_1s;         // (2, 1^{n-2})
    /// Copies of the regular representation of S_{n-1} in the restriction;
    /// reported only for u in {0, 1}.
    std::optional<Int> restriction_regular_copies;
};

inline MultiplicityReport multiplicity_report(Int n, unsigned u) {
    if (n < 2) throw domain_error("multiplicity_report: n must be at least 2");
    MultiplicityReport r;
    r.trivial = trivial_multiplicity(n, u);
    r.sign = sign_multiplicity(n, u);
    r.hook_n_minus_1_1 = BigInt(n) - r.trivial;
    r.hook_2_1s = BigInt(n) - r.sign;
    if (u <= 1) r.restriction_regular_copies = n;
    return r;
}

/// Whether the multiplicity of s_lambda in l_n^{(r)} is predicted to vanish.
inline bool foulkes_multiplicity_vanishes(const Partition& lambda, int r, int n) {
    auto hook = [&](int arm, int leg_ones) {
        std::vector<int> parts{arm};
        parts.insert(parts.end(), static_cast<std::size_t>(leg_ones), 1);
        return Partition(std::move(parts));
    };
    if (lambda == Partition{n} && r < n) return true;
    if (lambda == Partition::rectangle(1, n)) {
        if (n % 2 == 1 && r < n) return true;
        if (n % 2 == 0 && r != n / 2) return true;
    }
    if (n >= 2 && lambda == hook(n - 1, 1) && r == n) return true;
    if (n >= 2 && lambda == hook(2, n - 2) && r == (n % 2 == 1 ? n : n / 2)) return true;
    if (lambda == Partition{2, 2} && (r == 1 || r == 3)) return true;
    if (lambda == Partition{2, 2, 2} && (r == 1 || r == 5)) return true;
    if (lambda == Partition{3, 3} && (r == 2 || r == 4)) return true;
    return false;
}

struct SwansonViolation {
    Partition lambda;
    int r = 0;
    BigInt multiplicity;
    bool predicted_zero = false;
};

/// Compares the zero pattern of the Foulkes multiplicities for every r in 1..n
/// against the predicted vanishing set; returns the disagreements.
inline std::vector<SwansonViolation> swanson_vanishing_check(int n, ExpansionCache& cache = default_cache(),
                                                             int cap = kDefaultMajCap) {
    if (n < 2) throw domain_error("swanson_vanishing_check: n must be at least 2");
    if (n > cap) throw cap_exceeded("swanson_vanishing_check: n = " + std::to_string(n) + " exceeds cap");
    std::vector<SwansonViolation> out;
    for (int r = 1; r <= n; ++r) {
        const SchurExpansion ell = foulkes_schur_multiplicities(n, r, cache);
        for (std::size_t i = 0; i < ell.index().size(); ++i) {
            const Partition& lambda = ell.index()[i];
            const bool predicted = foulkes_multiplicity_vanishes(lambda, r, n);
            const BigInt& m = ell.dense()[i];
            if (predicted != m.is_zero()) out.push_back({lambda, r, m, predicted});
        }
    }
    return out;
}

}  // namespace ramsum
