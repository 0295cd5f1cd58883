#include "gamma/cyclotomic.hpp"

#include <vector>

namespace gq {

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const LaurentPoly& cyclotomic(long m) {
    if (m < 1) fail(Errc::INVALID_INPUT, "cyclotomic index must be positive");
    static std::vector<LaurentPoly> cache{LaurentPoly()};  // index 0 unused
    for (long n = static_cast<long>(cache.size()); n <= m; ++n) {
        // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d
        LaurentPoly p = LaurentPoly::t(n) - LaurentPoly(1);
        for (long d = 1; d < n; ++d)
            if (n % d == 0) p = divide_exact(p, cache[static_cast<size_t>(d)]);
        cache.push_back(p);
    }
    return cache[static_cast<size_t>(m)];
}

LaurentPoly CyclotomicFactorization::reconstruct() const {
    LaurentPoly p = LaurentPoly::monomial(unit.coeff, unit.power);
    for (const auto& [m, mult] : factors) p *= cyclotomic(m).pow(static_cast<unsigned long>(mult));
    return p;
}

bool try_factor_cyclotomic(const LaurentPoly& p, CyclotomicFactorization& out, LaurentPoly& residual) {
    if (p.is_zero()) fail(Errc::ZERO_POLYNOMIAL, "factor_cyclotomic of zero");
    out = CyclotomicFactorization{};
    auto [u, rem] = unit_normalize(p);
    out.unit = u;
    // Trial exact division by Phi_m, ascending m. deg Phi_m = phi(m) and
    // phi(m) >= sqrt(m/2), so m <= 2*deg^2 bounds the search.
    long deg = rem.total_degree();
    long m_max = 2 * deg * deg + 1;
    for (long m = 1; m <= m_max && !rem.is_one(); ++m) {
        if (euler_phi(m) > rem.total_degree()) continue;
        const LaurentPoly& phi = cyclotomic(m);
        while (divides(phi, rem)) {
            rem = divide_exact(rem, phi);
            ++out.factors[m];
            if (rem.is_one()) break;
        }
    }
    residual = rem;
    return rem.is_one();
}

CyclotomicFactorization factor_cyclotomic(const LaurentPoly& p) {
    CyclotomicFactorization out;
    LaurentPoly residual;
    if (!try_factor_cyclotomic(p, out, residual))
        fail(Errc::NOT_CYCLOTOMIC, "non-cyclotomic residual " + format_poly(residual));
    return out;
}

}  // namespace gq
