#include "gbound/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace gbound {

namespace {

// Exact polynomial long division; remainder must vanish.
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    std::vector<BigInt> quot(num.size() - den.size() + 1);
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        BigInt c = num[i + den.size() - 1] / den.back();
        quot[i] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[i + j] -= c * den[j];
    }
    for (const BigInt& c : num)
        if (c != 0)
            throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

} // namespace

const std::vector<BigInt>& cyclotomic_coefficients(int d) {
    if (d < 1)
        throw std::invalid_argument("cyclotomic index must be >= 1");
    static std::map<int, std::vector<BigInt>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    // Build Phi_e for every divisor e of d bottom-up: each needs only the
    // Phi_f with f | e, f < e, all of which are earlier divisors of d.
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0 || cache.count(e))
            continue;
        std::vector<BigInt> num(e + 1);
        num[0] = -1;
        num[e] = 1;
        for (int f = 1; f < e; ++f)
            if (e % f == 0)
                num = divide_exact(std::move(num), cache.at(f));
        cache.emplace(e, std::move(num));
    }
    return cache.at(d);
}

PadicApprox cyclotomic_value(int d, const PadicApprox& x) {
    const std::vector<BigInt>& coeff = cyclotomic_coefficients(d);
    BigInt m = x.modulus();
    BigInt acc = 0;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
        acc = (acc * x.residue() + *it) % m;
    return PadicApprox(x.ell(), x.precision(), acc);
}

} // namespace gbound
