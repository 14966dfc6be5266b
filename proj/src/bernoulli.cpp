#include "gbound/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace gbound {

// Defining recurrence: sum_{j=0}^{d} C(d+1, j) B_j = 0 for d >= 1.
BigRational bernoulli(int d) {
    if (d < 0)
        throw std::invalid_argument("bernoulli index must be >= 0");
    static std::vector<BigRational> cache{BigRational(1)};
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) <= d) {
        int n = static_cast<int>(cache.size());
        BigRational sum = 0;
        BigInt binom = 1; // C(n+1, j), updated incrementally
        for (int j = 0; j < n; ++j) {
            sum += BigRational(binom) * cache[j];
            binom = binom * (n + 1 - j) / (j + 1);
        }
        cache.push_back(-sum / BigRational(binom));
    }
    return cache[d];
}

} // namespace gbound
