#include "polyharm/modes.hpp"
#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

// Binomial coefficient with the convention C(a, b) = 0 for b < 0 or a < b.
long long binom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
    }
    return r;
}

} // namespace

long long mode_dimension(int n, int k) {
    if (n < 2) throw DomainError("mode_dimension: dimension n must be >= 2");
    if (k < 0) throw DomainError("mode_dimension: degree k must be >= 0");
    return binom(n + k - 1, k) - binom(n + k - 3, k - 2);
}

long long mode_dimension_product(int n, int k) {
    if (n < 3) throw DomainError("mode_dimension_product: requires n >= 3");
    if (k < 0) throw DomainError("mode_dimension_product: degree k must be >= 0");
    // (n+2k-2) * (n+k-3)(n+k-4)...(k+1) / (n-2)!
    long long num = n + 2 * k - 2;
    for (long long f = k + 1; f <= n + k - 3; ++f) num *= f;
    long long den = 1;
    for (long long f = 2; f <= n - 2; ++f) den *= f;
    return num / den;
}

long long total_modes(int n, int k_max) {
    long long total = 0;
    for (int k = 0; k <= k_max; ++k) total += mode_dimension(n, k);
    return total;
}

std::vector<ModeIndex> mode_list(int n, int k_max) {
    std::vector<ModeIndex> modes;
    modes.reserve(static_cast<size_t>(total_modes(n, k_max)));
    for (int k = 0; k <= k_max; ++k) {
        const int dk = static_cast<int>(mode_dimension(n, k));
        for (int ell = 1; ell <= dk; ++ell) modes.push_back({k, ell});
    }
    return modes;
}

long long mode_offset(int n, int k, int ell) {
    const long long dk = mode_dimension(n, k);
    if (ell < 1 || ell > dk) throw DomainError("mode_offset: ell out of range");
    return total_modes(n, k - 1) + (ell - 1);
}

} // namespace polyharm
