#ifndef POLYHARM_MODES_HPP
#define POLYHARM_MODES_HPP

#include <vector>

namespace polyharm {

// One spherical-harmonic channel: degree k >= 0 and index ell in [1, d_k].
struct ModeIndex {
    int k = 0;
    int ell = 1;

    friend bool operator==(const ModeIndex& a, const ModeIndex& b) {
        return a.k == b.k && a.ell == b.ell;
    }
    friend bool operator<(const ModeIndex& a, const ModeIndex& b) {
        return a.k != b.k ? a.k < b.k : a.ell < b.ell;
    }
};

// Number of linearly independent spherical harmonics of degree k on
// S^{n-1}, computed as C(n+k-1,k) - C(n+k-3,k-2).  Throws DomainError for
// n < 2.
long long mode_dimension(int n, int k);

// The literal product form (n+2k-2)(n+k-3)...(k+1)/(n-2)!.  Valid for
// n >= 3 only; at n = 2 it evaluates to 2k instead of the correct 2.
long long mode_dimension_product(int n, int k);

// Sum of d_k over k = 0..k_max.
long long total_modes(int n, int k_max);

// All modes with k <= k_max in ascending (k, ell) order.  This ordering
// defines the flattened index used throughout the library.
std::vector<ModeIndex> mode_list(int n, int k_max);

// Flattened position of (k, ell) in mode_list(n, k_max).
long long mode_offset(int n, int k, int ell);

} // namespace polyharm

#endif
