// Trivial-zero orders over y^2 + y = x^3 + x + 1, grouped by binary digit sum.
//   elliptic_scan [j_max]

#include <cstdlib>
#include <iostream>

#include <fzeta/scan.hpp>

int main(int argc, char **argv)
{
    using namespace fzeta;
    const std::uint64_t j_max = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 128;
    const auto s = orbit_scan_elliptic(j_max);
    std::cout << "j <= " << j_max << ", orbits consistent: " << (s.all_consistent() ? "yes" : "no") << "\n";
    for (const auto &[ell, orders] : s.ell_vs_order) {
        std::cout << "  l_2(j) = " << ell << ":";
        for (const auto &[order, count] : orders) {
            std::cout << " order " << order << " x" << count;
        }
        std::cout << "\n";
    }
}
