// Special polynomial and zeros of zeta at a negative integer over F_q[T].
//   special_polynomial [q] [j]

#include <cstdlib>
#include <iostream>

#include <fzeta/zeros.hpp>

int main(int argc, char **argv)
{
    using namespace fzeta;
    const std::uint32_t q = argc > 1 ? static_cast<std::uint32_t>(std::atoi(argv[1])) : 3;
    const std::uint64_t j = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 13;

    const PolyRing ring(q);
    const auto sp = special_poly(ring, j);
    std::cout << "z(x,-" << j << ") over F_" << q << "[T], degree " << sp.degree() << "\n";
    for (std::size_t e = 0; e < sp.coeffs.size(); ++e) {
        std::cout << "  S_" << e << " = " << sp.coeffs[e] << "\n";
    }
    std::cout << "trivial-zero order " << trivial_zero_order(sp) << "\n";
    for (const auto &z : roots_in_K(sp, 12)) {
        std::cout << "  zero x = " << z.x << (z.exact ? "  (exact)" : "") << "\n";
    }
}
