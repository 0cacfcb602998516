// A digit permutation carrying the zeros for j = 3 onto those for j = 5 (q = 2).

#include <iostream>

#include <fzeta/zeros.hpp>

int main()
{
    using namespace fzeta;
    const auto rho = *orbit_witness(PAdic::from_int(2, 3), PAdic::from_int(2, 5));
    std::cout << "rho = " << rho.to_cycles() << ", rho_*(3) = " << rho_star(rho, 3, 2) << "\n";
    const auto src = roots_in_K(special_poly(PolyRing(2), 3), 12);
    const auto dst = roots_in_K(special_poly(PolyRing(2), 5), 12);
    for (std::size_t i = 0; i < src.size(); ++i) {
        const auto img = digit_act_zero(rho, src[i]);
        std::cout << src[i].x.to_string(false) << "  ->  " << img.x.to_string(false) << "   (zero for j=5: "
                  << dst[i].x.to_string(false) << ")\n";
    }
}
