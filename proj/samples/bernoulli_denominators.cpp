// Denominators of classical and Bernoulli-Carlitz numbers side by side.

#include <iostream>

#include <fzeta/carlitz.hpp>
#include <fzeta/classical.hpp>

int main()
{
    using namespace fzeta;
    const BernoulliCache B(24);
    for (unsigned n = 2; n <= 24; n += 2) {
        std::cout << "B_" << n << " = " << B(n) << "   vsc " << vsc_classical(n) << "\n";
    }
    const Fq &f = Fq::get(3);
    for (const auto &bc : bc_numbers(f, 20)) {
        if (bc.j > 0 && bc.j % 2 == 0) {
            std::cout << "BC_" << bc.j << " denominator " << bc.denominator << "   predicted " << vsc_predict(bc.j, 3)
                      << "\n";
        }
    }
}
