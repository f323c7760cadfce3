// Builds the point blow-up of P^3, forges three homotopy-equivalent tuples from it
// and prints the certificate verdict for each.
#include <iostream>

#include "spin6/spin6.hpp"

int main() {
    using namespace spin6;
    const ThreefoldPackage seed = blow_up_point(projective_space_package());
    const LinearForm omega{48, 96};

    const GenericityReport generic = genericity_check(seed.tuple(), omega);
    std::cout << "seed " << seed.name() << ", omega " << omega.str() << " generic: " << (generic.accepted() ? "yes" : "no") << '\n';

    for (int r : {49, 97, 145}) {
        const WallTuple m = forge_family(seed.tuple(), omega, r);
        const Certificate cert = certify_non_kaehler(m, seed.betti(), {}, seed.name(), Integer(r));
        std::cout << "r = " << r << "  p1 = " << m.p1().str()
                  << "  same homotopy type: " << (homotopy_equivalent_identified(m, seed.tuple()) ? "yes" : "no")
                  << "  verdict: " << io::verdict_name(cert) << '\n';
    }

    std::cout << "\ncontrol: the seed itself\n";
    const Certificate control = certify_non_kaehler(seed.tuple(), seed.betti(), {}, seed.name());
    for (const auto& c : control.cases) std::cout << "  " << to_string(c.kind) << ": " << to_string(c.status) << '\n';
    std::cout << "  verdict: " << io::verdict_name(control) << '\n';
}
