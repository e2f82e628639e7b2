#include "asai/local_zeta.hpp"

namespace asai {

std::string extension_name(ExtensionType t) {
    switch (t) {
        case ExtensionType::Split: return "split";
        case ExtensionType::Inert: return "inert";
        case ExtensionType::Ramified: return "ramified";
    }
    return "?";
}

LocalFieldDatum LocalFieldDatum::make(long qK, ExtensionType t) {
    if (qK < 2) domain_error("residue field size must be at least 2");
    return LocalFieldDatum{qK, t};
}

Rational siegel_phi_r(long q, int r, int chi_conductor_exponent) {
    if (r < 1) domain_error("Phi_r needs r >= 1");
    if (chi_conductor_exponent > r) return 0;
    return Rational(q + 1) * pow(Rational(q), r - 1);
}

}  // namespace asai
