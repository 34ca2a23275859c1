#pragma once

#include "dg/algebra.hpp"
#include "dg/tuple_basis.hpp"

namespace tatehh {

// A^{(x)n} with the cyclic rotation as a signed permutation. The rotation
// moves the last tensor factor to the front (Koszul sign past the others).
struct CyclicPowerAlgebra {
    DgAlgebra algebra;
    FpMat rotation;
    size_t power = 1;
};
CyclicPowerAlgebra cyclic_power(const DgAlgebra& a, size_t n, bool verify = true);

// The twisted tensor power: M^{(x)n} as a bimodule over A^{(x)n}. The right
// action is the ordinary factorwise one; the left action is precomposed with
// the rotation of the acting algebra, which is what makes the levelwise
// identification of the unwound cyclic bar object with Z(A^{(x)n}, -) hold.
// `twist` is the rotation of the module factors (same direction as the
// algebra rotation); it has order n and commutes with the differential.
struct TwistedPower {
    DgBimodule module;
    FpMat twist;
    size_t power = 1;
};
TwistedPower twisted_power(const DgBimodule& m, const DgAlgebra& a, size_t n, bool verify = true);

// signed rotate-last-to-front permutation on the tuple basis of `degrees`^n
FpMat rotation_matrix(PrimeField F, const std::vector<int>& degrees, size_t n);

} // namespace tatehh
