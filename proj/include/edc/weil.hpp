#pragma once

#include <optional>

#include "edc/representation.hpp"

namespace edc {

/// Weil representation on functions on F_p^k, split into even and odd
/// function subspaces.  `full`, `even` and `odd` are certified
/// representations of `group`; when the central -I acts trivially on a part,
/// that part is re-certified on the central quotient and stored in the
/// corresponding *_on_quotient member.
struct WeilSplit {
    const MatrixGroup* group = nullptr;
    const MatrixGroup* quotient = nullptr;

    Representation full;
    Representation even;
    Representation odd;
    std::optional<Representation> even_on_quotient;
    std::optional<Representation> odd_on_quotient;

    /// Columns are the even / odd basis functions inside the full space.
    CycMat even_basis;
    CycMat odd_basis;

    /// rho(-I) = central_scalar * parity, where parity is F(x) -> F(-x).
    Rat central_scalar;
    /// Certified Fourier normalization, e.g. "gamma=-1/g, quadratic exponent x^2".
    std::string normalization;
};

/// Weil representation of Sp4(F3) on the 9-dimensional space of functions on
/// F3^2 (conductor 3): quadratic multipliers f(x) -> zeta^(x^T b x) f(x),
/// Levi actions f(x) -> legendre(det g) f(g^T x), and the Gauss-normalized
/// Fourier operator for the Weyl element.  Certified by graph closure; the
/// even part descends to PSp4(F3).
WeilSplit weil_sp4_f3(const MatrixGroup& sp4, const MatrixGroup& psp4);

/// One-variable Weil representation of SL2(F_p), p in {3, 11}, conductor p.
/// The Fourier normalization is searched over the sign/scale candidates until
/// graph closure succeeds and -I acts trivially on the odd part; the odd part
/// is then re-certified on PSL2(F_p).
WeilSplit weil_sl2(unsigned p, const MatrixGroup& sl2, const MatrixGroup& psl2);

} // namespace edc
