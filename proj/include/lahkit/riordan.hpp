#pragma once

#include "lahkit/polymatrix.hpp"
#include "lahkit/pseries.hpp"

namespace lahkit {

// Exponential Riordan array R[F,G]_{nk} = (n!/k!) [t^n] F(t) G(t)^k,
// truncated to size x size.  Requires F(0) = 1, G(0) = 0, invertible G'(0).
PolyMatrix riordan_array(const PSeries& f, const PSeries& g, int size);

// Production matrix of an exponential Riordan array from its A- and
// Z-sequences: p_{nk} = (n!/k!) (z_{n-k} + k a_{n-k+1}), with sequences
// zero-extended past their given length.
PolyMatrix riordan_production(const std::vector<MPoly>& a_seq,
                              const std::vector<MPoly>& z_seq, int size);

// Solve G' = A(G), F'/F = Z(G) with F(0) = 1, G(0) = 0 to the given order.
struct RiordanPair {
    PSeries f, g;
};
RiordanPair riordan_from_sequences(const PSeries& a, const PSeries& z, int order);

} // namespace lahkit
