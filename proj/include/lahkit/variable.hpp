#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "lahkit/errors.hpp"

namespace lahkit {

// The registered indeterminate alphabet.  Every polynomial in the library
// lives over this fixed set of families; the enum order, refined by the
// numeric indices, is the deterministic total order used everywhere
// (serialization, monomial comparison, witness selection):
//
//   phi_0 < phi_1 < ... < phi_0^[1] < phi_0^[2] < ... < x_1 < x_2 < ...
//        < y < c_1 < c_2 < ... < t < alpha_0 < alpha_1 < ...
enum class VarFamily : std::uint8_t {
    Phi = 0,   // phi_i,       weight of a vertex with i children
    PhiL = 1,  // phi_i^[L],   refined by the vertex level L >= 1
    X = 2,     // x_i,         symmetric-function variables, i >= 1
    Y = 3,     // y,           row-generating variable
    C = 4,     // c_L,         per-level factors, L >= 1
    T = 5,     // t,           power-series variable
    Alpha = 6, // alpha_i,     branched-S-fraction coefficients, i >= 0
};

struct Var {
    VarFamily family = VarFamily::Y;
    std::int32_t index = 0; // i for phi/x/c/alpha; unused for y, t
    std::int32_t level = 0; // L for phi_i^[L]; unused otherwise

    friend auto operator<=>(const Var&, const Var&) = default;

    std::string name() const;
    // Display form mirroring the usual subscript style: phi_3, phi_3^[2], x_1.
    std::string pretty() const;

    static Var phi(int i) { return {VarFamily::Phi, i, 0}; }
    static Var phiL(int i, int L) { return {VarFamily::PhiL, i, L}; }
    static Var x(int i) { return {VarFamily::X, i, 0}; }
    static Var y() { return {VarFamily::Y, 0, 0}; }
    static Var c(int L) { return {VarFamily::C, L, 0}; }
    static Var t() { return {VarFamily::T, 0, 0}; }
    static Var alpha(int i) { return {VarFamily::Alpha, i, 0}; }
};

// Inverse of Var::name(); throws unknown_name on anything else.
Var parse_var(const std::string& name);

} // namespace lahkit
