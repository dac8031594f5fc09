#pragma once

#include <string>
#include <vector>

#include "orbigeo/rational.hpp"

namespace orbigeo {

enum class AdeFamily { A, D, E };

// A_k (k >= 1), D_k (k >= 4), E_6/E_7/E_8.
struct AdeType {
    AdeFamily family = AdeFamily::A;
    long long index = 1;

    static AdeType a(long long k);
    static AdeType d(long long k);
    static AdeType e(long long k);
    // spelling used by the DSL and CLI: "A1", "D4", "E7", ...
    static AdeType parse(const std::string& text);

    std::string name() const;

    // local branches of the curve singularity, which is also the number of
    // multiplicity slots beta() expects:
    //   A_{2n} -> 1, A_{2n-1} -> 2 (A_1 included), D_k -> 3, E_7 -> 2,
    //   E_6 / E_8 -> 1 (irreducible; beta rejects them anyway)
    int branch_count() const;

    friend bool operator==(const AdeType& x, const AdeType& y) {
        return x.family == y.family && x.index == y.index;
    }
    friend bool operator<(const AdeType& x, const AdeType& y) {
        if (x.family != y.family) return x.family < y.family;
        return x.index < y.index;
    }
};

// True for the D_{2n+3} rows (D_5, D_7, ...), whose published indexing is
// inconsistent between table and diagram; callers surface a warning when
// this row is exercised.
bool uses_odd_d_row(const AdeType& t);
std::string odd_d_row_warning(const AdeType& t, const std::string& point_id);

// Order of the local isotropy group at an ADE point of the boundary divisor,
// given the orbifold multiplicities of the local branches:
//   A_1        m_i m_j
//   A_{2n}     (2/(2n+1)) (1/m_i + 1/(2n+1) - 1/2)^{-2}
//   A_{2n-1}   (4/n) (1/m_i + 1/m_j + 1/n - 1)^{-2},          n >= 2
//   D_{2n+2}   (4/n) (1/m_i + 1/m_j + 1/(n m_k) - 1)^{-2}
//   D_{2n+3}   2(2n+1) m_i^2,                                  n >= 1
//   E_7        96
// Slot order for D types is (curved, curved, straight): the straight branch
// carries m_k in the even rows and m_i in the odd rows; the odd rows require
// the two curved slots to equal 2, and E_7 requires both slots equal 2.
// Throws non_klt_error when a reciprocal-square bracket is not positive and
// unsupported_singularity_error for E_6 / E_8.
Rational beta(const AdeType& t, const std::vector<long long>& mults,
              const std::string& point_id = "");

// Per-point contribution of contracting one ADE configuration of
// (-2)-curves to the orbifold c_2:  -(k+1) + 1/|G| with
// |G| = k+1 (A_k), 4(k-2) (D_k), 24 / 48 / 120 (E_6 / E_7 / E_8).
Rational megyesi_correction(const AdeType& t);

}  // namespace orbigeo
