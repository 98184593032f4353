#pragma once

#include "spherex/presentation.hpp"

#include <string>
#include <vector>

namespace spherex {

struct NamedIsoCheck {
    std::string name;
    IsoCheckResult result;
};

// <2,3,n> = <b,c | (bc)^2 = b^3 = c^n> against P = <x,y | x^2 = (xy)^3 = y^n, x^4>
// via x -> bc, y -> c^-1, inside BT, BO, BI (n = 3, 4, 5).
std::vector<NamedIsoCheck> binary_polyhedral_iso_checks();

// D_{4(2r+1)} and BD_{2(2r+1)} in both directions, and P'_24 and P_24 in both directions.
std::vector<NamedIsoCheck> small_case_iso_checks(long long r_max = 4);

// Psi : D_{2^(k+1) q} x C_l -> D_{n,q} = <psi_2q, tau phi_4m> and
// Phi : P'_{8 3^k} x C_l -> T_m = <psi_4, tau, eta phi_6m>, both cases of l mod 3.
std::vector<NamedIsoCheck> product_iso_checks(long long q_max = 9, long long l_max = 7, long long k_max = 3);

std::vector<NamedIsoCheck> all_iso_checks();

}  // namespace spherex
