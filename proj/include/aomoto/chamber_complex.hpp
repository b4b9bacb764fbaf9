#pragma once

#include "aomoto/chambers.hpp"
#include "aomoto/osalgebra.hpp"

namespace aomoto {

/// deg(C_i, D) over rows ch1 (flag order) and columns ch2.
struct DegreeTable {
  std::vector<std::vector<int8_t>> deg;
};

DegreeTable degree_table(const FlaggedArrangement& fa);

/// Image of the base chamber: coefficient on C_i is the prefix sum
/// a_1 + ... + a_i.
std::vector<Residue> nabla0(const FlaggedArrangement& fa, const OneForm& eta);

/// Degree-1 differential as a |ch1| x |ch2| matrix:
/// entry (C, D) = deg(C, D) * sum of a_i over Sep(C, D).
ModMatrix nabla1(const FlaggedArrangement& fa, const OneForm& eta);

/// Ker(nabla1) / (R * nabla0).
ModuleInvariants h1_chambers(const FlaggedArrangement& fa, const OneForm& eta);

/// Degree-1 leg of the cochain isomorphism: [C_i] -> e_i - e_{i+1} for i < n,
/// [C_n] -> e_n, extended linearly over a ch1 coefficient vector.
OneForm phi(const FlaggedArrangement& fa, const std::vector<Residue>& c,
            Residue m);

}  // namespace aomoto
