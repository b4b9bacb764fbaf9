#pragma once

#include "aomoto/chamber_complex.hpp"

namespace aomoto {

/// Strip between two consecutive parallel lines in flag order.  U1 is the
/// unbounded chamber of the strip met by the flag line, U2 the opposite one.
struct Band {
  size_t wall1 = 0;  // flag index i: walls are H_{i+1} and H_{i+2}
  size_t wall2 = 0;
  size_t u1 = 0;  // chamber index, in ch1
  size_t u2 = 0;  // chamber index, in ch2
  size_t length = 0;
};

/// All bands in wall order along the flag line.
std::vector<Band> bands(const FlaggedArrangement& fa);

/// Resonance filter and the reduced differential rows.
struct RBData {
  std::vector<Band> all;
  std::vector<size_t> resonant;  // indices into `all`
  ModMatrix matrix;              // |resonant| x |ch2|, rows = -nabla1(U1)
};

RBData resonant_bands(const FlaggedArrangement& fa, const OneForm& eta);

struct KernelRB {
  ModuleInvariants invariants;
  ModMatrix generators;  // Howell form, columns over rb.resonant
};

KernelRB kernel_rb(const FlaggedArrangement& fa, const OneForm& eta);

/// [B] -> e_i - e_{i+1} on the wall pair, extended linearly over a resonant
/// band coefficient vector.
OneForm psi(const FlaggedArrangement& fa, const RBData& rb,
            const std::vector<Residue>& v, Residue m);

enum class RBStatus { Isomorphic, InjectiveOnly };

struct RBResult {
  ModuleInvariants invariants;
  RBStatus status = RBStatus::Isomorphic;
};

/// Fast H^1 path.  Requires alpha = sum of the coefficients to be a unit
/// (else NonUnitAlpha).  Isomorphic when the modulus is prime or every band
/// is resonant; the invariants then equal H^1 and this is asserted against
/// the direct computation.  Otherwise the kernel only embeds into H^1 and the
/// status is InjectiveOnly.
RBResult h1_via_rb(const FlaggedArrangement& fa, const OneForm& eta);

}  // namespace aomoto
