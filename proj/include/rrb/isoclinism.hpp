#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrb/brace.hpp"
#include "rrb/relrb.hpp"

namespace rrb {

/// ω(h̄1, h̄2) = [h1, h2] and ω^φ(h̄1, h̄2) = φ_{R(h1)}(h2) h2^-1 on
/// H/Z^φ_R(H), tabulated row-major over coset indices with values as
/// indices of H^φ (the commutator structure's own numbering).
struct OmegaMaps {
  std::size_t cosets = 0;
  std::vector<Elem> omega;
  std::vector<Elem> omega_phi;
};

/// Number of pairs (h1, h2) in H × H whose ω or ω^φ value differs from the
/// value tabulated for their cosets.
std::size_t omega_violations(const RelRB& rrb);
/// Throws WellDefinednessViolation on the first representative-dependent pair.
OmegaMaps omega_maps(const RelRB& rrb);

/// Everything an isoclinism refers to, computed once per structure.
struct IsoclinismData {
  RRBQuotient center_quotient;  // (H, G, φ, R) / Z(H, G, φ, R)
  RRBSubStructure commutator;   // (H^φ, G, φ|, R|)
  OmegaMaps omega;
};
IsoclinismData isoclinism_data(const RelRB& rrb);

/// (ψ1, η1) on the center quotients, (ψ2, η2) on the commutators, as index
/// arrays over the numberings of IsoclinismData.
struct IsoclinismWitness {
  std::vector<Elem> psi1;
  std::vector<Elem> eta1;
  std::vector<Elem> psi2;
  std::vector<Elem> eta2;
};

struct IsoclinismFailure {
  std::string what;
  Elem a = kNoElem;
  Elem b = kNoElem;
};

/// nullopt when w is an isoclinism a -> b.
std::optional<IsoclinismFailure> check_isoclinism(const RelRB& a, const RelRB& b,
                                                  const IsoclinismWitness& w);
IsoclinismWitness identity_witness(const RelRB& rrb);

/// First witness in canonical order: ψ1 over isomorphisms of the center
/// quotients, then η1, then ψ2 restricted by the ω squares, then η2.
/// Throws SearchSpaceTooLarge when |H|, |K|, |G| or |L| exceed the cap.
std::optional<IsoclinismWitness> rrb_isoclinic(const RelRB& a, const RelRB& b,
                                               const Limits& limits = {});

struct BridgeReport {
  bool ok = false;
  /// First failed stage, empty when ok.
  std::string stage;
  std::string detail;
  Elem a = kNoElem;
  Elem b = kNoElem;
  /// Isoclinism of the image restrictions I(a), I(b) induced by the witness.
  /// Not part of `ok`: when η1 or η2 fails to carry Im R onto Im S there is
  /// none, and `restricted_detail` says why.
  std::optional<IsoclinismWitness> restricted;
  std::string restricted_detail;
  /// Isoclinism of the induced braces, on the numberings of
  /// brace_quotient(annihilator) and sub_brace(brace_commutator).
  std::optional<BraceIsoclinism> brace;
};

/// Derives from w the isoclinism of the induced braces and checks its square,
/// the induced group isoclinism of H and K, and the invariants
/// Im R/(Im R ∩ Ker φ), H^{R,φ} and H/Z^{φ|}_{R|}. The induced isoclinism of
/// the image restrictions is attempted and reported separately.
/// Throws InvalidWitness when w does not have the shape of a witness for
/// (a, b); a well-formed witness that fails any check yields ok = false.
BridgeReport check_bridge_theorem(const RelRB& a, const RelRB& b, const IsoclinismWitness& w);

}  // namespace rrb
