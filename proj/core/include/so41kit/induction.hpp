#pragma once

#include <string>
#include <vector>

#include "so41kit/clifford.hpp"
#include "so41kit/cohomology.hpp"
#include "so41kit/module.hpp"
#include "so41kit/report.hpp"

namespace so41kit {

// One element (u (x) blade) (x) w[s][l] of the spanning set of the induced
// module A (x)_B W.  Words F2^c E3^k carry the blades 1, E3, E4, E3E4 at
// every row s; words F1^a F2^b E3^k carry the blades F3, F4, E3F3, F3F4 on
// the bottom row s = m0-1 only.
struct SpanningElement {
  UEnvElement u;
  CliffordElement blade;
  long s = 0;
  long l = 0;
  long k = 0;    // word degree in E3
  int group = 0; // 0..3: E3, E4, 1, E3E4; 4..7: F3, F4, E3F3, F3F4
  std::string label;
};

// all spanning-set elements with word degree k <= t, in a fixed order
std::vector<SpanningElement> spanning_set(const LambdaParam& lam, int t);

// the action map into X (x) S: (u (x) c) (x) w |-> u.(c.w)
XSVector phi(const ModuleTruncation& mt, const HDSpace& hd,
             const SpanningElement& e);

// spanning-set counts, image block structure, and the four full-rank
// certificates that make the truncated action map a bijection
Report verify_isomorphism(const ModuleTruncation& mt, const HDSpace& hd);

// the ladder identities between blade images of neighbouring w vectors,
// stated and checked through the action map
Report verify_phi_identities(const ModuleTruncation& mt, const HDSpace& hd);

// left multiplication by a random basis generator commutes with the action
// map wherever both sides stay inside the truncation
Report verify_phi_equivariance(const ModuleTruncation& mt, const HDSpace& hd);

// the five K-invariant generators commute with every x_Delta, and the
// Dirac bracket identities they satisfy hold exactly
Report verify_ak_inventory();

}  // namespace so41kit
