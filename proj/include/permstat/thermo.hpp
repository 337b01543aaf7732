#pragma once

#include <span>
#include <string>
#include <vector>

#include "permstat/exact.hpp"

namespace permstat {

/// N particles spread over C 1-particle cells (C plays the role of the
/// volume). Samples with equal species tags are mutually
/// indistinguishable when combined; distinct tags never are.
struct GasSample {
  unsigned long particles = 0;
  unsigned long cells = 1;
  std::string species = "gas";
};

/// Entropies in units k = 1, tau = 1.
struct EntropyReport {
  double uncorrected;  // ln C^N
  double corrected;    // ln (C^N / N!)
};

/// ln C^N, or ln(C^N/N!) with the permutation correction applied.
double entropy(const GasSample& sample, bool corrected);
EntropyReport entropy_report(const GasSample& sample);

/// S(combined) - S(a) - S(b) where the combined system occupies the
/// C_a + C_b cells. Samples of the same species mix into a single
/// (N_a+N_b)-particle sample; distinct species each spread over the
/// enlarged cell set independently.
double mixing_entropy(const GasSample& a, const GasSample& b, bool corrected);

/// S(m N, m C) - m S(N, C): the failure of entropy to scale with system
/// size. Zero for m = 1; without the correction it grows like N ln m.
double extensivity_defect(const GasSample& sample, unsigned long scale, bool corrected);

/// ln( atom_total! / prod(molecule_counts[i]!) ) — the combinatorial
/// entropy contribution of partitioning a conserved atom total into
/// molecule species; consistency of the counts is not checked.
double ehrenfest_trkal_correction(std::span<const unsigned long> molecule_counts,
                                  unsigned long atom_total);

/// For each reservoir size N*: the exact ratio binomial(N*, N) * N! / N*^N,
/// which climbs to 1 from below as N* grows. Requires every N* >= N.
std::vector<ExactRational> grand_canonical_limit(unsigned long particles,
                                                 std::span<const unsigned long> reservoir_sizes);

/// N ln C0 — the residual entropy of N particles in a C0-fold degenerate
/// ground state (k = 1).
double ground_state_entropy(unsigned long particles, unsigned long ground_degeneracy);

}  // namespace permstat
