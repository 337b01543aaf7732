#pragma once

#include <utility>
#include <vector>

#include "permstat/occupancy.hpp"

namespace permstat {

/// Normalized probability distribution over occupation vectors. Entries
/// are in canonical (descending lexicographic) order and the exact
/// probabilities sum to 1.
struct OccupationDistribution {
  StatisticsKind kind;
  std::vector<std::pair<OccupationVector, ExactRational>> entries;
};

/// Probability of each occupation vector = its weight / total weight.
/// Throws std::domain_error when every weight is zero (FermiDirac with
/// N > C), since there is no support to normalize over.
OccupationDistribution distribution(unsigned long cells, unsigned long particles,
                                    StatisticsKind kind);

/// Total probability of the occupation vectors with some n_k >= 2.
ExactRational coincidence_probability(unsigned long cells, unsigned long particles,
                                      StatisticsKind kind);

struct HilbertDimensions {
  ExactInt full;           // C^N product states
  ExactInt symmetric;      // totally symmetric subspace
  ExactInt antisymmetric;  // totally antisymmetric subspace
};

/// Dimension counts for N particles with a C-dimensional 1-particle space.
/// full = C^N, symmetric = (N+C-1)!/(N!(C-1)!), antisymmetric = C choose N.
/// For N >= 3 symmetric + antisymmetric < full; the deficit is the
/// mixed-symmetry dimension, reported only through these numbers.
HilbertDimensions hilbert_dimensions(unsigned long cells, unsigned long particles);

/// N = labels particles, each carrying one of `labels` distinct properties
/// stable in time, each particle ranging over `base_cells` phases.
struct LabeledSystem {
  unsigned long base_cells = 1;
  unsigned long labels = 1;

  unsigned long particles() const { return labels; }
};

struct StableLabelReduction {
  unsigned long composite_cells;  // base_cells * labels
  ExactInt reduced_count;         // occupation-vector count over the composite cells
  ExactInt accessible_count;      // vectors with pairwise-distinct label values
};

/// Folding the stable labels into the phase makes the particles formally
/// indistinguishable over base_cells*labels composite cells; restricting
/// to the accessible region (all label values distinct) gives back the
/// unreduced count base_cells^N.
StableLabelReduction stable_label_reduction(const LabeledSystem& system);

}  // namespace permstat
