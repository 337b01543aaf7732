#include "permstat/ensembles.hpp"

#include <stdexcept>

namespace permstat {

OccupationDistribution distribution(unsigned long cells, unsigned long particles,
                                    StatisticsKind kind) {
  std::vector<OccupationVector> vectors = enumerate_occupations(cells, particles, kind);
  ExactRational total(0);
  std::vector<ExactRational> weights;
  weights.reserve(vectors.size());
  for (const OccupationVector& occ : vectors) {
    weights.push_back(arrangement_weight(occ, kind));
    total = total + weights.back();
  }
  if (total.sign() == 0) {
    throw std::domain_error("empty support: no arrangement has nonzero weight (" +
                            to_string(kind) + ", C=" + std::to_string(cells) +
                            ", N=" + std::to_string(particles) + ")");
  }
  OccupationDistribution dist;
  dist.kind = kind;
  dist.entries.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    dist.entries.emplace_back(std::move(vectors[i]), weights[i] / total);
  }
  return dist;
}

ExactRational coincidence_probability(unsigned long cells, unsigned long particles,
                                      StatisticsKind kind) {
  OccupationDistribution dist = distribution(cells, particles, kind);
  ExactRational p(0);
  for (const auto& [occ, prob] : dist.entries) {
    if (occ.max_count() >= 2) p = p + prob;
  }
  return p;
}

HilbertDimensions hilbert_dimensions(unsigned long cells, unsigned long particles) {
  return HilbertDimensions{
      count_arrangements(cells, particles, StatisticsKind::Distinguishable),
      count_arrangements(cells, particles, StatisticsKind::BoseEinstein),
      count_arrangements(cells, particles, StatisticsKind::FermiDirac),
  };
}

StableLabelReduction stable_label_reduction(const LabeledSystem& system) {
  if (system.base_cells == 0) throw std::invalid_argument("base cell count must be >= 1");
  if (system.labels == 0) throw std::invalid_argument("label count must be >= 1");
  const unsigned long composite = system.base_cells * system.labels;
  const unsigned long n = system.particles();
  return StableLabelReduction{
      composite,
      count_arrangements(composite, n, StatisticsKind::BoseEinstein),
      // one particle per label value, each free to pick a phase
      pow(ExactInt(system.base_cells), n),
  };
}

}  // namespace permstat
