#include "permstat/thermo.hpp"

#include <cmath>
#include <stdexcept>

namespace permstat {

namespace {

// Exact state count C^N, divided by N! when corrected.
ExactRational state_count(unsigned long particles, unsigned long cells, bool corrected) {
  if (cells == 0) throw std::invalid_argument("cell count must be >= 1");
  ExactRational w(pow(ExactInt(cells), particles));
  if (corrected) w = w / ExactRational(factorial(particles));
  return w;
}

}  // namespace

double entropy(const GasSample& sample, bool corrected) {
  return ln_exact(state_count(sample.particles, sample.cells, corrected));
}

EntropyReport entropy_report(const GasSample& sample) {
  return EntropyReport{entropy(sample, false), entropy(sample, true)};
}

double mixing_entropy(const GasSample& a, const GasSample& b, bool corrected) {
  const unsigned long cells = a.cells + b.cells;
  ExactRational combined =
      a.species == b.species
          ? state_count(a.particles + b.particles, cells, corrected)
          : state_count(a.particles, cells, corrected) *
                state_count(b.particles, cells, corrected);
  ExactRational separate = state_count(a.particles, a.cells, corrected) *
                           state_count(b.particles, b.cells, corrected);
  // single log of one exact ratio, so cancellations happen exactly
  return ln_exact(combined / separate);
}

double extensivity_defect(const GasSample& sample, unsigned long scale, bool corrected) {
  if (scale == 0) throw std::invalid_argument("scale must be >= 1");
  ExactRational scaled = state_count(sample.particles * scale, sample.cells * scale, corrected);
  ExactRational replicated = pow(state_count(sample.particles, sample.cells, corrected), scale);
  return ln_exact(scaled / replicated);
}

double ehrenfest_trkal_correction(std::span<const unsigned long> molecule_counts,
                                  unsigned long atom_total) {
  ExactInt denom(1);
  for (unsigned long count : molecule_counts) denom = denom * factorial(count);
  return ln_exact(ExactRational(factorial(atom_total), denom));
}

std::vector<ExactRational> grand_canonical_limit(unsigned long particles,
                                                 std::span<const unsigned long> reservoir_sizes) {
  std::vector<ExactRational> out;
  out.reserve(reservoir_sizes.size());
  for (unsigned long reservoir : reservoir_sizes) {
    if (reservoir < particles) {
      throw std::invalid_argument("reservoir size " + std::to_string(reservoir) +
                                  " smaller than particle number " +
                                  std::to_string(particles));
    }
    ExactInt numerator = binomial(reservoir, particles) * factorial(particles);
    out.emplace_back(numerator, pow(ExactInt(reservoir), particles));
  }
  return out;
}

double ground_state_entropy(unsigned long particles, unsigned long ground_degeneracy) {
  if (ground_degeneracy == 0) throw std::invalid_argument("degeneracy must be >= 1");
  return static_cast<double>(particles) * std::log(static_cast<double>(ground_degeneracy));
}

}  // namespace permstat
