#include "permstat/occupancy.hpp"

#include <algorithm>
#include <stdexcept>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

constexpr unsigned long kEnumerationGuard = 10'000'000;
constexpr unsigned long kSearchNodeGuard = 10'000'000;

void require_cells(unsigned long cells) {
  if (cells == 0) {
    throw std::invalid_argument("cell count must be >= 1");
  }
}

constexpr unsigned long kLevelGuard = 10'000;

void require_levels(const LevelSpec& spec) {
  if (spec.levels.empty()) {
    throw std::invalid_argument("level spec must contain at least one level");
  }
  if (spec.levels.size() > kLevelGuard) {
    throw SizeError("level spec too large: " + std::to_string(spec.levels.size()) +
                        " levels exceed the guard of " + std::to_string(kLevelGuard),
                    std::to_string(spec.levels.size()));
  }
  for (const Level& level : spec.levels) {
    if (level.degeneracy == 0) {
      throw std::invalid_argument("level degeneracy must be >= 1");
    }
  }
}

}  // namespace

std::string to_string(StatisticsKind kind) {
  switch (kind) {
    case StatisticsKind::Distinguishable: return "distinguishable";
    case StatisticsKind::ReducedClassical: return "reduced-classical";
    case StatisticsKind::BoseEinstein: return "bose-einstein";
    case StatisticsKind::FermiDirac: return "fermi-dirac";
  }
  throw std::logic_error("unreachable");
}

StatisticsKind parse_statistics_kind(const std::string& text) {
  if (text == "distinguishable" || text == "mb") return StatisticsKind::Distinguishable;
  if (text == "reduced-classical" || text == "reduced" || text == "rc") {
    return StatisticsKind::ReducedClassical;
  }
  if (text == "bose-einstein" || text == "be") return StatisticsKind::BoseEinstein;
  if (text == "fermi-dirac" || text == "fd") return StatisticsKind::FermiDirac;
  throw std::invalid_argument("unknown statistics kind: '" + text + "'");
}

unsigned long OccupationVector::total() const {
  unsigned long sum = 0;
  for (unsigned long n : counts) sum += n;
  return sum;
}

unsigned long OccupationVector::max_count() const {
  unsigned long m = 0;
  for (unsigned long n : counts) m = std::max(m, n);
  return m;
}

bool OccupationVector::exclusive() const { return max_count() <= 1; }

std::string OccupationVector::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(counts[i]);
  }
  out += "]";
  return out;
}

CellUnit::CellUnit(ExactRational tau) : tau_(std::move(tau)) {
  if (tau_.sign() <= 0) {
    throw std::domain_error("cell unit tau must be positive, got " + tau_.str());
  }
}

std::vector<OccupationVector> enumerate_occupations(unsigned long cells,
                                                    unsigned long particles,
                                                    StatisticsKind kind) {
  require_cells(cells);
  const unsigned long cap = kind == StatisticsKind::FermiDirac ? 1 : particles;

  ExactInt expected = count_arrangements(
      cells, particles,
      cap == 1 ? StatisticsKind::FermiDirac : StatisticsKind::BoseEinstein);
  if (expected > ExactInt(kEnumerationGuard) ||
      expected * ExactInt(cells) > ExactInt(10 * kEnumerationGuard)) {
    throw SizeError("occupation enumeration too large: " + expected.str() +
                        " vectors over " + std::to_string(cells) + " cells",
                    expected.str());
  }

  std::vector<OccupationVector> out;
  if (cap * cells < particles) return out;  // exclusion leaves nothing

  // Iterate capped compositions in descending lexicographic order: start
  // with the particles packed leftmost; each step decrements the rightmost
  // decrementable cell and repacks everything to its right.
  std::vector<unsigned long> cur(cells, 0);
  auto pack = [&](std::size_t from, unsigned long amount) {
    for (std::size_t i = from; i < cells; ++i) {
      cur[i] = std::min(amount, cap);
      amount -= cur[i];
    }
    return amount == 0;
  };
  pack(0, particles);
  while (true) {
    out.push_back(OccupationVector{cur});
    std::size_t j = cells - 1;
    bool stepped = false;
    unsigned long moved = 0;  // particles strictly right of j
    while (j-- > 0) {
      moved += cur[j + 1];
      if (cur[j] == 0) continue;
      if (moved + 1 > cap * (cells - 1 - j)) continue;  // no room to the right
      cur[j] -= 1;
      pack(j + 1, moved + 1);
      stepped = true;
      break;
    }
    if (!stepped) break;
  }
  return out;
}

ExactInt count_arrangements(unsigned long cells, unsigned long particles,
                            StatisticsKind kind) {
  require_cells(cells);
  switch (kind) {
    case StatisticsKind::Distinguishable:
      return pow(ExactInt(cells), particles);
    case StatisticsKind::ReducedClassical:
    case StatisticsKind::BoseEinstein:
      return binomial(particles + cells - 1, particles);
    case StatisticsKind::FermiDirac:
      return binomial(cells, particles);
  }
  throw std::logic_error("unreachable");
}

ExactRational arrangement_weight(const OccupationVector& occ, StatisticsKind kind) {
  switch (kind) {
    case StatisticsKind::Distinguishable:
      return ExactRational(multinomial(occ.counts));
    case StatisticsKind::ReducedClassical: {
      ExactInt denom = 1;
      for (unsigned long n : occ.counts) denom = denom * factorial(n);
      return ExactRational(ExactInt(1), denom);
    }
    case StatisticsKind::BoseEinstein:
      return ExactRational(1);
    case StatisticsKind::FermiDirac:
      return ExactRational(occ.exclusive() ? 1 : 0);
  }
  throw std::logic_error("unreachable");
}

ExactRational reduced_volume(unsigned long cells, unsigned long particles,
                             const CellUnit& unit) {
  require_cells(cells);
  ExactRational region = ExactRational(cells) * unit.tau();
  return pow(region, particles) / ExactRational(factorial(particles));
}

namespace {

// Shared constrained-macrostate search. Visits populations in descending
// lexicographic order and hands each complete one to the sink.
template <typename Sink>
void search_macrostates(const LevelSpec& spec, const MacrostateConstraint& constraint,
                        Sink&& sink) {
  require_levels(spec);
  const std::size_t j = spec.levels.size();

  // Suffix min/max level energies bound what the remaining particles can
  // still contribute.
  std::vector<ExactRational> min_energy(j), max_energy(j);
  for (std::size_t i = j; i-- > 0;) {
    min_energy[i] = spec.levels[i].energy;
    max_energy[i] = spec.levels[i].energy;
    if (i + 1 < j) {
      min_energy[i] = std::min(min_energy[i], min_energy[i + 1]);
      max_energy[i] = std::max(max_energy[i], max_energy[i + 1]);
    }
  }

  unsigned long nodes = 0;
  std::vector<unsigned long> populations;
  populations.reserve(j);

  auto feasible = [&](std::size_t idx, unsigned long n_rem, const ExactRational& e_rem) {
    if (n_rem == 0) return e_rem.sign() == 0;
    ExactRational n(n_rem);
    return n * min_energy[idx] <= e_rem && e_rem <= n * max_energy[idx];
  };

  auto walk = [&](auto&& self, std::size_t idx, unsigned long n_rem,
                  const ExactRational& e_rem) -> void {
    if (++nodes > kSearchNodeGuard) {
      throw SizeError("macrostate search exceeded " + std::to_string(kSearchNodeGuard) +
                          " nodes",
                      std::to_string(nodes));
    }
    if (idx == j) {
      if (n_rem == 0 && e_rem.sign() == 0) sink(populations);
      return;
    }
    if (!feasible(idx, n_rem, e_rem)) return;
    for (unsigned long v = n_rem + 1; v-- > 0;) {
      populations.push_back(v);
      self(self, idx + 1, n_rem - v, e_rem - ExactRational(v) * spec.levels[idx].energy);
      populations.pop_back();
    }
  };
  walk(walk, 0, constraint.n_total, constraint.e_total);
}

}  // namespace

std::vector<std::vector<unsigned long>> enumerate_macrostates(
    const LevelSpec& spec, const MacrostateConstraint& constraint) {
  std::vector<std::vector<unsigned long>> out;
  search_macrostates(spec, constraint,
                     [&](const std::vector<unsigned long>& pops) { out.push_back(pops); });
  return out;
}

ExactInt count_arrangements(const LevelSpec& spec, const MacrostateConstraint& constraint,
                            StatisticsKind kind) {
  ExactInt total = 0;
  search_macrostates(spec, constraint, [&](const std::vector<unsigned long>& pops) {
    switch (kind) {
      case StatisticsKind::Distinguishable: {
        ExactInt term = multinomial(pops);
        for (std::size_t k = 0; k < pops.size(); ++k) {
          term = term * pow(ExactInt(spec.levels[k].degeneracy), pops[k]);
        }
        total = total + term;
        break;
      }
      case StatisticsKind::ReducedClassical:
      case StatisticsKind::BoseEinstein: {
        ExactInt term = 1;
        for (std::size_t k = 0; k < pops.size(); ++k) {
          term = term * binomial(pops[k] + spec.levels[k].degeneracy - 1, pops[k]);
        }
        total = total + term;
        break;
      }
      case StatisticsKind::FermiDirac: {
        ExactInt term = 1;
        for (std::size_t k = 0; k < pops.size(); ++k) {
          term = term * binomial(spec.levels[k].degeneracy, pops[k]);
        }
        total = total + term;
        break;
      }
    }
  });
  return total;
}

ExactRational reduced_volume_constrained(const LevelSpec& spec,
                                         const MacrostateConstraint& constraint,
                                         const CellUnit& unit) {
  ExactRational total = 0;
  search_macrostates(spec, constraint, [&](const std::vector<unsigned long>& pops) {
    ExactRational term = 1;
    for (std::size_t k = 0; k < pops.size(); ++k) {
      ExactRational region = ExactRational(spec.levels[k].degeneracy) * unit.tau();
      term = term * pow(region, pops[k]) / ExactRational(factorial(pops[k]));
    }
    total = total + term;
  });
  return total;
}

ExactRational limit_ratio(unsigned long cells, unsigned long particles) {
  require_cells(cells);
  ExactInt numerator = binomial(particles + cells - 1, particles) * factorial(particles);
  return ExactRational(numerator, pow(ExactInt(cells), particles));
}

}  // namespace permstat
