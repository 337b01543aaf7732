#pragma once

#include <compare>
#include <string>
#include <vector>

#include "permstat/exact.hpp"

namespace permstat {

/// Weighting rule for microstate arrangements.
///   Distinguishable   — each particle-to-cell assignment equiprobable
///   ReducedClassical  — occupation vectors weighted 1/prod(n_k!)
///   BoseEinstein      — each occupation vector equiprobable
///   FermiDirac        — occupation vectors with all n_k <= 1 equiprobable
enum class StatisticsKind { Distinguishable, ReducedClassical, BoseEinstein, FermiDirac };

std::string to_string(StatisticsKind kind);

/// Accepts the canonical names plus the usual short forms
/// (mb, reduced, rc, be, fd). Throws std::invalid_argument otherwise.
StatisticsKind parse_statistics_kind(const std::string& text);

/// Occupation numbers n_1..n_C of a fixed set of cells. A complete
/// microstate descriptor for indistinguishable particles.
struct OccupationVector {
  std::vector<unsigned long> counts;

  unsigned long total() const;
  unsigned long max_count() const;
  bool exclusive() const;  // every n_k <= 1

  std::string str() const;  // "[2,0,0]"

  auto operator<=>(const OccupationVector&) const = default;
};

/// Elementary 1-particle cell volume tau > 0.
class CellUnit {
 public:
  CellUnit() : tau_(1) {}
  explicit CellUnit(ExactRational tau);

  const ExactRational& tau() const { return tau_; }

 private:
  ExactRational tau_;
};

/// One energy level: C_k cells, all at energy E_k.
struct Level {
  ExactRational energy;
  unsigned long degeneracy = 1;
};

/// Levels of a constrained macrostate problem. Degeneracies must be >= 1;
/// energies need not be distinct.
struct LevelSpec {
  std::vector<Level> levels;
};

/// Conserved totals: sum N_k = n_total and sum N_k E_k = e_total
/// (exact equality).
struct MacrostateConstraint {
  unsigned long n_total = 0;
  ExactRational e_total;
};

/// All occupation vectors over `cells` cells with total `particles`, in
/// lexicographically descending order. FermiDirac keeps only vectors with
/// every n_k <= 1; all other kinds return the full list.
/// Throws SizeError when the result would exceed the enumeration guard.
std::vector<OccupationVector> enumerate_occupations(unsigned long cells,
                                                    unsigned long particles,
                                                    StatisticsKind kind);

/// Count of arrangements in a single region of C cells:
///   Distinguishable                 C^N
///   BoseEinstein, ReducedClassical  (N+C-1)! / (N!(C-1)!)
///   FermiDirac                      C choose N (zero when N > C)
ExactInt count_arrangements(unsigned long cells, unsigned long particles,
                            StatisticsKind kind);

/// Unnormalized statistical weight of one occupation vector:
///   Distinguishable   N!/prod(n_k!)
///   ReducedClassical  1/prod(n_k!)
///   BoseEinstein      1
///   FermiDirac        1 if all n_k <= 1 else 0
ExactRational arrangement_weight(const OccupationVector& occ, StatisticsKind kind);

/// (C tau)^N / N! — the volume of the N-particle phase space after
/// identifying points related by a permutation.
ExactRational reduced_volume(unsigned long cells, unsigned long particles,
                             const CellUnit& unit = CellUnit());

/// Level populations (N_1..N_j) satisfying both constraints exactly,
/// in lexicographically descending order. Bounded DFS with
/// remaining-energy pruning; throws SizeError if the search exceeds the
/// node guard.
std::vector<std::vector<unsigned long>> enumerate_macrostates(
    const LevelSpec& spec, const MacrostateConstraint& constraint);

/// Total arrangements summed over all macrostates:
///   Distinguishable                 sum  N_tot!/prod(N_k!) * prod C_k^N_k
///   BoseEinstein, ReducedClassical  sum  prod (N_k+C_k-1)!/(N_k!(C_k-1)!)
///   FermiDirac                      sum  prod (C_k choose N_k)
ExactInt count_arrangements(const LevelSpec& spec,
                            const MacrostateConstraint& constraint,
                            StatisticsKind kind);

/// sum over macrostates of prod (C_k tau)^N_k / N_k!; equals the
/// distinguishable count times tau^N_tot / N_tot! exactly.
ExactRational reduced_volume_constrained(const LevelSpec& spec,
                                         const MacrostateConstraint& constraint,
                                         const CellUnit& unit = CellUnit());

/// Exact ratio of the occupation-vector count to C^N/N!, i.e.
/// (N+C-1)!/(N!(C-1)!) * N! / C^N = prod_{i=1}^{N-1} (1 + i/C).
/// Tends to 1 from above as C grows.
ExactRational limit_ratio(unsigned long cells, unsigned long particles);

}  // namespace permstat
