#pragma once

// Undetermined-coefficients discovery of E_k = A_k + B_k * E_1, where E_k is
// the k-th factorial moment of the area and A_k, B_k are polynomials in n
// (a fixed) or in n and a.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "parking/exactalg.hpp"

namespace parking {

struct FitPoint {
  unsigned n = 0;
  unsigned a = 0;
  friend bool operator==(const FitPoint&, const FitPoint&) = default;
};

struct MomentAnsatz {
  unsigned k = 1;
  std::vector<std::string> symbols;  // {"n"} or {"n", "a"}
  unsigned deg_a = 0;                // total-degree bound for A_k
  unsigned deg_b = 0;                // total-degree bound for B_k

  // In n alone: deg A = floor(3k/2), deg B = floor(3(k-1)/2).
  // In n and a: total degrees 3k-1 and 3k-3.
  static MomentAnsatz standard(unsigned k, bool general_a);

  // Monomials of total degree <= d, ordered by total degree, then
  // lexicographically on the exponent vector.
  std::vector<SymPoly::Exponents> basis(unsigned d) const;
  std::size_t unknowns() const;
  MomentAnsatz escalated() const;
};

enum class FitStatus { verified, inconsistent, underdetermined };

const char* to_string(FitStatus s);

struct FitResult {
  unsigned k = 0;
  std::vector<std::string> symbols;
  unsigned deg_a = 0, deg_b = 0;
  SymPoly A, B;
  std::vector<FitPoint> samples_used;
  std::vector<FitPoint> holdout_verified;
  FitStatus status = FitStatus::inconsistent;
  std::optional<FitPoint> witness;          // failing point when inconsistent
  std::optional<std::size_t> free_column;   // when underdetermined
  unsigned escalations = 0;
};

struct FitOptions {
  unsigned margin = 5;  // holdout points kept out of the solve
  int threads = 1;
};

// Default grid for an ansatz: n = 1..N at a = 1, or a cross grid over
// a = 1..deg_a+2 for two-symbol fits, sized to unknowns + margin points.
void default_grid(const MomentAnsatz& ansatz, unsigned margin, std::vector<unsigned>& ns,
                  std::vector<unsigned>& as);

/// Solves for A_k, B_k on the grid sample_ns x sample_as (row order: n outer,
/// a inner). The last `margin` points are held out and must satisfy the
/// fitted identity. One escalation (+1 on both degrees) is attempted before
/// reporting failure; the grid is extended in n when an escalated ansatz
/// needs more points.
FitResult fit_moment(unsigned k, const MomentAnsatz& ansatz, std::span<const unsigned> sample_ns,
                     std::span<const unsigned> sample_as, const FitOptions& opts = {});
FitResult fit_moment(unsigned k, bool general_a, const FitOptions& opts = {});

// True iff the identity holds exactly at every extra point; verified points
// are appended to holdout_verified.
bool verify_fit(FitResult& fit, std::span<const FitPoint> extra, int threads = 1);

/// Dominant term of A + B * E_1 after substituting E_1 ~ sqrt(2 pi)/4 n^(3/2):
/// coefficient * (2 pi)^(h/2) * n^exponent.
struct LeadingTerm {
  Rat coefficient;
  unsigned h = 0;
  Rat exponent;
};

LeadingTerm leading_asymptotics(const FitResult& fit);

// "E_2(n) = ... + (...)*E_1(n)"
std::string theorem_text(const FitResult& fit);

}  // namespace parking
