#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "families.hpp"
#include "graph.hpp"
#include "resolving.hpp"

namespace simdim {

// Machine-checkable claims about the closed formulas of the library: each
// check recomputes both sides of its formula exactly and certifies the
// hypotheses it depends on, reporting INAPPLICABLE (not FAIL) when a
// hypothesis does not hold for the given inputs.
enum class Claim {
  TRANSFER,        // generators carry over between coronas with the same second factor
  SD_CORONA,       // Sd(G (.) H) = |V| * Sd_A(H), plus the per-member corollary
  F_BOUNDS,        // the adjacency-side correction term f lies in 0..|V|-1
  F_ZERO,          // untrapped dominating basis exists -> f = 0
  F_VMINUS1,       // no dominating basis -> f = |V|-1
  F_SGAMMA,        // dominating bases exist but all bases trapped -> f = Sgamma(G-side)
  F_GAMMAPRIME,    // mixed bases, singleton G-side -> f = gamma'(G)
  ADIM_FORMULA,    // dim_A(P_n) = dim_A(C_n) = floor((2n+2)/5)
  MOD5_EXISTS,     // n mod 5 not in {1,3}: P_n and C_n have dominating adjacency bases
  MOD5_NONE,       // n mod 5 in {1,3}: none dominate; every C_n basis has a 3-gap
  JOIN_SUM,        // Sd_A(H + H2) = Sd_A(H) + Sd_A(H2), optionally lifted through a corona
  JOIN_DOMINATES,  // every simultaneous adjacency basis of a join dominates
  JOIN_KT,         // trapped second side adds Sgamma(G-side) on top of the join sum
  PERM_FAMILY,     // a basis anchors the whole family generated by relabelings fixing it
  NT_UNION,        // isolated vertices in the second factor force f = |V|-1
  COMPLEMENT_INV,  // dim_A(G) = dim_A(complement of G)
  REMARK_BOUNDS,   // max dim_A <= Sd_A, Sd <= Sd_A, Sd_A <= |V|-1
  P5C5_EXAMPLE,    // the worked two-member family with its full basis catalog
};

std::string claim_name(Claim c);
std::optional<Claim> claim_from(const std::string& name);

enum class Status { pass, fail, inapplicable, error };

struct VerificationReport {
  std::string id;
  Claim claim = Claim::TRANSFER;
  Status status = Status::error;
  std::string expected = "-";
  std::string computed = "-";
  std::string witness = "-";
  std::string note;  // premise details, quantifier-reading records, error text
  double elapsed_s = 0;
};

// "PASS <id> expected=<v> computed=<v> witness=<set>" plus a note field when
// one is present.
std::string format_report_line(const VerificationReport& r);

// forced_expected (when set) replaces the derived expected value, so a
// deliberately falsified expectation exercises the FAIL path end to end.
struct CheckOptions {
  SolverOptions solver;
  std::optional<int> forced_expected;
};

VerificationReport check_transfer(const std::string& id, const Graph& g1, const Graph& g2,
                                  const Graph& h, const CheckOptions& opt = {});

VerificationReport check_sd_corona(const std::string& id, const GraphFamily& gs,
                                   const GraphFamily& hs, const CheckOptions& opt = {});

// which = F_BOUNDS, F_ZERO, F_VMINUS1, F_SGAMMA or F_GAMMAPRIME.
VerificationReport check_f_case(const std::string& id, Claim which, const GraphFamily& gs,
                                const GraphFamily& hs, const CheckOptions& opt = {});

VerificationReport check_adim_formula(const std::string& id, int n, const CheckOptions& opt = {});

// which = MOD5_EXISTS or MOD5_NONE; 7 <= n <= 13 and n mod 5 must match.
VerificationReport check_mod5(const std::string& id, Claim which, int n,
                              const CheckOptions& opt = {});

// which = JOIN_SUM (first-side untrapped-basis premise; corona lift when gs
// given) or JOIN_KT (second side entirely trapped, adds Sgamma(gs)).
// JOIN_DOMINATES ignores gs and checks the basis catalog of the join.
VerificationReport check_join(const std::string& id, Claim which,
                              const std::optional<GraphFamily>& gs, const GraphFamily& hs,
                              const GraphFamily& hs2, const CheckOptions& opt = {});

VerificationReport check_perm_family(const std::string& id, const Graph& g,
                                     std::optional<VertexSet> basis, SampleMode mode,
                                     uint64_t seed, int count, const std::vector<Graph>& include,
                                     const CheckOptions& opt = {});

VerificationReport check_nt_union(const std::string& id, int t, const GraphFamily& gs,
                                  const GraphFamily& hs, const CheckOptions& opt = {});

VerificationReport check_complement_invariance(const std::string& id, const Graph& g,
                                               const CheckOptions& opt = {});

VerificationReport check_remark_bounds(const std::string& id, const GraphFamily& f,
                                       const CheckOptions& opt = {});

VerificationReport check_p5c5(const std::string& id, const std::vector<Graph>& gs,
                              const CheckOptions& opt = {});

// Suite configuration: '#' comments, blank lines, then
//   load <family-file>                  (path relative to the config file)
//   scenario <id> <CLAIM> key=value...
// Graph-valued arguments name loaded graphs or standard constructors
// (P7, C8, K4, N2, K2x3); family-valued ones are comma lists of those.
struct SuiteResult {
  std::vector<VerificationReport> reports;

  bool ok() const {
    for (const VerificationReport& r : reports)
      if (r.status == Status::fail || r.status == Status::error) return false;
    return true;
  }
};

SuiteResult run_suite(const std::string& config_path, const SolverOptions& solver = {});

}  // namespace simdim
