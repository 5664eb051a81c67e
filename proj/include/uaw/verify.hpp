#pragma once

#include "uaw/report.hpp"

#include <vector>

namespace uaw {

/// One acceptance criterion: its report, elapsed wall time, and time budget.
struct AcceptanceResult {
  Report report;
  double seconds = 0;
  double budget = 0;  // seconds
  bool pass() const { return report.all_pass() && seconds < budget; }
};

Report criterion_confluence_delta();
Report criterion_confluence_hhat();
Report criterion_psi_hom();
Report criterion_d_zero();
Report criterion_injectivity();
Report criterion_braid_equivariance();
Report criterion_dagger_xi();
Report criterion_coeff_matrices();
Report criterion_centralizer();
Report criterion_center();
Report criterion_identities();
Report criterion_basis_counts();

/// All twelve criteria, timed.
std::vector<AcceptanceResult> run_acceptance();

/// Run a named verification suite ("psi", "confluence", "squares", "braid",
/// "dagger-xi", "matrices", "centralizer", "center", "identities",
/// "injectivity", "basis-counts", "all").
std::vector<Report> run_suite(const std::string& name);

}  // namespace uaw
