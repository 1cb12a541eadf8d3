#pragma once

#include <string>
#include <vector>

namespace hapnet {

// Planning parameter set. Defaults are the reference operating point:
// 15 km ground coverage, 128 wavelengths of 1 Gbps, clouds up to 10 km,
// 10 FSO devices of payload per HAP, 60 km maximum inter-HAP link,
// 1e-3 end-to-end BER budget.
struct PlanParams {
  double coverage_D = 15.0;          // km, ground coverage of a serving FSO
  int num_wavelengths_W = 128;       // wavelengths per link direction
  double wavelength_rate_rmax = 1.0; // Gbps per wavelength
  double max_cloud_dc = 10.0;        // km, largest cloud to survive
  int hap_payload_C = 10;            // FSO devices a HAP can carry
  double max_interhap_LHH = 60.0;    // km, longest admissible inter-HAP link
  double ber_threshold_delta = 1e-3; // end-to-end BER budget
  double cost_cHAP = 1.0;
  double cost_cFSO = 0.1;

  int rmax_mbps() const {
    return static_cast<int>(wavelength_rate_rmax * 1000.0 + 0.5);
  }
};

// Returns human-readable violations; empty means valid.
inline std::vector<std::string> validate_params(const PlanParams& p) {
  std::vector<std::string> errs;
  if (p.coverage_D <= 0) errs.push_back("coverage_D must be positive");
  if (p.num_wavelengths_W <= 0)
    errs.push_back("num_wavelengths_W must be positive");
  if (p.wavelength_rate_rmax <= 0)
    errs.push_back("wavelength_rate_rmax must be positive");
  if (p.max_cloud_dc <= 0) errs.push_back("max_cloud_dc must be positive");
  if (p.hap_payload_C <= 0) errs.push_back("hap_payload_C must be positive");
  if (p.max_interhap_LHH <= 0)
    errs.push_back("max_interhap_LHH must be positive");
  if (!(p.ber_threshold_delta > 0 && p.ber_threshold_delta < 1))
    errs.push_back("ber_threshold_delta must lie in (0,1)");
  if (p.cost_cHAP <= 0) errs.push_back("cost_cHAP must be positive");
  if (p.cost_cFSO <= 0) errs.push_back("cost_cFSO must be positive");
  // The backup distance window (2*dc, LHH) must be non-empty.
  if (p.max_interhap_LHH <= 2.0 * p.max_cloud_dc)
    errs.push_back("max_interhap_LHH must exceed 2*max_cloud_dc");
  return errs;
}

}  // namespace hapnet
