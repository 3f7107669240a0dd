#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "cssent/css_code.hpp"
#include "cssent/entropy.hpp"

namespace cssent {

/// One experiment sample: subsystem size, entropy statistics, discrepancy,
/// and (for discrepancy scans) the finite-difference derivative dI/dn.
struct ScanRecord {
    std::size_t n_a = 0;
    std::size_t samples = 0;
    double mean_s = 0.0;
    double std_s = 0.0;
    double i_a = 0.0; // n_a - mean_s
    std::optional<double> di_dn;
};

struct PowerFit {
    double gamma = 0.0;
    double prefactor = 0.0;
    double r_squared = 0.0;
};

struct ScalingResult {
    std::vector<ScanRecord> records;
    PowerFit fit;
};

/// Evaluate the entropy of many bipartitions. The OpenMP variant writes each
/// result into its own slot, so the output is identical to the serial
/// reference for any worker count; the reference is kept for tests and the
/// benchmark.
std::vector<std::size_t> bipartition_entropies(const EntropyEvaluator& eval,
                                               std::span<const Bipartition> parts, int workers);
std::vector<std::size_t> bipartition_entropies_serial(const EntropyEvaluator& eval,
                                                      std::span<const Bipartition> parts);

/// Unweighted least squares of log(mean_s) against log(n_a); points with
/// mean_s <= 0 are skipped by callers.
PowerFit fit_power_law(std::span<const double> n_a, std::span<const double> mean_s);

/// Average entropy over `repeats` grown-subsystem runs, aligned to the
/// checkpoint grid of the first run by nearest n_A (ties to the smaller
/// checkpoint), plus a power-law fit over points with n_a < n/2 and
/// mean_s > 0.
ScalingResult scaling_scan(const CssCode& code, std::size_t repeats, std::uint64_t seed,
                           int workers = 1);

/// Mean/std of the entropy over random subsystems per grid point; i_a filled,
/// di_dn by central finite difference over the grid (one-sided at the ends).
std::vector<ScanRecord> discrepancy_scan(const CssCode& code, const std::vector<std::size_t>& grid,
                                         std::size_t samples_per_point, std::uint64_t seed,
                                         int workers = 1);

/// CSV with header code,n,n_a,samples,mean_s,std_s,i_a,di_dn; six fixed
/// decimal places; an optional trailing "# fit ..." line. Byte-identical for
/// identical inputs regardless of worker count.
void write_csv(const std::string& code_name, std::size_t n, std::span<const ScanRecord> records,
               const PowerFit* fit, const std::filesystem::path& path);

} // namespace cssent
