#pragma once

// Implementations behind the `monochain` subcommands. Kept apart from
// flag parsing so tests can drive them with plain structs and streams.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "monochain/chain_io.hpp"
#include "monochain/filters.hpp"
#include "monochain/monotonicity.hpp"
#include "monochain/reconstruct.hpp"
#include "monochain/synth.hpp"

namespace monochain {

inline constexpr const char* kSweepHeader =
    "target_mse,measured_mse,degree_raw,degree_ma3,degree_ma5,degree_sp";

struct AnalysisReport {
  std::size_t length = 0;
  std::size_t dimension = 0;
  DegreeReport degrees;
  std::optional<Degree> global;
};

inline AnalysisReport analyze(const Chain& chain, bool with_global) {
  AnalysisReport r;
  r.length = chain.size();
  r.dimension = chain.dimension();
  r.degrees = degree_report(chain);
  if (with_global) r.global = global_degree(chain);
  return r;
}

/// One "key value" pair per line; per-triple rows as "triple <index> <degree>".
inline void write_report(std::ostream& out, const AnalysisReport& r) {
  out << "length " << r.length << '\n';
  out << "dimension " << r.dimension << '\n';
  out << "signal_degree " << format_degree(r.degrees.signal_degree) << '\n';
  if (r.global) out << "global_degree " << format_degree(*r.global) << '\n';
  for (const auto& t : r.degrees.per_triple) {
    out << "triple " << t.index << ' ' << format_degree(t.degree) << '\n';
  }
}

inline void cmd_analyze(const std::filesystem::path& input, bool with_global, std::ostream& out) {
  write_report(out, analyze(read_chain(input), with_global));
}

inline void cmd_filter(const std::filesystem::path& input, const std::filesystem::path& output,
                       const FilterConfig& config, std::ostream& log) {
  const Chain in = read_chain(input);
  const Chain out = apply_filter(in, config);
  write_chain(out, output);
  log << "input_signal_degree " << format_degree(signal_degree(in)) << '\n';
  log << "output_signal_degree " << format_degree(signal_degree(out)) << '\n';
}

inline void write_sweep(std::ostream& out, std::span<const SweepRecord> records,
                        std::uint64_t seed, int trials) {
  out << kSweepHeader << '\n';
  for (const auto& r : records) {
    out << format_number(r.target_mse) << ',' << format_number(r.measured_mse) << ','
        << format_degree(r.degree_raw) << ',' << format_degree(r.degree_ma3) << ','
        << format_degree(r.degree_ma5) << ',' << format_degree(r.degree_sp) << '\n';
  }
  out << "# seed=" << seed << " trials=" << trials << " trial_seed=seed+t\n";
}

inline std::vector<SweepRecord> cmd_experiment(std::span<const double> noise_grid, int trials,
                                               std::uint64_t seed,
                                               const std::filesystem::path& output) {
  const auto records = run_sweep(noise_grid, trials, seed);
  std::ofstream out(output, std::ios::binary);
  if (!out) throw IoError("cannot open '" + output.string() + "' for writing");
  write_sweep(out, records, seed, trials);
  out.flush();
  if (!out) throw IoError("write failure on '" + output.string() + "'");
  return records;
}

inline void cmd_reconstruct(const std::filesystem::path& input,
                            const std::filesystem::path& output, std::size_t exhaustive_limit) {
  write_chain(reconstruct(read_chain(input), exhaustive_limit), output);
}

inline void cmd_gen(int samples_per_loop, int loops, double radius,
                    const std::filesystem::path& output) {
  write_chain(gen_circle_chain(samples_per_loop, loops, radius), output);
}

}  // namespace monochain
