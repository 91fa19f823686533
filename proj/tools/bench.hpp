#pragma once

#include <dcnpn/signature.hpp>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace dcnpn::bench
{

struct BenchConfig
{
  std::vector<int> sizes;
  std::uint64_t count = 100;
  std::uint64_t seed = 1;
  double density = 0.5;
  std::vector<SignatureMode> modes{ SignatureMode::dc, SignatureMode::cofactor_only };
  bool timing = true;
  unsigned jobs = 1;
};

struct BenchRecord
{
  int n = 0;
  SignatureMode mode = SignatureMode::dc;
  std::uint64_t seed = 0;
  std::uint64_t func_id = 0;
  double runtime_s = 0.0;
  std::uint64_t candidates = 0;
};

struct BenchSummary
{
  int n = 0;
  SignatureMode mode = SignatureMode::dc;
  std::uint64_t count = 0;
  double mean_runtime_s = 0.0;
  double mean_candidates = 0.0;
};

inline constexpr char const* kCsvHeader = "n,mode,seed,func_id,runtime_s,candidates";

/// Seed of function `func_id` at arity `n`, derived with std::seed_seq.
std::uint64_t function_seed( std::uint64_t seed, int n, std::uint64_t func_id );

/// Records ordered by n, then func_id, then mode (config order).
std::vector<BenchRecord> run( BenchConfig const& config );
std::vector<BenchSummary> summarize( std::vector<BenchRecord> const& records );

void write_csv( std::ostream& os, std::vector<BenchRecord> const& records );
/// Human-readable per-n table; `prefix` starts every line.
void write_summary( std::ostream& os, std::vector<BenchSummary> const& summary, char const* prefix = "" );

} // namespace dcnpn::bench
