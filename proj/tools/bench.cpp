#include "bench.hpp"

#include <dcnpn/canon.hpp>
#include <dcnpn/random.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <thread>

namespace dcnpn::bench
{

std::uint64_t function_seed( std::uint64_t seed, int n, std::uint64_t func_id )
{
  std::seed_seq seq{ static_cast<std::uint32_t>( seed ), static_cast<std::uint32_t>( seed >> 32 ),
                     static_cast<std::uint32_t>( n ), static_cast<std::uint32_t>( func_id ),
                     static_cast<std::uint32_t>( func_id >> 32 ) };
  std::uint32_t out[2];
  seq.generate( out, out + 2 );
  return ( std::uint64_t{ out[0] } << 32 ) | out[1];
}

std::vector<BenchRecord> run( BenchConfig const& config )
{
  struct Job
  {
    int n;
    std::uint64_t id;
  };
  std::vector<Job> jobs;
  for ( int n : config.sizes )
    for ( std::uint64_t id = 0; id < config.count; ++id )
      jobs.push_back( { n, id } );

  auto const per_job = config.modes.size();
  std::vector<BenchRecord> records( jobs.size() * per_job );
  std::atomic<std::size_t> next{ 0 };

  auto worker = [&] {
    for ( std::size_t j; ( j = next.fetch_add( 1 ) ) < jobs.size(); )
    {
      std::mt19937_64 rng( function_seed( config.seed, jobs[j].n, jobs[j].id ) );
      auto const f = random_function( jobs[j].n, config.density, rng );
      for ( std::size_t k = 0; k < per_job; ++k )
      {
        auto const t0 = std::chrono::steady_clock::now();
        auto const r = canonical_form( f, config.modes[k] );
        auto const t1 = std::chrono::steady_clock::now();
        records[j * per_job + k] = { jobs[j].n,
                                     config.modes[k],
                                     config.seed,
                                     jobs[j].id,
                                     config.timing ? std::chrono::duration<double>( t1 - t0 ).count() : 0.0,
                                     r.candidates_examined };
      }
    }
  };

  unsigned const threads = std::max( 1u, std::min<unsigned>( config.jobs, static_cast<unsigned>( jobs.size() ) ) );
  std::vector<std::thread> pool;
  for ( unsigned t = 1; t < threads; ++t )
    pool.emplace_back( worker );
  worker();
  for ( auto& t : pool )
    t.join();
  return records;
}

std::vector<BenchSummary> summarize( std::vector<BenchRecord> const& records )
{
  std::map<std::pair<int, int>, BenchSummary> acc;
  for ( auto const& r : records )
  {
    auto& s = acc[{ r.n, static_cast<int>( r.mode ) }];
    s.n = r.n;
    s.mode = r.mode;
    ++s.count;
    s.mean_runtime_s += r.runtime_s;
    s.mean_candidates += static_cast<double>( r.candidates );
  }
  std::vector<BenchSummary> out;
  for ( auto& [key, s] : acc )
  {
    s.mean_runtime_s /= static_cast<double>( s.count );
    s.mean_candidates /= static_cast<double>( s.count );
    out.push_back( s );
  }
  return out;
}

void write_csv( std::ostream& os, std::vector<BenchRecord> const& records )
{
  os << kCsvHeader << '\n';
  char buf[32];
  for ( auto const& r : records )
  {
    std::snprintf( buf, sizeof buf, "%.9f", r.runtime_s );
    os << r.n << ',' << to_string( r.mode ) << ',' << r.seed << ',' << r.func_id << ',' << buf << ','
       << r.candidates << '\n';
  }
}

void write_summary( std::ostream& os, std::vector<BenchSummary> const& summary, char const* prefix )
{
  char buf[128];
  std::snprintf( buf, sizeof buf, "%s%4s  %-8s  %6s  %12s  %10s\n", prefix, "n", "mode", "count", "#A.T (s)",
                 "#A.C.N" );
  os << buf;
  for ( auto const& s : summary )
  {
    std::snprintf( buf, sizeof buf, "%s%4d  %-8s  %6llu  %12.6f  %10.3f\n", prefix, s.n, to_string( s.mode ),
                   static_cast<unsigned long long>( s.count ), s.mean_runtime_s, s.mean_candidates );
    os << buf;
  }
  // reduction of the dc search space relative to the cofactor-only baseline, per n
  for ( auto const& a : summary )
  {
    if ( a.mode != SignatureMode::dc )
      continue;
    auto const b = std::find_if( summary.begin(), summary.end(), [&]( BenchSummary const& s ) {
      return s.n == a.n && s.mode == SignatureMode::cofactor_only;
    } );
    if ( b == summary.end() || b->mean_candidates == 0.0 )
      continue;
    std::snprintf( buf, sizeof buf, "%sn=%d candidate reduction vs cofactor: %.1f%%\n", prefix, a.n,
                   100.0 * ( 1.0 - a.mean_candidates / b->mean_candidates ) );
    os << buf;
  }
}

} // namespace dcnpn::bench
