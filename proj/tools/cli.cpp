#include "cli.hpp"

#include "bench.hpp"
#include "fixtures.hpp"

#include <dcnpn/canon.hpp>
#include <dcnpn/oracle.hpp>
#include <dcnpn/random.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace dcnpn::cli
{

namespace
{

/// Input failure that maps to exit code 2.
struct InputError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

std::string read_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw InputError( "cannot open '" + path + "'" );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_terms( std::string_view text )
{
  std::istringstream in{ std::string( text ) };
  for ( std::string line; std::getline( in, line ); )
  {
    auto const first = line.find_first_not_of( " \t\r" );
    if ( first != std::string::npos && line[first] != '#' )
      return true;
  }
  return false;
}

TruthTable load_cubes( std::string const& path, int n, int max_vars )
{
  auto const text = read_file( path );
  if ( !has_terms( text ) )
    throw InputError( "'" + path + "' contains no product terms" );
  return TruthTable::from_cubes( text, n, max_vars );
}

SignatureMode parse_mode( std::string const& s )
{
  return s == "cofactor" ? SignatureMode::cofactor_only : SignatureMode::dc;
}

std::vector<int> parse_sizes( std::vector<std::string> const& specs )
{
  std::vector<int> sizes;
  for ( auto const& s : specs )
  {
    auto const dash = s.find_first_of( "-.:" );
    try
    {
      if ( dash == std::string::npos )
      {
        sizes.push_back( std::stoi( s ) );
        continue;
      }
      auto const sep = s.compare( dash, 2, ".." ) == 0 ? 2u : 1u;
      int const lo = std::stoi( s.substr( 0, dash ) ), hi = std::stoi( s.substr( dash + sep ) );
      if ( lo > hi )
        throw InputError( "empty size range '" + s + "'" );
      for ( int n = lo; n <= hi; ++n )
        sizes.push_back( n );
    }
    catch ( std::logic_error const& )
    {
      throw InputError( "bad size '" + s + "'" );
    }
  }
  return sizes;
}

struct SourceOptions
{
  int n = 0;
  std::string hex;
  std::string cubes;
  bool random = false;
  std::uint64_t seed = 1;
  double density = 0.5;
  int max_vars = kDefaultMaxVars;

  void attach( CLI::App& cmd )
  {
    cmd.add_option( "--n", n, "Number of inputs" )->required()->check( CLI::Range( 1, kAbsoluteMaxVars ) );
    auto* h = cmd.add_option( "--hex", hex, "Truth table, big-endian hex (x1 is the lowest index bit)" );
    auto* c = cmd.add_option( "--cubes", cubes, "File with one product term per line over {0,1,-}" );
    auto* r = cmd.add_flag( "--random", random, "Seeded random function" );
    h->excludes( c )->excludes( r );
    c->excludes( r );
    cmd.add_option( "--seed", seed, "Seed for --random" );
    cmd.add_option( "--density", density, "Onset probability for --random" )->check( CLI::Range( 0.0, 1.0 ) );
    cmd.add_option( "--max-vars", max_vars, "Input cap" )->check( CLI::Range( 1, kAbsoluteMaxVars ) );
  }

  TruthTable load() const
  {
    if ( n > max_vars )
      throw InputError( "--n exceeds the input cap of " + std::to_string( max_vars ) );
    if ( !hex.empty() )
      return TruthTable::from_hex( hex, n, max_vars );
    if ( !cubes.empty() )
      return load_cubes( cubes, n, max_vars );
    if ( random )
    {
      std::mt19937_64 rng( seed );
      return random_function( n, density, rng );
    }
    throw InputError( "one of --hex, --cubes or --random is required" );
  }
};

int cmd_canon( SourceOptions const& src, std::string const& mode, std::ostream& out )
{
  auto const f = src.load();
  auto const r = canonical_form( f, parse_mode( mode ) );
  out << "n: " << f.num_vars() << '\n'
      << "mode: " << to_string( r.mode ) << '\n'
      << "minterms: " << minterm_count( f ) << '\n'
      << "canonical: " << r.canonical_table.to_hex() << '\n'
      << "C_f: " << to_string( r.c_f ) << '\n'
      << "output: " << ( r.c_f.out_negated ? "negated" : "kept" ) << '\n'
      << "candidates: " << r.candidates_examined << '\n';
  return kSuccess;
}

struct MatchOptions
{
  std::vector<int> n;
  std::vector<std::string> hex;
  std::vector<std::string> cubes;
};

int cmd_match( MatchOptions const& o, std::ostream& out )
{
  if ( o.hex.size() + o.cubes.size() != 2 || ( !o.hex.empty() && !o.cubes.empty() ) )
    throw InputError( "give exactly two functions, either two --hex or two --cubes" );
  if ( o.n.empty() || o.n.size() > 2 )
    throw InputError( "give --n once, or once per function" );
  int const nf = o.n.front(), ng = o.n.back();
  if ( nf != ng )
    throw InputError( "arity mismatch: " + std::to_string( nf ) + " vs " + std::to_string( ng ) );
  auto load = [&]( std::size_t i, int n ) {
    return o.hex.empty() ? load_cubes( o.cubes[i], n, kDefaultMaxVars ) : TruthTable::from_hex( o.hex[i], n );
  };
  auto const f = load( 0, nf ), g = load( 1, ng );
  auto const t = match( f, g );
  if ( !t )
  {
    out << "NOT-EQUIVALENT\n";
    return kNegative;
  }
  if ( apply_transform( f, *t ) != g )
    throw std::logic_error( "internal error: unverified transform" );
  out << "EQUIVALENT\n" << to_string( *t ) << '\n';
  return kSuccess;
}

struct ClassifyOptions
{
  std::vector<std::string> files;
  int n = 0;
  bool exhaustive = false;
  std::string csv;
  std::string mode = "dc";
};

std::vector<TruthTable> load_corpus( ClassifyOptions const& o )
{
  std::vector<TruthTable> corpus;
  if ( o.exhaustive )
  {
    if ( o.n < 1 || o.n > 4 )
      throw InputError( "--exhaustive needs 1 <= --n <= 4" );
    for ( std::uint64_t w = 0; w < ( std::uint64_t{ 1 } << ( 1u << o.n ) ); ++w )
      corpus.push_back( TruthTable::from_words( o.n, { w } ) );
  }
  for ( auto const& path : o.files )
  {
    if ( path.size() > 6 && path.ends_with( ".cubes" ) )
    {
      if ( o.n < 1 )
        throw InputError( "cube file '" + path + "' needs --n" );
      corpus.push_back( load_cubes( path, o.n, kDefaultMaxVars ) );
      continue;
    }
    std::istringstream in( read_file( path ) );
    std::size_t line_no = 0;
    for ( std::string line; std::getline( in, line ); )
    {
      ++line_no;
      std::istringstream fields( line );
      std::vector<std::string> tok;
      for ( std::string t; fields >> t; )
        tok.push_back( t );
      if ( tok.empty() || tok.front().front() == '#' )
        continue;
      int n = o.n;
      if ( tok.size() == 2 )
        n = std::stoi( tok[0] );
      else if ( tok.size() != 1 )
        throw InputError( path + ":" + std::to_string( line_no ) + ": expected '[n] hex'" );
      if ( n < 1 )
        throw InputError( path + ":" + std::to_string( line_no ) + ": arity unknown, use '<n> <hex>' or --n" );
      corpus.push_back( TruthTable::from_hex( tok.back(), n ) );
    }
  }
  if ( corpus.empty() )
    throw InputError( "empty corpus" );
  for ( auto const& f : corpus )
    if ( f.num_vars() != corpus.front().num_vars() )
      throw InputError( "mixed arities in corpus: " + std::to_string( corpus.front().num_vars() ) + " and " +
                        std::to_string( f.num_vars() ) );
  return corpus;
}

int cmd_classify( ClassifyOptions const& o, std::ostream& out )
{
  auto const corpus = load_corpus( o );
  auto const mode = parse_mode( o.mode );
  struct Bucket
  {
    std::size_t first;
    std::size_t count;
  };
  std::map<TruthTable, Bucket> buckets;
  std::vector<TruthTable> order;
  for ( std::size_t i = 0; i < corpus.size(); ++i )
  {
    auto const c = canonical_form( corpus[i], mode ).canonical_table;
    auto [it, fresh] = buckets.try_emplace( c, Bucket{ i, 0 } );
    ++it->second.count;
    if ( fresh )
      order.push_back( c );
  }
  out << "functions: " << corpus.size() << '\n' << "classes: " << buckets.size() << '\n';
  for ( auto const& c : order )
    out << c.to_hex() << ' ' << buckets.at( c ).count << '\n';
  if ( !o.csv.empty() )
  {
    std::ofstream csv( o.csv );
    if ( !csv )
      throw InputError( "cannot write '" + o.csv + "'" );
    csv << "class_id,canonical,count,representative\n";
    for ( std::size_t k = 0; k < order.size(); ++k )
    {
      auto const& b = buckets.at( order[k] );
      csv << k << ',' << order[k].to_hex() << ',' << b.count << ',' << corpus[b.first].to_hex() << '\n';
    }
  }
  return kSuccess;
}

struct BenchOptions
{
  std::vector<std::string> sizes{ "7-12" };
  std::uint64_t count = 100;
  std::uint64_t seed = 1;
  double density = 0.5;
  std::string mode = "both";
  std::string csv;
  bool no_timing = false;
  unsigned jobs = 1;
};

int cmd_bench( BenchOptions const& o, std::ostream& out )
{
  bench::BenchConfig cfg;
  cfg.sizes = parse_sizes( o.sizes );
  for ( int n : cfg.sizes )
    if ( n < 1 || n > kDefaultMaxVars )
      throw InputError( "size " + std::to_string( n ) + " outside 1.." + std::to_string( kDefaultMaxVars ) );
  cfg.count = o.count;
  cfg.seed = o.seed;
  cfg.density = o.density;
  cfg.timing = !o.no_timing;
  cfg.jobs = o.jobs;
  if ( o.mode == "dc" )
    cfg.modes = { SignatureMode::dc };
  else if ( o.mode == "cofactor" )
    cfg.modes = { SignatureMode::cofactor_only };

  auto const records = bench::run( cfg );
  auto const summary = bench::summarize( records );
  if ( o.csv.empty() )
  {
    bench::write_csv( out, records );
    bench::write_summary( out, summary, "# " );
  }
  else
  {
    std::ofstream csv( o.csv );
    if ( !csv )
      throw InputError( "cannot write '" + o.csv + "'" );
    bench::write_csv( csv, records );
    bench::write_summary( out, summary );
  }
  return kSuccess;
}

class SelfTest
{
public:
  explicit SelfTest( std::ostream& out ) : out_( out ) {}

  /// Prints one line per check and passes the verdict through.
  bool check( bool ok, std::string const& what )
  {
    out_ << ( ok ? "ok    " : "FAIL  " ) << what << '\n';
    return ok;
  }

private:
  std::ostream& out_;
};

std::string dc_list( TruthTable const& f, Cube const& prefix, std::vector<int> const& vars )
{
  std::string s;
  for ( int v : vars )
  {
    auto const d = dc_value( f, prefix, pos( v ) );
    s += "(" + std::to_string( d.cof ) + "," + std::to_string( d.diff ) + ")";
  }
  return s;
}

Candidate parse_candidate( std::string const& text, bool out_negated )
{
  Candidate c{ {}, out_negated };
  std::istringstream in( text );
  for ( std::string tok; in >> tok; )
    c.literals.push_back( parse_literal( tok ) );
  return c;
}

bool oracle_sweep( SelfTest& t, int n )
{
  std::vector<TruthTable> reps;
  std::map<TruthTable, std::size_t> canon_class;
  std::size_t mismatched = 0, partition_errors = 0;
  for ( std::uint64_t w = 0; w < ( std::uint64_t{ 1 } << ( 1u << n ) ); ++w )
  {
    auto const f = TruthTable::from_words( n, { w } );
    auto const c = canonical_form( f ).canonical_table;
    if ( c != oracle::brute_canonical( f ).best_table )
      ++mismatched;
    if ( n > 3 )
      continue;
    auto const it = std::find_if( reps.begin(), reps.end(),
                                  [&]( TruthTable const& r ) { return oracle::brute_equivalent( r, f ); } );
    auto const brute_id = static_cast<std::size_t>( it - reps.begin() );
    if ( it == reps.end() )
      reps.push_back( f );
    auto const [slot, fresh] = canon_class.try_emplace( c, brute_id );
    if ( !fresh && slot->second != brute_id )
      ++partition_errors;
    if ( fresh && brute_id != canon_class.size() - 1 )
      ++partition_errors;
  }
  auto const n_s = std::to_string( n );
  if ( !t.check( mismatched == 0, "n=" + n_s + " canonical tables equal oracle maxima (" +
                                      std::to_string( mismatched ) + " mismatches)" ) )
    return false;
  if ( n <= 3 )
    return t.check( partition_errors == 0 && reps.size() == canon_class.size(),
                    "n=" + n_s + " partition matches oracle (" + std::to_string( canon_class.size() ) + " classes)" );
  return true;
}

int cmd_selftest( int oracle_level, std::ostream& out )
{
  SelfTest t( out );
  auto const f1 = fixtures::seven_input_example();
  auto const f2 = fixtures::six_input_example();
  std::vector<int> const all7{ 0, 1, 2, 3, 4, 5, 6 }, all6{ 0, 1, 2, 3, 4, 5 }, rest6{ 1, 2, 3, 4, 5 };

  bool ok = t.check( minterm_count( f1 ) == 46, "seven-input |f| = 46" ) &&
            t.check( dc_list( f1, {}, all7 ) == "(16,28)(16,28)(30,28)(22,44)(24,44)(15,32)(30,28)",
                     "seven-input first-order values" );
  ok = ok && t.check( to_string( initial_group( f1, SignatureMode::dc ) ) ==
                          "[{~x6}] [{~x1,~x2},{x3,x7}] [{~x4},{x5}]",
                      "seven-input initial groups" );
  if ( ok )
  {
    auto const r = canonical_form( f1 );
    auto const t2 = parse_candidate( "~x6 x3 x7 ~x1 ~x2 ~x4 x5", false );
    ok = t.check( r.candidates_examined == 2, "seven-input candidates = 2" ) &&
         t.check( r.canonical_table == apply_transform( f1, as_transform( t2 ) ),
                  "seven-input canonical table = table of ~x6 x3 x7 ~x1 ~x2 ~x4 x5" );
  }
  ok = ok && t.check( minterm_count( f2 ) == 32, "six-input |f| = 32" ) &&
       t.check( dc_list( f2, {}, all6 ) == "(13,64)(16,36)(16,52)(16,20)(16,12)(16,28)",
                "six-input first-order values" ) &&
       t.check( dc_list( f2, Cube( { neg( 0 ) } ), rest6 ) == "(9,18)(10,26)(10,10)(10,6)(10,14)",
                "six-input second-order values after ~x1" );
  if ( ok )
  {
    auto const dc = canonical_form( f2, SignatureMode::dc );
    auto const cof = canonical_form( f2, SignatureMode::cofactor_only );
    auto const cands = enumerate_candidates( SignatureTable( f2 ), initial_group( f2, SignatureMode::dc ),
                                             SignatureMode::dc, false );
    ok = t.check( dc.candidates_examined == 2, "six-input dc candidates = 2" ) &&
         t.check( cof.candidates_examined == 240, "six-input cofactor-only candidates = 240" ) &&
         t.check( cands.size() == 1 && to_string( cands.front() ) == "~x1 x3 ~x2 x6 x4 x5",
                  "six-input kept-polarity candidate ~x1 x3 ~x2 x6 x4 x5" );
  }
  for ( int n = 1; ok && n <= std::min( oracle_level, 4 ); ++n )
    ok = oracle_sweep( t, n );
  out << ( ok ? "selftest passed\n" : "selftest FAILED\n" );
  return ok ? kSuccess : kNegative;
}

} // namespace

int run( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app( "NPN canonical forms from cofactor and Boolean-difference signatures", "dcnpn" );
  app.require_subcommand( 1 );

  std::string canon_mode = "dc";
  SourceOptions canon_src;
  auto* canon = app.add_subcommand( "canon", "Canonical form of one function" );
  canon_src.attach( *canon );
  canon->add_option( "--mode", canon_mode, "Signature used for the search" )
      ->check( CLI::IsMember( { "dc", "cofactor" } ) );

  MatchOptions match_opts;
  auto* match_cmd = app.add_subcommand( "match", "Decide NPN equivalence of two functions" );
  match_cmd->add_option( "--n", match_opts.n, "Number of inputs (once, or once per function)" )->required();
  match_cmd->add_option( "--hex", match_opts.hex, "Truth tables of f and g" );
  match_cmd->add_option( "--cubes", match_opts.cubes, "Cube files of f and g" );

  ClassifyOptions cls;
  auto* classify = app.add_subcommand( "classify", "Bucket a corpus into NPN classes" );
  classify->add_option( "files", cls.files, "Corpus files: '[n] hex' per line, or *.cubes" );
  classify->add_option( "--n", cls.n, "Arity for lines without one and for cube files" );
  classify->add_flag( "--exhaustive", cls.exhaustive, "Add every function of --n inputs (n <= 4)" );
  classify->add_option( "--csv", cls.csv, "Write classes as CSV" );
  classify->add_option( "--mode", cls.mode, "Signature used for the search" )
      ->check( CLI::IsMember( { "dc", "cofactor" } ) );

  BenchOptions bo;
  auto* bench_cmd = app.add_subcommand( "bench", "Compare dc and cofactor-only search on random functions" );
  bench_cmd->add_option( "--n", bo.sizes, "Sizes, e.g. 7 8 or 7-12" );
  bench_cmd->add_option( "--count", bo.count, "Functions per size" );
  bench_cmd->add_option( "--seed", bo.seed, "Corpus seed" );
  bench_cmd->add_option( "--density", bo.density, "Onset probability" )->check( CLI::Range( 0.0, 1.0 ) );
  bench_cmd->add_option( "--mode", bo.mode, "dc, cofactor or both" )
      ->check( CLI::IsMember( { "dc", "cofactor", "both" } ) );
  bench_cmd->add_option( "--csv", bo.csv, "Write records to this file instead of stdout" );
  bench_cmd->add_flag( "--no-timing", bo.no_timing, "Write runtime_s as 0 for byte-identical output" );
  bench_cmd->add_option( "--jobs", bo.jobs, "Worker threads" )->check( CLI::Range( 1u, 256u ) );

  int oracle_level = 3;
  auto* selftest = app.add_subcommand( "selftest", "Check the worked examples and the oracle sweep" );
  selftest->add_option( "--oracle-level", oracle_level, "Largest n swept against the oracle" )
      ->check( CLI::IsMember( { 3, 4 } ) );

  try
  {
    app.parse( std::vector<std::string>( args.rbegin(), args.rend() ) );
  }
  catch ( CLI::ParseError const& e )
  {
    return app.exit( e, out, err ) == 0 ? kSuccess : kUsage;
  }

  try
  {
    if ( *canon )
      return cmd_canon( canon_src, canon_mode, out );
    if ( *match_cmd )
      return cmd_match( match_opts, out );
    if ( *classify )
      return cmd_classify( cls, out );
    if ( *bench_cmd )
      return cmd_bench( bo, out );
    return cmd_selftest( oracle_level, out );
  }
  catch ( std::logic_error const& e )
  {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  catch ( std::runtime_error const& e )
  {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

} // namespace dcnpn::cli
