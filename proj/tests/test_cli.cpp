#include "cli.hpp"

#include <dcnpn/oracle.hpp>
#include <dcnpn/random.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dcnpn;

namespace
{

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run run( std::vector<std::string> args )
{
  std::ostringstream out, err;
  int const code = cli::run( args, out, err );
  return { code, out.str(), err.str() };
}

std::string data( char const* name )
{
  return std::string( DCNPN_TEST_DATA ) + "/" + name;
}

std::string temp_file( std::string const& name, std::string const& content )
{
  auto const path = ( std::filesystem::temp_directory_path() / ( "dcnpn_test_" + name ) ).string();
  std::ofstream( path ) << content;
  return path;
}

std::string line_with( std::string const& text, std::string const& prefix )
{
  std::istringstream in( text );
  for ( std::string line; std::getline( in, line ); )
    if ( line.rfind( prefix, 0 ) == 0 )
      return line.substr( prefix.size() );
  return {};
}

} // namespace

TEST( Cli, CanonSevenInputCubeFile )
{
  auto const r = run( { "canon", "--n", "7", "--cubes", data( "example1.cubes" ) } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  EXPECT_EQ( line_with( r.out, "C_f: " ), "~x6 ~x1 ~x2 x3 x7 x5 ~x4" );
  EXPECT_EQ( line_with( r.out, "candidates: " ), "2" );
  EXPECT_EQ( line_with( r.out, "canonical: " ), "aaaaaaaaff000000c0c0c0c0ffc0c0c0" );
  EXPECT_EQ( line_with( r.out, "output: " ), "kept" );
}

TEST( Cli, CanonXorMatchesOracle )
{
  auto const r = run( { "canon", "--n", "2", "--hex", "6" } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  auto const expected = oracle::brute_canonical( TruthTable::from_hex( "6", 2 ) ).best_table.to_hex();
  EXPECT_EQ( line_with( r.out, "canonical: " ), expected );
  EXPECT_GE( std::stoi( line_with( r.out, "candidates: " ) ), 1 );
}

TEST( Cli, CanonCofactorMode )
{
  auto const r = run( { "canon", "--n", "6", "--cubes", data( "example2.cubes" ), "--mode", "cofactor" } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  EXPECT_EQ( line_with( r.out, "candidates: " ), "240" );
}

TEST( Cli, CanonRandomIsDeterministic )
{
  auto const a = run( { "canon", "--n", "9", "--random", "--seed", "5" } );
  auto const b = run( { "canon", "--n", "9", "--random", "--seed", "5" } );
  ASSERT_EQ( a.code, 0 );
  EXPECT_EQ( a.out, b.out );
}

TEST( Cli, CanonErrors )
{
  EXPECT_EQ( run( { "canon", "--n", "3", "--cubes", temp_file( "empty.cubes", "" ) } ).code, 2 );
  EXPECT_EQ( run( { "canon", "--n", "3", "--cubes", "/nonexistent/file" } ).code, 2 );
  EXPECT_EQ( run( { "canon", "--n", "2", "--hex", "zz" } ).code, 2 );
  EXPECT_EQ( run( { "canon", "--n", "2" } ).code, 2 );
  EXPECT_EQ( run( { "canon", "--n", "2", "--hex", "8", "--mode", "spectral" } ).code, 2 );
  EXPECT_EQ( run( { "canon", "--n", "9", "--hex", "0", "--max-vars", "8" } ).code, 2 );
  EXPECT_EQ( run( {} ).code, 2 );
  auto const e = run( { "canon", "--n", "3", "--cubes", temp_file( "blank.cubes", "\n\n" ) } );
  EXPECT_EQ( e.code, 2 );
  EXPECT_NE( e.err.find( "no product terms" ), std::string::npos );
}

TEST( Cli, MatchDeMorgan )
{
  auto const r = run( { "match", "--n", "2", "--hex", "8", "--hex", "e" } );
  EXPECT_EQ( r.code, 0 );
  EXPECT_EQ( line_with( r.out, "EQUIVALENT" ), "" );
  EXPECT_NE( r.out.find( "g(x1,x2) = ~f(" ), std::string::npos );
}

TEST( Cli, MatchNotEquivalent )
{
  auto const r = run( { "match", "--n", "2", "--hex", "8", "--hex", "6" } );
  EXPECT_EQ( r.code, 1 );
  EXPECT_EQ( r.out, "NOT-EQUIVALENT\n" );
}

TEST( Cli, MatchPermutedCubes )
{
  // the seven-input example with inputs reversed and x2 complemented
  std::ifstream in( data( "example1.cubes" ) );
  std::string permuted;
  for ( std::string line; std::getline( in, line ); )
  {
    std::string rev( line.rbegin(), line.rend() );
    rev[1] = rev[1] == '1' ? '0' : rev[1] == '0' ? '1' : '-';
    permuted += rev + "\n";
  }
  auto const r =
      run( { "match", "--n", "7", "--cubes", data( "example1.cubes" ), "--cubes", temp_file( "perm.cubes", permuted ) } );
  EXPECT_EQ( r.code, 0 ) << r.err;
  EXPECT_EQ( r.out.substr( 0, 11 ), "EQUIVALENT\n" );
}

TEST( Cli, MatchArityErrors )
{
  EXPECT_EQ( run( { "match", "--n", "2", "--n", "3", "--hex", "8", "--hex", "80" } ).code, 2 );
  EXPECT_EQ( run( { "match", "--n", "2", "--hex", "8" } ).code, 2 );
  EXPECT_EQ( run( { "match", "--n", "2", "--hex", "8", "--hex", "80" } ).code, 2 );
}

TEST( Cli, ClassifyAllThreeInputFunctions )
{
  auto const csv = ( std::filesystem::temp_directory_path() / "dcnpn_test_classes.csv" ).string();
  auto const r = run( { "classify", "--n", "3", "--exhaustive", "--csv", csv } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  EXPECT_EQ( line_with( r.out, "functions: " ), "256" );
  EXPECT_EQ( line_with( r.out, "classes: " ), "14" );
  std::ifstream in( csv );
  std::string header;
  std::getline( in, header );
  EXPECT_EQ( header, "class_id,canonical,count,representative" );
}

TEST( Cli, ClassifyRepeatedFunction )
{
  auto const path = temp_file( "repeat.txt", "4 6996\n4 6996\n# comment\n4 6996\n" );
  auto const r = run( { "classify", path } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  EXPECT_EQ( line_with( r.out, "classes: " ), "1" );
}

TEST( Cli, ClassifyOrbit )
{
  std::mt19937_64 rng( 71 );
  auto const f = random_function( 6, 0.5, rng );
  std::string corpus;
  for ( int k = 0; k < 100; ++k )
    corpus += "6 " + apply_transform( f, random_transform( 6, rng ) ).to_hex() + "\n";
  auto const r = run( { "classify", temp_file( "orbit.txt", corpus ) } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  EXPECT_EQ( line_with( r.out, "functions: " ), "100" );
  EXPECT_EQ( line_with( r.out, "classes: " ), "1" );
}

TEST( Cli, ClassifyMixedArity )
{
  auto const r = run( { "classify", temp_file( "mixed.txt", "2 8\n3 80\n" ) } );
  EXPECT_EQ( r.code, 2 );
  EXPECT_NE( r.err.find( "mixed arities" ), std::string::npos );
}

TEST( Cli, BenchCsvAndDeterminism )
{
  auto const a = run( { "bench", "--n", "7-8", "--count", "10", "--seed", "3", "--no-timing" } );
  auto const b = run( { "bench", "--n", "7..8", "--count", "10", "--seed", "3", "--no-timing" } );
  ASSERT_EQ( a.code, 0 ) << a.err;
  EXPECT_EQ( a.out, b.out );
  EXPECT_EQ( a.out.substr( 0, a.out.find( '\n' ) ), "n,mode,seed,func_id,runtime_s,candidates" );
  EXPECT_NE( a.out.find( "# " ), std::string::npos );
  EXPECT_NE( a.out.find( "\n7,dc,3,0,0.000000000," ), std::string::npos );
  EXPECT_NE( a.out.find( "\n8,cofactor,3,9," ), std::string::npos );
}

TEST( Cli, BenchDeterministicApartFromRuntime )
{
  auto strip = []( std::string const& csv ) {
    std::istringstream in( csv );
    std::string out;
    for ( std::string line; std::getline( in, line ) && line.rfind( "#", 0 ) != 0; )
    {
      std::vector<std::string> cells;
      std::stringstream ss( line );
      for ( std::string c; std::getline( ss, c, ',' ); )
        cells.push_back( c );
      cells[4] = "";
      for ( auto const& c : cells )
        out += c + ",";
      out += "\n";
    }
    return out;
  };
  auto const a = run( { "bench", "--n", "9", "--count", "20", "--seed", "8", "--jobs", "3" } );
  auto const b = run( { "bench", "--n", "9", "--count", "20", "--seed", "8" } );
  ASSERT_EQ( a.code, 0 ) << a.err;
  EXPECT_EQ( strip( a.out ), strip( b.out ) );
}

TEST( Cli, BenchSixteenInputSmoke )
{
  auto const csv = ( std::filesystem::temp_directory_path() / "dcnpn_test_bench.csv" ).string();
  auto const r = run( { "bench", "--n", "16", "--count", "20", "--mode", "dc", "--csv", csv } );
  ASSERT_EQ( r.code, 0 ) << r.err;
  EXPECT_NE( r.out.find( "#A.C.N" ), std::string::npos );
  std::ifstream in( csv );
  int lines = 0;
  for ( std::string line; std::getline( in, line ); )
    ++lines;
  EXPECT_EQ( lines, 21 );
}

TEST( Cli, Selftest )
{
  auto const r = run( { "selftest" } );
  EXPECT_EQ( r.code, 0 ) << r.out;
  EXPECT_NE( r.out.find( "six-input first-order values" ), std::string::npos );
  EXPECT_NE( r.out.find( "cofactor-only candidates = 240" ), std::string::npos );
  EXPECT_NE( r.out.find( "selftest passed" ), std::string::npos );
}
