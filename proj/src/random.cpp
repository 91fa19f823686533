#include <dcnpn/random.hpp>

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dcnpn
{

double uniform01( std::mt19937_64& rng )
{
  return static_cast<double>( rng() >> 11 ) * 0x1.0p-53;
}

std::uint64_t uniform_below( std::mt19937_64& rng, std::uint64_t bound )
{
  if ( bound == 0 )
    throw std::invalid_argument( "empty range" );
  auto const limit = ~std::uint64_t{ 0 } - ( ~std::uint64_t{ 0 } % bound + 1 ) % bound;
  for ( ;; )
  {
    auto const x = rng();
    if ( x <= limit )
      return x % bound;
  }
}

TruthTable random_function( int num_vars, double density, std::mt19937_64& rng )
{
  if ( !( density >= 0.0 && density <= 1.0 ) )
    throw std::invalid_argument( "density must lie in [0, 1]" );
  TruthTable f( num_vars, kAbsoluteMaxVars );
  for ( std::uint64_t m = 0; m < f.num_minterms(); ++m )
    if ( uniform01( rng ) < density )
      f.set_bit( m );
  return f;
}

NPTransform random_transform( int num_vars, std::mt19937_64& rng )
{
  std::vector<int> perm( num_vars );
  std::iota( perm.begin(), perm.end(), 0 );
  for ( int i = num_vars - 1; i > 0; --i )
    std::swap( perm[i], perm[uniform_below( rng, static_cast<std::uint64_t>( i ) + 1 )] );
  std::vector<bool> neg( num_vars );
  for ( int i = 0; i < num_vars; ++i )
    neg[i] = rng() & 1u;
  bool const out = rng() & 1u;
  return NPTransform( std::move( perm ), std::move( neg ), out );
}

} // namespace dcnpn
