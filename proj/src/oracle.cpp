#include <dcnpn/oracle.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace dcnpn::oracle
{

namespace
{

void check_arity( TruthTable const& f )
{
  if ( f.num_vars() > kMaxOracleVars )
    throw std::invalid_argument( "oracle limited to " + std::to_string( kMaxOracleVars ) + " inputs" );
}

bool covers( std::uint64_t m, std::uint64_t cube ) { return ( m & cube ) == cube; }

} // namespace

std::vector<DCValue> materialize_dc_vector( TruthTable const& g, SignatureMode mode )
{
  int const n = g.num_vars();
  std::uint64_t const size = g.num_minterms();

  std::vector<std::vector<std::uint64_t>> by_order( n + 1 );
  for ( std::uint64_t s = 0; s < size; ++s )
    by_order[std::popcount( s )].push_back( s );
  // ascending numeric order of the reversed index set is not lexicographic, so sort explicitly
  for ( auto& sets : by_order )
    std::sort( sets.begin(), sets.end(), []( std::uint64_t a, std::uint64_t b ) {
      for ( ;; )
      {
        auto const la = a & -a, lb = b & -b;
        if ( la != lb )
          return la < lb;
        if ( !la )
          return false;
        a ^= la;
        b ^= lb;
      }
    } );

  std::vector<DCValue> vec;
  vec.reserve( size );
  for ( int k = 0; k <= n; ++k )
    for ( auto s : by_order[k] )
    {
      DCValue e;
      for ( std::uint64_t m = 0; m < size; ++m )
        if ( covers( m, s ) && g.bit( m ) )
          ++e.cof;
      if ( k > 0 && k < n && mode == SignatureMode::dc )
      {
        int top = n - 1;
        while ( !( ( s >> top ) & 1u ) )
          --top;
        auto const rest = s & ~( std::uint64_t{ 1 } << top );
        for ( std::uint64_t m = 0; m < size; ++m )
          if ( covers( m, rest ) && g.bit( m ) != g.bit( m ^ ( std::uint64_t{ 1 } << top ) ) )
            ++e.diff;
      }
      vec.push_back( e );
    }
  return vec;
}

TruthTable naive_apply( TruthTable const& f, NPTransform const& t )
{
  int const n = f.num_vars();
  if ( t.num_vars() != n )
    throw std::invalid_argument( "arity mismatch" );
  TruthTable h( n, kAbsoluteMaxVars );
  for ( std::uint64_t x = 0; x < f.num_minterms(); ++x )
  {
    std::uint64_t y = 0;
    for ( int i = 0; i < n; ++i )
      if ( ( ( x >> i ) & 1u ) != static_cast<std::uint64_t>( t.negated()[i] ) )
        y |= std::uint64_t{ 1 } << t.perm()[i];
    h.set_bit( x, f.bit( y ) != t.out_negated() );
  }
  return h;
}

OracleResult brute_canonical( TruthTable const& f, SignatureMode mode )
{
  check_arity( f );
  OracleResult best{ f, NPTransform( f.num_vars() ), {} };
  bool have = false;
  for_each_transform( f.num_vars(), [&]( NPTransform const& t ) {
    auto g = naive_apply( f, t );
    auto v = materialize_dc_vector( g, mode );
    bool better = !have;
    if ( have )
    {
      if ( v[0].cof != best.vector_digest[0].cof )
        better = v[0].cof < best.vector_digest[0].cof;
      else
        better = v > best.vector_digest;
    }
    if ( better )
    {
      best = { std::move( g ), t, std::move( v ) };
      have = true;
    }
  } );
  return best;
}

bool brute_equivalent( TruthTable const& f, TruthTable const& g )
{
  if ( f.num_vars() != g.num_vars() )
    throw std::invalid_argument( "arity mismatch" );
  check_arity( f );
  bool found = false;
  for_each_transform( f.num_vars(), [&]( NPTransform const& t ) {
    if ( !found && naive_apply( g, t ) == f )
      found = true;
  } );
  return found;
}

} // namespace dcnpn::oracle
