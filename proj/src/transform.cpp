#include <dcnpn/transform.hpp>

#include "word_ops.hpp"

#include <array>
#include <stdexcept>

namespace dcnpn
{

NPTransform::NPTransform( int num_vars ) : perm_( num_vars ), negated_( num_vars, false )
{
  for ( int i = 0; i < num_vars; ++i )
    perm_[i] = i;
}

NPTransform::NPTransform( std::vector<int> perm, std::vector<bool> negated, bool out_negated )
    : perm_( std::move( perm ) ), negated_( std::move( negated ) ), out_negated_( out_negated )
{
  if ( perm_.size() != negated_.size() )
    throw std::invalid_argument( "permutation and phase vectors differ in size" );
  std::vector<bool> seen( perm_.size(), false );
  for ( int p : perm_ )
  {
    if ( p < 0 || p >= static_cast<int>( perm_.size() ) || seen[p] )
      throw std::invalid_argument( "perm is not a bijection" );
    seen[p] = true;
  }
}

TruthTable apply_transform( TruthTable const& f, NPTransform const& t )
{
  int const n = f.num_vars();
  if ( t.num_vars() != n )
    throw std::invalid_argument( "transform arity mismatch" );

  std::uint64_t neg_mask = 0;
  for ( int i = 0; i < n; ++i )
    if ( t.negated()[i] )
      neg_mask |= std::uint64_t{ 1 } << t.perm()[i];

  int const low = std::min( n, 6 );
  std::array<std::uint64_t, 64> lo_map{};
  for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << low ); ++x )
  {
    std::uint64_t y = 0;
    for ( int i = 0; i < low; ++i )
      if ( ( x >> i ) & 1u )
        y |= std::uint64_t{ 1 } << t.perm()[i];
    lo_map[x] = y;
  }

  auto const src = f.words();
  std::vector<std::uint64_t> out( src.size(), 0 );
  for ( std::size_t w = 0; w < out.size(); ++w )
  {
    std::uint64_t base = neg_mask;
    for ( int i = 6; i < n; ++i )
      if ( ( w >> ( i - 6 ) ) & 1u )
        base ^= std::uint64_t{ 1 } << t.perm()[i];
    std::uint64_t word = 0;
    for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << low ); ++x )
    {
      auto const y = base ^ lo_map[x];
      word |= ( ( src[y >> 6] >> ( y & 63u ) ) & 1u ) << x;
    }
    out[w] = t.out_negated() ? ~word : word;
  }
  return TruthTable::from_words( n, std::move( out ) );
}

NPTransform invert( NPTransform const& t )
{
  int const n = t.num_vars();
  std::vector<int> perm( n );
  std::vector<bool> neg( n );
  for ( int i = 0; i < n; ++i )
  {
    perm[t.perm()[i]] = i;
    neg[t.perm()[i]] = t.negated()[i];
  }
  return NPTransform( std::move( perm ), std::move( neg ), t.out_negated() );
}

NPTransform compose( NPTransform const& t1, NPTransform const& t2 )
{
  int const n = t1.num_vars();
  if ( t2.num_vars() != n )
    throw std::invalid_argument( "transform arity mismatch" );
  std::vector<int> perm( n );
  std::vector<bool> neg( n );
  for ( int i = 0; i < n; ++i )
  {
    perm[i] = t2.perm()[t1.perm()[i]];
    neg[i] = t1.negated()[i] != t2.negated()[t1.perm()[i]];
  }
  return NPTransform( std::move( perm ), std::move( neg ), t1.out_negated() != t2.out_negated() );
}

NPTransform as_transform( Candidate const& c )
{
  std::vector<int> perm;
  std::vector<bool> neg;
  for ( auto lit : c.literals )
  {
    perm.push_back( lit.var );
    neg.push_back( lit.negated() );
  }
  return NPTransform( std::move( perm ), std::move( neg ), c.out_negated );
}

std::string to_string( Candidate const& c )
{
  std::string s;
  for ( auto lit : c.literals )
  {
    if ( !s.empty() )
      s += ' ';
    s += to_string( lit );
  }
  return s;
}

std::string to_string( NPTransform const& t )
{
  int const n = t.num_vars();
  std::string s = "g(";
  for ( int i = 0; i < n; ++i )
    s += ( i ? ",x" : "x" ) + std::to_string( i + 1 );
  s += ") = ";
  s += t.out_negated() ? "~f(" : "f(";
  // argument j of f is fed by the position i with perm[i] == j
  auto const inv = invert( t );
  for ( int j = 0; j < n; ++j )
  {
    if ( j )
      s += ',';
    s += to_string( Literal{ inv.perm()[j], inv.negated()[j] ? Polarity::negative : Polarity::positive } );
  }
  return s + ")";
}

} // namespace dcnpn
