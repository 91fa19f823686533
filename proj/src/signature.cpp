#include <dcnpn/signature.hpp>

#include "word_ops.hpp"

#include <stdexcept>

namespace dcnpn
{

using detail::CubeMask;

char const* to_string( SignatureMode mode )
{
  return mode == SignatureMode::dc ? "dc" : "cofactor";
}

DCValue first_order_dc( TruthTable const& f, Literal lit )
{
  return dc_value( f, Cube{}, lit );
}

DCValue dc_value( TruthTable const& f, Cube const& prefix, Literal lit )
{
  if ( lit.var < 0 || lit.var >= f.num_vars() )
    throw std::out_of_range( "literal variable out of range" );
  if ( prefix.contains( lit.var ) )
    throw std::invalid_argument( "literal variable already in prefix" );
  CubeMask m;
  for ( auto l : prefix.literals() )
    m.add( l.var, !l.negated() );
  auto const d = detail::difference( f.words(), lit.var );
  auto const diff = detail::count_masked( d, m );
  m.add( lit.var, !lit.negated() );
  return { detail::count_masked( f.words(), m ), diff };
}

SignatureTable::SignatureTable( TruthTable const& h )
    : h_( h ), n_( h.num_vars() ), size_( minterm_count( h ) ), pos_( n_ ), diff1_( n_ ),
      pair_( static_cast<std::size_t>( n_ ) * n_ ), dpair_( static_cast<std::size_t>( n_ ) * n_ )
{
  auto const words = h.words();
  std::vector<CubeMask> masks( n_ );
  for ( int a = 0; a < n_; ++a )
  {
    masks[a].add( a, true );
    pos_[a] = detail::count_masked( words, masks[a] );
  }
  for ( int a = 0; a < n_; ++a )
    for ( int b = a + 1; b < n_; ++b )
    {
      auto m = masks[a];
      m.add( b, true );
      pair_[a * n_ + b] = pair_[b * n_ + a] = detail::count_masked( words, m );
    }
  for ( int v = 0; v < n_; ++v )
  {
    auto const d = detail::difference( words, v );
    diff1_[v] = detail::count_masked( d, CubeMask{} );
    for ( int a = 0; a < n_; ++a )
      if ( a != v )
        dpair_[a * n_ + v] = detail::count_masked( d, masks[a] );
  }
}

DCValue SignatureTable::first_order( Literal lit ) const noexcept
{
  auto const p = pos_[lit.var];
  return { lit.negated() ? size_ - p : p, diff1_[lit.var] };
}

DCValue SignatureTable::second_order( Literal row, Literal lit ) const noexcept
{
  int const a = row.var, v = lit.var;
  if ( a == v )
    return {};
  auto const both = at( pair_, a, v );
  std::uint64_t cof;
  if ( !row.negated() )
    cof = lit.negated() ? pos_[a] - both : both;
  else
    cof = lit.negated() ? size_ - pos_[a] - pos_[v] + both : pos_[v] - both;
  auto const d = at( dpair_, a, v );
  return { cof, row.negated() ? diff1_[v] - d : d };
}

DCVectorCursor::DCVectorCursor( TruthTable g, SignatureMode mode )
    : g_( std::move( g ) ), mode_( mode ), n_( g_.num_vars() )
{
  if ( n_ <= 20 )
    diff_cache_.resize( n_ );
}

DCVectorCursor::DCVectorCursor( TruthTable const& f, Candidate const& candidate, SignatureMode mode )
    : DCVectorCursor( apply_transform( f, as_transform( candidate ) ), mode )
{
  if ( !candidate.complete( f.num_vars() ) )
    throw std::invalid_argument( "incomplete candidate" );
}

std::vector<std::uint64_t> const& DCVectorCursor::difference( int var )
{
  if ( diff_cache_.empty() )
  {
    scratch_ = detail::difference( g_.words(), var );
    return scratch_;
  }
  auto& slot = diff_cache_[var];
  if ( slot.empty() )
    slot = detail::difference( g_.words(), var );
  return slot;
}

std::optional<DCValue> DCVectorCursor::next()
{
  if ( position_ == 0 )
  {
    ++position_;
    combo_ = { 0 };
    return DCValue{ minterm_count( g_ ), 0 };
  }
  if ( combo_.empty() )
    return std::nullopt;

  int const k = static_cast<int>( combo_.size() );
  CubeMask prefix;
  for ( int i = 0; i + 1 < k; ++i )
    prefix.add( combo_[i], true );
  CubeMask full = prefix;
  full.add( combo_.back(), true );

  DCValue v{ detail::count_masked( g_.words(), full ), 0 };
  if ( k < n_ && mode_ == SignatureMode::dc )
    v.diff = detail::count_masked( difference( combo_.back() ), prefix );

  // advance to the next index set: lexicographic within k, then k + 1
  int i = k - 1;
  while ( i >= 0 && combo_[i] == n_ - k + i )
    --i;
  if ( i >= 0 )
  {
    ++combo_[i];
    for ( int j = i + 1; j < k; ++j )
      combo_[j] = combo_[j - 1] + 1;
  }
  else if ( k < n_ )
  {
    combo_.resize( k + 1 );
    for ( int j = 0; j <= k; ++j )
      combo_[j] = j;
  }
  else
  {
    combo_.clear();
  }
  ++position_;
  return v;
}

std::strong_ordering compare_transformed( TruthTable const& g1, TruthTable const& g2, SignatureMode mode )
{
  if ( g1.num_vars() != g2.num_vars() )
    throw std::invalid_argument( "arity mismatch" );
  if ( g1 == g2 )
    return std::strong_ordering::equal;

  DCVectorCursor c1( g1, mode ), c2( g2, mode );
  auto const s1 = c1.next()->cof, s2 = c2.next()->cof;
  if ( s1 != s2 )
    return s2 <=> s1;
  for ( ;; )
  {
    auto const a = c1.next(), b = c2.next();
    if ( !a )
      break;
    if ( auto const o = *a <=> *b; o != 0 )
      return o;
  }
  // distinct functions always differ in their positive-cube counts
  throw std::logic_error( "signature vectors of distinct functions compared equal" );
}

std::strong_ordering compare_candidates( TruthTable const& f, Candidate const& t1, Candidate const& t2,
                                         SignatureMode mode )
{
  if ( !t1.complete( f.num_vars() ) || !t2.complete( f.num_vars() ) )
    throw std::invalid_argument( "incomplete candidate" );
  return compare_transformed( apply_transform( f, as_transform( t1 ) ), apply_transform( f, as_transform( t2 ) ),
                              mode );
}

} // namespace dcnpn
