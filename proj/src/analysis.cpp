#include <dcnpn/analysis.hpp>

#include "word_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcnpn
{

char const* to_string( Phase p )
{
  switch ( p )
  {
  case Phase::positive:
    return "positive";
  case Phase::negative:
    return "negative";
  default:
    return "undetermined";
  }
}

char const* to_string( ClassKind k )
{
  switch ( k )
  {
  case ClassKind::asymmetric:
    return "asymmetric";
  case ClassKind::symmetric:
    return "symmetric";
  default:
    return "independent";
  }
}

Phase output_phase( TruthTable const& f )
{
  auto const size = minterm_count( f );
  auto const half = f.num_minterms() / 2;
  if ( size < half )
    return Phase::positive;
  return size > half ? Phase::negative : Phase::undetermined;
}

Phase variable_phase( TruthTable const& f, int var )
{
  auto const p = cofactor_count( f, Cube( { pos( var ) } ) );
  auto const q = minterm_count( f ) - p;
  if ( p == q )
    return Phase::undetermined;
  return p > q ? Phase::positive : Phase::negative;
}

std::vector<Phase> variable_phases( TruthTable const& f )
{
  std::vector<Phase> phases( f.num_vars() );
  for ( int v = 0; v < f.num_vars(); ++v )
    phases[v] = is_independent( f, v ) ? Phase::positive : variable_phase( f, v );
  return phases;
}

bool is_independent( TruthTable const& f, int var )
{
  return first_order_dc( f, pos( var ) ).diff == 0;
}

bool are_symmetric( TruthTable const& f, int i, int j, SymmetryKind kind )
{
  if ( i == j )
    throw std::invalid_argument( "symmetry test needs two distinct variables" );
  if ( i < 0 || j < 0 || i >= f.num_vars() || j >= f.num_vars() )
    throw std::out_of_range( "variable out of range" );
  std::vector<std::uint64_t> swapped( f.words().begin(), f.words().end() );
  detail::flip_in_place( swapped, i );
  detail::flip_in_place( swapped, j );
  // f_{x_i ~x_j} = f_{~x_i x_j}  iff  f and f(flip_i flip_j) agree on x_i != x_j
  detail::CubeMask m;
  m.add( i, true );
  m.add( j, kind == SymmetryKind::skew );
  bool same = true;
  auto const words = f.words();
  m.for_each_word( words.size(), [&]( std::size_t w ) { same = same && ( ( words[w] ^ swapped[w] ) & m.low ) == 0; } );
  return same;
}

std::vector<SymmetryClass> symmetry_classes( TruthTable const& f, std::vector<Phase> const& phases )
{
  int const n = f.num_vars();
  if ( static_cast<int>( phases.size() ) != n )
    throw std::invalid_argument( "phase vector size mismatch" );

  SignatureTable const sig( f );
  auto key = [&]( int v ) {
    auto const p = sig.first_order( pos( v ) ), q = sig.first_order( neg( v ) );
    switch ( phases[v] )
    {
    case Phase::positive:
      return p;
    case Phase::negative:
      return q;
    default:
      return std::max( p, q );
    }
  };

  std::vector<SymmetryClass> classes;
  SymmetryClass independent{ ClassKind::independent, {}, {} };
  for ( int v = 0; v < n; ++v )
  {
    if ( sig.first_order( pos( v ) ).diff == 0 )
    {
      independent.vars.push_back( v );
      independent.inverted.push_back( false );
      if ( independent.vars.size() == 1 )
        classes.push_back( {} ); // placeholder keeps blocks ordered by first member
      continue;
    }
    bool placed = false;
    for ( auto& c : classes )
    {
      if ( c.vars.empty() || c.kind == ClassKind::independent || key( c.vars.front() ) != key( v ) )
        continue;
      for ( auto kind : { SymmetryKind::equivalence, SymmetryKind::skew } )
      {
        bool const inv_v = kind == SymmetryKind::skew;
        bool ok = true;
        for ( std::size_t k = 0; ok && k < c.vars.size(); ++k )
        {
          // relation to vars[k] follows from the relation to vars[0]
          auto const rel = ( c.inverted[k] != inv_v ) ? SymmetryKind::skew : SymmetryKind::equivalence;
          ok = are_symmetric( f, c.vars[k], v, rel );
        }
        if ( ok )
        {
          c.kind = ClassKind::symmetric;
          c.vars.push_back( v );
          c.inverted.push_back( inv_v );
          placed = true;
          break;
        }
      }
      if ( placed )
        break;
    }
    if ( !placed )
      classes.push_back( { ClassKind::asymmetric, { v }, { false } } );
  }
  for ( auto& c : classes )
    if ( c.vars.empty() )
      c = independent;
  return classes;
}

} // namespace dcnpn
