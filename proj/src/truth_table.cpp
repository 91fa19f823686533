#include <dcnpn/truth_table.hpp>

#include "word_ops.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>
#include <string>

namespace dcnpn
{

using detail::num_words;
using detail::valid_mask;

std::string to_string( Literal lit )
{
  return ( lit.negated() ? "~x" : "x" ) + std::to_string( lit.var + 1 );
}

Literal parse_literal( std::string_view text )
{
  Literal lit;
  if ( !text.empty() && ( text.front() == '~' || text.front() == '!' ) )
  {
    lit.polarity = Polarity::negative;
    text.remove_prefix( 1 );
  }
  if ( text.size() < 2 || text.front() != 'x' )
    throw std::invalid_argument( "bad literal" );
  int index = 0;
  auto const* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars( text.data() + 1, end, index );
  if ( ec != std::errc{} || ptr != end || index < 1 )
    throw std::invalid_argument( "bad literal" );
  lit.var = index - 1;
  return lit;
}

Cube::Cube( std::vector<Literal> literals ) : literals_( std::move( literals ) )
{
  for ( std::size_t i = 0; i < literals_.size(); ++i )
  {
    if ( literals_[i].var < 0 )
      throw std::invalid_argument( "negative variable index in cube" );
    for ( std::size_t j = 0; j < i; ++j )
      if ( literals_[i].var == literals_[j].var )
        throw std::invalid_argument( "variable repeated in cube" );
  }
}

bool Cube::contains( int var ) const noexcept
{
  return std::any_of( literals_.begin(), literals_.end(), [var]( Literal l ) { return l.var == var; } );
}

Cube Cube::with( Literal lit ) const
{
  auto lits = literals_;
  lits.push_back( lit );
  return Cube( std::move( lits ) );
}

TruthTable::TruthTable() : words_( 1, 0 ) {}

TruthTable::TruthTable( int num_vars, int max_vars ) : n_( num_vars )
{
  if ( num_vars < 1 || num_vars > std::min( max_vars, kAbsoluteMaxVars ) )
    throw std::out_of_range( "variable count " + std::to_string( num_vars ) + " out of range" );
  words_.assign( num_words( num_vars ), 0 );
}

TruthTable TruthTable::from_hex( std::string_view hex, int num_vars, int max_vars )
{
  TruthTable f( num_vars, max_vars );
  std::size_t const digits = num_vars <= 2 ? 1u : std::size_t{ 1 } << ( num_vars - 2 );
  if ( hex.size() != digits )
    throw std::invalid_argument( "hex string has " + std::to_string( hex.size() ) + " digits, expected " +
                                 std::to_string( digits ) );
  for ( std::size_t i = 0; i < digits; ++i )
  {
    char const c = hex[digits - 1 - i];
    std::uint64_t v;
    if ( c >= '0' && c <= '9' )
      v = c - '0';
    else if ( c >= 'a' && c <= 'f' )
      v = c - 'a' + 10;
    else if ( c >= 'A' && c <= 'F' )
      v = c - 'A' + 10;
    else
      throw std::invalid_argument( std::string( "non-hex character '" ) + c + "'" );
    f.words_[i / 16] |= v << ( 4 * ( i % 16 ) );
  }
  if ( f.words_[0] & ~valid_mask( num_vars ) )
    throw std::invalid_argument( "hex value exceeds 2^n bits" );
  return f;
}

TruthTable TruthTable::from_cubes( std::string_view text, int num_vars, int max_vars )
{
  TruthTable f( num_vars, max_vars );
  std::size_t line_no = 0;
  while ( !text.empty() )
  {
    auto const eol = text.find( '\n' );
    auto line = text.substr( 0, eol );
    text = eol == std::string_view::npos ? std::string_view{} : text.substr( eol + 1 );
    ++line_no;
    while ( !line.empty() && ( line.back() == '\r' || line.back() == ' ' || line.back() == '\t' ) )
      line.remove_suffix( 1 );
    if ( line.empty() || line.front() == '#' )
      continue;
    if ( line.size() != static_cast<std::size_t>( num_vars ) )
      throw std::invalid_argument( "cube line " + std::to_string( line_no ) + " has length " +
                                   std::to_string( line.size() ) + ", expected " + std::to_string( num_vars ) );
    detail::CubeMask m;
    for ( int i = 0; i < num_vars; ++i )
    {
      switch ( line[i] )
      {
      case '1':
        m.add( i, true );
        break;
      case '0':
        m.add( i, false );
        break;
      case '-':
        break;
      default:
        throw std::invalid_argument( "bad character '" + std::string( 1, line[i] ) + "' in cube line " +
                                     std::to_string( line_no ) );
      }
    }
    m.for_each_word( f.words_.size(), [&]( std::size_t w ) { f.words_[w] |= m.low; } );
  }
  f.words_[0] &= valid_mask( num_vars );
  return f;
}

TruthTable TruthTable::from_words( int num_vars, std::vector<std::uint64_t> words )
{
  TruthTable f( num_vars, kAbsoluteMaxVars );
  if ( words.size() != f.words_.size() )
    throw std::invalid_argument( "word count does not match variable count" );
  f.words_ = std::move( words );
  f.words_[0] &= valid_mask( num_vars );
  return f;
}

TruthTable TruthTable::constant( int num_vars, bool value )
{
  TruthTable f( num_vars, kAbsoluteMaxVars );
  if ( value )
  {
    std::fill( f.words_.begin(), f.words_.end(), ~std::uint64_t{ 0 } );
    f.words_[0] &= valid_mask( num_vars );
  }
  return f;
}

TruthTable TruthTable::projection( int num_vars, int var )
{
  TruthTable f( num_vars, kAbsoluteMaxVars );
  if ( var < 0 || var >= num_vars )
    throw std::out_of_range( "projection variable out of range" );
  detail::CubeMask m;
  m.add( var, true );
  m.for_each_word( f.words_.size(), [&]( std::size_t w ) { f.words_[w] = m.low; } );
  f.words_[0] &= valid_mask( num_vars );
  return f;
}

std::string TruthTable::to_hex() const
{
  static constexpr char digits[] = "0123456789abcdef";
  std::size_t const count = n_ <= 2 ? 1u : std::size_t{ 1 } << ( n_ - 2 );
  std::string s( count, '0' );
  for ( std::size_t i = 0; i < count; ++i )
    s[count - 1 - i] = digits[( words_[i / 16] >> ( 4 * ( i % 16 ) ) ) & 0xfu];
  return s;
}

std::uint64_t minterm_count( TruthTable const& f )
{
  std::uint64_t c = 0;
  for ( auto w : f.words() )
    c += std::popcount( w );
  return c;
}

TruthTable negate( TruthTable const& f )
{
  std::vector<std::uint64_t> w( f.words().begin(), f.words().end() );
  for ( auto& x : w )
    x = ~x;
  return TruthTable::from_words( f.num_vars(), std::move( w ) );
}

TruthTable cofactor( TruthTable const& f, Literal lit )
{
  if ( lit.var < 0 || lit.var >= f.num_vars() )
    throw std::out_of_range( "cofactor variable out of range" );
  std::vector<std::uint64_t> w( f.words().begin(), f.words().end() );
  bool const positive = !lit.negated();
  if ( lit.var < 6 )
  {
    auto const s = 1u << lit.var;
    auto const m = detail::kVarMask[lit.var];
    for ( auto& x : w )
      x = positive ? ( ( x & m ) | ( ( x & m ) >> s ) ) : ( ( x & ~m ) | ( ( x & ~m ) << s ) );
  }
  else
  {
    auto const step = std::size_t{ 1 } << ( lit.var - 6 );
    for ( std::size_t i = 0; i < w.size(); ++i )
      if ( ( i & step ) == 0 )
      {
        if ( positive )
          w[i] = w[i | step];
        else
          w[i | step] = w[i];
      }
  }
  return TruthTable::from_words( f.num_vars(), std::move( w ) );
}

std::uint64_t cofactor_count( TruthTable const& f, Cube const& b )
{
  detail::CubeMask m;
  for ( auto lit : b.literals() )
  {
    if ( lit.var >= f.num_vars() )
      throw std::out_of_range( "cube variable out of range" );
    m.add( lit.var, !lit.negated() );
  }
  return detail::count_masked( f.words(), m );
}

TruthTable flip_input( TruthTable const& f, int var )
{
  if ( var < 0 || var >= f.num_vars() )
    throw std::out_of_range( "flip variable out of range" );
  std::vector<std::uint64_t> w( f.words().begin(), f.words().end() );
  detail::flip_in_place( w, var );
  return TruthTable::from_words( f.num_vars(), std::move( w ) );
}

} // namespace dcnpn
