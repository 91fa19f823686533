#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dcnpn::detail
{

inline constexpr std::uint64_t kVarMask[6] = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };

inline std::size_t num_words( int n ) noexcept
{
  return n <= 6 ? 1u : std::size_t{ 1 } << ( n - 6 );
}

inline std::uint64_t valid_mask( int n ) noexcept
{
  return n >= 6 ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << ( 1u << n ) ) - 1u;
}

/*! \brief Word-level description of a cube's minterm set.
 *
 * Variables below 6 constrain bits inside a word (`low`); higher variables
 * constrain the word index (`hi_vars` selects index bits, `hi_vals` their values).
 */
struct CubeMask
{
  std::uint64_t low = ~std::uint64_t{ 0 };
  std::uint64_t hi_vars = 0;
  std::uint64_t hi_vals = 0;

  void add( int var, bool positive ) noexcept
  {
    if ( var < 6 )
    {
      low &= positive ? kVarMask[var] : ~kVarMask[var];
    }
    else
    {
      auto const b = std::uint64_t{ 1 } << ( var - 6 );
      hi_vars |= b;
      if ( positive )
        hi_vals |= b;
    }
  }

  template<class Fn>
  void for_each_word( std::size_t nwords, Fn&& fn ) const
  {
    for ( std::uint64_t w = hi_vals; w < nwords; w = ( ( ( w | hi_vars ) + 1u ) & ~hi_vars ) | hi_vals )
      fn( static_cast<std::size_t>( w ) );
  }
};

inline std::uint64_t count_masked( std::span<std::uint64_t const> words, CubeMask const& m )
{
  std::uint64_t c = 0;
  m.for_each_word( words.size(), [&]( std::size_t w ) { c += std::popcount( words[w] & m.low ); } );
  return c;
}

inline std::uint64_t count_and_masked( std::span<std::uint64_t const> a, std::span<std::uint64_t const> b,
                                       CubeMask const& m )
{
  std::uint64_t c = 0;
  m.for_each_word( a.size(), [&]( std::size_t w ) { c += std::popcount( a[w] & b[w] & m.low ); } );
  return c;
}

inline std::uint64_t flip_word( std::uint64_t w, int var ) noexcept
{
  auto const s = 1u << var;
  auto const m = kVarMask[var];
  return ( ( w & m ) >> s ) | ( ( w << s ) & m );
}

/// Complements input `var` in place.
inline void flip_in_place( std::vector<std::uint64_t>& words, int var )
{
  if ( var < 6 )
  {
    for ( auto& w : words )
      w = flip_word( w, var );
    return;
  }
  auto const step = std::size_t{ 1 } << ( var - 6 );
  for ( std::size_t i = 0; i < words.size(); ++i )
    if ( ( i & step ) == 0 )
      std::swap( words[i], words[i | step] );
}

/// f XOR flip_var(f): the Boolean difference w.r.t. `var`, over the full domain.
inline std::vector<std::uint64_t> difference( std::span<std::uint64_t const> words, int var )
{
  std::vector<std::uint64_t> d( words.begin(), words.end() );
  flip_in_place( d, var );
  for ( std::size_t i = 0; i < d.size(); ++i )
    d[i] ^= words[i];
  return d;
}

} // namespace dcnpn::detail
