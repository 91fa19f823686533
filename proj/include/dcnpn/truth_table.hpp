#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dcnpn
{

/// Default upper bound on the number of inputs (a 16 MiB table).
inline constexpr int kDefaultMaxVars = 24;
/// Hard representational limit, independent of configuration.
inline constexpr int kAbsoluteMaxVars = 30;

enum class Polarity : std::uint8_t
{
  positive,
  negative
};

constexpr Polarity opposite( Polarity p ) noexcept
{
  return p == Polarity::positive ? Polarity::negative : Polarity::positive;
}

/*! \brief A possibly complemented input variable.
 *
 * Variables are zero-based internally; `x1` in printed form is `var == 0`.
 */
struct Literal
{
  int var = 0;
  Polarity polarity = Polarity::positive;

  constexpr bool negated() const noexcept { return polarity == Polarity::negative; }
  constexpr Literal complemented() const noexcept { return { var, opposite( polarity ) }; }

  friend constexpr bool operator==( Literal const&, Literal const& ) = default;
};

constexpr Literal pos( int var ) noexcept { return { var, Polarity::positive }; }
constexpr Literal neg( int var ) noexcept { return { var, Polarity::negative }; }

/// Prints `x3` or `~x3` (one-based).
std::string to_string( Literal lit );
/// Parses `x3`, `~x3` or `!x3`; throws std::invalid_argument.
Literal parse_literal( std::string_view text );

/// Product term with pairwise-distinct variables.
class Cube
{
public:
  Cube() = default;
  explicit Cube( std::vector<Literal> literals );

  std::span<Literal const> literals() const noexcept { return literals_; }
  std::size_t size() const noexcept { return literals_.size(); }
  bool empty() const noexcept { return literals_.empty(); }
  bool contains( int var ) const noexcept;

  /// Copy of this cube extended by `lit`; throws if the variable is already present.
  Cube with( Literal lit ) const;

private:
  std::vector<Literal> literals_;
};

/*! \brief Completely specified single-output function over `n` inputs.
 *
 * Bit `j` of the table is f(a_1..a_n) where a_i is bit i-1 of j, so x1 is the
 * least-significant index bit. Storage is a vector of 64-bit words; for n < 6
 * the unused high bits of the single word are kept at zero.
 */
class TruthTable
{
public:
  /// One input, constant 0.
  TruthTable();
  /// All-zero table; throws std::out_of_range unless 1 <= num_vars <= max_vars.
  explicit TruthTable( int num_vars, int max_vars = kDefaultMaxVars );

  /// Big-endian hex, exactly 2^n bits worth of digits (one digit for n <= 2).
  static TruthTable from_hex( std::string_view hex, int num_vars, int max_vars = kDefaultMaxVars );
  /// One product term per line over {0,1,-}; character i is the literal of x_{i+1}.
  static TruthTable from_cubes( std::string_view text, int num_vars, int max_vars = kDefaultMaxVars );
  /// Takes ownership of raw words and clears the padding bits.
  static TruthTable from_words( int num_vars, std::vector<std::uint64_t> words );
  static TruthTable constant( int num_vars, bool value );
  /// The function x_{var+1}.
  static TruthTable projection( int num_vars, int var );

  int num_vars() const noexcept { return n_; }
  std::uint64_t num_minterms() const noexcept { return std::uint64_t{ 1 } << n_; }

  bool bit( std::uint64_t minterm ) const noexcept
  {
    return ( words_[minterm >> 6] >> ( minterm & 63u ) ) & 1u;
  }
  void set_bit( std::uint64_t minterm, bool value = true ) noexcept
  {
    auto const mask = std::uint64_t{ 1 } << ( minterm & 63u );
    if ( value )
      words_[minterm >> 6] |= mask;
    else
      words_[minterm >> 6] &= ~mask;
  }

  std::span<std::uint64_t const> words() const noexcept { return words_; }

  std::string to_hex() const;

  friend bool operator==( TruthTable const&, TruthTable const& ) = default;
  friend std::strong_ordering operator<=>( TruthTable const&, TruthTable const& ) = default;

private:
  int n_ = 1;
  std::vector<std::uint64_t> words_;
};

/// |f|, the 0th-order signature.
std::uint64_t minterm_count( TruthTable const& f );
TruthTable negate( TruthTable const& f );
/// f with `lit` forced true; keeps arity, result does not depend on lit.var.
TruthTable cofactor( TruthTable const& f, Literal lit );
/// Onset size of f_b over the assignments of the variables outside `b`.
std::uint64_t cofactor_count( TruthTable const& f, Cube const& b );
/// f with input `var` complemented.
TruthTable flip_input( TruthTable const& f, int var );

} // namespace dcnpn
