#pragma once

#include <dcnpn/transform.hpp>
#include <dcnpn/truth_table.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace dcnpn
{

/// (cofactor count, Boolean-difference count), ordered lexicographically.
struct DCValue
{
  std::uint64_t cof = 0;
  std::uint64_t diff = 0;

  friend constexpr bool operator==( DCValue const&, DCValue const& ) = default;
  friend constexpr std::strong_ordering operator<=>( DCValue const&, DCValue const& ) = default;
};

enum class SignatureMode : std::uint8_t
{
  dc,
  cofactor_only
};

char const* to_string( SignatureMode mode );

constexpr std::strong_ordering compare_dc( DCValue a, DCValue b ) noexcept { return a <=> b; }

/// Drops the difference count in cofactor-only mode.
constexpr DCValue project( DCValue v, SignatureMode mode ) noexcept
{
  return mode == SignatureMode::dc ? v : DCValue{ v.cof, 0 };
}

/*! \brief First-order value of a literal.
 *
 * `cof` counts f_lit over the 2^(n-1) remaining assignments; `diff` counts
 * f_x XOR f_x' over all 2^n assignments, so it is even and phase independent.
 */
DCValue first_order_dc( TruthTable const& f, Literal lit );

/*! \brief Value of `lit` after cofactoring by `prefix`.
 *
 * cof = |f_{prefix.lit}|; diff counts the difference of f_prefix w.r.t. lit.var
 * over the 2^(n-|prefix|) assignments of f_prefix. Throws std::invalid_argument
 * when lit.var occurs in the prefix.
 */
DCValue dc_value( TruthTable const& f, Cube const& prefix, Literal lit );

/*! \brief First- and second-order values of one function, precomputed.
 *
 * Holds every |h_a|, |h_a h_b| and |D_v restricted to a| so the search can read
 * any first-order value or any second-order value in constant time.
 */
class SignatureTable
{
public:
  explicit SignatureTable( TruthTable const& h );

  int num_vars() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }
  TruthTable const& function() const noexcept { return h_; }

  DCValue first_order( Literal lit ) const noexcept;
  /// Value of `lit` in the cofactor by the single literal `row`.
  DCValue second_order( Literal row, Literal lit ) const noexcept;
  /// first_order when `row` is empty, second_order otherwise.
  DCValue value( std::optional<Literal> row, Literal lit ) const noexcept
  {
    return row ? second_order( *row, lit ) : first_order( lit );
  }

private:
  std::uint64_t at( std::vector<std::uint64_t> const& m, int a, int b ) const noexcept
  {
    return m[static_cast<std::size_t>( a ) * n_ + b];
  }

  TruthTable h_;
  int n_;
  std::uint64_t size_;
  std::vector<std::uint64_t> pos_;
  std::vector<std::uint64_t> diff1_;
  std::vector<std::uint64_t> pair_;  // |h_{x_a x_b}|
  std::vector<std::uint64_t> dpair_; // |D_v| over x_a = 1, indexed [a][v]
};

/*! \brief Streams the signature vector of a function.
 *
 * Entry 0 is |g|. Then, for k = 1..n in ascending order and each index set
 * i1 < ... < ik in lexicographic order, the entry of the positive cube over
 * those positions: cof = |g_cube| and diff = difference of g_{x_i1..x_i(k-1)}
 * w.r.t. x_ik. The order-0 and order-n entries carry diff = 0.
 */
class DCVectorCursor
{
public:
  DCVectorCursor( TruthTable g, SignatureMode mode = SignatureMode::dc );
  DCVectorCursor( TruthTable const& f, Candidate const& candidate, SignatureMode mode = SignatureMode::dc );

  /// Number of entries, 2^n.
  std::uint64_t length() const noexcept { return std::uint64_t{ 1 } << n_; }
  std::uint64_t position() const noexcept { return position_; }
  std::optional<DCValue> next();

  TruthTable const& table() const noexcept { return g_; }

private:
  std::vector<std::uint64_t> const& difference( int var );

  TruthTable g_;
  SignatureMode mode_;
  int n_;
  std::uint64_t position_ = 0;
  std::vector<int> combo_;
  std::vector<std::vector<std::uint64_t>> diff_cache_;
  std::vector<std::uint64_t> scratch_;
};

/*! \brief Orders two functions by their signature vectors.
 *
 * Entry 0 compares reversed, so the polarity with fewer minterms ranks higher;
 * every later entry compares directly. Greater means preferred as canonical.
 * Equal holds exactly when g1 == g2.
 */
std::strong_ordering compare_transformed( TruthTable const& g1, TruthTable const& g2,
                                          SignatureMode mode = SignatureMode::dc );

/// compare_transformed on the tables both candidates produce from f.
std::strong_ordering compare_candidates( TruthTable const& f, Candidate const& t1, Candidate const& t2,
                                         SignatureMode mode = SignatureMode::dc );

} // namespace dcnpn
