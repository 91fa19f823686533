#include <dcnpn/canon.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dcnpn
{

namespace
{

Literal literal_of( int var, Phase phase )
{
  return { var, phase == Phase::negative ? Polarity::negative : Polarity::positive };
}

struct Keyed
{
  ClassMember member;
  DCValue key;
};

/// Key of one member under `row`, deciding its phase when the row separates the two polarities.
Keyed rekey( SignatureTable const& sig, std::optional<Literal> row, ClassMember m, SignatureMode mode )
{
  if ( m.phase != Phase::undetermined )
    return { m, project( sig.value( row, literal_of( m.var, m.phase ) ), mode ) };
  auto const p = project( sig.value( row, pos( m.var ) ), mode );
  auto const q = project( sig.value( row, neg( m.var ) ), mode );
  if ( p.cof > q.cof )
    return { { m.var, Phase::positive }, p };
  if ( p.cof < q.cof )
    return { { m.var, Phase::negative }, q };
  return { m, p };
}

/// Splits every group of `groups` by key under `row`; groups keep their relative order.
std::vector<Group> regroup( SignatureTable const& sig, std::optional<Literal> row, std::vector<Group> const& groups,
                            std::vector<int> const& class_of, std::vector<ClassKind> const& class_kind,
                            SignatureMode mode )
{
  std::vector<Group> out;
  for ( auto const& g : groups )
  {
    std::vector<Keyed> keyed;
    for ( auto const& c : g.classes )
      for ( auto const& m : c.members )
        keyed.push_back( rekey( sig, row, m, mode ) );
    std::sort( keyed.begin(), keyed.end(), []( Keyed const& a, Keyed const& b ) {
      if ( a.key != b.key )
        return a.key > b.key;
      return a.member.var < b.member.var;
    } );
    for ( std::size_t i = 0; i < keyed.size(); )
    {
      Group ng;
      ng.key = keyed[i].key;
      for ( ; i < keyed.size() && keyed[i].key == ng.key; ++i )
      {
        int const id = class_of[keyed[i].member.var];
        auto it = std::find_if( ng.classes.begin(), ng.classes.end(),
                                [id]( VarClass const& c ) { return c.class_id == id; } );
        if ( it == ng.classes.end() )
        {
          ng.classes.push_back( { class_kind[id], id, {} } );
          it = std::prev( ng.classes.end() );
        }
        it->members.push_back( keyed[i].member );
      }
      out.push_back( std::move( ng ) );
    }
  }
  for ( std::size_t i = 0; i < out.size(); ++i )
    out[i].seq = static_cast<int>( i ) + 1;
  return out;
}

using LeafFn = std::function<void( std::vector<Literal> const& )>;

void walk( SignatureTable const& sig, GroupState const& state, SignatureMode mode, LeafFn const& leaf,
           std::uint64_t& pruned )
{
  if ( state.groups.empty() )
  {
    leaf( state.prefix );
    return;
  }
  auto const& first = state.groups.front();
  pruned += first.num_vars() - first.classes.size();

  std::vector<SplitApproach> approaches;
  if ( group_resolved( first ) )
  {
    auto const& head = first.classes.front().members.front();
    approaches.push_back( { 0, head.phase == Phase::negative ? Polarity::negative : Polarity::positive } );
  }
  else
  {
    approaches = split_group( first );
  }
  for ( auto const& a : approaches )
    walk( sig, update_signature( sig, update_sequence( state, a ), mode ), mode, leaf, pruned );
}

} // namespace

std::size_t Group::num_vars() const noexcept
{
  std::size_t n = 0;
  for ( auto const& c : classes )
    n += c.members.size();
  return n;
}

std::string to_string( GroupState const& state )
{
  std::string s;
  for ( auto const& g : state.groups )
  {
    if ( !s.empty() )
      s += ' ';
    s += '[';
    for ( std::size_t c = 0; c < g.classes.size(); ++c )
    {
      s += c ? ",{" : "{";
      for ( std::size_t k = 0; k < g.classes[c].members.size(); ++k )
      {
        auto const m = g.classes[c].members[k];
        if ( k )
          s += ',';
        if ( m.phase == Phase::undetermined )
          s += "?x" + std::to_string( m.var + 1 );
        else
          s += to_string( literal_of( m.var, m.phase ) );
      }
      s += '}';
    }
    s += ']';
  }
  return s;
}

GroupState initial_group( SignatureTable const& h, SignatureMode mode )
{
  int const n = h.num_vars();
  auto const phases = variable_phases( h.function() );
  auto const classes = symmetry_classes( h.function(), phases );

  GroupState state;
  state.class_of.assign( n, 0 );
  Group all;
  for ( std::size_t id = 0; id < classes.size(); ++id )
  {
    state.class_kind.push_back( classes[id].kind );
    VarClass vc{ classes[id].kind, static_cast<int>( id ), {} };
    for ( int v : classes[id].vars )
    {
      state.class_of[v] = static_cast<int>( id );
      vc.members.push_back( { v, phases[v] } );
    }
    all.classes.push_back( std::move( vc ) );
  }
  state.groups = regroup( h, std::nullopt, { all }, state.class_of, state.class_kind, mode );
  return state;
}

GroupState initial_group( TruthTable const& h, SignatureMode mode )
{
  return initial_group( SignatureTable( h ), mode );
}

bool group_resolved( Group const& g )
{
  if ( g.classes.size() != 1 )
    return false;
  auto const& c = g.classes.front();
  return c.kind == ClassKind::independent ||
         std::none_of( c.members.begin(), c.members.end(),
                       []( ClassMember const& m ) { return m.phase == Phase::undetermined; } );
}

std::vector<SplitApproach> split_group( Group const& g )
{
  if ( group_resolved( g ) )
    throw std::logic_error( "split_group called on a resolved group" );
  std::vector<SplitApproach> out;
  for ( std::size_t q = 0; q < g.classes.size(); ++q )
  {
    auto const phase = g.classes[q].members.front().phase;
    if ( phase != Phase::negative )
      out.push_back( { q, Polarity::positive } );
    if ( phase != Phase::positive )
      out.push_back( { q, Polarity::negative } );
  }
  return out;
}

GroupState update_sequence( GroupState const& state, SplitApproach choice )
{
  if ( state.groups.empty() || choice.class_index >= state.groups.front().classes.size() )
    throw std::out_of_range( "split approach does not name a class of the first group" );
  GroupState next = state;
  auto& first = next.groups.front();
  auto& cls = first.classes[choice.class_index];
  next.prefix.push_back( { cls.members.front().var, choice.polarity } );
  cls.members.erase( cls.members.begin() );
  if ( cls.members.empty() )
    first.classes.erase( first.classes.begin() + static_cast<std::ptrdiff_t>( choice.class_index ) );
  if ( first.classes.empty() )
    next.groups.erase( next.groups.begin() );
  for ( std::size_t i = 0; i < next.groups.size(); ++i )
    next.groups[i].seq = static_cast<int>( i ) + 1;
  return next;
}

GroupState update_signature( SignatureTable const& h, GroupState const& state, SignatureMode mode )
{
  GroupState next;
  std::optional<Literal> row;
  if ( !state.prefix.empty() )
    row = state.prefix.back();
  next.groups = regroup( h, row, state.groups, state.class_of, state.class_kind, mode );
  next.prefix = state.prefix;
  next.class_of = state.class_of;
  next.class_kind = state.class_kind;
  return next;
}

GroupState update_signature( TruthTable const& h, GroupState const& state, SignatureMode mode )
{
  return update_signature( SignatureTable( h ), state, mode );
}

std::vector<Candidate> enumerate_candidates( SignatureTable const& h, GroupState const& state, SignatureMode mode,
                                             bool out_negated, std::uint64_t* pruned )
{
  std::vector<Candidate> out;
  std::uint64_t skipped = 0;
  walk(
      h, state, mode, [&]( std::vector<Literal> const& lits ) { out.push_back( { lits, out_negated } ); },
      skipped );
  if ( pruned )
    *pruned = skipped;
  return out;
}

CanonResult search( TruthTable const& f, bool out_negated, SignatureMode mode )
{
  SignatureTable const sig( out_negated ? negate( f ) : f );
  CanonResult result;
  result.mode = mode;
  bool have = false;
  walk(
      sig, initial_group( sig, mode ), mode,
      [&]( std::vector<Literal> const& lits ) {
        ++result.candidates_examined;
        Candidate c{ lits, out_negated };
        auto table = apply_transform( f, as_transform( c ) );
        if ( !have || compare_transformed( table, result.canonical_table, mode ) > 0 )
        {
          result.c_f = std::move( c );
          result.canonical_table = std::move( table );
          have = true;
        }
      },
      result.branches_pruned );
  return result;
}

CanonResult canonical_form( TruthTable const& f, SignatureMode mode )
{
  switch ( output_phase( f ) )
  {
  case Phase::positive:
    return search( f, false, mode );
  case Phase::negative:
    return search( f, true, mode );
  default:
    break;
  }
  auto best = search( f, false, mode );
  auto other = search( f, true, mode );
  auto const total = best.candidates_examined + other.candidates_examined;
  auto const pruned = best.branches_pruned + other.branches_pruned;
  if ( compare_transformed( other.canonical_table, best.canonical_table, mode ) > 0 )
    best = std::move( other );
  best.candidates_examined = total;
  best.branches_pruned = pruned;
  return best;
}

std::optional<NPTransform> match( TruthTable const& f, TruthTable const& g )
{
  if ( f.num_vars() != g.num_vars() )
    throw std::invalid_argument( "arity mismatch" );
  auto const cf = canonical_form( f );
  auto const cg = canonical_form( g );
  if ( cf.canonical_table != cg.canonical_table )
    return std::nullopt;
  auto t = compose( invert( as_transform( cg.c_f ) ), as_transform( cf.c_f ) );
  if ( apply_transform( f, t ) != g )
    throw std::logic_error( "match produced a transform that does not map f to g" );
  return t;
}

} // namespace dcnpn
