#include <bnkmap/encoding.hpp>
#include <bnkmap/error.hpp>
#include <bnkmap/minimize.hpp>

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>

namespace bnkmap
{

unsigned implicant::literal_count() const noexcept
{
  return static_cast<unsigned>( std::popcount( care_mask ) );
}

bool implicant::covers( std::uint64_t minterm ) const noexcept
{
  return ( minterm & care_mask ) == values;
}

bool implicant::contains( const implicant& other ) const noexcept
{
  return ( care_mask & other.care_mask ) == care_mask && ( other.values & care_mask ) == values;
}

bool implicant_less( const implicant& a, const implicant& b ) noexcept
{
  if ( a.n_vars != b.n_vars )
  {
    return a.n_vars < b.n_vars;
  }
  const auto rank = []( const implicant& t, std::uint32_t bit ) {
    if ( ( t.care_mask & bit ) == 0u )
    {
      return 2;
    }
    return ( t.values & bit ) != 0u ? 0 : 1;
  };
  for ( unsigned r = 1; r <= a.n_vars; ++r )
  {
    const std::uint32_t bit = std::uint32_t{ 1 } << ( a.n_vars - r );
    const int ra = rank( a, bit );
    const int rb = rank( b, bit );
    if ( ra != rb )
    {
      return ra < rb;
    }
  }
  return false;
}

std::vector<implicant> prime_implicants( const minterm_form& m, const size_limits& limits )
{
  check_exact_arity( m.n_vars, limits );
  const unsigned n = m.n_vars;
  const std::uint32_t full = static_cast<std::uint32_t>( state_count( n ) - 1u );

  const auto key = []( std::uint32_t care, std::uint32_t values ) {
    return ( static_cast<std::uint64_t>( care ) << 32 ) | values;
  };

  std::vector<implicant> current;
  for ( auto k : m.on_set )
  {
    if ( k > full )
    {
      throw index_error( "minterm " + std::to_string( k ) + " outside 0.." + std::to_string( full ) );
    }
    current.push_back( { n, full, static_cast<std::uint32_t>( k ) } );
  }

  // Each round merges pairs that differ in exactly one cared-for variable.
  std::vector<implicant> primes;
  while ( !current.empty() )
  {
    std::unordered_set<std::uint64_t> present;
    for ( const auto& t : current )
    {
      present.insert( key( t.care_mask, t.values ) );
    }
    std::unordered_set<std::uint64_t> merged;
    std::unordered_set<std::uint64_t> next_keys;
    std::vector<implicant> next;
    for ( const auto& t : current )
    {
      for ( std::uint32_t bits = t.care_mask & ~t.values; bits != 0u; bits &= bits - 1u )
      {
        const std::uint32_t bit = bits & ( ~bits + 1u );
        const auto partner = key( t.care_mask, t.values | bit );
        if ( !present.contains( partner ) )
        {
          continue;
        }
        merged.insert( key( t.care_mask, t.values ) );
        merged.insert( partner );
        const implicant joined{ n, t.care_mask & ~bit, t.values };
        if ( next_keys.insert( key( joined.care_mask, joined.values ) ).second )
        {
          next.push_back( joined );
        }
      }
    }
    for ( const auto& t : current )
    {
      if ( !merged.contains( key( t.care_mask, t.values ) ) )
      {
        primes.push_back( t );
      }
    }
    current = std::move( next );
  }

  std::sort( primes.begin(), primes.end(), implicant_less );
  return primes;
}

namespace
{

struct cover_cost
{
  std::size_t terms;
  unsigned literals;
  std::vector<implicant> sorted;
};

bool cheaper( const cover_cost& a, const cover_cost& b )
{
  if ( a.terms != b.terms )
  {
    return a.terms < b.terms;
  }
  if ( a.literals != b.literals )
  {
    return a.literals < b.literals;
  }
  return std::lexicographical_compare( a.sorted.begin(), a.sorted.end(), b.sorted.begin(), b.sorted.end(),
                                       implicant_less );
}

class cover_search
{
public:
  cover_search( std::span<const implicant> primes, const minterm_form& m, std::uint64_t budget )
      : primes_( primes ), budget_( budget )
  {
    covering_.resize( m.on_set.size() );
    covered_.resize( primes.size() );
    for ( std::size_t pos = 0; pos < m.on_set.size(); ++pos )
    {
      for ( std::size_t p = 0; p < primes.size(); ++p )
      {
        if ( primes[p].covers( m.on_set[pos] ) )
        {
          covering_[pos].push_back( p );
          covered_[p].push_back( pos );
        }
      }
      if ( covering_[pos].empty() )
      {
        throw error( "prime implicants do not cover minterm " + std::to_string( m.on_set[pos] ) );
      }
    }
    count_.assign( m.on_set.size(), 0u );
    excluded_.assign( primes.size(), 0 );
    uncovered_ = m.on_set.size();
  }

  std::vector<implicant> run()
  {
    // Essential primes belong to every cover.
    for ( const auto& options : covering_ )
    {
      if ( options.size() == 1u && std::find( chosen_.begin(), chosen_.end(), options.front() ) == chosen_.end() )
      {
        add( options.front() );
      }
    }
    search();
    return best_ ? best_->sorted : std::vector<implicant>{};
  }

private:
  void add( std::size_t p )
  {
    chosen_.push_back( p );
    chosen_literals_ += primes_[p].literal_count();
    for ( auto pos : covered_[p] )
    {
      if ( count_[pos]++ == 0u )
      {
        --uncovered_;
      }
    }
  }

  void remove_last()
  {
    const auto p = chosen_.back();
    chosen_.pop_back();
    chosen_literals_ -= primes_[p].literal_count();
    for ( auto pos : covered_[p] )
    {
      if ( --count_[pos] == 0u )
      {
        ++uncovered_;
      }
    }
  }

  std::size_t available( std::size_t pos ) const
  {
    return static_cast<std::size_t>( std::count_if( covering_[pos].begin(), covering_[pos].end(),
                                                    [&]( std::size_t p ) { return !excluded_[p]; } ) );
  }

  /// Uncovered minterms that share no usable prime each need their own term.
  std::pair<std::size_t, unsigned> lower_bound( const std::vector<std::size_t>& open ) const
  {
    std::vector<char> blocked( primes_.size(), 0 );
    std::size_t terms = 0;
    unsigned literals = 0;
    for ( auto pos : open )
    {
      const auto& options = covering_[pos];
      if ( std::any_of( options.begin(), options.end(), [&]( std::size_t p ) { return !excluded_[p] && blocked[p]; } ) )
      {
        continue;
      }
      unsigned cheapest = ~0u;
      for ( auto p : options )
      {
        if ( !excluded_[p] )
        {
          blocked[p] = 1;
          cheapest = std::min( cheapest, primes_[p].literal_count() );
        }
      }
      ++terms;
      literals += cheapest;
    }
    return { terms, literals };
  }

  /// Excludes every usable prime whose open coverage lies within that of a
  /// cheaper usable prime. Returns the primes it excluded.
  std::vector<std::size_t> exclude_dominated( const std::vector<std::size_t>& open )
  {
    const std::size_t words = ( covering_.size() + 63u ) / 64u;
    std::vector<std::size_t> usable;
    std::vector<std::vector<std::uint64_t>> cover;
    std::vector<char> seen( primes_.size(), 0 );
    for ( auto pos : open )
    {
      for ( auto p : covering_[pos] )
      {
        if ( !excluded_[p] && !seen[p] )
        {
          seen[p] = 1;
          usable.push_back( p );
        }
      }
    }
    work_ += 1u + usable.size() * usable.size();
    if ( work_ > budget_ )
    {
      throw size_limit_error( "exact cover search over " + std::to_string( primes_.size() ) +
                              " prime implicants exceeded its work budget" );
    }
    cover.assign( usable.size(), std::vector<std::uint64_t>( words, 0u ) );
    for ( std::size_t u = 0; u < usable.size(); ++u )
    {
      for ( auto pos : covered_[usable[u]] )
      {
        if ( count_[pos] == 0u )
        {
          cover[u][pos / 64u] |= std::uint64_t{ 1 } << ( pos % 64u );
        }
      }
    }
    const auto subset = [&]( std::size_t a, std::size_t b ) {
      for ( std::size_t w = 0; w < words; ++w )
      {
        if ( ( cover[a][w] & ~cover[b][w] ) != 0u )
        {
          return false;
        }
      }
      return true;
    };
    const auto preferred = [&]( std::size_t q, std::size_t p ) {
      const auto lq = primes_[q].literal_count();
      const auto lp = primes_[p].literal_count();
      return lq < lp || ( lq == lp && implicant_less( primes_[q], primes_[p] ) );
    };

    std::vector<std::size_t> dropped;
    for ( std::size_t a = 0; a < usable.size(); ++a )
    {
      for ( std::size_t b = 0; b < usable.size(); ++b )
      {
        if ( a != b && preferred( usable[b], usable[a] ) && subset( a, b ) )
        {
          dropped.push_back( usable[a] );
          break;
        }
      }
    }
    for ( auto p : dropped )
    {
      excluded_[p] = 1;
    }
    return dropped;
  }

  void search()
  {
    if ( uncovered_ == 0u )
    {
      consider();
      return;
    }

    std::vector<std::size_t> open;
    for ( std::size_t pos = 0; pos < covering_.size(); ++pos )
    {
      if ( count_[pos] == 0u )
      {
        open.push_back( pos );
      }
    }
    const auto dropped = exclude_dominated( open );

    // Most constrained minterm first.
    std::vector<std::pair<std::size_t, std::size_t>> ranked;
    bool feasible = true;
    for ( auto pos : open )
    {
      const auto options = available( pos );
      feasible = feasible && options > 0u;
      ranked.emplace_back( options, pos );
    }
    std::sort( ranked.begin(), ranked.end() );
    for ( std::size_t i = 0; i < ranked.size(); ++i )
    {
      open[i] = ranked[i].second;
    }

    if ( feasible && best_ )
    {
      const auto [terms, literals] = lower_bound( open );
      feasible = chosen_.size() + terms < best_->terms ||
                 ( chosen_.size() + terms == best_->terms && chosen_literals_ + literals <= best_->literals );
    }

    if ( feasible )
    {
      // Each subset is visited once: later branches exclude the primes tried before them.
      std::vector<std::size_t> options;
      for ( auto p : covering_[open.front()] )
      {
        if ( !excluded_[p] )
        {
          options.push_back( p );
        }
      }
      const auto gain = [&]( std::size_t p ) {
        return std::count_if( covered_[p].begin(), covered_[p].end(),
                              [&]( std::size_t pos ) { return count_[pos] == 0u; } );
      };
      std::stable_sort( options.begin(), options.end(),
                        [&]( std::size_t a, std::size_t b ) { return gain( a ) > gain( b ); } );
      for ( auto p : options )
      {
        add( p );
        search();
        remove_last();
        excluded_[p] = 1;
      }
      for ( auto p : options )
      {
        excluded_[p] = 0;
      }
    }
    for ( auto p : dropped )
    {
      excluded_[p] = 0;
    }
  }

  void consider()
  {
    cover_cost cost{ chosen_.size(), 0u, {} };
    for ( auto p : chosen_ )
    {
      cost.sorted.push_back( primes_[p] );
      cost.literals += primes_[p].literal_count();
    }
    std::sort( cost.sorted.begin(), cost.sorted.end(), implicant_less );
    if ( !best_ || cheaper( cost, *best_ ) )
    {
      best_ = std::move( cost );
    }
  }

  std::span<const implicant> primes_;
  std::uint64_t budget_;
  std::uint64_t work_ = 0;
  std::vector<std::vector<std::size_t>> covering_;
  std::vector<std::vector<std::size_t>> covered_;
  std::vector<unsigned> count_;
  std::size_t uncovered_ = 0;
  std::vector<std::size_t> chosen_;
  unsigned chosen_literals_ = 0;
  std::vector<char> excluded_;
  std::optional<cover_cost> best_;
};

} // namespace

sop_form minimal_cover( std::span<const implicant> primes, const minterm_form& m, const size_limits& limits )
{
  return sop_form{ m.n_vars, cover_search( primes, m, limits.max_cover_work ).run() };
}

sop_form minimize( const minterm_form& m, const size_limits& limits )
{
  const auto primes = prime_implicants( m, limits );
  return minimal_cover( primes, m, limits );
}

bool_expr implicant_to_expr( const implicant& term )
{
  std::vector<bool_expr> literals;
  for ( unsigned r = 1; r <= term.n_vars; ++r )
  {
    const std::uint32_t bit = std::uint32_t{ 1 } << ( term.n_vars - r );
    if ( ( term.care_mask & bit ) == 0u )
    {
      continue;
    }
    auto v = bool_expr::var( r );
    literals.push_back( ( term.values & bit ) != 0u ? std::move( v ) : bool_expr::negate( std::move( v ) ) );
  }
  return make_product( std::move( literals ) );
}

bool_expr sop_to_expr( const sop_form& s )
{
  std::vector<bool_expr> terms;
  for ( const auto& term : s.implicants )
  {
    if ( term.care_mask == 0u )
    {
      return bool_expr::constant( true );
    }
    terms.push_back( implicant_to_expr( term ) );
  }
  return make_sum( std::move( terms ) );
}

} // namespace bnkmap
