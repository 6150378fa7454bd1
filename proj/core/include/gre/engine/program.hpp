#pragma once

#include <concepts>
#include <cstdint>
#include <type_traits>

#include "gre/graph/types.hpp"

namespace gre {

// What scatter sees of the edge it runs on. For a scatter agent the source is
// its master.
struct EdgeContext {
  Weight weight = 1;
  GlobalId source = 0;
  std::uint64_t source_out_degree = 0;
};

// A vertex program in the scatter-combine model.
//
//   scatter(scatter_data, edge) -> message payload (a combine value)
//   combine(acc, payload)       -> new acc; commutative and associative
//   combine_identity()          -> two-sided identity of combine
//   apply(vertex_data, scatter_data, sum) -> whether to scatter next superstep
//   assert_to_halt()            -> whether a vertex stays scatter-active after
//                                  finishing its out-edges
//
// Static traits:
//   kCombineActivatesApply  a combine on a master schedules its apply
//   kApplyAll               every master applies every superstep
//   kAliasVertexScatter     vertex_data shares storage with scatter_data
//   kNeedsWeights           the program reads edge weights
//
// Combiner agents hold no vertex_data, so combine must not read it.
template <class P>
concept VertexProgram =
    std::is_trivially_copyable_v<typename P::vertex_data_type> &&
    std::is_trivially_copyable_v<typename P::scatter_data_type> &&
    std::is_trivially_copyable_v<typename P::combine_data_type> &&
    requires(const P& p, typename P::vertex_data_type& vertex,
             typename P::scatter_data_type& scatter,
             const typename P::scatter_data_type& scatter_in,
             const typename P::combine_data_type& sum, const EdgeContext& edge) {
      { p.scatter(scatter_in, edge) } -> std::same_as<typename P::combine_data_type>;
      { p.combine(sum, sum) } -> std::same_as<typename P::combine_data_type>;
      { p.combine_identity() } -> std::same_as<typename P::combine_data_type>;
      { p.apply(vertex, scatter, sum) } -> std::same_as<bool>;
      { p.assert_to_halt() } -> std::same_as<bool>;
      { P::kCombineActivatesApply } -> std::convertible_to<bool>;
      { P::kApplyAll } -> std::convertible_to<bool>;
      { P::kAliasVertexScatter } -> std::convertible_to<bool>;
      { P::kNeedsWeights } -> std::convertible_to<bool>;
    } &&
    (!P::kAliasVertexScatter ||
     std::same_as<typename P::vertex_data_type, typename P::scatter_data_type>);

}  // namespace gre
