#pragma once

#include <optional>
#include <string_view>
#include <string>

#include "gre/engine/engine.hpp"
#include "gre/error.hpp"

namespace gre {

// pr(v) = base + damping * sum over in-neighbours u of pr(u) / outdeg(u).
// Every vertex stays active; run with a superstep cap.
class PageRank {
 public:
  using vertex_data_type = double;
  using scatter_data_type = double;
  using combine_data_type = double;

  static constexpr std::string_view kName = "pagerank";
  static constexpr bool kCombineActivatesApply = true;
  static constexpr bool kApplyAll = true;
  static constexpr bool kAliasVertexScatter = true;
  static constexpr bool kNeedsWeights = false;

  explicit PageRank(double damping = 0.85, double base = 0.15) : damping_(damping), base_(base) {
    if (!(damping > 0.0 && damping < 1.0)) {
      throw ParameterError("damping must lie in (0, 1), got " + std::to_string(damping));
    }
  }

  double scatter(const double& pr, const EdgeContext& edge) const {
    return pr / static_cast<double>(edge.source_out_degree);
  }
  double combine(const double& a, const double& b) const { return a + b; }
  double combine_identity() const { return 0.0; }
  bool apply(double& pr, double& /*aliased*/, const double& sum) const {
    pr = base_ + damping_ * sum;
    return true;
  }
  bool assert_to_halt() const { return true; }

  double damping() const noexcept { return damping_; }
  double base() const noexcept { return base_; }

 private:
  double damping_;
  double base_;
};

inline auto pagerank_init(double initial = 1.0) {
  return [initial](GlobalId) -> std::optional<MasterInit<double, double>> {
    return MasterInit<double, double>{initial, initial, true};
  };
}

}  // namespace gre
