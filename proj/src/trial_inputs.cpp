#include "opmeans/trial_inputs.hpp"

namespace opmeans {

namespace {

RandomSpec child(const RandomSpec& spec, std::uint64_t stream) {
  RandomSpec out = spec;
  out.seed = derive_seed(spec.seed, stream);
  return out;
}

}  // namespace

ClaimInputs make_trial_inputs(ClaimId claim, const RandomSpec& spec, const std::vector<double>& t_grid) {
  spec.validate();
  auto free_pair = [&] { return std::pair{random_spd(child(spec, 11)), random_spd(child(spec, 12))}; };

  std::pair<SymMatrix, SymMatrix> ab = [&] {
    switch (info(claim).profile) {
      case InputProfile::kOrderedEither: {
        auto [a, b] = random_spd_pair_ordered(child(spec, 13));
        // Alternate between A <= B and B <= A.
        if (derive_seed(spec.seed, 14) & 1u) return std::pair{b, a};
        return std::pair{a, b};
      }
      case InputProfile::kALeB:
        return random_spd_pair_ordered(child(spec, 13));
      case InputProfile::kCommuting:
        return random_spd_pair_commuting(child(spec, 15));
      default:
        return free_pair();
    }
  }();

  ClaimInputs in(std::move(ab.first), std::move(ab.second));
  in.t_grid = t_grid;
  in.seed = spec.seed;
  if (info(claim).profile == InputProfile::kCDominates) {
    in.c = in.a + in.b + random_spd(child(spec, 16));
  }
  if (info(claim).profile == InputProfile::kPairWithX) {
    Rng rng(derive_seed(spec.seed, 17));
    in.x = random_gaussian(spec.dim, spec.dim, rng);
  }
  return in;
}

}  // namespace opmeans
