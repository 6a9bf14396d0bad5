#include "ltls/construct.hpp"

#include <algorithm>
#include <map>

#include "ltls/error.hpp"

namespace ltls::construct {

Construction pg2(std::uint64_t q, const grp::GroupBuildOptions& opts) {
  auto g = grp::psl3(q, opts);
  const auto& space = g.space;
  const auto& f = *g.field;
  // Line of the dual point u: all x with sum x_i u_i = 0.
  std::vector<ls::Line> lines;
  lines.reserve(space.size());
  for (std::size_t u = 0; u < space.size(); ++u) {
    auto cu = space.coords(u);
    ls::Line line;
    for (std::size_t x = 0; x < space.size(); ++x) {
      auto cx = space.coords(x);
      std::uint64_t dot = 0;
      for (unsigned i = 0; i < 3; ++i) dot = f.add(dot, f.mul(cx[i], cu[i]));
      if (dot == 0) line.push_back(static_cast<std::uint32_t>(x));
    }
    lines.push_back(std::move(line));
  }
  return {ls::LinearSpace(static_cast<std::uint32_t>(space.size()), std::move(lines)), std::move(g.group)};
}

grp::Permutation pg2_frobenius(std::uint64_t q) {
  grp::ProjectiveSpace space(grp::field_for_order(q), 3);
  return space.field_automorphism(1);
}

Construction wbs(std::uint64_t q, const grp::GroupBuildOptions& opts) {
  auto pp = as_prime_power(q);
  if (!pp) throw Error(ErrorCode::InvalidQ, std::to_string(q) + " is not a prime power");
  if (pp->prime != 2) throw Error(ErrorCode::NotCharacteristicTwo, "q must be a power of 2");
  if (pp->exponent < 3) throw Error(ErrorCode::TooSmall, "q = 2^a with a >= 3 required");

  grp::GroupBuildOptions enum_opts = opts;
  enum_opts.enumerate = true;
  const auto base = grp::psl2(q, enum_opts);
  const auto& g = base.group;

  const auto dihedrals = grp::dihedral_subgroups(g, 2 * (q + 1));
  std::map<std::vector<grp::ElementId>, std::uint32_t> point_of;
  for (std::size_t i = 0; i < dihedrals.size(); ++i) {
    point_of.emplace(dihedrals[i].members(), static_cast<std::uint32_t>(i));
  }

  std::vector<ls::Line> lines;
  for (auto t : grp::involutions(g)) {
    ls::Line line;
    for (std::size_t i = 0; i < dihedrals.size(); ++i)
      if (dihedrals[i].contains(t)) line.push_back(static_cast<std::uint32_t>(i));
    lines.push_back(std::move(line));
  }

  // Conjugation action of each generator on the dihedral subgroups.
  std::vector<grp::Permutation> gens;
  for (auto gid : g.generator_ids()) {
    std::vector<grp::Point> img(dihedrals.size());
    for (std::size_t i = 0; i < dihedrals.size(); ++i) {
      std::vector<grp::ElementId> conj;
      conj.reserve(dihedrals[i].order());
      for (auto m : dihedrals[i].members()) conj.push_back(g.conjugate(m, gid));
      std::sort(conj.begin(), conj.end());
      img[i] = static_cast<grp::Point>(point_of.at(conj));
    }
    gens.emplace_back(std::move(img));
  }

  const auto v = static_cast<std::uint32_t>(dihedrals.size());
  auto action = opts.enumerate ? grp::PermGroup::enumerate(v, std::move(gens), opts.cap, g.size())
                               : grp::PermGroup::generators_only(v, std::move(gens), g.order());
  return {ls::LinearSpace(v, std::move(lines)), std::move(action)};
}

}  // namespace ltls::construct
