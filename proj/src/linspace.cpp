#include "ltls/linspace.hpp"

#include <algorithm>
#include <numeric>

#include "ltls/error.hpp"

namespace ltls::ls {

LinearSpace::LinearSpace(std::uint32_t v, std::vector<Line> lines) : v_(v), lines_(std::move(lines)) {
  for (auto& line : lines_) {
    std::sort(line.begin(), line.end());
    if (std::adjacent_find(line.begin(), line.end()) != line.end()) {
      throw Error(ErrorCode::InvalidSpace, "a line repeats a point");
    }
    if (!line.empty() && line.back() >= v_) {
      throw Error(ErrorCode::InvalidSpace, "point " + std::to_string(line.back()) + " out of range");
    }
  }
  std::sort(lines_.begin(), lines_.end());
  for (std::size_t i = 0; i < lines_.size(); ++i) index_.emplace(lines_[i], i);

  if (lines_.empty()) return;
  const std::size_t k = lines_.front().size();
  for (const auto& line : lines_)
    if (line.size() != k) return;
  std::vector<std::uint64_t> through(v_, 0);
  for (const auto& line : lines_)
    for (auto p : line) ++through[p];
  const std::uint64_t r = through.empty() ? 0 : through.front();
  if (std::any_of(through.begin(), through.end(), [&](auto x) { return x != r; })) return;
  const std::uint64_t b = lines_.size();
  if (k < 2 || b * k * (k - 1) != std::uint64_t{v_} * (v_ - 1)) return;
  regular_ = RegularParams{b, v_, k, r};
}

std::optional<std::size_t> LinearSpace::line_index(const Line& sorted_line) const {
  auto it = index_.find(sorted_line);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<std::uint32_t>> LinearSpace::lines_through_points() const {
  std::vector<std::vector<std::uint32_t>> out(v_);
  for (std::size_t l = 0; l < lines_.size(); ++l)
    for (auto p : lines_[l]) out[p].push_back(static_cast<std::uint32_t>(l));
  return out;
}

ValidationReport validate(const LinearSpace& space) {
  ValidationReport rep;
  const std::size_t v = space.v();
  std::vector<std::uint32_t> cover(v * v, 0);
  bool all_long = true;
  for (std::size_t l = 0; l < space.b(); ++l) {
    const auto& line = space.lines()[l];
    if (line.size() < 2) rep.short_lines.push_back(l);
    if (line.size() < 3) all_long = false;
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) ++cover[line[i] * v + line[j]];
  }
  for (std::uint32_t a = 0; a < v; ++a)
    for (std::uint32_t b = a + 1; b < v; ++b) {
      const auto c = cover[a * v + b];
      if (c != 1) rep.violations.push_back({a, b, c});
    }
  rep.valid = rep.violations.empty() && rep.short_lines.empty();
  rep.nontrivial = rep.valid && all_long && space.b() >= 2;
  rep.params = rep.valid ? space.regular_params() : std::nullopt;
  rep.regular = rep.params.has_value();
  return rep;
}

FisherResult fisher_regular(const BigInt& v, const BigInt& k) {
  if (k < 2 || v <= k) throw Error(ErrorCode::DegenerateParams, "need v > k >= 2");
  FisherResult res;
  res.b = Rational(v * (v - 1), k * (k - 1));
  res.r = Rational(v - 1, k - 1);
  if (!is_integer(res.r)) {
    res.failed_condition = "r = (v-1)/(k-1) is not an integer";
  } else if (!is_integer(res.b)) {
    res.failed_condition = "b = v(v-1)/(k(k-1)) is not an integer";
  } else if (res.b < v) {
    res.failed_condition = "b < v";
  } else if (res.r < k) {
    res.failed_condition = "r < k";
  } else {
    res.feasible = true;
  }
  return res;
}

bool fisher_general(const LinearSpace& space) {
  if (!validate(space).valid || space.b() < 2) {
    throw Error(ErrorCode::InvalidSpace, "general Fisher needs a valid space with at least two lines");
  }
  return space.b() >= space.v();
}

namespace {

std::optional<std::size_t> image_line(const LinearSpace& space, const Line& line, const grp::Permutation& g) {
  Line img(line.size());
  for (std::size_t i = 0; i < line.size(); ++i) img[i] = g(line[i]);
  std::sort(img.begin(), img.end());
  return space.line_index(img);
}

void require_domain(const LinearSpace& space, const grp::Permutation& g) {
  if (g.degree() != space.v()) {
    throw Error(ErrorCode::DomainMismatch,
                "permutation degree " + std::to_string(g.degree()) + " vs v = " + std::to_string(space.v()));
  }
}

// Orbit count of the action generated by `images` (one image table per generator).
std::size_t count_orbits(std::size_t n, const std::vector<std::vector<std::uint32_t>>& images) {
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> queue;
  std::size_t orbits = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++orbits;
    seen[s] = true;
    queue.assign(1, static_cast<std::uint32_t>(s));
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& img : images) {
        const auto y = img[queue[i]];
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
  }
  return orbits;
}

}  // namespace

bool is_automorphism(const LinearSpace& space, const grp::Permutation& perm) {
  require_domain(space, perm);
  return std::all_of(space.lines().begin(), space.lines().end(),
                     [&](const Line& line) { return image_line(space, line, perm).has_value(); });
}

Transitivity transitivity(const LinearSpace& space, const grp::PermGroup& group) {
  const std::size_t v = space.v();
  const std::size_t b = space.b();
  std::vector<std::size_t> flag_offset(b + 1, 0);
  for (std::size_t l = 0; l < b; ++l) flag_offset[l + 1] = flag_offset[l] + space.lines()[l].size();

  std::vector<std::vector<std::uint32_t>> on_points, on_lines, on_flags, on_pairs;
  for (const auto& g : group.generators()) {
    require_domain(space, g);
    std::vector<std::uint32_t> pts(v), lns(b), flg(flag_offset[b]), prs(v * v);
    for (std::size_t x = 0; x < v; ++x) pts[x] = g(x);
    for (std::size_t l = 0; l < b; ++l) {
      const auto& line = space.lines()[l];
      auto img = image_line(space, line, g);
      if (!img) throw Error(ErrorCode::NotAutomorphism, "a generator does not preserve the line set");
      lns[l] = static_cast<std::uint32_t>(*img);
      const auto& target = space.lines()[*img];
      for (std::size_t i = 0; i < line.size(); ++i) {
        const auto pos = std::lower_bound(target.begin(), target.end(), g(line[i])) - target.begin();
        flg[flag_offset[l] + i] = static_cast<std::uint32_t>(flag_offset[*img] + pos);
      }
    }
    for (std::size_t x = 0; x < v; ++x)
      for (std::size_t y = 0; y < v; ++y) prs[x * v + y] = static_cast<std::uint32_t>(g(x) * v + g(y));
    on_points.push_back(std::move(pts));
    on_lines.push_back(std::move(lns));
    on_flags.push_back(std::move(flg));
    on_pairs.push_back(std::move(prs));
  }

  Transitivity t;
  t.point_orbits = count_orbits(v, on_points);
  t.line_orbits = count_orbits(b, on_lines);
  t.flag_orbits = count_orbits(flag_offset[b], on_flags);
  // Ordered pairs include the diagonal, which is one extra orbit per point orbit.
  t.pair_orbits = count_orbits(v * v, on_pairs) - t.point_orbits;
  t.point = t.point_orbits == 1;
  t.line = t.line_orbits == 1;
  t.flag = t.flag_orbits == 1;
  t.two_transitive = v >= 2 && t.point && t.pair_orbits == 1;
  return t;
}

FixData fixed_counts(const LinearSpace& space, const grp::Permutation& g) {
  require_domain(space, g);
  FixData fd;
  fd.d_p = g.fixed_point_count();
  for (std::size_t l = 0; l < space.b(); ++l) {
    auto img = image_line(space, space.lines()[l], g);
    if (!img) throw Error(ErrorCode::NotAutomorphism, "permutation does not preserve the line set");
    fd.d_l += *img == l;
  }
  return fd;
}

std::variant<LinearSpace, Collinear> fixed_structure(const LinearSpace& space,
                                                     std::span<const grp::Permutation> elements) {
  std::vector<bool> fixed(space.v(), true);
  for (const auto& g : elements) {
    if (!is_automorphism(space, g)) throw Error(ErrorCode::NotAutomorphism, "element is not an automorphism");
    for (std::size_t x = 0; x < space.v(); ++x)
      if (g(x) != x) fixed[x] = false;
  }
  std::vector<std::uint32_t> fix_points;
  std::vector<std::uint32_t> relabel(space.v(), 0);
  for (std::uint32_t x = 0; x < space.v(); ++x) {
    if (!fixed[x]) continue;
    relabel[x] = static_cast<std::uint32_t>(fix_points.size());
    fix_points.push_back(x);
  }
  if (fix_points.empty()) throw Error(ErrorCode::EmptyFixedSet, "no point is fixed");

  std::vector<Line> induced;
  for (const auto& line : space.lines()) {
    Line meet;
    for (auto p : line)
      if (fixed[p]) meet.push_back(relabel[p]);
    if (meet.size() >= 2) induced.push_back(std::move(meet));
  }
  const bool collinear = fix_points.size() <= 2 ||
                         std::any_of(induced.begin(), induced.end(),
                                     [&](const Line& l) { return l.size() == fix_points.size(); });
  if (collinear) return Collinear{std::move(fix_points)};
  return LinearSpace(static_cast<std::uint32_t>(fix_points.size()), std::move(induced));
}

std::variant<LinearSpace, Collinear> fixed_structure(const LinearSpace& space, const grp::Subgroup& sub) {
  std::vector<grp::Permutation> gens;
  for (auto id : sub.generators()) gens.push_back(sub.parent().element(id));
  return fixed_structure(space, gens);
}

LinearSpace random_linear_space(std::uint32_t v, std::mt19937_64& rng) {
  std::vector<std::vector<bool>> covered(v, std::vector<bool>(v, false));
  std::vector<Line> lines;
  const std::uint32_t max_size = v >= 3 ? std::min<std::uint32_t>(v - 1, 6) : 2;
  while (true) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> open;
    for (std::uint32_t a = 0; a < v; ++a)
      for (std::uint32_t b = a + 1; b < v; ++b)
        if (!covered[a][b]) open.emplace_back(a, b);
    if (open.empty()) break;
    const auto [a, b] = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    const auto target = std::uniform_int_distribution<std::uint32_t>(2, std::max<std::uint32_t>(2, max_size))(rng);
    Line line{a, b};
    std::vector<std::uint32_t> others;
    for (std::uint32_t c = 0; c < v; ++c)
      if (c != a && c != b) others.push_back(c);
    std::shuffle(others.begin(), others.end(), rng);
    for (auto c : others) {
      if (line.size() >= target) break;
      if (std::all_of(line.begin(), line.end(), [&](auto x) { return !covered[std::min(x, c)][std::max(x, c)]; }))
        line.push_back(c);
    }
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j)
        covered[std::min(line[i], line[j])][std::max(line[i], line[j])] = true;
    lines.push_back(std::move(line));
  }
  return LinearSpace(v, std::move(lines));
}

}  // namespace ltls::ls
