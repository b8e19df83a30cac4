#include "kronkit/weights.hpp"

#include "kronkit/error.hpp"
#include "kronkit/exact_linalg.hpp"

namespace kronkit {

std::vector<int> Weight::vector_form(int m) const {
  std::vector<int> v(static_cast<std::size_t>(3 * m), 0);
  v[static_cast<std::size_t>(i - 1)] = 1;
  v[static_cast<std::size_t>(m + j - 1)] = 1;
  v[static_cast<std::size_t>(2 * m + l - 1)] = 1;
  return v;
}

std::vector<int> NegativeRoot::vector_form(int m) const {
  std::vector<int> v(static_cast<std::size_t>(3 * m), 0);
  const int offset = static_cast<int>(block) * m;
  v[static_cast<std::size_t>(offset + i - 1)] = 1;
  v[static_cast<std::size_t>(offset + j - 1)] = -1;
  return v;
}

void HyperplaneCandidate::check_shape(int m) const {
  for (Subsystem s : kSubsystems) {
    const auto& comp = component(s);
    if (static_cast<int>(comp.size()) != m) {
      throw Error(Errc::ShapeMismatch, std::string("H_") + subsystem_name(s) + " has length " +
                                           std::to_string(comp.size()) + ", expected m=" + std::to_string(m));
    }
  }
}

void HyperplaneCandidate::validate(int m) const {
  check_shape(m);
  for (Subsystem s : kSubsystems) {
    const auto& comp = component(s);
    Integer sum = 0;
    for (const auto& x : comp) sum += x;
    if (sum != 0) {
      throw Error(Errc::ComponentNotTraceless, std::string("H_") + subsystem_name(s) + " sums to " + sum.get_str());
    }
  }
}

HyperplaneCandidate HyperplaneCandidate::negated() const {
  HyperplaneCandidate out(*this);
  for (auto& comp : out.H) {
    for (auto& x : comp) x = -x;
  }
  out.z = -out.z;
  return out;
}

Integer dot(const Weight& w, const HyperplaneCandidate& h) {
  return h.H[0][static_cast<std::size_t>(w.i - 1)] + h.H[1][static_cast<std::size_t>(w.j - 1)] +
         h.H[2][static_cast<std::size_t>(w.l - 1)];
}

Integer dot(const NegativeRoot& a, const HyperplaneCandidate& h) {
  const auto& comp = h.component(a.block);
  return comp[static_cast<std::size_t>(a.i - 1)] - comp[static_cast<std::size_t>(a.j - 1)];
}

std::vector<Weight> weights(int m, int max_rank) {
  if (m < 1) throw Error(Errc::IndexOutOfRange, "rank must be positive");
  if (m > max_rank) {
    throw Error(Errc::RankTooLarge, "m=" + std::to_string(m) + " exceeds the cap " + std::to_string(max_rank));
  }
  std::vector<Weight> out;
  out.reserve(static_cast<std::size_t>(m * m * m));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      for (int l = 1; l <= m; ++l) out.push_back({i, j, l});
    }
  }
  return out;
}

std::vector<NegativeRoot> negative_roots(int m) {
  std::vector<NegativeRoot> out;
  for (Subsystem s : kSubsystems) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j < i; ++j) out.push_back({s, i, j});
    }
  }
  return out;
}

WeightSplit split_weights(const HyperplaneCandidate& h, int m) {
  h.check_shape(m);
  WeightSplit split;
  for (const Weight& w : weights(m)) {
    const int c = cmp(dot(w, h), h.z);
    (c == 0 ? split.equal : (c < 0 ? split.less : split.greater)).push_back(w);
  }
  return split;
}

std::vector<NegativeRoot> negative_roots_on(const HyperplaneCandidate& h, int m) {
  h.check_shape(m);
  std::vector<NegativeRoot> out;
  for (const NegativeRoot& a : negative_roots(m)) {
    if (sgn(dot(a, h)) < 0) out.push_back(a);
  }
  return out;
}

std::size_t affine_rank(std::span<const Weight> s, int m) {
  const auto dim = static_cast<std::size_t>(3 * m);
  IntegerMatrix mat(dim + 1, s.size(), Integer(0));
  for (std::size_t c = 0; c < s.size(); ++c) {
    const auto v = s[c].vector_form(m);
    for (std::size_t r = 0; r < dim; ++r) mat(r, c) = v[r];
    mat(dim, c) = -1;
  }
  return exact_rank(std::move(mat));
}

}  // namespace kronkit
