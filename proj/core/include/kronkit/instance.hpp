#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kronkit {

/// Partition of `boxes()` into weakly decreasing positive rows.
class YoungDiagram {
 public:
  YoungDiagram() = default;

  const std::vector<int>& rows() const noexcept { return rows_; }
  int height() const noexcept { return static_cast<int>(rows_.size()); }
  int boxes() const noexcept { return boxes_; }
  /// Row lengths padded with zeros to length m (m >= height()).
  std::vector<int> padded(int m) const;
  /// Diagram with every row multiplied by l.
  YoungDiagram stretched(int l) const;
  /// "2,1"
  std::string str() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  friend YoungDiagram parse_young(std::span<const int> rows);
  std::vector<int> rows_;
  int boxes_ = 0;
};

/// Validates a row list. Throws NotWeaklyDecreasing, NonPositiveRow or EmptyDiagram.
YoungDiagram parse_young(std::span<const int> rows);
inline YoungDiagram parse_young(std::initializer_list<int> rows) {
  return parse_young(std::span<const int>(rows.begin(), rows.size()));
}
/// Parses "2,1" (comma separated rows).
YoungDiagram parse_young(const std::string& text);

enum class Subsystem { A = 0, B = 1, C = 2 };
inline constexpr std::array<Subsystem, 3> kSubsystems = {Subsystem::A, Subsystem::B, Subsystem::C};
char subsystem_name(Subsystem s) noexcept;

/// A KronPolytope instance: three diagrams with k boxes each, embedded in
/// rank m. The point under test is (lambda_A, lambda_B, lambda_C) / k.
class KronInstance {
 public:
  const YoungDiagram& lambda(Subsystem s) const { return lambdas_[static_cast<int>(s)]; }
  const std::array<YoungDiagram, 3>& lambdas() const noexcept { return lambdas_; }
  int k() const noexcept { return k_; }
  int m() const noexcept { return m_; }
  /// True when m was raised above the maximal height.
  bool rank_overridden() const noexcept { return overridden_; }
  std::vector<int> padded(Subsystem s) const { return lambda(s).padded(m_); }
  /// Same instance with every diagram and k multiplied by l.
  KronInstance stretched(int l) const;

 private:
  friend KronInstance make_instance(const YoungDiagram&, const YoungDiagram&, const YoungDiagram&, int,
                                    std::optional<int>);
  std::array<YoungDiagram, 3> lambdas_;
  int k_ = 0;
  int m_ = 0;
  bool overridden_ = false;
};

/// Throws BoxCountMismatch or RankTooSmall.
KronInstance make_instance(const YoungDiagram& lambda_a, const YoungDiagram& lambda_b, const YoungDiagram& lambda_c,
                           int k, std::optional<int> m_override = std::nullopt);

/// Zero-based ordinal of the weight (i, j, l), 1 <= i,j,l <= m, in lexicographic
/// order. Throws IndexOutOfRange.
std::size_t weight_index(int m, int i, int j, int l);

}  // namespace kronkit
