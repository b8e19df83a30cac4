#include "kronkit/instance.hpp"

#include <algorithm>
#include <charconv>

#include "kronkit/error.hpp"

namespace kronkit {

YoungDiagram parse_young(std::span<const int> rows) {
  if (rows.empty()) throw Error(Errc::EmptyDiagram, "a Young diagram needs at least one row");
  YoungDiagram d;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0) throw Error(Errc::NonPositiveRow, "row " + std::to_string(i + 1) + " is not positive");
    if (i > 0 && rows[i] > rows[i - 1]) {
      throw Error(Errc::NotWeaklyDecreasing, "row " + std::to_string(i + 1) + " exceeds the row above it");
    }
    d.boxes_ += rows[i];
  }
  d.rows_.assign(rows.begin(), rows.end());
  return d;
}

YoungDiagram parse_young(const std::string& text) {
  std::vector<int> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    int value = 0;
    const char* first = text.data() + start;
    const char* last = text.data() + end;
    while (first < last && *first == ' ') ++first;
    while (last > first && last[-1] == ' ') --last;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw Error(Errc::ParseError, "bad row list '" + text + "'");
    rows.push_back(value);
    start = end + 1;
  }
  return parse_young(std::span<const int>(rows));
}

std::vector<int> YoungDiagram::padded(int m) const {
  std::vector<int> out(rows_);
  out.resize(static_cast<std::size_t>(std::max(m, height())), 0);
  return out;
}

YoungDiagram YoungDiagram::stretched(int l) const {
  YoungDiagram d(*this);
  for (int& r : d.rows_) r *= l;
  d.boxes_ *= l;
  return d;
}

std::string YoungDiagram::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rows_[i]);
  }
  return s;
}

char subsystem_name(Subsystem s) noexcept { return "ABC"[static_cast<int>(s)]; }

KronInstance make_instance(const YoungDiagram& lambda_a, const YoungDiagram& lambda_b, const YoungDiagram& lambda_c,
                           int k, std::optional<int> m_override) {
  KronInstance inst;
  inst.lambdas_ = {lambda_a, lambda_b, lambda_c};
  for (Subsystem s : kSubsystems) {
    if (inst.lambda(s).boxes() != k) {
      throw Error(Errc::BoxCountMismatch, std::string("lambda_") + subsystem_name(s) + " has " +
                                              std::to_string(inst.lambda(s).boxes()) + " boxes, expected k=" +
                                              std::to_string(k));
    }
  }
  const int max_height = std::max({lambda_a.height(), lambda_b.height(), lambda_c.height()});
  inst.k_ = k;
  inst.m_ = max_height;
  if (m_override) {
    if (*m_override < max_height) {
      throw Error(Errc::RankTooSmall, "m=" + std::to_string(*m_override) + " is below the maximal height " +
                                          std::to_string(max_height));
    }
    inst.overridden_ = *m_override > max_height;
    inst.m_ = *m_override;
  }
  return inst;
}

KronInstance KronInstance::stretched(int l) const {
  KronInstance out(*this);
  for (auto& d : out.lambdas_) d = d.stretched(l);
  out.k_ *= l;
  return out;
}

std::size_t weight_index(int m, int i, int j, int l) {
  for (int v : {i, j, l}) {
    if (v < 1 || v > m) throw Error(Errc::IndexOutOfRange, "weight index outside 1.." + std::to_string(m));
  }
  const auto mm = static_cast<std::size_t>(m);
  return (static_cast<std::size_t>(i - 1) * mm + static_cast<std::size_t>(j - 1)) * mm + static_cast<std::size_t>(l - 1);
}

}  // namespace kronkit
