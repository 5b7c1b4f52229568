#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace citecurve {

using Count = std::int64_t;

/// Per-publication citation counts ranked in decreasing order.
///
/// Rank 0 holds the most-cited publication (c_0). Ties keep the relative
/// order they had in the raw input.
class CitationList {
 public:
  CitationList() = default;

  /// Validates and ranks raw counts. Throws ValidationError naming the
  /// index of the first negative entry.
  static CitationList from_raw(std::span<const Count> raw);

  [[nodiscard]] std::span<const Count> counts() const noexcept { return counts_; }
  [[nodiscard]] std::size_t size() const noexcept { return counts_.size(); }
  [[nodiscard]] bool empty() const noexcept { return counts_.empty(); }
  [[nodiscard]] Count operator[](std::size_t rank) const { return counts_[rank]; }
  /// c_0, or 0 for an empty list.
  [[nodiscard]] Count top() const noexcept { return counts_.empty() ? 0 : counts_.front(); }

  friend bool operator==(const CitationList&, const CitationList&) = default;

 private:
  explicit CitationList(std::vector<Count> counts) : counts_(std::move(counts)) {}
  std::vector<Count> counts_;
};

/// Convenience wrapper around CitationList::from_raw.
CitationList make_citation_list(std::span<const Count> raw);

/// Occurrences of leading decimal digits 1..9; slot d-1 holds digit d.
using DigitHistogram = std::array<std::uint64_t, 9>;

struct MetricsSummary {
  std::uint64_t total = 0;        // S
  std::uint64_t top = 0;          // c_0
  std::uint64_t h = 0;
  std::uint64_t i10 = 0;
  std::uint64_t i20 = 0;
  std::uint64_t cited_count = 0;  // i_1
  std::uint64_t publications = 0; // N
  DigitHistogram digit_histogram{};

  friend bool operator==(const MetricsSummary&, const MetricsSummary&) = default;
};

std::uint64_t total_citations(const CitationList& list);

/// Largest h with at least h publications cited h or more times.
std::uint64_t h_index(const CitationList& list);

/// Number of publications with at least k citations. k = 0 is rejected
/// with DomainError.
std::uint64_t i_index(const CitationList& list, std::uint64_t k);

DigitHistogram first_digit_histogram(const CitationList& list);

/// 1 - i_n/N, the empirical prob(C < n). Throws DegenerateDataError on an
/// empty list.
double empirical_cdf(const CitationList& list, std::uint64_t n);

MetricsSummary summarize(const CitationList& list);

}  // namespace citecurve
