#include "citecurve/core.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "citecurve/errors.hpp"

namespace citecurve {

CitationList CitationList::from_raw(std::span<const Count> raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0) {
      throw ValidationError("negative citation count " + std::to_string(raw[i]) +
                            " at index " + std::to_string(i));
    }
  }
  std::vector<Count> counts(raw.begin(), raw.end());
  std::stable_sort(counts.begin(), counts.end(), std::greater<>{});
  return CitationList(std::move(counts));
}

CitationList make_citation_list(std::span<const Count> raw) {
  return CitationList::from_raw(raw);
}

std::uint64_t total_citations(const CitationList& list) {
  const auto counts = list.counts();
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0},
                         [](std::uint64_t acc, Count c) {
                           return acc + static_cast<std::uint64_t>(c);
                         });
}

std::uint64_t h_index(const CitationList& list) {
  // counts are descending, so the predicate counts[h-1] >= h is monotone
  std::uint64_t h = 0;
  for (const Count c : list.counts()) {
    if (static_cast<std::uint64_t>(c) < h + 1) break;
    ++h;
  }
  return h;
}

std::uint64_t i_index(const CitationList& list, std::uint64_t k) {
  if (k == 0) throw DomainError("i-index threshold must be at least 1");
  const auto counts = list.counts();
  // first position whose count drops below k
  const auto it = std::partition_point(counts.begin(), counts.end(), [k](Count c) {
    return static_cast<std::uint64_t>(c) >= k;
  });
  return static_cast<std::uint64_t>(it - counts.begin());
}

DigitHistogram first_digit_histogram(const CitationList& list) {
  DigitHistogram hist{};
  for (Count c : list.counts()) {
    if (c <= 0) continue;
    while (c >= 10) c /= 10;
    ++hist[static_cast<std::size_t>(c - 1)];
  }
  return hist;
}

double empirical_cdf(const CitationList& list, std::uint64_t n) {
  if (list.empty()) throw DegenerateDataError("empirical CDF of an empty list");
  if (n == 0) return 0.0;
  return 1.0 - static_cast<double>(i_index(list, n)) / static_cast<double>(list.size());
}

MetricsSummary summarize(const CitationList& list) {
  MetricsSummary m;
  m.total = total_citations(list);
  m.top = static_cast<std::uint64_t>(list.top());
  m.h = h_index(list);
  m.i10 = i_index(list, 10);
  m.i20 = i_index(list, 20);
  m.cited_count = i_index(list, 1);
  m.publications = list.size();
  m.digit_histogram = first_digit_histogram(list);
  return m;
}

}  // namespace citecurve
