// caeval/alignment.hpp

// Copyright 2026  caeval authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CAEVAL_ALIGNMENT_HPP_
#define CAEVAL_ALIGNMENT_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace caeval {

// Minimum-edit-distance alignment over any symbol type, with equal unit
// costs for substitution, insertion and deletion.  The backtrace is
// deterministic: when several predecessors are equally cheap, the first
// feasible kind in a fixed preference order wins, so two runs over the
// same input produce the same op sequence.  The preference order can be
// changed; the error counts (and hence any accuracy derived from them)
// never depend on it, only the op layout does.

enum class OpKind { Match, Substitute, Insert, Delete };

inline const char *op_kind_name(OpKind k) {
  switch (k) {
    case OpKind::Match: return "MATCH";
    case OpKind::Substitute: return "SUB";
    case OpKind::Insert: return "INS";
    case OpKind::Delete: return "DEL";
  }
  return "?";
}

/// One backtrace step.  Match/Substitute carry both indices, Delete only
/// the reference index, Insert only the hypothesis index.
struct AlignmentOp {
  OpKind kind = OpKind::Match;
  std::optional<std::size_t> ref_index;
  std::optional<std::size_t> hyp_index;

  bool operator==(const AlignmentOp &) const = default;
};

struct Alignment {
  std::vector<AlignmentOp> ops;
  std::size_t ref_len = 0;
  std::size_t hyp_len = 0;
};

/// Error tallies of one alignment.  Two identities always hold:
///   matches + substitutions + deletions  == ref_total
///   matches + substitutions + insertions == hypothesis length
struct EditCounts {
  std::size_t substitutions = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::size_t matches = 0;
  std::size_t ref_total = 0;

  std::size_t errors() const { return substitutions + insertions + deletions; }

  bool operator==(const EditCounts &) const = default;
};

using BacktracePreference = std::array<OpKind, 4>;

inline constexpr BacktracePreference kDefaultBacktracePreference{
    OpKind::Match, OpKind::Substitute, OpKind::Delete, OpKind::Insert};

namespace detail {

inline void check_preference(const BacktracePreference &prefer) {
  std::array<bool, 4> seen{};
  for (OpKind k : prefer) seen[static_cast<std::size_t>(k)] = true;
  if (!(seen[0] && seen[1] && seen[2] && seen[3])) {
    throw std::invalid_argument(
        "backtrace preference must list each op kind exactly once");
  }
}

}  // namespace detail

/// Optimal alignment of hyp against ref under unit costs.  `equal` is the
/// symbol equality relation; either sequence may be empty.
template <typename Symbol, typename Equal = std::equal_to<>>
Alignment align(std::span<const Symbol> ref, std::span<const Symbol> hyp,
                Equal equal = {},
                const BacktracePreference &prefer = kDefaultBacktracePreference) {
  detail::check_preference(prefer);
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();

  // Full (n+1) x (m+1) cost matrix; utterances are short.
  std::vector<std::uint32_t> cost((n + 1) * (m + 1));
  auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };
  for (std::size_t i = 0; i <= n; ++i) cost[at(i, 0)] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j <= m; ++j) cost[at(0, j)] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t diag =
          cost[at(i - 1, j - 1)] + (equal(ref[i - 1], hyp[j - 1]) ? 0u : 1u);
      const std::uint32_t del = cost[at(i - 1, j)] + 1u;
      const std::uint32_t ins = cost[at(i, j - 1)] + 1u;
      cost[at(i, j)] = std::min({diag, del, ins});
    }
  }

  // Backtrace from (n, m); at each cell take the first preferred op kind
  // that both applies and stays on an optimal path.
  Alignment result;
  result.ref_len = n;
  result.hyp_len = m;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const std::uint32_t here = cost[at(i, j)];
    bool stepped = false;
    for (OpKind kind : prefer) {
      switch (kind) {
        case OpKind::Match:
          if (i > 0 && j > 0 && equal(ref[i - 1], hyp[j - 1]) &&
              cost[at(i - 1, j - 1)] == here) {
            result.ops.push_back({OpKind::Match, i - 1, j - 1});
            --i, --j;
            stepped = true;
          }
          break;
        case OpKind::Substitute:
          if (i > 0 && j > 0 && !equal(ref[i - 1], hyp[j - 1]) &&
              cost[at(i - 1, j - 1)] + 1u == here) {
            result.ops.push_back({OpKind::Substitute, i - 1, j - 1});
            --i, --j;
            stepped = true;
          }
          break;
        case OpKind::Delete:
          if (i > 0 && cost[at(i - 1, j)] + 1u == here) {
            result.ops.push_back({OpKind::Delete, i - 1, std::nullopt});
            --i;
            stepped = true;
          }
          break;
        case OpKind::Insert:
          if (j > 0 && cost[at(i, j - 1)] + 1u == here) {
            result.ops.push_back({OpKind::Insert, std::nullopt, j - 1});
            --j;
            stepped = true;
          }
          break;
      }
      if (stepped) break;
    }
    if (!stepped) {
      throw std::logic_error("alignment backtrace stalled");  // unreachable
    }
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

template <typename Symbol, typename Equal = std::equal_to<>>
Alignment align(const std::vector<Symbol> &ref, const std::vector<Symbol> &hyp,
                Equal equal = {},
                const BacktracePreference &prefer = kDefaultBacktracePreference) {
  return align(std::span<const Symbol>(ref), std::span<const Symbol>(hyp),
               equal, prefer);
}

inline EditCounts edit_counts(const Alignment &alignment) {
  EditCounts counts;
  counts.ref_total = alignment.ref_len;
  for (const AlignmentOp &op : alignment.ops) {
    switch (op.kind) {
      case OpKind::Match: ++counts.matches; break;
      case OpKind::Substitute: ++counts.substitutions; break;
      case OpKind::Insert: ++counts.insertions; break;
      case OpKind::Delete: ++counts.deletions; break;
    }
  }
  return counts;
}

/// Diagnostic table: REF row, HYP row, tag row.  Gaps left by Insert and
/// Delete are drawn as "*".  Symbols are rendered through `show`.
template <typename Symbol, typename Show>
std::string render_alignment(const Alignment &alignment,
                             std::span<const Symbol> ref,
                             std::span<const Symbol> hyp, Show show) {
  std::vector<std::string> ref_cells, hyp_cells, tag_cells;
  ref_cells.reserve(alignment.ops.size());
  for (const AlignmentOp &op : alignment.ops) {
    ref_cells.push_back(op.ref_index ? show(ref[*op.ref_index]) : std::string("*"));
    hyp_cells.push_back(op.hyp_index ? show(hyp[*op.hyp_index]) : std::string("*"));
    tag_cells.emplace_back(op_kind_name(op.kind));
  }
  std::ostringstream out;
  auto row = [&](const char *label, const std::vector<std::string> &cells) {
    out << label;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::size_t width = std::max(
          {ref_cells[c].size(), hyp_cells[c].size(), tag_cells[c].size()});
      out << ' ' << cells[c]
          << std::string(width - cells[c].size(), ' ');
    }
    out << '\n';
  };
  row("REF:", ref_cells);
  row("HYP:", hyp_cells);
  row("    ", tag_cells);
  return out.str();
}

inline std::string render_alignment(const Alignment &alignment,
                                    std::span<const std::string> ref,
                                    std::span<const std::string> hyp) {
  return render_alignment(alignment, ref, hyp,
                          [](const std::string &s) { return s; });
}

inline std::string render_alignment(const Alignment &alignment,
                                    const std::vector<std::string> &ref,
                                    const std::vector<std::string> &hyp) {
  return render_alignment(alignment, std::span<const std::string>(ref),
                          std::span<const std::string>(hyp));
}

}  // namespace caeval

#endif  // CAEVAL_ALIGNMENT_HPP_
