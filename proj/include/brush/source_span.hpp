#pragma once

#include <cstddef>
#include <string_view>

namespace brush {

/// A region of source text. Lines and columns are 1-based; columns count
/// code points. The end position is exclusive, so an empty span has
/// start == end. Byte offsets are kept alongside for slicing.
struct SourceSpan {
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const SourceSpan&) const = default;

  bool contains(const SourceSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }

  std::string_view slice(std::string_view source) const {
    if (begin >= source.size()) return {};
    return source.substr(begin, end - begin);
  }

  /// Zero-width span positioned at the end of this one.
  SourceSpan end_point() const {
    return SourceSpan{end_line, end_col, end_line, end_col, end, end};
  }

  static SourceSpan cover(const SourceSpan& first, const SourceSpan& last) {
    return SourceSpan{first.start_line, first.start_col, last.end_line,
                      last.end_col,     first.begin,     last.end};
  }
};

}  // namespace brush
