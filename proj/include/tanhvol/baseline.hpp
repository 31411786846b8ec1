#pragma once

#include <map>
#include <string>
#include <vector>

namespace tanhvol {

/// A baseline document: metric name -> value, serialized one `name=value`
/// pair per line with `#` comments, UTF-8.
using BaselineDoc = std::map<std::string, double>;

/// Parses a baseline document. Throws config_error on malformed lines or
/// an unreadable file.
BaselineDoc read_baseline(const std::string& path);

/// Writes the document with a comment header. Throws config_error when the
/// file cannot be written.
void write_baseline(const std::string& path, const BaselineDoc& doc,
                    const std::string& header_comment);

/// Compares current metrics against a frozen baseline with the given
/// relative slack (|cur - base| <= slack*|base|, absolute 1e-15 at zero).
/// Returns a human-readable line per violation; metrics missing on either
/// side are violations too.
std::vector<std::string> check_baseline(const BaselineDoc& current, const BaselineDoc& frozen,
                                        double relative_slack);

}  // namespace tanhvol
