#pragma once

#include <string>

namespace tanhvol {

/// Formats a value with the 12 significant digits every CSV and baseline
/// artifact uses.
std::string format_sig(double value);

/// Rounds a value through the 12-significant-digit decimal representation,
/// so statistics computed from in-memory values match statistics recomputed
/// from emitted CSV rows bit for bit.
double csv_round(double value);

}  // namespace tanhvol
