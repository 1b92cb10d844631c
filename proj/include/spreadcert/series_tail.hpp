#pragma once

namespace spreadcert {

/// Upper bound for sum_{l >= first} (scale * l + shift)^power * ratio^l with
/// 0 <= ratio < 1 and power >= 0. Terms are added explicitly until the
/// consecutive-term ratio drops below (1 + ratio) / 2, then the rest is closed
/// by a geometric majorant. Returns +inf when ratio >= 1.
double power_geometric_tail(double power, double ratio, long first, double scale = 1.0, double shift = 0.0);

}  // namespace spreadcert
