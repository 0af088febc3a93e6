#pragma once

#include <string>
#include <string_view>

#include "wpo/orders.hpp"

namespace wpo {

// Parses the line-based order-configuration format:
//   order wpo|rpo            (required)
//   base trivial|sum         (default trivial)
//   prec name=rank ...       (repeatable)
//   w0 <nat>                 (sum base only; default 1)
//   weight name=nat ...      (sum base only; repeatable)
//   default_weight <nat>     (sum base only; default 0)
// '#' starts a comment. Unknown keys are rejected, as are `order rpo`
// with `base sum` and weight settings under a trivial base.
OrderConfig parse_order_config(std::string_view text);

OrderConfig load_order_config(const std::string& path);

}  // namespace wpo
