#pragma once

namespace nsz::detail {

// Containers with an `is_zero()` member hide the ADL free function inside
// their own scope; route coefficient tests through here.
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}

}  // namespace nsz::detail
