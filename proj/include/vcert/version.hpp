#ifndef VCERT_VERSION_HPP
#define VCERT_VERSION_HPP

namespace vcert {

inline constexpr const char* kVersion = "vcert 1.0.0";

} // namespace vcert

#endif
