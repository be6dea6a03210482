#ifndef GRASSHODGE_VERSION_HPP
#define GRASSHODGE_VERSION_HPP

namespace grasshodge {

inline constexpr const char* kVersion = "0.1.0";

} // namespace grasshodge

#endif
