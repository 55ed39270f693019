#ifndef UNIMOD_VERSION_HPP
#define UNIMOD_VERSION_HPP

namespace unimod {

inline constexpr const char* version = "0.1.0";

} // namespace unimod

#endif // UNIMOD_VERSION_HPP
