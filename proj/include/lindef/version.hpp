#ifndef LINDEF_VERSION_HPP
#define LINDEF_VERSION_HPP

namespace lindef {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
