#ifndef SCQMAP_VERSION_HPP
#define SCQMAP_VERSION_HPP

namespace scq {
inline constexpr const char* version = "0.1.0";
}

#endif
