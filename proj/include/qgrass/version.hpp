#ifndef QGRASS_VERSION_HPP
#define QGRASS_VERSION_HPP

namespace qgrass
{

inline constexpr const char *version = "0.1.0";

} // namespace qgrass

#endif
