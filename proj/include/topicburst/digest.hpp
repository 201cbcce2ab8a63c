#ifndef TOPICBURST_DIGEST_HPP
#define TOPICBURST_DIGEST_HPP

#include <string>
#include <string_view>

namespace topicburst {

// SHA-256 of a byte string, as lowercase hex.
std::string sha256_hex(std::string_view data);

}  // namespace topicburst

#endif
