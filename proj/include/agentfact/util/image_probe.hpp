#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace agentfact::util {

struct ImageInfo {
  std::string format;  // "png", "jpeg", "gif", "webp"
  uint32_t width = 0;
  uint32_t height = 0;
};

// Reads dimensions from the header bytes of PNG/JPEG/GIF/WebP.
// Throws ImageDecodeError on unknown or truncated data.
ImageInfo probe_image(std::string_view bytes);

ImageInfo probe_image_file(const std::string& path);

}  // namespace agentfact::util
