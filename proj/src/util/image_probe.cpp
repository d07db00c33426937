#include "agentfact/util/image_probe.hpp"

#include <fstream>
#include <sstream>

#include "agentfact/errors.hpp"

namespace agentfact::util {

namespace {

uint32_t be32(std::string_view s, size_t off) {
  return (static_cast<uint8_t>(s[off]) << 24) | (static_cast<uint8_t>(s[off + 1]) << 16) |
         (static_cast<uint8_t>(s[off + 2]) << 8) | static_cast<uint8_t>(s[off + 3]);
}
uint32_t be16(std::string_view s, size_t off) {
  return (static_cast<uint8_t>(s[off]) << 8) | static_cast<uint8_t>(s[off + 1]);
}
uint32_t le16(std::string_view s, size_t off) {
  return static_cast<uint8_t>(s[off]) | (static_cast<uint8_t>(s[off + 1]) << 8);
}
uint32_t le24(std::string_view s, size_t off) {
  return static_cast<uint8_t>(s[off]) | (static_cast<uint8_t>(s[off + 1]) << 8) |
         (static_cast<uint8_t>(s[off + 2]) << 16);
}

ImageInfo probe_png(std::string_view b) {
  if (b.size() < 24) throw ImageDecodeError("truncated png header");
  if (b.substr(12, 4) != "IHDR") throw ImageDecodeError("png missing IHDR");
  return {"png", be32(b, 16), be32(b, 20)};
}

ImageInfo probe_gif(std::string_view b) {
  if (b.size() < 10) throw ImageDecodeError("truncated gif header");
  return {"gif", le16(b, 6), le16(b, 8)};
}

ImageInfo probe_jpeg(std::string_view b) {
  size_t i = 2;
  while (i + 4 <= b.size()) {
    if (static_cast<uint8_t>(b[i]) != 0xFF) throw ImageDecodeError("jpeg marker desync");
    uint8_t marker = static_cast<uint8_t>(b[i + 1]);
    if (marker == 0xFF) {  // fill byte
      ++i;
      continue;
    }
    if (marker == 0xD8 || (marker >= 0xD0 && marker <= 0xD7)) {
      i += 2;
      continue;
    }
    const size_t seg_len = be16(b, i + 2);
    if (seg_len < 2) throw ImageDecodeError("jpeg bad segment length");
    const bool is_sof = marker >= 0xC0 && marker <= 0xCF && marker != 0xC4 &&
                        marker != 0xC8 && marker != 0xCC;
    if (is_sof) {
      if (i + 9 >= b.size()) throw ImageDecodeError("truncated jpeg SOF");
      return {"jpeg", be16(b, i + 7), be16(b, i + 5)};
    }
    if (marker == 0xDA) break;  // start of scan, no SOF seen
    i += 2 + seg_len;
  }
  throw ImageDecodeError("jpeg dimensions not found");
}

ImageInfo probe_webp(std::string_view b) {
  if (b.size() < 30) throw ImageDecodeError("truncated webp header");
  const std::string_view fourcc = b.substr(12, 4);
  if (fourcc == "VP8 ") {
    if (!(static_cast<uint8_t>(b[23]) == 0x9D && static_cast<uint8_t>(b[24]) == 0x01 &&
          static_cast<uint8_t>(b[25]) == 0x2A))
      throw ImageDecodeError("webp vp8 sync code missing");
    return {"webp", le16(b, 26) & 0x3FFFu, le16(b, 28) & 0x3FFFu};
  }
  if (fourcc == "VP8L") {
    if (static_cast<uint8_t>(b[20]) != 0x2F) throw ImageDecodeError("webp vp8l signature missing");
    const uint32_t bits = static_cast<uint8_t>(b[21]) | (static_cast<uint8_t>(b[22]) << 8) |
                          (static_cast<uint8_t>(b[23]) << 16) |
                          (static_cast<uint8_t>(b[24]) << 24);
    return {"webp", (bits & 0x3FFFu) + 1, ((bits >> 14) & 0x3FFFu) + 1};
  }
  if (fourcc == "VP8X") return {"webp", le24(b, 24) + 1, le24(b, 27) + 1};
  throw ImageDecodeError("unknown webp variant");
}

}  // namespace

ImageInfo probe_image(std::string_view b) {
  if (b.size() >= 8 && b.substr(0, 8) == "\x89PNG\r\n\x1a\n") return probe_png(b);
  if (b.size() >= 6 && (b.substr(0, 6) == "GIF87a" || b.substr(0, 6) == "GIF89a"))
    return probe_gif(b);
  if (b.size() >= 2 && static_cast<uint8_t>(b[0]) == 0xFF && static_cast<uint8_t>(b[1]) == 0xD8)
    return probe_jpeg(b);
  if (b.size() >= 12 && b.substr(0, 4) == "RIFF" && b.substr(8, 4) == "WEBP")
    return probe_webp(b);
  throw ImageDecodeError("unrecognized image format");
}

ImageInfo probe_image_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageDecodeError("cannot open image file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return probe_image(buf.str());
}

}  // namespace agentfact::util
