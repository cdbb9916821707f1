// SPDX-License-Identifier: Apache-2.0

#include "covtrends/normalize.hpp"

namespace covtrends {

namespace {

// ASCII fold for precomposed Latin letters (Latin-1 Supplement,
// Latin Extended-A and the common Extended-B / pinyin forms).
// Returns nullptr when the codepoint has no fold.
const char* latin_fold(char32_t cp) {
  switch (cp) {
    case 0x00C0: case 0x00C1: case 0x00C2: case 0x00C3: case 0x00C4: case 0x00C5:
    case 0x00E0: case 0x00E1: case 0x00E2: case 0x00E3: case 0x00E4: case 0x00E5:
    case 0x0100: case 0x0101: case 0x0102: case 0x0103: case 0x0104: case 0x0105:
    case 0x01CD: case 0x01CE:
      return "a";
    case 0x00C6: case 0x00E6:
      return "ae";
    case 0x00C7: case 0x00E7: case 0x0106: case 0x0107: case 0x0108: case 0x0109:
    case 0x010A: case 0x010B: case 0x010C: case 0x010D:
      return "c";
    case 0x00D0: case 0x00F0: case 0x010E: case 0x010F: case 0x0110: case 0x0111:
      return "d";
    case 0x00C8: case 0x00C9: case 0x00CA: case 0x00CB:
    case 0x00E8: case 0x00E9: case 0x00EA: case 0x00EB:
    case 0x0112: case 0x0113: case 0x0114: case 0x0115: case 0x0116: case 0x0117:
    case 0x0118: case 0x0119: case 0x011A: case 0x011B:
      return "e";
    case 0x011C: case 0x011D: case 0x011E: case 0x011F: case 0x0120: case 0x0121:
    case 0x0122: case 0x0123:
      return "g";
    case 0x0124: case 0x0125: case 0x0126: case 0x0127:
      return "h";
    case 0x00CC: case 0x00CD: case 0x00CE: case 0x00CF:
    case 0x00EC: case 0x00ED: case 0x00EE: case 0x00EF:
    case 0x0128: case 0x0129: case 0x012A: case 0x012B: case 0x012C: case 0x012D:
    case 0x012E: case 0x012F: case 0x0130: case 0x0131: case 0x01CF: case 0x01D0:
      return "i";
    case 0x0132: case 0x0133:
      return "ij";
    case 0x0134: case 0x0135:
      return "j";
    case 0x0136: case 0x0137: case 0x0138:
      return "k";
    case 0x0139: case 0x013A: case 0x013B: case 0x013C: case 0x013D: case 0x013E:
    case 0x013F: case 0x0140: case 0x0141: case 0x0142:
      return "l";
    case 0x00D1: case 0x00F1: case 0x0143: case 0x0144: case 0x0145: case 0x0146:
    case 0x0147: case 0x0148: case 0x0149: case 0x014A: case 0x014B:
      return "n";
    case 0x00D2: case 0x00D3: case 0x00D4: case 0x00D5: case 0x00D6: case 0x00D8:
    case 0x00F2: case 0x00F3: case 0x00F4: case 0x00F5: case 0x00F6: case 0x00F8:
    case 0x014C: case 0x014D: case 0x014E: case 0x014F: case 0x0150: case 0x0151:
    case 0x01A0: case 0x01A1: case 0x01D1: case 0x01D2:
      return "o";
    case 0x0152: case 0x0153:
      return "oe";
    case 0x0154: case 0x0155: case 0x0156: case 0x0157: case 0x0158: case 0x0159:
      return "r";
    case 0x015A: case 0x015B: case 0x015C: case 0x015D: case 0x015E: case 0x015F:
    case 0x0160: case 0x0161: case 0x017F: case 0x0218: case 0x0219:
      return "s";
    case 0x00DF:
      return "ss";
    case 0x0162: case 0x0163: case 0x0164: case 0x0165: case 0x0166: case 0x0167:
    case 0x021A: case 0x021B:
      return "t";
    case 0x00DE: case 0x00FE:
      return "th";
    case 0x00D9: case 0x00DA: case 0x00DB: case 0x00DC:
    case 0x00F9: case 0x00FA: case 0x00FB: case 0x00FC:
    case 0x0168: case 0x0169: case 0x016A: case 0x016B: case 0x016C: case 0x016D:
    case 0x016E: case 0x016F: case 0x0170: case 0x0171: case 0x0172: case 0x0173:
    case 0x01AF: case 0x01B0: case 0x01D3: case 0x01D4:
      return "u";
    case 0x0174: case 0x0175:
      return "w";
    case 0x00DD: case 0x00FD: case 0x00FF: case 0x0176: case 0x0177: case 0x0178:
      return "y";
    case 0x0179: case 0x017A: case 0x017B: case 0x017C: case 0x017D: case 0x017E:
      return "z";
    default:
      return nullptr;
  }
}

bool is_space_cp(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

// Permissive UTF-8 decode: on an invalid sequence the lead byte is
// consumed alone and returned as its own value.
char32_t decode_utf8(std::string_view s, std::size_t pos, std::size_t* len) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    *len = 1;
    return b0;
  }
  std::size_t need = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    need = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    need = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    need = 3;
    cp = b0 & 0x07;
  } else {
    *len = 1;
    return b0;
  }
  if (pos + need >= s.size()) {
    *len = 1;
    return b0;
  }
  for (std::size_t i = 1; i <= need; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) {
      *len = 1;
      return b0;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  *len = need + 1;
  return cp;
}

void encode_utf8(char32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

NormalizedText normalize_text(std::string_view text) {
  NormalizedText out;
  out.text.reserve(text.size());
  out.src_begin.reserve(text.size());
  out.src_end.reserve(text.size());

  bool pending_space = false;
  std::uint32_t ws_begin = 0;
  std::uint32_t ws_end = 0;

  auto emit = [&](std::string_view bytes, std::uint32_t begin, std::uint32_t end) {
    if (pending_space && !out.text.empty()) {
      out.text.push_back(' ');
      out.src_begin.push_back(ws_begin);
      out.src_end.push_back(ws_end);
    }
    pending_space = false;
    for (char c : bytes) {
      out.text.push_back(c);
      out.src_begin.push_back(begin);
      out.src_end.push_back(end);
    }
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = 0;
    char32_t cp = decode_utf8(text, pos, &len);
    const auto begin = static_cast<std::uint32_t>(pos);
    const auto end = static_cast<std::uint32_t>(pos + len);
    pos += len;

    if (cp == '#' || cp == '@') continue;
    if (is_space_cp(cp)) {
      if (!pending_space) ws_begin = begin;
      ws_end = end;
      pending_space = true;
      continue;
    }
    if (cp >= 'A' && cp <= 'Z') {
      const char lower = static_cast<char>(cp - 'A' + 'a');
      emit({&lower, 1}, begin, end);
      continue;
    }
    if (const char* fold = latin_fold(cp)) {
      emit(fold, begin, end);
      continue;
    }
    if (cp < 0x80) {
      const char c = static_cast<char>(cp);
      emit({&c, 1}, begin, end);
      continue;
    }
    std::string buf;
    encode_utf8(cp, &buf);
    emit(buf, begin, end);
  }
  return out;
}

std::string normalize_surface(std::string_view text) {
  return normalize_text(text).text;
}

}  // namespace covtrends
