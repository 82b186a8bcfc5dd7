// Copyright 2026 The bgtex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bgtex/frame_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace bgtex {
namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Reads the next whitespace-delimited header token, skipping '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {}
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

int parse_positive(const std::string& tok, const std::string& what, const std::string& path) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size() || v <= 0) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(path + ": bad " + what + " '" + tok + "'");
  }
}

}  // namespace

Frame read_pnm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  const std::string magic = next_token(in);
  if (magic != "P5" && magic != "P6") throw ParseError(path + ": not a binary PGM/PPM file");
  const int w = parse_positive(next_token(in), "width", path);
  const int h = parse_positive(next_token(in), "height", path);
  const int maxval = parse_positive(next_token(in), "maxval", path);
  if (maxval > 255) throw ParseError(path + ": 16-bit images are not supported");
  const int channels = magic == "P6" ? 3 : 1;

  std::vector<unsigned char> raw(static_cast<std::size_t>(w) * h * channels);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size())) throw ParseError(path + ": truncated pixel data");

  Frame f(w, h);
  const double scale = 255.0 / maxval;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double v;
    if (channels == 3) {
      v = luma_bt601(raw[3 * i], raw[3 * i + 1], raw[3 * i + 2]);
    } else {
      v = raw[i];
    }
    f.data[i] = maxval == 255 ? v : std::min(255.0, v * scale);
  }
  return f;
}

void write_pgm(const Frame& frame, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << "P5\n" << frame.width << ' ' << frame.height << "\n255\n";
  std::vector<unsigned char> raw(frame.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] = static_cast<unsigned char>(std::clamp(std::lround(frame.data[i]), 0L, 255L));
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::string format_frame_path(const std::string& pattern, std::size_t index) {
  const int n = std::snprintf(nullptr, 0, pattern.c_str(), static_cast<int>(index));
  if (n < 0) throw ConfigError("bad frame pattern '" + pattern + "'");
  std::string out(static_cast<std::size_t>(n) + 1, '\0');
  std::snprintf(out.data(), out.size(), pattern.c_str(), static_cast<int>(index));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::vector<Frame> read_y4m(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string tok;
  hs >> tok;
  if (tok != "YUV4MPEG2") throw ParseError(path + ": missing YUV4MPEG2 signature");

  int w = 0, h = 0;
  std::string chroma = "420jpeg";
  while (hs >> tok) {
    if (tok[0] == 'W') w = parse_positive(tok.substr(1), "width", path);
    else if (tok[0] == 'H') h = parse_positive(tok.substr(1), "height", path);
    else if (tok[0] == 'C') chroma = tok.substr(1);
  }
  if (w == 0 || h == 0) throw ParseError(path + ": header lacks W/H");

  const std::size_t luma = static_cast<std::size_t>(w) * h;
  const std::size_t cw = (static_cast<std::size_t>(w) + 1) / 2;
  const std::size_t ch = (static_cast<std::size_t>(h) + 1) / 2;
  std::size_t chroma_bytes;
  if (chroma.rfind("420", 0) == 0) chroma_bytes = 2 * cw * ch;
  else if (chroma.rfind("422", 0) == 0) chroma_bytes = 2 * cw * static_cast<std::size_t>(h);
  else if (chroma.rfind("444", 0) == 0) chroma_bytes = 2 * luma;
  else if (chroma.rfind("mono", 0) == 0) chroma_bytes = 0;
  else throw ParseError(path + ": unsupported chroma mode C" + chroma);

  std::vector<Frame> frames;
  std::string line;
  std::vector<unsigned char> raw(luma);
  while (std::getline(in, line)) {
    if (line.rfind("FRAME", 0) != 0) throw ParseError(path + ": expected FRAME marker");
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(luma));
    if (in.gcount() != static_cast<std::streamsize>(luma)) {
      throw ParseError(path + ": truncated frame " + std::to_string(frames.size()));
    }
    in.ignore(static_cast<std::streamsize>(chroma_bytes));
    Frame f(w, h, 0.0, frames.size());
    std::copy(raw.begin(), raw.end(), f.data.begin());
    frames.push_back(std::move(f));
  }
  return frames;
}

std::vector<Frame> load_sequence(const std::string& pattern, std::size_t start, std::size_t count) {
  std::vector<Frame> frames;
  if (ends_with(pattern, ".y4m")) {
    auto all = read_y4m(pattern);
    if (start + count > all.size()) {
      throw IoError(pattern + ": frame " + std::to_string(all.size()) + " missing (stream has " +
                    std::to_string(all.size()) + " frames)");
    }
    frames.assign(std::make_move_iterator(all.begin() + static_cast<std::ptrdiff_t>(start)),
                  std::make_move_iterator(all.begin() + static_cast<std::ptrdiff_t>(start + count)));
    return frames;
  }
  frames.reserve(count);
  for (std::size_t i = start; i < start + count; ++i) {
    const std::string path = format_frame_path(pattern, i);
    if (!std::filesystem::exists(path)) {
      throw IoError("frame " + std::to_string(i) + ": missing file '" + path + "'");
    }
    Frame f = read_pnm(path);
    f.index = i;
    if (!frames.empty() && (f.width != frames.front().width || f.height != frames.front().height)) {
      throw IoError("frame " + std::to_string(i) + ": dimensions " + std::to_string(f.width) + "x" +
                    std::to_string(f.height) + " differ from " + std::to_string(frames.front().width) + "x" +
                    std::to_string(frames.front().height));
    }
    frames.push_back(std::move(f));
  }
  return frames;
}

std::size_t count_available(const std::string& pattern, std::size_t start) {
  if (ends_with(pattern, ".y4m")) {
    const std::size_t n = read_y4m(pattern).size();
    return n > start ? n - start : 0;
  }
  std::size_t n = 0;
  while (std::filesystem::exists(format_frame_path(pattern, start + n))) ++n;
  return n;
}

GroundTruthMask threshold_mask(const Frame& image) {
  GroundTruthMask mask(image.width, image.height);
  for (std::size_t i = 0; i < image.size(); ++i) mask.data[i] = image.data[i] >= 128.0 ? 1 : 0;
  return mask;
}

GroundTruthMask load_mask(const std::string& path) { return threshold_mask(read_pnm(path)); }

void write_mask(const BinaryMask& mask, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << "P5\n" << mask.width << ' ' << mask.height << "\n255\n";
  std::vector<unsigned char> raw(mask.size());
  std::transform(mask.data.begin(), mask.data.end(), raw.begin(), [](auto v) { return v ? 255 : 0; });
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace bgtex
