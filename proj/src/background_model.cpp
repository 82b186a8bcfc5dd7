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

#include "bgtex/background_model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace bgtex {
namespace {

void check_grid(const StationaryModel& model, const BlockTextureGrid& t) {
  if (!(model.spec == t.spec) || t.cells.size() != model.m.size()) {
    throw std::invalid_argument("block-texture grid does not match the stationary model");
  }
  if (model.frame_count == 0) throw std::invalid_argument("stationary model is not initialised");
}

MotionMap empty_map(const BlockGridSpec& spec) {
  MotionMap map;
  map.spec = spec;
  map.phi.assign(spec.cells(), 0);
  map.delta.assign(spec.cells(), 0.0);
  return map;
}

constexpr char kBinaryMagic[8] = {'B', 'G', 'T', 'X', 'M', 'D', 'L', '1'};

template <typename T>
void put(std::ostream& out, T value) {
  static_assert(std::endian::native == std::endian::little, "snapshot writer assumes little-endian");
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (in.gcount() != sizeof(T)) throw ParseError("truncated model snapshot");
  return value;
}

void check_spec(const BlockGridSpec& s) {
  if (s.block_w <= 0 || s.block_h <= 0 || s.stride_x <= 0 || s.stride_y <= 0 || s.cols <= 0 || s.rows <= 0) {
    throw ParseError("model snapshot has an invalid grid spec");
  }
}

}  // namespace

double tolerance(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ConfigError("lambda must lie in [0, 1]");
  return (1.0 - lambda) * kMaxMotionLikelihood;
}

void DetectorParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must lie in [0, 1]");
  tolerance(lambda);
}

std::size_t MotionMap::moving_blocks() const {
  return static_cast<std::size_t>(std::count(phi.begin(), phi.end(), std::uint8_t{1}));
}

StationaryModel init_model(const BlockTextureGrid& t0) {
  StationaryModel model;
  model.spec = t0.spec;
  model.m = t0.cells;
  model.frame_count = 1;
  return model;
}

MotionMap step(StationaryModel& model, const BlockTextureGrid& t, const DetectorParams& params) {
  check_grid(model, t);
  const double tau = params.tau();
  const double alpha = params.alpha;
  MotionMap map = empty_map(model.spec);
  const int total = static_cast<int>(model.m.size());
  double max_delta = 0.0;
#pragma omp parallel for schedule(static) reduction(max : max_delta)
  for (int i = 0; i < total; ++i) {
    const double delta = update_cell(model.m[static_cast<std::size_t>(i)], t.cells[static_cast<std::size_t>(i)], alpha);
    map.delta[static_cast<std::size_t>(i)] = delta;
    map.phi[static_cast<std::size_t>(i)] = delta < tau ? 0 : 1;
    max_delta = std::max(max_delta, delta);
  }
  map.max_delta = max_delta;
  ++model.frame_count;
  return map;
}

namespace serial {

MotionMap step(StationaryModel& model, const BlockTextureGrid& t, const DetectorParams& params) {
  check_grid(model, t);
  const double tau = params.tau();
  MotionMap map = empty_map(model.spec);
  for (std::size_t i = 0; i < model.m.size(); ++i) {
    const double delta = update_cell(model.m[i], t.cells[i], params.alpha);
    map.delta[i] = delta;
    map.phi[i] = delta < tau ? 0 : 1;
    map.max_delta = std::max(map.max_delta, delta);
  }
  ++model.frame_count;
  return map;
}

}  // namespace serial

void save_model_csv(const StationaryModel& model, std::ostream& out) {
  const auto& s = model.spec;
  out << "# bgtex-model v1 block_w=" << s.block_w << " block_h=" << s.block_h << " stride_x=" << s.stride_x
      << " stride_y=" << s.stride_y << " cols=" << s.cols << " rows=" << s.rows
      << " frame_count=" << model.frame_count << "\n";
  out << "row,col,m0,m1,m2,m3,m4\n";
  char buf[32];
  for (int r = 0; r < s.rows; ++r) {
    for (int c = 0; c < s.cols; ++c) {
      out << r << ',' << c;
      for (double v : model.at(r, c)) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << ',' << buf;
      }
      out << '\n';
    }
  }
}

namespace {

StationaryModel parse_model_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("# bgtex-model v1", 0) != 0) {
    throw ParseError("model CSV lacks the bgtex-model header");
  }
  StationaryModel model;
  auto& s = model.spec;
  std::istringstream hs(line.substr(16));
  std::string kv;
  while (hs >> kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ParseError("bad header field '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const long long val = std::stoll(kv.substr(eq + 1));
    if (key == "block_w") s.block_w = static_cast<int>(val);
    else if (key == "block_h") s.block_h = static_cast<int>(val);
    else if (key == "stride_x") s.stride_x = static_cast<int>(val);
    else if (key == "stride_y") s.stride_y = static_cast<int>(val);
    else if (key == "cols") s.cols = static_cast<int>(val);
    else if (key == "rows") s.rows = static_cast<int>(val);
    else if (key == "frame_count") model.frame_count = static_cast<std::size_t>(val);
  }
  check_spec(s);
  std::getline(in, line);  // column names
  model.m.assign(s.cells(), Vec5{});
  std::vector<bool> seen(s.cells(), false);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 2 + kTextureDims) throw ParseError("model CSV row has the wrong column count");
    const int r = std::stoi(fields[0]);
    const int c = std::stoi(fields[1]);
    if (r < 0 || r >= s.rows || c < 0 || c >= s.cols) throw ParseError("model CSV cell out of range");
    const std::size_t idx = static_cast<std::size_t>(r) * s.cols + c;
    for (int d = 0; d < kTextureDims; ++d) model.m[idx][d] = std::strtod(fields[2 + d].c_str(), nullptr);
    seen[idx] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw ParseError("model CSV is missing cells");
  return model;
}

}  // namespace

StationaryModel load_model_csv(std::istream& in) {
  try {
    return parse_model_csv(in);
  } catch (const std::logic_error& e) {
    throw ParseError(std::string("malformed model CSV: ") + e.what());
  }
}

void save_model_binary(const StationaryModel& model, std::ostream& out) {
  out.write(kBinaryMagic, sizeof kBinaryMagic);
  const auto& s = model.spec;
  for (int v : {s.block_w, s.block_h, s.stride_x, s.stride_y, s.cols, s.rows}) put<std::int32_t>(out, v);
  put<std::uint64_t>(out, model.frame_count);
  for (const Vec5& cell : model.m) {
    for (double v : cell) put<double>(out, v);
  }
}

StationaryModel load_model_binary(std::istream& in) {
  char magic[sizeof kBinaryMagic];
  in.read(magic, sizeof magic);
  if (in.gcount() != sizeof magic || std::memcmp(magic, kBinaryMagic, sizeof magic) != 0) {
    throw ParseError("not a bgtex model snapshot");
  }
  StationaryModel model;
  auto& s = model.spec;
  s.block_w = get<std::int32_t>(in);
  s.block_h = get<std::int32_t>(in);
  s.stride_x = get<std::int32_t>(in);
  s.stride_y = get<std::int32_t>(in);
  s.cols = get<std::int32_t>(in);
  s.rows = get<std::int32_t>(in);
  check_spec(s);
  model.frame_count = get<std::uint64_t>(in);
  model.m.assign(s.cells(), Vec5{});
  for (Vec5& cell : model.m) {
    for (double& v : cell) v = get<double>(in);
  }
  return model;
}

void save_model(const StationaryModel& model, const std::string& path) {
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  std::ofstream out(path, csv ? std::ios::out : std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  if (csv) save_model_csv(model, out);
  else save_model_binary(model, out);
  if (!out) throw IoError("write failed for '" + path + "'");
}

StationaryModel load_model(const std::string& path) {
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  std::ifstream in(path, csv ? std::ios::in : std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return csv ? load_model_csv(in) : load_model_binary(in);
}

}  // namespace bgtex
