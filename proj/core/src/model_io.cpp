// SPDX-License-Identifier: Apache-2.0

#include "covtrends/model_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "covtrends/errors.hpp"

namespace covtrends {

namespace {

constexpr char kMagic[8] = {'C', 'O', 'V', 'T', 'M', 'D', 'L', '\n'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
  char buf[4];
  for (int i = 0; i < 4; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(buf, 4);
}

void put_f64(std::ostream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  out.write(buf, 8);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char buf[4];
  in.read(reinterpret_cast<char*>(buf), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(buf[i]) << (8 * i);
  return v;
}

double get_f64(std::istream& in) {
  unsigned char buf[8];
  in.read(reinterpret_cast<char*>(buf), 8);
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

void save_model(const SentimentModel& model, const std::string& path) {
  const auto* encoder =
      dynamic_cast<const HashedEmbeddingEncoder*>(model.encoder.get());
  if (encoder == nullptr)
    throw ArgumentError("save_model: only reference-encoder models are persistable");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model file: " + path);

  out.write(kMagic, sizeof(kMagic));
  put_u32(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(encoder->dim()));
  put_u32(out, static_cast<std::uint32_t>(encoder->table_size()));
  put_u32(out, static_cast<std::uint32_t>(model.heads.size()));
  for (double v : encoder->table()) put_f64(out, v);
  for (double v : model.att.w_att) put_f64(out, v);
  for (const ClassifierHead& head : model.heads) {
    put_u32(out, static_cast<std::uint32_t>(head.trained_on.size()));
    out.write(head.trained_on.data(),
              static_cast<std::streamsize>(head.trained_on.size()));
    for (double v : head.weights) put_f64(out, v);
    for (double v : head.bias) put_f64(out, v);
  }
  out.flush();
  if (!out) throw IoError("failed writing model file: " + path);
}

SentimentModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file: " + path);

  char magic[sizeof(kMagic)];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw FormatError("model file: bad magic: " + path);
  const std::uint32_t version = get_u32(in);
  if (version != kVersion)
    throw FormatError("model file: unsupported version " + std::to_string(version));
  const std::uint32_t dim = get_u32(in);
  const std::uint32_t table_size = get_u32(in);
  const std::uint32_t n_heads = get_u32(in);
  if (!in || dim == 0 || table_size == 0 || n_heads != 3)
    throw FormatError("model file: bad header: " + path);

  auto encoder = std::make_shared<HashedEmbeddingEncoder>(dim, table_size, 0);
  for (double& v : encoder->table()) v = get_f64(in);

  SentimentModel model;
  model.encoder = encoder;
  model.att.w_att.resize(dim);
  for (double& v : model.att.w_att) v = get_f64(in);
  for (ClassifierHead& head : model.heads) {
    const std::uint32_t len = get_u32(in);
    if (!in || len > 4096) throw FormatError("model file: bad head name: " + path);
    head.trained_on.resize(len);
    in.read(head.trained_on.data(), len);
    head.weights.resize(kNumClasses * dim);
    for (double& v : head.weights) v = get_f64(in);
    for (double& v : head.bias) v = get_f64(in);
  }
  if (!in) throw FormatError("model file: truncated: " + path);
  return model;
}

}  // namespace covtrends
