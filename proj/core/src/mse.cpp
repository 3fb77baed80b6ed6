// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#include "psnrlab/mse.hpp"

#include <algorithm>

#include "psnrlab/error.hpp"
#include "psnrlab/estimators.hpp"
#include "psnrlab/parallel.hpp"
#include "psnrlab/summation.hpp"

namespace psnrlab {

namespace {

constexpr std::size_t kChunkSamples = 4096;

struct Chunk {
  const double* a;
  const double* b;
  std::size_t n;
};

double chunk_ssd(const Chunk& c) {
  CompensatedSum acc;
  for (std::size_t i = 0; i < c.n; ++i) {
    const double d = c.a[i] - c.b[i];
    acc.add(d * d);
  }
  return acc.value();
}

} // namespace

MseRecord mse(const CanonicalPair& pair, unsigned workers) {
  if (pair.ref.channels() != pair.dist.channels()) {
    throw Error("mse: pair has mismatched channel counts");
  }

  // Fixed chunk grid over the concatenated planes, independent of workers.
  std::vector<Chunk> chunks;
  std::size_t total_samples = 0;
  for (int c = 0; c < pair.ref.channels(); ++c) {
    const auto& a = pair.ref.planes[c].samples;
    const auto& b = pair.dist.planes[c].samples;
    if (a.size() != b.size()) {
      throw Error("mse: plane " + std::to_string(c) + " size mismatch");
    }
    total_samples += a.size();
    for (std::size_t off = 0; off < a.size(); off += kChunkSamples) {
      const std::size_t n = std::min(kChunkSamples, a.size() - off);
      chunks.push_back(Chunk{a.data() + off, b.data() + off, n});
    }
  }
  if (total_samples == 0) {
    throw Error("mse: empty pair");
  }

  std::vector<double> partials(chunks.size());
  parallel_for(chunks.size(), workers == 0 ? 1 : workers,
               [&](std::size_t i) { partials[i] = chunk_ssd(chunks[i]); });

  CompensatedSum total;
  for (double p : partials) {
    total.add(p);
  }

  MseRecord rec;
  rec.mse = total.value() / static_cast<double>(total_samples);
  rec.pixel_count = total_samples;
  rec.channel_mode = pair.channel_mode;
  rec.quantization = pair.quantization;
  rec.width = pair.ref.width;
  rec.height = pair.ref.height;
  return rec;
}

VideoMse video_mse(const std::vector<MseRecord>& frames, double peak) {
  if (frames.empty()) {
    throw Error("video_mse: empty frame list");
  }
  const std::string id = frames.front().video_id.value_or("");
  const std::size_t pixel_count = frames.front().pixel_count;
  for (const MseRecord& f : frames) {
    if (f.video_id.value_or("") != id) {
      throw Error("video_mse: records mix video ids \"" + id + "\" and \"" +
                  f.video_id.value_or("") + "\"");
    }
    if (f.pixel_count != pixel_count) {
      throw Error("video_mse: video \"" + id + "\" mixes frame geometries (" +
                  std::to_string(pixel_count) + " vs " +
                  std::to_string(f.pixel_count) + " samples)");
    }
  }

  VideoMse v;
  v.video_id = id;
  v.pixel_count = pixel_count;
  v.frame_mses.reserve(frames.size());
  for (const MseRecord& f : frames) {
    v.frame_mses.push_back(f.mse);
  }
  v.video_mse = compensated_mean(v.frame_mses);
  v.psnr_from_mean_mse = psnr(v.video_mse, peak);
  v.mean_of_frame_psnrs = mean_psnr_with_inf(v.frame_mses, peak);
  return v;
}

} // namespace psnrlab
