#pragma once

#include <string>

#include "waveholtz/field.hpp"

namespace wh {

/// Flat little-endian layout: header of four 8-byte fields
/// (uint64 dim, uint64 points, float64 half_width, uint64 complex_flag)
/// followed by row-major float64 samples; complex payloads interleave
/// re, im. Files are written to a temporary name and renamed into place.
void write_field_binary(const std::string& path, const Field& f);
Field read_field_binary(const std::string& path);

/// CSV export for dim = 1: columns x,value for real fields and x,re,im for
/// complex ones, 17 significant digits.
void write_field_csv(const std::string& path, const Field& f);

/// Writes content to path atomically (temporary file + rename).
void atomic_write_text(const std::string& path, const std::string& content);

}  // namespace wh
