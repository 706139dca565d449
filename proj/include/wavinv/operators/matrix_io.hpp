// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavinv Authors
#pragma once

#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "wavinv/operators/galerkin_matrix.hpp"

namespace wavinv {

// Operator file: a short text header followed by the row-major payload.
//
//   wavinv-galerkin 1
//   max_level <J>
//   illposedness <t>
//   kernel <name>
//   encoding <f64le|csv>
//   rows <n>
//   cols <n>
//   end
//
// f64le payload: n*n little-endian IEEE doubles. csv payload: one line per
// row, comma-separated, printed with 17 significant digits.

enum class MatrixEncoding { Binary, Csv };

inline MatrixEncoding encoding_for_path(const std::filesystem::path& p) {
  return p.extension() == ".csv" ? MatrixEncoding::Csv : MatrixEncoding::Binary;
}

inline void write_matrix(const std::filesystem::path& path, const GalerkinMatrix& K,
                         MatrixEncoding enc) {
  static_assert(std::endian::native == std::endian::little, "f64le payload assumes little endian");
  K.validate("write_matrix");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_matrix: cannot open " + path.string());
  char tbuf[64];
  std::snprintf(tbuf, sizeof tbuf, "%.17g", K.illposedness);
  const auto n = K.entries.rows();
  out << "wavinv-galerkin 1\n"
      << "max_level " << K.max_level << "\n"
      << "illposedness " << tbuf << "\n"
      << "kernel " << K.kernel << "\n"
      << "encoding " << (enc == MatrixEncoding::Csv ? "csv" : "f64le") << "\n"
      << "rows " << n << "\ncols " << n << "\nend\n";
  if (enc == MatrixEncoding::Binary) {
    const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = K.entries;
    out.write(reinterpret_cast<const char*>(rm.data()),
              static_cast<std::streamsize>(sizeof(double) * static_cast<std::size_t>(rm.size())));
  } else {
    char buf[32];
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) {
        std::snprintf(buf, sizeof buf, "%.17g", K.entries(r, c));
        out << (c ? "," : "") << buf;
      }
      out << "\n";
    }
  }
  if (!out) throw std::runtime_error("write_matrix: write failed for " + path.string());
}

inline void write_matrix(const std::filesystem::path& path, const GalerkinMatrix& K) {
  write_matrix(path, K, encoding_for_path(path));
}

inline GalerkinMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_matrix: cannot open " + path.string());
  auto bad = [&](const std::string& why) {
    return std::runtime_error("read_matrix: " + path.string() + ": " + why);
  };
  std::string line;
  if (!std::getline(in, line) || line != "wavinv-galerkin 1") throw bad("missing magic line");
  GalerkinMatrix K;
  std::string encoding;
  long rows = -1, cols = -1;
  while (std::getline(in, line) && line != "end") {
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "max_level") ls >> K.max_level;
    else if (key == "illposedness") ls >> K.illposedness;
    else if (key == "kernel") ls >> K.kernel;
    else if (key == "encoding") ls >> encoding;
    else if (key == "rows") ls >> rows;
    else if (key == "cols") ls >> cols;
    else throw bad("unknown header key '" + key + "'");
    if (ls.fail()) throw bad("malformed header line '" + line + "'");
  }
  if (line != "end") throw bad("truncated header");
  if (rows < 0 || rows != cols || static_cast<std::size_t>(rows) != space_dim(K.max_level))
    throw bad("inconsistent dimensions");
  K.entries.resize(rows, cols);
  if (encoding == "f64le") {
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm(rows, cols);
    in.read(reinterpret_cast<char*>(rm.data()),
            static_cast<std::streamsize>(sizeof(double) * static_cast<std::size_t>(rm.size())));
    if (!in) throw bad("truncated payload");
    K.entries = rm;
  } else if (encoding == "csv") {
    for (long r = 0; r < rows; ++r) {
      if (!std::getline(in, line)) throw bad("truncated payload");
      std::istringstream ls(line);
      std::string cell;
      for (long c = 0; c < cols; ++c) {
        if (!std::getline(ls, cell, ',')) throw bad("short row " + std::to_string(r));
        K.entries(r, c) = std::stod(cell);
      }
    }
  } else {
    throw bad("unknown encoding '" + encoding + "'");
  }
  return K;
}

}  // namespace wavinv
