#include "wignerwalk/grid_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string_view>

namespace wignerwalk {

namespace {

constexpr int kFormatVersion = 1;

void append_double(std::string& out, double v, int precision) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::general, precision);
  out.append(buf, res.ptr);
}

// Compact %g form for file names.
std::string format_compact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
      throw std::runtime_error("short write to " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

double parse_double(std::string_view token, const std::string& what) {
  double v = 0.0;
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(token.data(), last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw std::runtime_error("malformed " + what + " '" + std::string(token) + "'");
  }
  return v;
}

template <typename Int>
Int parse_int(std::string_view token, const std::string& what) {
  Int v = 0;
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(token.data(), last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw std::runtime_error("malformed " + what + " '" + std::string(token) + "'");
  }
  return v;
}

std::string header_line(const GridMeta& m) {
  std::string h = "# n=" + std::to_string(m.n);
  h += " j=" + std::to_string(m.source);
  h += " time=";
  if (m.time) {
    append_double(h, *m.time, 17);
  } else {
    h += "longtime";
  }
  h += " kind=" + to_string(m.kind);
  h += " delta=";
  append_double(h, m.delta, 17);
  h += " r=" + std::to_string(m.realizations);
  h += " seed=" + std::to_string(m.seed);
  h += " version=" + std::to_string(kFormatVersion);
  return h;
}

GridMeta parse_header(std::string_view line, const std::filesystem::path& path) {
  if (line.substr(0, 2) != "# ") {
    throw std::runtime_error(path.string() + ": missing metadata header");
  }
  line.remove_prefix(2);

  GridMeta meta;
  bool saw_version = false;
  while (!line.empty()) {
    const std::size_t space = line.find(' ');
    const std::string_view token = line.substr(0, space);
    line.remove_prefix(space == std::string_view::npos ? line.size() : space + 1);
    if (token.empty()) continue;

    const std::size_t eq = token.find('=');
    if (eq == std::string_view::npos) {
      throw std::runtime_error(path.string() + ": malformed header token '" +
                               std::string(token) + "'");
    }
    const std::string_view key = token.substr(0, eq);
    const std::string_view value = token.substr(eq + 1);
    if (key == "n") {
      meta.n = parse_int<int>(value, "n");
    } else if (key == "j") {
      meta.source = parse_int<int>(value, "j");
    } else if (key == "time") {
      if (value == "longtime") {
        meta.time = std::nullopt;
      } else {
        meta.time = parse_double(value, "time");
      }
    } else if (key == "kind") {
      meta.kind = disorder_kind_from_string(std::string(value));
    } else if (key == "delta") {
      meta.delta = parse_double(value, "delta");
    } else if (key == "r") {
      meta.realizations = parse_int<int>(value, "r");
    } else if (key == "seed") {
      meta.seed = parse_int<std::uint64_t>(value, "seed");
    } else if (key == "version") {
      const int version = parse_int<int>(value, "version");
      if (version != kFormatVersion) {
        throw std::runtime_error(path.string() + ": unsupported format version " +
                                 std::to_string(version));
      }
      saw_version = true;
    } else {
      throw std::runtime_error(path.string() + ": unknown header key '" +
                               std::string(key) + "'");
    }
  }
  if (!saw_version || meta.n < 3) {
    throw std::runtime_error(path.string() + ": incomplete metadata header");
  }
  return meta;
}

}  // namespace

void write_grid_csv(const PhaseSpaceGrid& g, const std::filesystem::path& path) {
  const int size = static_cast<int>(g.w.rows());
  if (size != g.w.cols() || size != g.meta.n) {
    throw std::invalid_argument("grid shape does not match its metadata");
  }

  std::string text = header_line(g.meta);
  text += '\n';
  text.reserve(text.size() + static_cast<std::size_t>(size) * size * 26);
  for (int x = 0; x < size; ++x) {
    for (int k = 0; k < size; ++k) {
      if (k > 0) text += ',';
      append_double(text, g.w(x, k), 17);
    }
    text += '\n';
  }
  write_atomic(path, text);
}

PhaseSpaceGrid read_grid_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(path.string() + ": empty file");
  }
  const GridMeta meta = parse_header(line, path);

  const int size = meta.n;
  Eigen::MatrixXd w(size, size);
  for (int x = 0; x < size; ++x) {
    if (!std::getline(in, line)) {
      throw std::runtime_error(path.string() + ": expected " +
                               std::to_string(size) + " rows, found " +
                               std::to_string(x));
    }
    std::string_view rest = line;
    for (int k = 0; k < size; ++k) {
      const std::size_t comma = rest.find(',');
      const bool last = comma == std::string_view::npos;
      if (last != (k == size - 1)) {
        throw std::runtime_error(path.string() + ": row " + std::to_string(x) +
                                 " does not have " + std::to_string(size) +
                                 " columns");
      }
      w(x, k) = parse_double(rest.substr(0, comma), "grid value");
      if (!last) rest.remove_prefix(comma + 1);
    }
  }
  while (std::getline(in, line)) {
    if (!line.empty()) {
      throw std::runtime_error(path.string() + ": trailing data after grid");
    }
  }
  return {std::move(w), meta};
}

void render_heatmap(const PhaseSpaceGrid& g, const std::filesystem::path& path,
                    int zoom) {
  if (zoom < 1) {
    throw std::invalid_argument("zoom must be at least 1");
  }
  const int size = static_cast<int>(g.w.rows());
  if (size < 1 || g.w.cols() != size) {
    throw std::invalid_argument("heatmap needs a square grid");
  }

  const double peak = g.w.cwiseAbs().maxCoeff();
  const int dim = size * zoom;
  std::string out = "P6\n" + std::to_string(dim) + " " + std::to_string(dim) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(dim) * dim * 3);

  for (int py = 0; py < dim; ++py) {
    const int kappa = size - 1 - py / zoom;  // kappa = 0 ends up at the bottom
    for (int px = 0; px < dim; ++px) {
      const int x = px / zoom;
      unsigned char r = 255, gr = 255, b = 255;
      if (peak > 0.0) {
        const double f = std::clamp(g.w(x, kappa) / peak, -1.0, 1.0);
        const auto fade =
            static_cast<unsigned char>(std::lround(255.0 * (1.0 - std::abs(f))));
        if (f >= 0.0) {
          gr = b = fade;  // red side
        } else {
          r = gr = fade;  // blue side
        }
      }
      out.push_back(static_cast<char>(r));
      out.push_back(static_cast<char>(gr));
      out.push_back(static_cast<char>(b));
    }
  }
  write_atomic(path, out);
}

std::string grid_filename_stem(const std::string& subcommand,
                               const GridMeta& meta) {
  std::string s = subcommand;
  s += "_" + to_string(meta.kind);
  s += "_d" + format_compact(meta.delta);
  s += "_N" + std::to_string(meta.n);
  s += "_j" + std::to_string(meta.source);
  s += "_";
  if (meta.time) {
    s += "t" + format_compact(*meta.time);
  } else {
    s += "longtime";
  }
  s += "_R" + std::to_string(meta.realizations);
  s += "_s" + std::to_string(meta.seed);
  return s;
}

}  // namespace wignerwalk
