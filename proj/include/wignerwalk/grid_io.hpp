#pragma once

#include <filesystem>
#include <string>

#include "wignerwalk/wigner.hpp"

namespace wignerwalk {

// CSV layout: one '#'-prefixed header line with space-separated key=value
// metadata (n, j, time or time=longtime, kind, delta, r, seed, version),
// then n rows of n comma-separated values. Values are written with 17
// significant digits so a write/read round trip reproduces every double
// bit for bit. The file is written to a temporary sibling and renamed into
// place, so readers never observe a half-written grid.
void write_grid_csv(const PhaseSpaceGrid& g, const std::filesystem::path& path);

PhaseSpaceGrid read_grid_csv(const std::filesystem::path& path);

// Binary PPM heatmap, zoom*n pixels square. x runs left to right, kappa
// bottom to top with kappa = 0 on the bottom row. Diverging colormap:
// +max|w| maps to pure red, 0 to white, -max|w| to pure blue, linear in
// between; an all-zero grid renders all white.
void render_heatmap(const PhaseSpaceGrid& g, const std::filesystem::path& path,
                    int zoom = 4);

// Deterministic output name (without extension) for a grid produced by the
// given subcommand: {sub}_{kind}_d{delta}_N{n}_j{j}_{t{time}|longtime}_R{r}_s{seed}.
std::string grid_filename_stem(const std::string& subcommand,
                               const GridMeta& meta);

}  // namespace wignerwalk
