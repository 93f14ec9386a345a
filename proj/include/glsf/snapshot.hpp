#pragma once
#include <string>

#include "glsf/state.hpp"

namespace glsf {

// Binary state snapshot, format version 1:
//   magic "GLSF", version u32 LE, nx u32, ny u32, lx f64, ly f64,
//   then psi real, psi imag, A1, A2, u arrays, each (nx+1)*(ny+1)
//   little-endian f64, row-major. Round-trips bitwise.
inline constexpr std::uint32_t snapshot_version = 1;

void write_snapshot(const State& z, const std::string& path);

// grid_out receives the stored grid; the returned state points at it
State read_snapshot(const std::string& path, Grid2D& grid_out);

} // namespace glsf
