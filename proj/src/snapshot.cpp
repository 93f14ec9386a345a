#include "glsf/snapshot.hpp"

#include <cstring>
#include <fstream>

namespace glsf {

namespace {

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4];
    for (int k = 0; k < 4; ++k) b[k] = static_cast<unsigned char>((v >> (8 * k)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ostream& os, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    unsigned char b[8];
    for (int k = 0; k < 8; ++k) b[k] = static_cast<unsigned char>((bits >> (8 * k)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

bool get_u32(std::istream& is, std::uint32_t& v) {
    unsigned char b[4];
    if (!is.read(reinterpret_cast<char*>(b), 4)) return false;
    v = 0;
    for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(b[k]) << (8 * k);
    return true;
}

bool get_f64(std::istream& is, double& v) {
    unsigned char b[8];
    if (!is.read(reinterpret_cast<char*>(b), 8)) return false;
    std::uint64_t bits = 0;
    for (int k = 0; k < 8; ++k) bits |= static_cast<std::uint64_t>(b[k]) << (8 * k);
    std::memcpy(&v, &bits, 8);
    return true;
}

} // namespace

void write_snapshot(const State& z, const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw FormatError("write_snapshot: cannot open '" + path + "'");
    const Grid2D& g = z.grid();
    os.write("GLSF", 4);
    put_u32(os, snapshot_version);
    put_u32(os, static_cast<std::uint32_t>(g.nx));
    put_u32(os, static_cast<std::uint32_t>(g.ny));
    put_f64(os, g.lx);
    put_f64(os, g.ly);
    const int nn = g.num_nodes();
    for (int n = 0; n < nn; ++n) put_f64(os, z.psi.v[n].real());
    for (int n = 0; n < nn; ++n) put_f64(os, z.psi.v[n].imag());
    for (int n = 0; n < nn; ++n) put_f64(os, z.A.x[n]);
    for (int n = 0; n < nn; ++n) put_f64(os, z.A.y[n]);
    for (int n = 0; n < nn; ++n) put_f64(os, z.u.v[n]);
    if (!os) throw FormatError("write_snapshot: write failure on '" + path + "'");
}

State read_snapshot(const std::string& path, Grid2D& grid_out) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("read_snapshot: cannot open '" + path + "'");
    char magic[4];
    if (!is.read(magic, 4) || std::memcmp(magic, "GLSF", 4) != 0) {
        throw FormatError("read_snapshot: bad magic in '" + path + "'");
    }
    std::uint32_t version = 0, nx = 0, ny = 0;
    double lx = 0, ly = 0;
    if (!get_u32(is, version) || !get_u32(is, nx) || !get_u32(is, ny) || !get_f64(is, lx) ||
        !get_f64(is, ly)) {
        throw FormatError("read_snapshot: truncated header in '" + path + "'");
    }
    if (version != snapshot_version) {
        throw FormatError("read_snapshot: unsupported version " + std::to_string(version) +
                          " (expected " + std::to_string(snapshot_version) + ")");
    }
    grid_out = Grid2D(static_cast<int>(nx), static_cast<int>(ny), lx, ly);
    State z(grid_out);
    const int nn = grid_out.num_nodes();
    auto read_array = [&](auto&& set) {
        for (int n = 0; n < nn; ++n) {
            double v;
            if (!get_f64(is, v)) throw FormatError("read_snapshot: truncated data in '" + path + "'");
            set(n, v);
        }
    };
    std::vector<double> re(nn);
    read_array([&](int n, double v) { re[n] = v; });
    read_array([&](int n, double v) { z.psi.v[n] = cplx(re[n], v); });
    read_array([&](int n, double v) { z.A.x[n] = v; });
    read_array([&](int n, double v) { z.A.y[n] = v; });
    read_array([&](int n, double v) { z.u.v[n] = v; });
    char extra;
    if (is.read(&extra, 1)) throw FormatError("read_snapshot: trailing bytes in '" + path + "'");
    return z;
}

} // namespace glsf
