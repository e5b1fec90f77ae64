#include "frontgate/io.hpp"

#include "frontgate/error.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace frontgate {

std::string format_double(double value) {
    if (value == 0.0) return "0";  // also folds -0
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", value);
    return buf.data();
}

std::string csv_row(std::span<const double> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_double(values[i]);
    }
    return out;
}

std::string sha256_hex(std::string_view bytes) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        fail_numerical("SHA-256 computation failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_config("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return sha256_hex(ss.str());
}

std::string encode_pgm(const std::vector<std::vector<double>>& rows, std::string_view comment) {
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    std::string out = "P5\n# " + std::string(comment) + "\n" + std::to_string(width) + " " +
                      std::to_string(rows.size()) + "\n255\n";
    out.reserve(out.size() + width * rows.size());
    for (const auto& row : rows) {
        if (row.size() != width) fail_config("graymap rows must have equal width");
        for (double v : row) {
            const double c = std::clamp(v, 0.0, 1.0);
            out += static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * c)));
        }
    }
    return out;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail_config("cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace frontgate
